#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = polyflip::parse_json(s) {
        let again = polyflip::parse_json(&polyflip::to_json(&t)).expect("round trip");
        assert_eq!(again, t);
    }
});
