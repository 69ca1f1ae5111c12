#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = polyflip::parse_text(s) {
        // anything accepted must print back to something that parses to the same value
        let again = polyflip::parse_text(&polyflip::to_text(&t)).expect("round trip");
        assert_eq!(again, t);
    }
});
