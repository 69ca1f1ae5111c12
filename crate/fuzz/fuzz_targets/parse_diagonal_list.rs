#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(edges) = polyflip::parse_diagonal_list(s) {
            let printed: Vec<String> = edges
                .iter()
                .map(|e| format!("{}-{}", e.lo(), e.hi()))
                .collect();
            let again = polyflip::parse_diagonal_list(&printed.join(",")).expect("round trip");
            assert_eq!(again, edges);
        }
    }
});
