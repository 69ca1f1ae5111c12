//! Replays the fuzz corpus seeds through the parsers with the fuzz targets' checks.

use std::fs;
use std::path::PathBuf;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn text_seeds() {
    let mut accepted = 0;
    for (name, s) in seeds("parse_text") {
        if let Ok(t) = polyflip::parse_text(&s) {
            assert_eq!(
                polyflip::parse_text(&polyflip::to_text(&t)).unwrap(),
                t,
                "{name}"
            );
            accepted += 1;
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn json_seeds() {
    let mut accepted = 0;
    for (name, s) in seeds("parse_json") {
        if let Ok(t) = polyflip::parse_json(&s) {
            assert_eq!(
                polyflip::parse_json(&polyflip::to_json(&t)).unwrap(),
                t,
                "{name}"
            );
            accepted += 1;
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn diagonal_list_seeds() {
    for (name, s) in seeds("parse_diagonal_list") {
        if let Ok(edges) = polyflip::parse_diagonal_list(&s) {
            let printed: Vec<String> = edges
                .iter()
                .map(|e| format!("{}-{}", e.lo(), e.hi()))
                .collect();
            assert_eq!(
                polyflip::parse_diagonal_list(&printed.join(",")).unwrap(),
                edges,
                "{name}"
            );
        }
    }
}
