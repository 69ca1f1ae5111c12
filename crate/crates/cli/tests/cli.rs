use std::process::{Command, Output};

fn polyflip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyflip"))
        .args(args)
        .env_remove("POLYFLIP_NODE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn enumerate_text() {
    let out = polyflip(&["enumerate", "--n", "5", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[5], "count=5");
    for l in &lines[..5] {
        assert!(polyflip::parse_text(l).is_ok(), "{l}");
    }
    let out = polyflip(&["enumerate", "--n", "4", "--format", "json"]);
    assert_eq!(json(&out)["triangulations"].as_array().unwrap().len(), 2);
}

#[test]
fn enumerate_rejects_bad_n() {
    assert_eq!(polyflip(&["enumerate", "--n", "2"]).status.code(), Some(2));
    assert_eq!(polyflip(&["enumerate", "--n", "14"]).status.code(), Some(3));
    assert_eq!(polyflip(&["enumerate", "--n", "x"]).status.code(), Some(2));
}

#[test]
fn distance_examples() {
    let out = polyflip(&[
        "distance", "--n", "5", "--t", "0-2,0-3", "--u", "1-3,1-4", "--format", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["distance"], 2);
    assert_eq!(v["geodesic"].as_array().unwrap().len(), 2);
    let out = polyflip(&[
        "distance",
        "--n",
        "6",
        "--t",
        "0-2,0-3,0-4",
        "--u",
        "n=6;0-2,0-3,0-4",
    ]);
    assert_eq!(stdout(&out).lines().next(), Some("distance=0"));
    let out = polyflip(&[
        "distance",
        "--n",
        "6",
        "--t",
        "0-2,0-3,0-4",
        "--u",
        "n=5;0-2,0-3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = polyflip(&["distance", "--n", "5", "--t", "0-2,1-3", "--u", "1-3,1-4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0-2,1-3"));
}

#[test]
fn eccentricity_and_profile() {
    let out = polyflip(&[
        "eccentricity",
        "--n",
        "6",
        "--t",
        "0-2,0-3,0-4",
        "--format",
        "json",
    ]);
    assert_eq!(json(&out)["eccentricity"], 3);
    let out = polyflip(&["profile", "--n", "6"]);
    assert_eq!(
        stdout(&out),
        "k=0 eccentricity=3 count=6\nk=1 eccentricity=4 count=8\n"
    );
    let out = polyflip(&[
        "profile",
        "--n",
        "7",
        "--per-triangulation",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out).lines().count(), 43);
}

#[test]
fn witnesses() {
    let out = polyflip(&[
        "witness",
        "omega",
        "--n",
        "6",
        "--t",
        "0-2,2-4,0-4",
        "--v",
        "0",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["bound"], 4);
    assert!(v["distance"].as_u64().unwrap() >= 4);
    let out = polyflip(&[
        "witness",
        "central",
        "--n",
        "6",
        "--t",
        "0-2,0-3,0-4",
        "--format",
        "json",
    ]);
    assert_eq!(json(&out)["vertices"], serde_json::json!([0, 2, 3]));
    let out = polyflip(&[
        "witness", "family", "--n", "10", "--k", "5", "--format", "json",
    ]);
    assert_eq!(json(&out)["max_interior_degree"], 2);
    let out = polyflip(&["witness", "family", "--n", "10", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    for kind in ["far-long", "far-short"] {
        let out = polyflip(&[
            "witness",
            kind,
            "--n",
            "8",
            "--t",
            "0-2,0-3,0-4,0-5,0-6",
            "--format",
            "json",
        ]);
        let v = json(&out);
        assert!(
            v["distance"].as_i64().unwrap() >= v["bound"].as_i64().unwrap(),
            "{kind}"
        );
    }
}

#[test]
fn verify_exit_codes() {
    assert!(polyflip(&["verify", "--claim", "close", "--n", "6..9"])
        .status
        .success());
    let out = polyflip(&[
        "verify",
        "--claim",
        "characterization",
        "--n",
        "12",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)[0]["status"], "vacuous");
    assert_eq!(
        polyflip(&["verify", "--claim", "nonsense", "--n", "6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        polyflip(&["verify", "--claim", "upper-bound", "--n", "11"])
            .status
            .code(),
        Some(3)
    );
    let out = polyflip(&[
        "verify",
        "--claim",
        "close",
        "--n",
        "6",
        "--format",
        "csv",
        "--no-timing",
    ]);
    assert_eq!(
        stdout(&out),
        "claim,n,instances,failures,status,seconds\nclose,6,14,0,pass,\n"
    );
}

#[test]
fn export_counts() {
    for (n, nodes, edges) in [(4, 2, 1), (5, 5, 5), (6, 14, 21)] {
        let out = polyflip(&["export", "--n", &n.to_string(), "--format", "dot"]);
        let dot = stdout(&out);
        assert_eq!(
            dot.lines().filter(|l| l.contains(" -- ")).count(),
            edges,
            "n={n}"
        );
        assert_eq!(
            dot.lines().filter(|l| l.contains("label=")).count(),
            nodes,
            "n={n}"
        );
        let out = polyflip(&["export", "--n", &n.to_string(), "--format", "csv"]);
        assert_eq!(stdout(&out).lines().count(), edges + 1);
    }
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = std::env::temp_dir().join(format!("polyflip-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("export.dot");
    let p = path.to_str().unwrap();
    assert!(polyflip(&["export", "--n", "7", "--output", p])
        .status
        .success());
    let first = std::fs::read(&path).unwrap();
    assert!(polyflip(&["export", "--n", "7", "--output", p])
        .status
        .success());
    assert_eq!(first, std::fs::read(&path).unwrap());
    assert_eq!(first, polyflip(&["export", "--n", "7"]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
