//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p polyflip-cli --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use polyflip::constructions::eccentric_family;
use polyflip::metrics::{all_eccentricities, diameter_radius, eccentricity_with, DistanceTable};
use polyflip::verifier::{Claim, Status, VerificationReport, Verifier};
use polyflip::{build_slice, catalan, enumerate_all, Budget};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ENUMERATION_LIMIT: Duration = Duration::from_secs(10);
const CLOSE_N11_LIMIT: Duration = Duration::from_secs(120);
const UPPER_BOUND_LIMIT: Duration = Duration::from_secs(300);
const DIAMETER_LIMIT: Duration = Duration::from_secs(1800);
const WORKERS: usize = 4;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn verifier() -> Verifier {
    Verifier::new(WORKERS, Budget::default()).expect("default budget")
}

/// Runs `claim` for each n, failing on the first report that is not a pass.
fn pass_all(
    v: &Verifier,
    claim: Claim,
    ns: impl IntoIterator<Item = usize>,
) -> Result<Vec<VerificationReport>, String> {
    let mut out = Vec::new();
    for n in ns {
        let r = v.run(claim, n).map_err(|e| format!("{claim} n={n}: {e}"))?;
        if r.status != Status::Pass {
            return Err(format!(
                "{claim} n={n}: {} with {} failures, first: {:?}",
                r.status,
                r.failure_count,
                r.failures.first()
            ));
        }
        out.push(r);
    }
    Ok(out)
}

fn instances(reports: &[VerificationReport]) -> u64 {
    reports.iter().map(|r| r.instances).sum()
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    if took > limit {
        Err(format!("took {took:.1?}, limit {limit:?}"))
    } else {
        Ok(took)
    }
}

fn c1_catalan_counts() -> Outcome {
    let start = Instant::now();
    let expected = [2u128, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    for (n, &c) in (4..=12).zip(&expected) {
        let count = enumerate_all(n).map_err(|e| e.to_string())?.count() as u128;
        if count != c || catalan(n - 2) != c {
            return Err(format!("n={n}: enumerated {count}, expected {c}"));
        }
    }
    let took = within(ENUMERATION_LIMIT, start)?;
    Ok(format!("n=4..12 exact, {took:.2?}"))
}

fn c2_close() -> Outcome {
    let v = verifier();
    let reports = pass_all(&v, Claim::Close, 6..=10)?;
    let start = Instant::now();
    let last = pass_all(&v, Claim::Close, [11])?;
    let took = within(CLOSE_N11_LIMIT, start)?;
    Ok(format!(
        "n=6..11, {} triangulations with k <= n/2-2, n=11 in {took:.2?}",
        instances(&reports) + instances(&last)
    ))
}

fn c3_omega() -> Outcome {
    let reports = pass_all(&verifier(), Claim::Omega, 6..=9)?;
    Ok(format!("n=6..9, {} checks", instances(&reports)))
}

fn c4_upper_bound() -> Outcome {
    let start = Instant::now();
    let reports = pass_all(&verifier(), Claim::UpperBound, 6..=9)?;
    let took = within(UPPER_BOUND_LIMIT, start)?;
    Ok(format!("n=6..9, {} pairs, {took:.2?}", instances(&reports)))
}

fn c5_far_witnesses() -> Outcome {
    let reports = pass_all(&verifier(), Claim::Far, 8..=11)?;
    Ok(format!("n=8..11, {} triangulations", instances(&reports)))
}

fn c6_far_eccentricity() -> Outcome {
    let budget = Budget::default();
    let mut checked = 0;
    for n in 6..=11 {
        let slice = build_slice(n, &budget).map_err(|e| e.to_string())?;
        let ecc = all_eccentricities(&slice);
        for (i, &e) in ecc.iter().enumerate() {
            let t = slice.triangulation(i as u32);
            let k = t.comb_gap() as i64;
            // ceil((4n + k - 21) / 4)
            let bound = (4 * n as i64 + k - 21 + 3).div_euclid(4);
            if (e as i64) < bound {
                return Err(format!("{t}: eccentricity {e} < {bound}"));
            }
            checked += 1;
        }
    }
    Ok(format!("n=6..11, {checked} triangulations"))
}

fn c7_family() -> Outcome {
    pass_all(&verifier(), Claim::Remark, 8..=11)?;
    let budget = Budget::default();
    let mut checked = 0;
    for n in 8..=11 {
        let slice = build_slice(n, &budget).map_err(|e| e.to_string())?;
        for k in 0..=n - 5 {
            if 2 * k + 4 <= n {
                continue;
            }
            let t = eccentric_family(n, k).map_err(|e| e.to_string())?;
            let e = eccentricity_with(&slice, &t)
                .map_err(|e| e.to_string())?
                .eccentricity;
            if t.comb_gap() != k || e > n - 4 + k {
                return Err(format!(
                    "n={n} k={k}: gap {} eccentricity {e}",
                    t.comb_gap()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("n=8..11, {checked} family members"))
}

fn c8_degree_four_diameter() -> Outcome {
    let start = Instant::now();
    pass_all(&verifier(), Claim::Remark, [13])?;
    let (diameter, radius) = diameter_radius(13, &Budget::default()).map_err(|e| e.to_string())?;
    if diameter != 16 {
        return Err(format!("diameter {diameter}, expected 16"));
    }
    let took = within(DIAMETER_LIMIT, start)?;
    Ok(format!("n=13 diameter 16, radius {radius}, {took:.2?}"))
}

fn c9_characterization() -> Outcome {
    let v = verifier();
    for n in [8, 12, 16, 19] {
        let r = v
            .run(Claim::Characterization, n)
            .map_err(|e| e.to_string())?;
        if r.status != Status::Vacuous {
            return Err(format!("n={n}: {} instead of vacuous", r.status));
        }
    }
    let reports = pass_all(&v, Claim::Characterization, [20, 21])?;
    if reports.iter().any(|r| r.notes.is_empty()) {
        return Err("out-of-scope sub-cases are not declared".into());
    }
    Ok(format!(
        "vacuous below 20, comb sub-case at n=20,21 ({} vertices)",
        instances(&reports)
    ))
}

fn c10_property_suites() -> Outcome {
    let v = verifier();
    let structure = pass_all(&v, Claim::Structure, 4..=12)?;
    let deletion = pass_all(&v, Claim::Deletion, 4..=8)?;
    let budget = Budget::default();
    // flip involution, exhaustive
    for n in 4..=9 {
        for t in enumerate_all(n).map_err(|e| e.to_string())? {
            for d in t.diagonals() {
                let (u, mv) = t.flip(d).map_err(|e| e.to_string())?;
                let (back, _) = u.flip(mv.inserted).map_err(|e| e.to_string())?;
                if back != t {
                    return Err(format!("flipping {d} in {t} twice does not return"));
                }
            }
        }
    }
    // metric axioms on full slices
    for n in 4..=8 {
        let slice = build_slice(n, &budget).map_err(|e| e.to_string())?;
        let table = DistanceTable::build(&slice);
        let m = slice.len() as u32;
        for a in 0..m {
            for b in 0..m {
                let ab = table.get(a, b);
                if ab != table.get(b, a) || (ab == 0) != (a == b) {
                    return Err(format!("n={n}: symmetry or identity fails at ({a},{b})"));
                }
                for c in 0..m {
                    if table.get(a, c) > ab + table.get(b, c) {
                        return Err(format!("n={n}: triangle inequality fails at ({a},{b},{c})"));
                    }
                }
            }
        }
    }
    // sampled triples at n = 12
    let slice = build_slice(12, &budget).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let hubs: Vec<u32> = (0..40)
        .map(|_| rng.gen_range(0..slice.len() as u32))
        .collect();
    let rows: Vec<Vec<u8>> = hubs.iter().map(|&h| slice.distances_from(h)).collect();
    for _ in 0..10_000 {
        let (i, j) = (rng.gen_range(0..hubs.len()), rng.gen_range(0..hubs.len()));
        let c = rng.gen_range(0..slice.len());
        let ab = rows[i][hubs[j] as usize];
        if ab != rows[j][hubs[i] as usize] || rows[i][c] > ab + rows[j][c] {
            return Err(format!(
                "n=12: sampled triple ({}, {}, {c}) fails",
                hubs[i], hubs[j]
            ));
        }
    }
    Ok(format!(
        "structure n<=12 ({}), deletion n<=8 ({} pairs), involution n<=9, axioms n<=8, 10^4 triples n=12",
        instances(&structure),
        instances(&deletion)
    ))
}

fn c11_determinism() -> Outcome {
    let run = |workers: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_polyflip"))
            .args([
                "verify",
                "--all",
                "--n",
                "6..8",
                "--no-timing",
                "--workers",
                workers,
            ])
            .env_remove("POLYFLIP_NODE_CAP")
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!(
                "workers={workers}: exit {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            ));
        }
        Ok(out.stdout)
    };
    let (one, eight) = (run("1")?, run("8")?);
    if one != eight {
        return Err("reports differ between 1 and 8 workers".into());
    }
    Ok(format!("identical {} byte reports", one.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("catalan counts", c1_catalan_counts),
        ("eccentricity n-3+k for small k", c2_close),
        ("doubly supported witnesses", c3_omega),
        ("distance upper bound", c4_upper_bound),
        ("far witnesses", c5_far_witnesses),
        ("eccentricity lower bound", c6_far_eccentricity),
        ("low-degree family", c7_family),
        (
            "degree-four distance and diameter at n=13",
            c8_degree_four_diameter,
        ),
        ("small-k characterization", c9_characterization),
        ("property suites", c10_property_suites),
        ("determinism", c11_determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
