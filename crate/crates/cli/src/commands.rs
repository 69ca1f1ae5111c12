use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use serde_json::json;

use polyflip::constructions::{
    central_triangle, eccentric_family, family_axis_length, far_witness_long, far_witness_short,
    omega_member, omega_witness, FarWitness,
};
use polyflip::metrics::{all_eccentricities, eccentricity_with};
use polyflip::verifier::VerificationReport;
use polyflip::{
    build_slice, catalan, enumerate_all, flip_distance, parse_diagonals, parse_text, to_json,
    Budget, Error, Triangulation,
};

use crate::{Format, WitnessKind};

type Result<T> = std::result::Result<T, Error>;

fn io(e: impl std::fmt::Display) -> Error {
    Error::Internal(format!("output: {e}"))
}

fn unsupported(command: &str, format: Format) -> Error {
    Error::Precondition(format!("{command} does not support --format {format:?}").to_lowercase())
}

/// Makes sure a rejected literal is quoted in the error.
fn naming(literal: &str, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::Parse {
            literal: literal.to_string(),
            reason: other.to_string(),
        },
    }
}

/// Reads a literal as either a bare diagonal list or the full `n=...;...` form.
pub fn literal(n: usize, s: &str) -> Result<Triangulation> {
    if s.starts_with("n=") {
        let t = parse_text(s).map_err(|e| naming(s, e))?;
        if t.n() != n {
            return Err(Error::Parse {
                literal: s.to_string(),
                reason: format!("literal has n={} but --n is {n}", t.n()),
            });
        }
        return Ok(t);
    }
    parse_diagonals(n, s).map_err(|e| naming(s, e))
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io)?;
    writeln!(out).map_err(io)
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

/// Whether exact distances on the `n`-gon fit in the slice budget.
fn affordable(n: usize, budget: &Budget) -> bool {
    catalan(n - 2) <= budget.slice_nodes
}

pub fn enumerate(
    n: usize,
    budget: &Budget,
    format: Option<Format>,
    out: &mut dyn Write,
) -> Result<()> {
    if n >= 3 {
        budget.check_slice(catalan(n - 2))?;
    }
    let all: Vec<Triangulation> = enumerate_all(n)?.collect();
    match format.unwrap_or(Format::Text) {
        Format::Text => {
            for t in &all {
                writeln!(out, "{t}").map_err(io)?;
            }
            writeln!(out, "count={}", all.len()).map_err(io)?;
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = all
                .iter()
                .map(|t| serde_json::from_str(&to_json(t)).expect("valid json"))
                .collect();
            write_json(
                out,
                &json!({ "n": n, "count": all.len(), "triangulations": items }),
            )?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["index", "comb_gap", "triangulation"])
                .map_err(io)?;
            for (i, t) in all.iter().enumerate() {
                w.write_record([i.to_string(), t.comb_gap().to_string(), t.to_string()])
                    .map_err(io)?;
            }
            w.flush().map_err(io)?;
        }
        f => return Err(unsupported("enumerate", f)),
    }
    Ok(())
}

pub fn distance(
    n: usize,
    t: &str,
    u: &str,
    format: Option<Format>,
    out: &mut dyn Write,
) -> Result<()> {
    let (t, u) = (literal(n, t)?, literal(n, u)?);
    let r = flip_distance(&t, &u)?;
    match format.unwrap_or(Format::Text) {
        Format::Text => {
            writeln!(out, "distance={}", r.distance).map_err(io)?;
            for mv in &r.geodesic {
                writeln!(out, "flip {} -> {}", mv.removed, mv.inserted).map_err(io)?;
            }
        }
        Format::Json => write_json(out, &r)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["step", "removed", "inserted"])
                .map_err(io)?;
            for (i, mv) in r.geodesic.iter().enumerate() {
                w.write_record([
                    (i + 1).to_string(),
                    mv.removed.to_string(),
                    mv.inserted.to_string(),
                ])
                .map_err(io)?;
            }
            w.flush().map_err(io)?;
        }
        f => return Err(unsupported("distance", f)),
    }
    Ok(())
}

pub fn eccentricity(
    n: usize,
    t: &str,
    budget: &Budget,
    format: Option<Format>,
    out: &mut dyn Write,
) -> Result<()> {
    let t = literal(n, t)?;
    let slice = build_slice(n, budget)?;
    let r = eccentricity_with(&slice, &t)?;
    match format.unwrap_or(Format::Text) {
        Format::Text => {
            writeln!(out, "eccentricity={}", r.eccentricity).map_err(io)?;
            writeln!(out, "witness={}", r.witness).map_err(io)?;
            let layers: Vec<String> = r.layer_sizes.iter().map(|s| s.to_string()).collect();
            writeln!(out, "layers={}", layers.join(",")).map_err(io)?;
        }
        Format::Json => write_json(out, &r)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["distance", "count"]).map_err(io)?;
            for (d, c) in r.layer_sizes.iter().enumerate() {
                w.write_record([d.to_string(), c.to_string()]).map_err(io)?;
            }
            w.flush().map_err(io)?;
        }
        f => return Err(unsupported("eccentricity", f)),
    }
    Ok(())
}

#[derive(Serialize)]
struct Stratum {
    k: usize,
    eccentricity: usize,
    count: usize,
}

#[derive(Serialize)]
struct Row {
    triangulation: String,
    k: usize,
    eccentricity: usize,
}

pub fn profile(
    n: usize,
    per_triangulation: bool,
    budget: &Budget,
    format: Option<Format>,
    out: &mut dyn Write,
) -> Result<()> {
    let slice = build_slice(n, budget)?;
    let ecc = all_eccentricities(&slice);
    let rows: Vec<Row> = (0..slice.len() as u32)
        .map(|i| {
            let t = slice.triangulation(i);
            Row {
                k: t.comb_gap(),
                triangulation: t.to_string(),
                eccentricity: ecc[i as usize],
            }
        })
        .collect();
    let mut hist: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for r in &rows {
        *hist.entry((r.k, r.eccentricity)).or_default() += 1;
    }
    let strata: Vec<Stratum> = hist
        .into_iter()
        .map(|((k, eccentricity), count)| Stratum {
            k,
            eccentricity,
            count,
        })
        .collect();
    match format.unwrap_or(Format::Text) {
        Format::Text => {
            if per_triangulation {
                for r in &rows {
                    writeln!(
                        out,
                        "{} k={} eccentricity={}",
                        r.triangulation, r.k, r.eccentricity
                    )
                    .map_err(io)?;
                }
            }
            for s in &strata {
                writeln!(
                    out,
                    "k={} eccentricity={} count={}",
                    s.k, s.eccentricity, s.count
                )
                .map_err(io)?;
            }
        }
        Format::Json => {
            if per_triangulation {
                write_json(
                    out,
                    &json!({ "n": n, "strata": strata, "triangulations": rows }),
                )?;
            } else {
                write_json(out, &json!({ "n": n, "strata": strata }))?;
            }
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            if per_triangulation {
                w.write_record(["triangulation", "k", "eccentricity"])
                    .map_err(io)?;
                for r in &rows {
                    w.serialize((&r.triangulation, r.k, r.eccentricity))
                        .map_err(io)?;
                }
            } else {
                w.write_record(["k", "eccentricity", "count"]).map_err(io)?;
                for s in &strata {
                    w.serialize((s.k, s.eccentricity, s.count)).map_err(io)?;
                }
            }
            w.flush().map_err(io)?;
        }
        f => return Err(unsupported("profile", f)),
    }
    Ok(())
}

fn exact_distance(t: &Triangulation, u: &Triangulation, budget: &Budget) -> Result<Option<usize>> {
    if !affordable(t.n(), budget) {
        return Ok(None);
    }
    Ok(Some(flip_distance(t, u)?.distance))
}

fn far_record(w: &FarWitness, t: &Triangulation, budget: &Budget) -> Result<serde_json::Value> {
    let mut v = serde_json::to_value(w).map_err(io)?;
    v["distance"] = json!(exact_distance(t, &w.witness, budget)?);
    Ok(v)
}

pub fn witness(
    kind: WitnessKind,
    budget: &Budget,
    format: Option<Format>,
    out: &mut dyn Write,
) -> Result<()> {
    let record = match kind {
        WitnessKind::Omega { n, t, v } => {
            let t = literal(n, &t)?;
            let u = omega_witness(&t, v)?;
            let cert = omega_member(&t, v, &u)?
                .ok_or_else(|| Error::Internal(format!("{u} is not a member")))?;
            let k = n - 3 - t.interior_degree(v)?;
            json!({
                "kind": "omega",
                "witness": u.to_string(),
                "bound": n - 3 + k,
                "certificate": cert,
                "distance": exact_distance(&t, &u, budget)?,
            })
        }
        WitnessKind::FarLong { n, t } => {
            let t = literal(n, &t)?;
            let mut v = far_record(&far_witness_long(&t)?, &t, budget)?;
            v["kind"] = json!("far-long");
            v
        }
        WitnessKind::FarShort { n, t } => {
            let t = literal(n, &t)?;
            let mut v = far_record(&far_witness_short(&t)?, &t, budget)?;
            v["kind"] = json!("far-short");
            v
        }
        WitnessKind::Family { n, k } => {
            let t = eccentric_family(n, k)?;
            let ecc = if affordable(n, budget) {
                let slice = build_slice(n, budget)?;
                Some(eccentricity_with(&slice, &t)?.eccentricity)
            } else {
                None
            };
            json!({
                "kind": "family",
                "witness": t.to_string(),
                "k": k,
                "axis_length": family_axis_length(n, k),
                "max_interior_degree": t.max_interior_degree(),
                "bound": n - 4 + k,
                "eccentricity": ecc,
            })
        }
        WitnessKind::Central { n, t } => {
            let t = literal(n, &t)?;
            let c = central_triangle(&t)?;
            json!({
                "kind": "central",
                "vertices": c.vertices,
                "lengths": c.lengths,
            })
        }
    };
    match format.unwrap_or(Format::Text) {
        Format::Json => write_json(out, &record)?,
        Format::Text => {
            let obj = record.as_object().expect("records are objects");
            for (key, value) in obj {
                let shown = match value {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                writeln!(out, "{key}={shown}").map_err(io)?;
            }
        }
        f => return Err(unsupported("witness", f)),
    }
    Ok(())
}

pub fn export(
    n: usize,
    budget: &Budget,
    format: Option<Format>,
    out: &mut dyn Write,
) -> Result<()> {
    let slice = build_slice(n, budget)?;
    match format.unwrap_or(Format::Dot) {
        Format::Dot | Format::Text => out.write_all(slice.to_dot().as_bytes()).map_err(io)?,
        Format::Json => writeln!(out, "{}", slice.to_json()).map_err(io)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["source", "target"]).map_err(io)?;
            for a in 0..slice.len() as u32 {
                let mut nbs: Vec<u32> = slice
                    .neighbors(a)
                    .iter()
                    .copied()
                    .filter(|&b| b > a)
                    .collect();
                nbs.sort_unstable();
                for b in nbs {
                    w.serialize((a, b)).map_err(io)?;
                }
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(())
}

pub fn write_reports(
    reports: &[VerificationReport],
    format: Option<Format>,
    out: &mut dyn Write,
) -> Result<()> {
    match format.unwrap_or(Format::Json) {
        Format::Json => write_json(out, &reports)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["claim", "n", "instances", "failures", "status", "seconds"])
                .map_err(io)?;
            for r in reports {
                let seconds = r
                    .elapsed_seconds
                    .map(|s| format!("{s:.3}"))
                    .unwrap_or_default();
                w.write_record([
                    r.claim.to_string(),
                    r.n.to_string(),
                    r.instances.to_string(),
                    r.failure_count.to_string(),
                    r.status.to_string(),
                    seconds,
                ])
                .map_err(io)?;
            }
            w.flush().map_err(io)?;
        }
        Format::Text => {
            for r in reports {
                write!(
                    out,
                    "{} n={} {} instances={} failures={}",
                    r.claim, r.n, r.status, r.instances, r.failure_count
                )
                .map_err(io)?;
                if let Some(s) = r.elapsed_seconds {
                    write!(out, " seconds={s:.3}").map_err(io)?;
                }
                writeln!(out).map_err(io)?;
                for f in &r.failures {
                    writeln!(out, "  fail: {f}").map_err(io)?;
                }
                for note in &r.notes {
                    writeln!(out, "  note: {note}").map_err(io)?;
                }
            }
        }
        f => return Err(unsupported("verify", f)),
    }
    Ok(())
}
