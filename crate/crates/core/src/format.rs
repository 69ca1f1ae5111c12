//! Text and JSON encodings of triangulations.
//!
//! Text: `n=<N>;<i>-<j>,<i>-<j>,...` with `i < j` and pairs sorted, vertices
//! numbered clockwise from the smallest label. JSON:
//! `{"n":6,"diagonals":[[0,2],[0,3],[0,4]]}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polygon::{Edge, Polygon, Triangulation, MAX_VERTICES};

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let key = self.canonical_key();
        write!(f, "n={};", key.n())?;
        for (i, (a, b)) in key.diagonals().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

pub fn to_text(t: &Triangulation) -> String {
    t.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationJson {
    pub n: usize,
    pub diagonals: Vec<[u32; 2]>,
}

impl From<&Triangulation> for TriangulationJson {
    fn from(t: &Triangulation) -> Self {
        let key = t.canonical_key();
        TriangulationJson {
            n: key.n(),
            diagonals: key
                .diagonals()
                .iter()
                .map(|&(a, b)| [a as u32, b as u32])
                .collect(),
        }
    }
}

impl TriangulationJson {
    pub fn to_triangulation(&self) -> Result<Triangulation> {
        let polygon = standard_polygon(self.n, &format!("n={}", self.n))?;
        Triangulation::new(polygon, self.diagonals.iter().map(|&e| Edge::from(e)))
    }
}

pub fn to_json(t: &Triangulation) -> String {
    serde_json::to_string(&TriangulationJson::from(t)).expect("plain data serializes")
}

pub fn parse_json(input: &str) -> Result<Triangulation> {
    let raw: TriangulationJson =
        serde_json::from_str(input).map_err(|e| Error::parse(input, e.to_string()))?;
    raw.to_triangulation()
}

fn standard_polygon(n: usize, literal: &str) -> Result<Polygon> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(Error::parse(
            literal,
            format!("n must lie in 3..={MAX_VERTICES}"),
        ));
    }
    Polygon::standard(n)
}

fn parse_label(s: &str, literal: &str) -> Result<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(literal, format!("bad vertex {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::parse(literal, format!("vertex {s:?} out of range")))
}

/// Parses `i-j,i-j,...` (possibly empty) into edges; no ordering is required.
pub fn parse_diagonal_list(input: &str) -> Result<Vec<Edge>> {
    let body = input.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|pair| {
            let (a, b) = pair
                .trim()
                .split_once('-')
                .ok_or_else(|| Error::parse(input, format!("expected i-j, got {pair:?}")))?;
            Ok(Edge::new(parse_label(a, input)?, parse_label(b, input)?))
        })
        .collect()
}

/// Triangulation of the standard `n`-gon from a diagonal list such as `0-2,0-3`.
pub fn parse_diagonals(n: usize, input: &str) -> Result<Triangulation> {
    let polygon = standard_polygon(n, input)?;
    Triangulation::new(polygon, parse_diagonal_list(input)?)
}

/// Strict parser for the full text form `n=<N>;<i>-<j>,...`.
pub fn parse_text(input: &str) -> Result<Triangulation> {
    let rest = input
        .strip_prefix("n=")
        .ok_or_else(|| Error::parse(input, "missing `n=` prefix"))?;
    let (n, list) = rest
        .split_once(';')
        .ok_or_else(|| Error::parse(input, "missing `;` after n"))?;
    let n = parse_label(n, input)? as usize;
    let polygon = standard_polygon(n, input)?;
    let mut edges = Vec::new();
    if !list.is_empty() {
        for pair in list.split(',') {
            let (a, b) = pair
                .split_once('-')
                .ok_or_else(|| Error::parse(input, format!("expected i-j, got {pair:?}")))?;
            let (a, b) = (parse_label(a, input)?, parse_label(b, input)?);
            if a >= b {
                return Err(Error::parse(
                    input,
                    format!("pair {pair} is not increasing"),
                ));
            }
            edges.push(Edge::new(a, b));
        }
    }
    if edges.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::parse(input, "pairs must be strictly increasing"));
    }
    Triangulation::new(polygon, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_is_exact() {
        let t = parse_diagonals(6, "0-4,0-2,0-3").unwrap();
        assert_eq!(t.to_string(), "n=6;0-2,0-3,0-4");
        assert_eq!(parse_text("n=6;0-2,0-3,0-4").unwrap(), t);
        assert_eq!(
            Triangulation::new(Polygon::standard(3).unwrap(), [])
                .unwrap()
                .to_string(),
            "n=3;"
        );
        assert!(parse_text("n=3;").is_ok());
    }

    #[test]
    fn text_rejects_noise() {
        for bad in [
            "",
            "n=6",
            "n=6;0-3,0-2,0-4",
            "n=6;2-0,0-3,0-4",
            "n=6; 0-2,0-3,0-4",
            "n=6;0-2,0-3,0-4,",
            "n=2;",
            "n=65;",
            "n=6;0-2,0-3",
            "n=-6;0-2",
            "n=6;0-2,0-2,0-3,0-4",
            "n=99999999999999;",
        ] {
            assert!(parse_text(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn json_form() {
        let t = parse_diagonals(6, "0-2,0-3,0-4").unwrap();
        let s = to_json(&t);
        assert_eq!(s, r#"{"n":6,"diagonals":[[0,2],[0,3],[0,4]]}"#);
        assert_eq!(parse_json(&s).unwrap(), t);
        assert!(parse_json(r#"{"n":6,"diagonals":[[0,2]]}"#).is_err());
        assert!(parse_json(r#"{"n":6,"diagonals":[[0,2],[0,3],[0,4]],"x":1}"#).is_err());
    }

    #[test]
    fn relabeled_polygon_prints_canonically() {
        let poly = Polygon::new(vec![0, 2, 3, 4, 6]).unwrap();
        let t = Triangulation::new(poly, [Edge::new(0, 3), Edge::new(0, 4)]).unwrap();
        assert_eq!(t.to_string(), "n=5;0-2,0-3");
    }
}
