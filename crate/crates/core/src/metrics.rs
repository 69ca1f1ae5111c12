//! Exact flip distances, eccentricities, diameter and radius.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::flip::{build_slice, FlipGraphSlice, FlipMove};
use crate::polygon::{CanonicalKey, Triangulation};

/// A shortest flip sequence and its length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    pub distance: usize,
    pub geodesic: Vec<FlipMove>,
}

impl DistanceResult {
    /// Applies the geodesic to `source`, failing if some move is not a legal flip.
    pub fn replay(&self, source: &Triangulation) -> Result<Triangulation> {
        let mut t = source.clone();
        for mv in &self.geodesic {
            let (next, applied) = t.flip(mv.removed)?;
            if applied.inserted != mv.inserted {
                return Err(Error::Internal(format!(
                    "geodesic move {:?} inserts {} instead",
                    mv, applied.inserted
                )));
            }
            t = next;
        }
        Ok(t)
    }
}

fn as_text<S: Serializer>(t: &Triangulation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&t.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EccentricityResult {
    pub eccentricity: usize,
    #[serde(serialize_with = "as_text")]
    pub witness: Triangulation,
    pub layer_sizes: Vec<usize>,
}

struct Visit {
    depth: u8,
    parent: Option<(CanonicalKey, FlipMove)>,
}

/// Bidirectional breadth-first search on the implicit flip-graph.
pub fn flip_distance(t: &Triangulation, u: &Triangulation) -> Result<DistanceResult> {
    if t.polygon() != u.polygon() {
        return Err(Error::PolygonMismatch);
    }
    let source = t.canonical_key();
    let target = u.canonical_key();
    if source == target {
        return Ok(DistanceResult {
            distance: 0,
            geodesic: Vec::new(),
        });
    }
    let mut seen = [HashMap::new(), HashMap::new()];
    seen[0].insert(
        source.clone(),
        Visit {
            depth: 0,
            parent: None,
        },
    );
    seen[1].insert(
        target.clone(),
        Visit {
            depth: 0,
            parent: None,
        },
    );
    let mut frontier = [vec![t.clone()], vec![u.clone()]];
    let mut depth = [0u8, 0u8];

    let meet = loop {
        let side = usize::from(frontier[1].len() < frontier[0].len());
        let other = 1 - side;
        if frontier[side].is_empty() {
            return Err(Error::Internal("flip-graph search exhausted".into()));
        }
        depth[side] += 1;
        let mut next = Vec::new();
        let mut meets: Vec<CanonicalKey> = Vec::new();
        for node in std::mem::take(&mut frontier[side]) {
            let node_key = node.canonical_key();
            for (nb, mv) in node.flips() {
                let key = nb.canonical_key();
                if seen[side].contains_key(&key) {
                    continue;
                }
                if seen[other].contains_key(&key) {
                    meets.push(key.clone());
                }
                seen[side].insert(
                    key,
                    Visit {
                        depth: depth[side],
                        parent: Some((node_key.clone(), mv)),
                    },
                );
                next.push(nb);
            }
        }
        if let Some(best) = meets.into_iter().min() {
            break best;
        }
        frontier[side] = next;
    };

    let walk = |map: &HashMap<CanonicalKey, Visit>, from: &CanonicalKey| {
        let mut moves = Vec::new();
        let mut cur = from.clone();
        while let Some((parent, mv)) = &map[&cur].parent {
            moves.push(mv.clone());
            cur = parent.clone();
        }
        moves
    };
    let mut geodesic = walk(&seen[0], &meet);
    geodesic.reverse();
    geodesic.extend(walk(&seen[1], &meet).iter().map(FlipMove::inverse));
    debug_assert_eq!(
        geodesic.len(),
        (seen[0][&meet].depth + seen[1][&meet].depth) as usize
    );
    Ok(DistanceResult {
        distance: geodesic.len(),
        geodesic,
    })
}

/// Eccentricity of the node `source` in a materialized slice.
pub fn eccentricity_in(slice: &FlipGraphSlice, source: u32) -> (usize, u32, Vec<usize>) {
    let dist = slice.distances_from(source);
    let ecc = *dist.iter().max().expect("non-empty slice") as usize;
    let mut layers = vec![0usize; ecc + 1];
    for &d in &dist {
        layers[d as usize] += 1;
    }
    let witness = dist
        .iter()
        .position(|&d| d as usize == ecc)
        .expect("farthest layer is non-empty") as u32;
    (ecc, witness, layers)
}

pub fn eccentricity(t: &Triangulation, budget: &Budget) -> Result<EccentricityResult> {
    let slice = build_slice(t.n(), budget)?;
    eccentricity_with(&slice, t)
}

pub fn eccentricity_with(slice: &FlipGraphSlice, t: &Triangulation) -> Result<EccentricityResult> {
    let source = slice.index_of(t).ok_or(Error::PolygonMismatch)?;
    let (eccentricity, witness, layer_sizes) = eccentricity_in(slice, source);
    let witness = Triangulation::from_key_on(t.polygon(), slice.key(witness))?;
    Ok(EccentricityResult {
        eccentricity,
        witness,
        layer_sizes,
    })
}

/// `2n - 6 - e` where `e` is the larger of the two maximal interior degrees.
pub fn distance_upper_bound(t: &Triangulation, u: &Triangulation) -> Result<usize> {
    if t.polygon() != u.polygon() {
        return Err(Error::PolygonMismatch);
    }
    let e = t.max_interior_degree().max(u.max_interior_degree());
    Ok(2 * t.n() - 6 - e)
}

/// Eccentricity of every node. One BFS per dihedral orbit; the result is
/// copied to the rest of the orbit since rotations and reflections are
/// automorphisms of the flip-graph.
pub fn all_eccentricities(slice: &FlipGraphSlice) -> Vec<usize> {
    let reps = slice.orbit_representatives();
    let mut sources: Vec<u32> = reps.clone();
    sources.sort_unstable();
    sources.dedup();
    let ecc: HashMap<u32, usize> = sources
        .par_iter()
        .map(|&s| {
            let d = slice.distances_from(s);
            (s, *d.iter().max().expect("non-empty slice") as usize)
        })
        .collect();
    reps.iter().map(|r| ecc[r]).collect()
}

/// Exact `(diameter, radius)` of the flip-graph of the `n`-gon.
pub fn diameter_radius(n: usize, budget: &Budget) -> Result<(usize, usize)> {
    let slice = build_slice(n, budget)?;
    Ok(diameter_radius_of(&slice))
}

pub fn diameter_radius_of(slice: &FlipGraphSlice) -> (usize, usize) {
    let ecc = all_eccentricities(slice);
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    let radius = ecc.iter().copied().min().unwrap_or(0);
    (diameter, radius)
}

/// A shortest path from the BFS source of `dist` to `target`, as node
/// indices starting at the source. Ties go to the smallest-index predecessor.
pub fn geodesic_nodes(slice: &FlipGraphSlice, dist: &[u8], target: u32) -> Vec<u32> {
    let mut path = vec![target];
    let mut cur = target;
    while dist[cur as usize] > 0 {
        let want = dist[cur as usize] - 1;
        cur = slice
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&w| dist[w as usize] == want)
            .min()
            .expect("BFS layers are contiguous");
        path.push(cur);
    }
    path.reverse();
    path
}

/// Row-major all-pairs distance table of a slice.
pub struct DistanceTable {
    size: usize,
    data: Vec<u8>,
}

impl DistanceTable {
    pub fn build(slice: &FlipGraphSlice) -> Self {
        let size = slice.len();
        let rows: Vec<Vec<u8>> = (0..size as u32)
            .into_par_iter()
            .map(|s| slice.distances_from(s))
            .collect();
        DistanceTable {
            size,
            data: rows.concat(),
        }
    }

    pub fn get(&self, a: u32, b: u32) -> usize {
        self.data[a as usize * self.size + b as usize] as usize
    }

    pub fn row(&self, a: u32) -> &[u8] {
        &self.data[a as usize * self.size..(a as usize + 1) * self.size]
    }
}
