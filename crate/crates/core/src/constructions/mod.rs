//! Explicit triangulations used as distance witnesses: combs, zigzags,
//! shellings and the doubly supported witnesses built from them, central
//! triangles and the far witnesses, and a low-degree family with small
//! eccentricity.

mod family;
mod far;
mod shelling;

pub use family::{eccentric_family, family_axis_length};
pub(crate) use far::axis_m;
pub use far::{far_witness_long, far_witness_short, omega_tilde_m, omega_tilde_member, FarWitness};
pub use shelling::{
    find_shelling, is_shelling, omega_member, omega_witness, split_point, Evidence,
    OmegaCertificate, Shelling,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polygon::{crosses, cw, ordered, Edge, Polygon, Triangulation};

/// The triangulation of the standard `n`-gon whose diagonals all meet `v`.
pub fn comb(n: usize, v: u32) -> Result<Triangulation> {
    let polygon = Polygon::standard(n)?;
    comb_on(&polygon, v)
}

pub fn comb_on(polygon: &Polygon, v: u32) -> Result<Triangulation> {
    let n = polygon.len();
    let p = polygon.position(v)?;
    let mut diagonals: Vec<(u8, u8)> = (2..n - 1).map(|s| ordered(p, (p + s) % n)).collect();
    diagonals.sort_unstable();
    Ok(Triangulation::from_positions(polygon.clone(), diagonals))
}

/// Zigzag triangulation of `polygon` with ears at `a` and `b`.
///
/// The diagonals form a path starting at `{pred(b), succ(b)}` and alternately
/// advancing the left endpoint (towards `a`, counter-clockwise) and the right
/// endpoint (towards `a`, clockwise). With balanced sides the first step is on
/// the left, which leaves `pred(b)` as the only left vertex of degree one.
pub fn zigzag(polygon: &Polygon, a: u32, b: u32) -> Result<Triangulation> {
    let m = polygon.len();
    let pa = polygon.position(a)?;
    let pb = polygon.position(b)?;
    if pa == pb {
        return Err(Error::Precondition("zigzag needs two distinct ends".into()));
    }
    let left = cw(m, pa, pb) - 1;
    let right = m - 2 - left;
    if left.abs_diff(right) > 1 {
        return Err(Error::Precondition(format!(
            "zigzag sides must differ by at most one, got {left} and {right}"
        )));
    }
    if m == 3 {
        return Ok(Triangulation::from_positions(polygon.clone(), Vec::new()));
    }
    let mut lp = (pb + m - 1) % m;
    let mut rp = (pb + 1) % m;
    let mut diagonals = vec![ordered(lp, rp)];
    let (mut left_moves, mut right_moves) = (left - 1, right - 1);
    let mut on_left = left_moves >= right_moves;
    while left_moves + right_moves > 0 {
        if on_left {
            lp = (lp + m - 1) % m;
            left_moves -= 1;
        } else {
            rp = (rp + 1) % m;
            right_moves -= 1;
        }
        diagonals.push(ordered(lp, rp));
        on_left = !on_left;
    }
    diagonals.sort_unstable();
    Ok(Triangulation::from_positions(polygon.clone(), diagonals))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CentralTriangle {
    /// Clockwise triple `(a, b, c)`.
    pub vertices: [u32; 3],
    /// Lengths of `(a, b)`, `(b, c)` and `(c, a)`.
    pub lengths: [usize; 3],
}

impl CentralTriangle {
    pub fn min_length(&self) -> usize {
        *self.lengths.iter().min().expect("three lengths")
    }

    /// Same triangle listed from its `r`-th vertex.
    pub fn rotated(&self, r: usize) -> CentralTriangle {
        let v = self.vertices;
        let l = self.lengths;
        CentralTriangle {
            vertices: [v[r % 3], v[(r + 1) % 3], v[(r + 2) % 3]],
            lengths: [l[r % 3], l[(r + 1) % 3], l[(r + 2) % 3]],
        }
    }
}

/// Every triangle whose three clockwise lengths are at most `n/2`.
pub fn central_triangles(t: &Triangulation) -> Vec<CentralTriangle> {
    let n = t.n();
    let polygon = t.polygon();
    t.triangle_positions()
        .into_iter()
        .filter_map(|[i, j, k]| {
            let lengths = [j - i, k - j, n - (k - i)];
            if lengths.iter().any(|&l| 2 * l > n) {
                return None;
            }
            let tri = CentralTriangle {
                vertices: [i, j, k].map(|p| polygon.label(p)),
                lengths,
            };
            let start = (0..3)
                .min_by_key(|&r| tri.vertices[r])
                .expect("three vertices");
            Some(tri.rotated(start))
        })
        .collect()
}

/// A central triangle with the smallest possible longest side; ties go to the
/// lexicographically smallest vertex triple.
pub fn central_triangle(t: &Triangulation) -> Result<CentralTriangle> {
    central_triangles(t)
        .into_iter()
        .min_by_key(|c| (*c.lengths.iter().max().expect("three lengths"), c.vertices))
        .ok_or_else(|| Error::Internal(format!("no central triangle in {t}")))
}

/// Completes the non-crossing edge set `partial` to a triangulation sharing as
/// few diagonals with `t` as possible.
///
/// Dynamic programme over chords `{i, j}`: the cheapest triangulation of the
/// sub-polygon `i..=j` that crosses no partial edge. Such a triangulation
/// necessarily contains every partial edge.
pub fn complete_min_shared(partial: &[Edge], t: &Triangulation) -> Result<Triangulation> {
    let polygon = t.polygon();
    let n = polygon.len();
    let mut chords = Vec::with_capacity(partial.len());
    for &e in partial {
        chords.push(polygon.edge_positions(e)?);
    }
    for (x, &p) in chords.iter().enumerate() {
        for &q in &chords[x + 1..] {
            if crosses(n, p, q) {
                return Err(Error::Crossing {
                    first: polygon.edge_at(p.0, p.1),
                    second: polygon.edge_at(q.0, q.1),
                });
            }
        }
    }
    let allowed = |i: usize, j: usize| chords.iter().all(|&c| !crosses(n, (i, j), c));
    let weight = |i: usize, j: usize| usize::from(t.has_diagonal_positions(i, j));

    const UNSET: usize = usize::MAX;
    let mut cost = vec![UNSET; n * n];
    let mut choice = vec![0usize; n * n];
    for i in 0..n - 1 {
        cost[i * n + i + 1] = 0;
    }
    for span in 2..n {
        for i in 0..n - span {
            let j = i + span;
            if !allowed(i, j) {
                continue;
            }
            let mut best = UNSET;
            for k in i + 1..j {
                let (left, right) = (cost[i * n + k], cost[k * n + j]);
                if left == UNSET || right == UNSET {
                    continue;
                }
                let c = left + right + weight(i, k) + weight(k, j);
                if c < best {
                    best = c;
                    choice[i * n + j] = k;
                }
            }
            cost[i * n + j] = best;
        }
    }
    if cost[n - 1] == UNSET {
        return Err(Error::Internal(
            "no completion avoids the partial edges".into(),
        ));
    }
    let mut diagonals = Vec::with_capacity(n - 3);
    let mut stack = vec![(0usize, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let k = choice[i * n + j];
        for (p, q) in [(i, k), (k, j)] {
            if q - p >= 2 {
                diagonals.push(ordered(p, q));
            }
            stack.push((p, q));
        }
    }
    diagonals.sort_unstable();
    Ok(Triangulation::from_positions(polygon.clone(), diagonals))
}

/// `ceil(a / b)` for `b > 0`.
pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}
