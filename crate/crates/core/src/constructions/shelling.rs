use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polygon::{bit, ordered, validate_triangulation, Edge, Triangulation};

/// An ordering `a_1, ..., a_k` of the vertices not adjacent to `vertex`, such
/// that dropping `a_i, ..., a_k` always leaves a triangulated convex polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shelling {
    pub vertex: u32,
    pub order: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub vertex: u32,
    pub edges: [Edge; 2],
}

/// Membership proof: a shelling plus, for each `a_i`, two diagonals of the
/// candidate avoiding `a_i, ..., a_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaCertificate {
    pub shelling: Shelling,
    pub evidence: Vec<Evidence>,
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

fn non_neighbors(t: &Triangulation, pv: usize) -> u64 {
    full_mask(t.n()) & !t.full_row(pv) & !bit(pv)
}

/// Depth-first search over ear-removal orders. `allow(w, removed)` filters the
/// vertex removed next; returns the removal order (last shelling vertex first).
fn removal_order(
    t: &Triangulation,
    targets: u64,
    allow: &dyn Fn(usize, u64) -> bool,
) -> Option<Vec<usize>> {
    fn go(
        t: &Triangulation,
        targets: u64,
        removed: u64,
        allow: &dyn Fn(usize, u64) -> bool,
        dead: &mut HashSet<u64>,
        out: &mut Vec<usize>,
    ) -> bool {
        if removed == targets {
            return true;
        }
        if dead.contains(&removed) {
            return false;
        }
        let mut left = targets & !removed;
        while left != 0 {
            let w = left.trailing_zeros() as usize;
            left &= left - 1;
            let is_ear = (t.full_row(w) & !removed).count_ones() == 2;
            if is_ear && allow(w, removed) {
                out.push(w);
                if go(t, targets, removed | bit(w), allow, dead, out) {
                    return true;
                }
                out.pop();
            }
        }
        dead.insert(removed);
        false
    }
    let mut dead = HashSet::new();
    let mut out = Vec::new();
    go(t, targets, 0, allow, &mut dead, &mut out).then_some(out)
}

pub fn find_shelling(t: &Triangulation, v: u32) -> Result<Shelling> {
    let pv = t.polygon().position(v)?;
    let targets = non_neighbors(t, pv);
    let mut order =
        removal_order(t, targets, &|_, _| true).ok_or(Error::NoShelling { vertex: v })?;
    order.reverse();
    Ok(Shelling {
        vertex: v,
        order: order.into_iter().map(|p| t.polygon().label(p)).collect(),
    })
}

/// Direct check of the shelling property: the order lists exactly the
/// non-neighbours of `v`, and for every suffix the remaining edges of `t`
/// triangulate the polygon on the remaining vertices.
pub fn is_shelling(t: &Triangulation, v: u32, order: &[u32]) -> bool {
    let polygon = t.polygon();
    let Ok(pv) = polygon.position(v) else {
        return false;
    };
    let mut expected: Vec<u32> = (0..t.n())
        .filter(|&p| non_neighbors(t, pv) & bit(p) != 0)
        .map(|p| polygon.label(p))
        .collect();
    let mut listed = order.to_vec();
    expected.sort_unstable();
    listed.sort_unstable();
    if expected != listed {
        return false;
    }
    for i in 0..order.len() {
        let dropped = &order[i..];
        let keep: Vec<u32> = polygon
            .labels()
            .iter()
            .copied()
            .filter(|l| !dropped.contains(l))
            .collect();
        let Ok(reduced) = polygon.restrict(&keep) else {
            return false;
        };
        let edges: Vec<Edge> = t
            .diagonals()
            .into_iter()
            .chain((0..t.n()).map(|p| polygon.edge_at(p, (p + 1) % t.n())))
            .filter(|e| !dropped.contains(&e.lo()) && !dropped.contains(&e.hi()))
            .collect();
        // every boundary edge of the reduced polygon must survive
        let m = reduced.len();
        let boundary_ok = (0..m).all(|p| {
            let e = reduced.edge_at(p, (p + 1) % m);
            edges.contains(&e)
        });
        let diagonals: Vec<Edge> = edges
            .into_iter()
            .filter(|&e| {
                reduced
                    .edge_kind(e)
                    .map(|k| k == crate::polygon::EdgeKind::Interior)
                    .unwrap_or(false)
            })
            .collect();
        if !boundary_ok || validate_triangulation(&reduced, diagonals).is_err() {
            return false;
        }
    }
    true
}

/// Index of the largest `x` in `ordered`, outside `subset`, preceded by exactly
/// `2i + 1` elements of `ordered` of which exactly `i` lie in `subset`.
pub fn split_point<T: PartialEq>(ordered: &[T], subset: &[T]) -> Result<usize> {
    if subset.iter().any(|s| !ordered.contains(s)) {
        return Err(Error::Precondition(
            "subset is not contained in the ordered set".into(),
        ));
    }
    if 2 * subset.len() + 3 > ordered.len() {
        return Err(Error::Precondition(format!(
            "subset of size {} is too large for {} elements",
            subset.len(),
            ordered.len()
        )));
    }
    let mut found = None;
    let mut in_subset = 0usize;
    for (before, x) in ordered.iter().enumerate() {
        if before == 2 * in_subset + 1 {
            found = Some(before);
        }
        if subset.contains(x) {
            in_subset += 1;
        }
    }
    let idx = found.ok_or_else(|| Error::Internal("split point must exist".into()))?;
    if subset.contains(&ordered[idx]) {
        return Err(Error::Internal(
            "largest split point lies in the subset".into(),
        ));
    }
    Ok(idx)
}

/// Decides whether `u` belongs to the doubly supported witness set of `(t, v)`
/// by exhaustive search over shellings of `t` at `v`.
pub fn omega_member(
    t: &Triangulation,
    v: u32,
    u: &Triangulation,
) -> Result<Option<OmegaCertificate>> {
    if t.polygon() != u.polygon() {
        return Err(Error::PolygonMismatch);
    }
    let pv = t.polygon().position(v)?;
    if u.interior_row(pv) != 0 {
        return Ok(None);
    }
    let targets = non_neighbors(t, pv);
    let mut rest = targets;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if u.interior_row(w).count_ones() < 2 {
            return Ok(None);
        }
    }
    let supported =
        |w: usize, removed: u64| (u.interior_row(w) & !(removed | bit(w))).count_ones() >= 2;
    let Some(removal) = removal_order(t, targets, &supported) else {
        return Ok(None);
    };
    let polygon = t.polygon();
    let mut removed = 0u64;
    let mut evidence = Vec::with_capacity(removal.len());
    for &w in &removal {
        let mut ok = u.interior_row(w) & !(removed | bit(w));
        let x = ok.trailing_zeros() as usize;
        ok &= ok - 1;
        let y = ok.trailing_zeros() as usize;
        evidence.push(Evidence {
            vertex: polygon.label(w),
            edges: [polygon.edge_at(w, x), polygon.edge_at(w, y)],
        });
        removed |= bit(w);
    }
    evidence.reverse();
    let order = removal.iter().rev().map(|&p| polygon.label(p)).collect();
    Ok(Some(OmegaCertificate {
        shelling: Shelling { vertex: v, order },
        evidence,
    }))
}

/// Builds a member of the witness set of `(t, v)` by recursively cutting the
/// polygon without `v` along two chords from the earliest shelling vertex.
pub fn omega_witness(t: &Triangulation, v: u32) -> Result<Triangulation> {
    let n = t.n();
    let polygon = t.polygon();
    let pv = polygon.position(v)?;
    let k = n - 3 - t.interior_row(pv).count_ones() as usize;
    if n < 4 || 2 * k + 4 > n {
        return Err(Error::EmptyOmega { vertex: v, k, n });
    }
    let shelling = find_shelling(t, v)?;
    let mut rank = vec![usize::MAX; n];
    for (i, &a) in shelling.order.iter().enumerate() {
        rank[polygon.position(a)?] = i;
    }
    let rest: Vec<usize> = (1..n).map(|s| (pv + s) % n).collect();
    let marked: Vec<usize> = rest
        .iter()
        .copied()
        .filter(|&p| rank[p] != usize::MAX)
        .collect();
    let mut chords = vec![ordered(rest[0], rest[n - 2])];
    cut(polygon, &rank, rest, marked, &mut chords)?;

    let diagonals: Vec<Edge> = chords
        .into_iter()
        .filter(|&(a, b)| !polygon.is_boundary_positions(a as usize, b as usize))
        .map(|(a, b)| polygon.edge_at(a as usize, b as usize))
        .collect();
    Triangulation::new(polygon.clone(), diagonals)
        .map_err(|e| Error::Internal(format!("witness construction failed: {e}")))
}

/// `poly` lists positions clockwise; `marked` are the shelling vertices whose
/// two boundary edges survive in `poly`.
fn cut(
    polygon: &crate::polygon::Polygon,
    rank: &[usize],
    poly: Vec<usize>,
    marked: Vec<usize>,
    chords: &mut Vec<(u8, u8)>,
) -> Result<()> {
    let m = poly.len();
    if m < 3 {
        return Ok(());
    }
    if marked.is_empty() {
        let hub = (0..m)
            .min_by_key(|&i| polygon.label(poly[i]))
            .expect("non-empty polygon");
        for s in 2..m - 1 {
            chords.push(ordered(poly[hub], poly[(hub + s) % m]));
        }
        return Ok(());
    }
    let pivot = *marked
        .iter()
        .min_by_key(|&&p| rank[p])
        .expect("marked is non-empty");
    let at = poly
        .iter()
        .position(|&p| p == pivot)
        .expect("pivot in polygon");
    let around: Vec<usize> = (1..m).map(|s| poly[(at + s) % m]).collect();
    let others: Vec<usize> = marked.iter().copied().filter(|&p| p != pivot).collect();

    let xi = split_point(&around, &others)?;
    let (first, tail) = around.split_at(xi);
    let tail_marked: Vec<usize> = others
        .iter()
        .copied()
        .filter(|p| tail.contains(p))
        .collect();
    let yi = split_point(tail, &tail_marked)?;
    let (second, third) = tail.split_at(yi);
    let (x, y) = (tail[0], third[0]);
    chords.push(ordered(pivot, x));
    chords.push(ordered(pivot, y));

    let piece = |part: &[usize], closing: Option<usize>| {
        let mut p = vec![pivot];
        p.extend_from_slice(part);
        p.extend(closing);
        let s = others
            .iter()
            .copied()
            .filter(|q| part.contains(q))
            .collect();
        (p, s)
    };
    for (p, s) in [
        piece(first, Some(x)),
        piece(second, Some(y)),
        piece(third, None),
    ] {
        cut(polygon, rank, p, s, chords)?;
    }
    Ok(())
}
