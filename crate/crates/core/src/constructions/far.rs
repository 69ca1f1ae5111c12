use serde::{Serialize, Serializer};

use super::{ceil_div, central_triangle, complete_min_shared, zigzag, CentralTriangle};
use crate::error::{Error, Result};
use crate::polygon::{bit, Edge, Triangulation};

fn as_text<S: Serializer>(t: &Triangulation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&t.to_string())
}

/// A triangulation far from `T`, with the lower bound on its distance that the
/// construction guarantees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FarWitness {
    #[serde(serialize_with = "as_text")]
    pub witness: Triangulation,
    pub bound: i64,
    pub central: CentralTriangle,
    /// The oriented edge `(a, b)` carrying the zigzag.
    pub axis: [u32; 2],
    /// Clockwise predecessor of `b`, the vertex deleted in the bound's proof.
    pub pivot: Option<u32>,
    /// Vertices of the zigzag polygon in clockwise order.
    pub sub_polygon: Vec<u32>,
}

/// Positions strictly on the right of `(a, b)`, clockwise from `b`.
fn right_positions(n: usize, pa: usize, pb: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = (pb + 1) % n;
    while p != pa {
        out.push(p);
        p = (p + 1) % n;
    }
    out
}

fn adjacent_to_axis(t: &Triangulation, pa: usize, pb: usize, w: usize) -> bool {
    t.interior_row(w) & (bit(pa) | bit(pb)) != 0
}

/// Number of right vertices of `(a, b)` adjacent to `a` or `b` by an interior edge of `t`.
fn m_count(t: &Triangulation, pa: usize, pb: usize) -> usize {
    right_positions(t.n(), pa, pb)
        .into_iter()
        .filter(|&w| adjacent_to_axis(t, pa, pb, w))
        .count()
}

/// Right vertices of `(a, b)` adjacent to `a` or `b` by an interior edge of `t`.
pub(crate) fn axis_m(t: &Triangulation, a: u32, b: u32) -> Result<usize> {
    let polygon = t.polygon();
    Ok(m_count(t, polygon.position(a)?, polygon.position(b)?))
}

fn lay_zigzag(
    t: &Triangulation,
    central: CentralTriangle,
    pa: usize,
    pb: usize,
    right: Vec<usize>,
    with_boundary: bool,
    bound: i64,
) -> Result<FarWitness> {
    let polygon = t.polygon();
    let n = t.n();
    let (a, b) = (polygon.label(pa), polygon.label(pb));
    let mut keep = vec![a, b];
    let mut p = (pa + 1) % n;
    while p != pb {
        keep.push(polygon.label(p));
        p = (p + 1) % n;
    }
    keep.extend(right.iter().map(|&p| polygon.label(p)));
    if keep.len() < 4 {
        // a boundary axis leaves nothing to zigzag over
        let witness = complete_min_shared(&[], t)?;
        let sub_polygon = polygon
            .restrict(&keep)
            .map(|s| s.labels().to_vec())
            .unwrap_or(keep);
        return Ok(FarWitness {
            witness,
            bound,
            central,
            axis: [a, b],
            pivot: None,
            sub_polygon,
        });
    }
    let sub = polygon.restrict(&keep)?;
    let (partial, pivot) = {
        let z = zigzag(&sub, a, b)?;
        let mut partial = z.diagonals();
        if with_boundary {
            let m = sub.len();
            partial.extend((0..m).map(|i| Edge::new(sub.label(i), sub.label((i + 1) % m))));
        }
        (partial, Some(polygon.pred(b)?))
    };
    let witness = complete_min_shared(&partial, t)?;
    Ok(FarWitness {
        witness,
        bound,
        central,
        axis: [a, b],
        pivot,
        sub_polygon: sub.labels().to_vec(),
    })
}

/// Witness with `d(T, U) >= n + l - 6`, `l` the shortest side of the central triangle.
pub fn far_witness_long(t: &Triangulation) -> Result<FarWitness> {
    let n = t.n();
    if n < 6 {
        return Err(Error::TooSmall { n, min: 6 });
    }
    let polygon = t.polygon();
    let central = central_triangle(t)?;
    let l = central.min_length();
    let pick = (0..3).map(|r| central.rotated(r)).find(|c| {
        let pa = polygon.position(c.vertices[0]).expect("central vertex");
        let pb = polygon.position(c.vertices[1]).expect("central vertex");
        2 * c.lengths[0] + m_count(t, pa, pb) <= n
    });
    let c = pick.ok_or_else(|| {
        Error::Internal(format!(
            "no side of the central triangle of {t} is short enough"
        ))
    })?;
    let pa = polygon.position(c.vertices[0])?;
    let pb = polygon.position(c.vertices[1])?;
    let right: Vec<usize> = right_positions(n, pa, pb)
        .into_iter()
        .filter(|&w| !adjacent_to_axis(t, pa, pb, w))
        .take(c.lengths[0] - 1)
        .collect();
    if right.len() + 1 != c.lengths[0] {
        return Err(Error::Internal("too few free vertices on the right".into()));
    }
    lay_zigzag(t, c, pa, pb, right, true, n as i64 + l as i64 - 6)
}

/// Witness with `d(T, U) >= n + (k - 9)/2 - l`, rounded up, where `k` is the
/// comb gap of `T`.
pub fn far_witness_short(t: &Triangulation) -> Result<FarWitness> {
    let n = t.n();
    if n < 6 {
        return Err(Error::TooSmall { n, min: 6 });
    }
    let polygon = t.polygon();
    let k = t.comb_gap() as i64;
    let central = central_triangle(t)?;
    let l = central.min_length();
    // (c, a) is a shortest side
    let r = (0..3)
        .find(|&r| central.rotated(r).lengths[2] == l)
        .expect("some side is shortest");
    let c = central.rotated(r);
    let candidates = [
        (c, c.vertices[0], c.vertices[1], c.lengths[0]),
        (c.rotated(1), c.vertices[1], c.vertices[2], c.lengths[1]),
    ];
    let mut chosen = None;
    for (tri, x, y, lx) in candidates {
        let (px, py) = (polygon.position(x)?, polygon.position(y)?);
        let mx = m_count(t, px, py) as i64;
        if 2 * (lx as i64 - mx) >= k + 3 - 2 * l as i64 {
            chosen = Some((tri, px, py, lx));
            break;
        }
    }
    let (tri, pa, pb, la) = chosen.ok_or_else(|| {
        Error::Internal(format!(
            "neither long side of the central triangle of {t} qualifies"
        ))
    })?;
    let all_right = right_positions(n, pa, pb);
    let mut right: Vec<usize> = all_right
        .iter()
        .copied()
        .filter(|&w| !adjacent_to_axis(t, pa, pb, w))
        .take(la - 1)
        .collect();
    for &w in &all_right {
        if right.len() + 1 >= la {
            break;
        }
        if !right.contains(&w) {
            right.push(w);
        }
    }
    right.sort_by_key(|&w| (w + n - pb) % n);
    let bound = ceil_div(2 * n as i64 + k - 9 - 2 * l as i64, 2);
    lay_zigzag(t, tri, pa, pb, right, false, bound)
}

fn tilde_preconditions(
    t: &Triangulation,
    a: u32,
    b: u32,
    u: &Triangulation,
) -> Result<(usize, usize)> {
    if t.polygon() != u.polygon() {
        return Err(Error::PolygonMismatch);
    }
    let polygon = t.polygon();
    let n = t.n();
    let length = polygon.oriented(a, b)?.length;
    if !t.contains_edge(Edge::new(a, b)) {
        return Err(Error::Precondition(format!(
            "{} is not an edge of {t}",
            Edge::new(a, b)
        )));
    }
    if length > n.div_ceil(2) - 1 {
        return Err(Error::Precondition(format!(
            "oriented edge ({a},{b}) has length {length} > {}",
            n.div_ceil(2) - 1
        )));
    }
    Ok((polygon.position(a)?, polygon.position(b)?))
}

/// Whether `u` shares only edges at `a` or `b` with `t` and gives every vertex
/// left of `(a, b)` at least two interior edges.
pub fn omega_tilde_member(t: &Triangulation, a: u32, b: u32, u: &Triangulation) -> Result<bool> {
    let (pa, pb) = tilde_preconditions(t, a, b, u)?;
    let n = t.n();
    let shared_ok = t.diagonal_positions().iter().all(|&(i, j)| {
        let (i, j) = (i as usize, j as usize);
        !u.has_diagonal_positions(i, j) || [i, j].iter().any(|&e| e == pa || e == pb)
    });
    let mut p = (pa + 1) % n;
    while p != pb {
        if u.interior_row(p).count_ones() < 2 {
            return Ok(false);
        }
        p = (p + 1) % n;
    }
    Ok(shared_ok)
}

/// Right vertices of `(a, b)` adjacent to `a` or `b` in `t` and, in `u`, to a
/// vertex not on the right of `(a, b)`; both adjacencies by interior edges.
pub fn omega_tilde_m(t: &Triangulation, a: u32, b: u32, u: &Triangulation) -> Result<usize> {
    let (pa, pb) = tilde_preconditions(t, a, b, u)?;
    let n = t.n();
    let mut not_right = bit(pa) | bit(pb);
    let mut p = (pa + 1) % n;
    while p != pb {
        not_right |= bit(p);
        p = (p + 1) % n;
    }
    Ok(right_positions(n, pa, pb)
        .into_iter()
        .filter(|&w| adjacent_to_axis(t, pa, pb, w) && u.interior_row(w) & not_right != 0)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::constructions::comb;
    use crate::flip::{build_slice, enumerate_all};
    use crate::format::parse_diagonals;

    #[test]
    fn tilde_examples() {
        let t = parse_diagonals(6, "0-2,0-3,0-4").unwrap();
        // shares {0,3}, which avoids both 1 and 2
        let u = parse_diagonals(6, "0-3,1-3,3-5").unwrap();
        assert!(!omega_tilde_member(&t, 1, 2, &u).unwrap());
        let u = parse_diagonals(6, "1-3,1-4,1-5").unwrap();
        assert!(omega_tilde_member(&t, 1, 2, &u).unwrap());
        assert!(matches!(
            omega_tilde_member(&t, 0, 3, &u),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            omega_tilde_member(&t, 1, 3, &u),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn small_polygons_are_rejected() {
        let t = comb(5, 0).unwrap();
        assert!(matches!(far_witness_long(&t), Err(Error::TooSmall { .. })));
        assert!(matches!(far_witness_short(&t), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn comb_hexagon() {
        let t = comb(6, 0).unwrap();
        let w = far_witness_long(&t).unwrap();
        assert_eq!(w.bound, 1);
        assert_eq!(w.witness.shared_diagonals(&t).unwrap(), 0);
    }

    fn check_all(n: usize) {
        let slice = build_slice(n, &Budget::default()).unwrap();
        for t in enumerate_all(n).unwrap() {
            let src = slice.index_of(&t).unwrap();
            let dist = slice.distances_from(src);
            for w in [
                far_witness_long(&t).unwrap(),
                far_witness_short(&t).unwrap(),
            ] {
                assert_eq!(w.witness.shared_diagonals(&t).unwrap(), 0, "{t}");
                let d = dist[slice.index_of(&w.witness).unwrap() as usize] as i64;
                assert!(d >= w.bound, "{t}: d={d} bound={}", w.bound);
                let [a, b] = w.axis;
                if let Some(p) = w.pivot {
                    let tp = t.delete_vertex(p).unwrap();
                    let up = w.witness.delete_vertex(p).unwrap();
                    assert!(omega_tilde_member(&tp, a, b, &up).unwrap(), "{t} pivot {p}");
                }
            }
        }
    }

    #[test]
    fn witnesses_meet_bounds_exhaustively() {
        for n in 6..=9 {
            check_all(n);
        }
    }
}
