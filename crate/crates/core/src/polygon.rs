//! Convex polygons, edges on them, and their triangulations.
//!
//! Vertices carry arbitrary distinct labels listed in clockwise order. Labels
//! survive vertex deletion, so a triangulation obtained by deleting vertices
//! still talks about the original names. Internally everything is stored by
//! clockwise position, which keeps the combinatorics (crossing, lengths,
//! left/right sides) to a few modular comparisons.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest polygon supported; adjacency rows are `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

/// Clockwise step count from position `from` to position `to`.
#[inline]
pub(crate) fn cw(n: usize, from: usize, to: usize) -> usize {
    (to + n - from) % n
}

/// True when position `x` lies strictly inside the clockwise arc from `a` to `b`.
#[inline]
pub(crate) fn strictly_between(n: usize, a: usize, b: usize, x: usize) -> bool {
    let d = cw(n, a, x);
    d > 0 && d < cw(n, a, b)
}

#[inline]
pub(crate) fn ordered(i: usize, j: usize) -> (u8, u8) {
    if i < j {
        (i as u8, j as u8)
    } else {
        (j as u8, i as u8)
    }
}

/// Positional crossing test for two chords of an `n`-gon.
pub(crate) fn crosses(n: usize, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    strictly_between(n, a, b, c) != strictly_between(n, a, b, d)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polygon {
    labels: Arc<[u32]>,
}

impl Polygon {
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        if labels.len() < 3 {
            return Err(Error::InvalidPolygon(format!(
                "need at least 3 vertices, got {}",
                labels.len()
            )));
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::InvalidPolygon(format!(
                "at most {MAX_VERTICES} vertices are supported, got {}",
                labels.len()
            )));
        }
        let distinct: BTreeSet<_> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidPolygon("vertex labels repeat".into()));
        }
        Ok(Polygon {
            labels: labels.into(),
        })
    }

    /// The polygon with labels `0..n` in clockwise order.
    pub fn standard(n: usize) -> Result<Self> {
        Polygon::new((0..n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, position: usize) -> u32 {
        self.labels[position]
    }

    pub fn position(&self, label: u32) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::UnknownVertex(label))
    }

    pub fn contains(&self, label: u32) -> bool {
        self.labels.contains(&label)
    }

    pub fn succ(&self, label: u32) -> Result<u32> {
        let p = self.position(label)?;
        Ok(self.labels[(p + 1) % self.len()])
    }

    pub fn pred(&self, label: u32) -> Result<u32> {
        let p = self.position(label)?;
        Ok(self.labels[(p + self.len() - 1) % self.len()])
    }

    /// Same clockwise order with `label` removed.
    pub fn without(&self, label: u32) -> Result<Polygon> {
        self.position(label)?;
        Polygon::new(
            self.labels
                .iter()
                .copied()
                .filter(|&l| l != label)
                .collect(),
        )
    }

    /// Sub-polygon on the given vertices, kept in this polygon's clockwise order.
    pub fn restrict(&self, keep: &[u32]) -> Result<Polygon> {
        for &l in keep {
            self.position(l)?;
        }
        Polygon::new(
            self.labels
                .iter()
                .copied()
                .filter(|l| keep.contains(l))
                .collect(),
        )
    }

    pub(crate) fn edge_positions(&self, e: Edge) -> Result<(usize, usize)> {
        let a = self.position(e.lo()).map_err(|_| Error::InvalidEdge {
            edge: e,
            reason: "endpoint not in polygon",
        })?;
        let b = self.position(e.hi()).map_err(|_| Error::InvalidEdge {
            edge: e,
            reason: "endpoint not in polygon",
        })?;
        if a == b {
            return Err(Error::InvalidEdge {
                edge: e,
                reason: "endpoints coincide",
            });
        }
        Ok((a, b))
    }

    pub(crate) fn edge_at(&self, i: usize, j: usize) -> Edge {
        Edge::new(self.labels[i], self.labels[j])
    }

    pub(crate) fn is_boundary_positions(&self, i: usize, j: usize) -> bool {
        let d = cw(self.len(), i, j);
        d == 1 || d == self.len() - 1
    }

    pub fn edge_kind(&self, e: Edge) -> Result<EdgeKind> {
        let (a, b) = self.edge_positions(e)?;
        Ok(if self.is_boundary_positions(a, b) {
            EdgeKind::Boundary
        } else {
            EdgeKind::Interior
        })
    }

    pub fn oriented(&self, tail: u32, head: u32) -> Result<OrientedEdge> {
        let length = oriented_length(self, tail, head)?;
        Ok(OrientedEdge { tail, head, length })
    }

    /// Vertices strictly on the left of `(tail, head)`: the clockwise open arc from tail to head.
    pub fn left_of(&self, e: &OrientedEdge) -> Vec<u32> {
        let n = self.len();
        let t = self
            .position(e.tail)
            .expect("oriented edge on this polygon");
        (1..e.length).map(|s| self.labels[(t + s) % n]).collect()
    }

    /// Vertices strictly on the right of `(tail, head)`, clockwise from head.
    pub fn right_of(&self, e: &OrientedEdge) -> Vec<u32> {
        let n = self.len();
        let h = self
            .position(e.head)
            .expect("oriented edge on this polygon");
        (1..n - e.length)
            .map(|s| self.labels[(h + s) % n])
            .collect()
    }
}

impl fmt::Debug for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Polygon").field(&&*self.labels).finish()
    }
}

/// An unordered pair of vertex labels, stored with the smaller label first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[u32; 2]", from = "[u32; 2]")]
pub struct Edge {
    lo: u32,
    hi: u32,
}

impl Edge {
    pub fn new(a: u32, b: u32) -> Self {
        if a <= b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn contains(&self, v: u32) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn other(&self, v: u32) -> Option<u32> {
        if self.lo == v {
            Some(self.hi)
        } else if self.hi == v {
            Some(self.lo)
        } else {
            None
        }
    }
}

impl From<Edge> for [u32; 2] {
    fn from(e: Edge) -> Self {
        [e.lo, e.hi]
    }
}

impl From<[u32; 2]> for Edge {
    fn from([a, b]: [u32; 2]) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Boundary,
    Interior,
}

/// An ordered pair of vertices together with its clockwise length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientedEdge {
    pub tail: u32,
    pub head: u32,
    pub length: usize,
}

pub fn crossing(polygon: &Polygon, e1: Edge, e2: Edge) -> Result<bool> {
    let a = polygon.edge_positions(e1)?;
    let b = polygon.edge_positions(e2)?;
    Ok(crosses(polygon.len(), a, b))
}

pub fn oriented_length(polygon: &Polygon, a: u32, b: u32) -> Result<usize> {
    let pa = polygon.position(a)?;
    let pb = polygon.position(b)?;
    if pa == pb {
        return Err(Error::InvalidEdge {
            edge: Edge::new(a, b),
            reason: "endpoints coincide",
        });
    }
    Ok(cw(polygon.len(), pa, pb))
}

/// Checks that `diagonals` is a maximal non-crossing set of interior edges.
pub fn validate_triangulation(
    polygon: &Polygon,
    diagonals: impl IntoIterator<Item = Edge>,
) -> Result<Triangulation> {
    let n = polygon.len();
    let mut seen = BTreeSet::new();
    for e in diagonals {
        let (a, b) = polygon.edge_positions(e)?;
        if polygon.is_boundary_positions(a, b) {
            return Err(Error::InvalidEdge {
                edge: e,
                reason: "boundary edge listed as a diagonal",
            });
        }
        seen.insert(ordered(a, b));
    }
    let diagonals: Vec<(u8, u8)> = seen.into_iter().collect();
    for (x, &(a, b)) in diagonals.iter().enumerate() {
        for &(c, d) in &diagonals[x + 1..] {
            if crosses(n, (a as usize, b as usize), (c as usize, d as usize)) {
                return Err(Error::Crossing {
                    first: polygon.edge_at(a as usize, b as usize),
                    second: polygon.edge_at(c as usize, d as usize),
                });
            }
        }
    }
    if diagonals.len() != n - 3 {
        return Err(Error::Maximality {
            n,
            expected: n - 3,
            found: diagonals.len(),
        });
    }
    Ok(Triangulation::from_positions(polygon.clone(), diagonals))
}

/// Relabel-invariant identity of a triangulation: vertex count plus the
/// sorted diagonal list after renumbering positions clockwise from the
/// smallest label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    diagonals: Box<[(u8, u8)]>,
}

impl CanonicalKey {
    pub(crate) fn from_sorted(n: usize, diagonals: Box<[(u8, u8)]>) -> Self {
        CanonicalKey {
            n: n as u8,
            diagonals,
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn diagonals(&self) -> &[(u8, u8)] {
        &self.diagonals
    }
}

#[derive(Clone)]
pub struct Triangulation {
    polygon: Polygon,
    diagonals: Vec<(u8, u8)>,
    adjacency: Vec<u64>,
}

impl PartialEq for Triangulation {
    fn eq(&self, other: &Self) -> bool {
        self.polygon == other.polygon && self.diagonals == other.diagonals
    }
}

impl Eq for Triangulation {}

impl std::hash::Hash for Triangulation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.polygon.hash(state);
        self.diagonals.hash(state);
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Triangulation")
            .field("polygon", &self.polygon)
            .field("diagonals", &self.diagonals())
            .finish()
    }
}

impl Triangulation {
    pub fn new(polygon: Polygon, diagonals: impl IntoIterator<Item = Edge>) -> Result<Self> {
        validate_triangulation(&polygon, diagonals)
    }

    /// Trusted constructor; `diagonals` must be sorted, ordered pairs forming a triangulation.
    pub(crate) fn from_positions(polygon: Polygon, diagonals: Vec<(u8, u8)>) -> Self {
        let n = polygon.len();
        let mut adjacency = vec![0u64; n];
        for &(a, b) in &diagonals {
            adjacency[a as usize] |= bit(b as usize);
            adjacency[b as usize] |= bit(a as usize);
        }
        debug_assert_eq!(diagonals.len(), n - 3);
        debug_assert!(diagonals.windows(2).all(|w| w[0] < w[1]));
        Triangulation {
            polygon,
            diagonals,
            adjacency,
        }
    }

    /// Triangulation of the standard polygon `0..n` described by a canonical key.
    pub fn from_key(key: &CanonicalKey) -> Self {
        let polygon = Polygon::standard(key.n()).expect("keys carry n >= 3");
        Triangulation::from_positions(polygon, key.diagonals.to_vec())
    }

    /// Triangulation of `polygon` whose canonical key is `key`.
    pub fn from_key_on(polygon: &Polygon, key: &CanonicalKey) -> Result<Self> {
        if polygon.len() != key.n() {
            return Err(Error::PolygonMismatch);
        }
        let n = polygon.len();
        let shift = min_label_position(polygon);
        let mut diagonals: Vec<(u8, u8)> = key
            .diagonals
            .iter()
            .map(|&(a, b)| ordered((a as usize + shift) % n, (b as usize + shift) % n))
            .collect();
        diagonals.sort_unstable();
        Ok(Triangulation::from_positions(polygon.clone(), diagonals))
    }

    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    pub fn n(&self) -> usize {
        self.polygon.len()
    }

    pub fn diagonals(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .diagonals
            .iter()
            .map(|&(a, b)| self.polygon.edge_at(a as usize, b as usize))
            .collect();
        out.sort_unstable();
        out
    }

    pub(crate) fn diagonal_positions(&self) -> &[(u8, u8)] {
        &self.diagonals
    }

    /// Interior adjacency row of the vertex at `position`.
    pub(crate) fn interior_row(&self, position: usize) -> u64 {
        self.adjacency[position]
    }

    /// Adjacency row including the two boundary neighbours.
    pub(crate) fn full_row(&self, position: usize) -> u64 {
        let n = self.n();
        self.adjacency[position] | bit((position + 1) % n) | bit((position + n - 1) % n)
    }

    pub(crate) fn has_diagonal_positions(&self, i: usize, j: usize) -> bool {
        self.adjacency[i] & bit(j) != 0
    }

    pub(crate) fn has_edge_positions(&self, i: usize, j: usize) -> bool {
        i != j && self.full_row(i) & bit(j) != 0
    }

    pub fn contains_diagonal(&self, e: Edge) -> bool {
        match self.polygon.edge_positions(e) {
            Ok((a, b)) => self.has_diagonal_positions(a, b),
            Err(_) => false,
        }
    }

    /// Whether `e` is an edge of the triangulation, boundary edges included.
    pub fn contains_edge(&self, e: Edge) -> bool {
        match self.polygon.edge_positions(e) {
            Ok((a, b)) => self.has_edge_positions(a, b),
            Err(_) => false,
        }
    }

    pub fn interior_degree(&self, v: u32) -> Result<usize> {
        let p = self.polygon.position(v)?;
        Ok(self.adjacency[p].count_ones() as usize)
    }

    pub fn max_interior_degree(&self) -> usize {
        self.adjacency
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// `k` such that `n - 3 - k` is the largest interior degree; zero exactly for combs.
    pub fn comb_gap(&self) -> usize {
        self.n() - 3 - self.max_interior_degree()
    }

    pub fn is_ear(&self, v: u32) -> Result<bool> {
        Ok(self.interior_degree(v)? == 0)
    }

    pub fn ears(&self) -> BTreeSet<u32> {
        (0..self.n())
            .filter(|&p| self.adjacency[p] == 0)
            .map(|p| self.polygon.label(p))
            .collect()
    }

    /// The `n - 2` triangles, each listed clockwise from its first position.
    pub fn triangles(&self) -> Vec<[u32; 3]> {
        self.triangle_positions()
            .into_iter()
            .map(|t| t.map(|p| self.polygon.label(p)))
            .collect()
    }

    pub(crate) fn triangle_positions(&self) -> Vec<[usize; 3]> {
        let n = self.n();
        let mut out = Vec::with_capacity(n - 2);
        for i in 0..n {
            let row_i = self.full_row(i);
            for j in i + 1..n {
                if row_i & bit(j) == 0 {
                    continue;
                }
                let mut common = row_i & self.full_row(j) & !((bit(j) << 1) - 1);
                while common != 0 {
                    let k = common.trailing_zeros() as usize;
                    common &= common - 1;
                    out.push([i, j, k]);
                }
            }
        }
        out
    }

    /// Third vertex (position) of the triangle on the edge `(i, j)` lying on
    /// the clockwise side from `i` to `j`, if the edge is present.
    pub(crate) fn apex_positions(&self, i: usize, j: usize) -> Option<usize> {
        let n = self.n();
        let mut common = self.full_row(i) & self.full_row(j);
        while common != 0 {
            let k = common.trailing_zeros() as usize;
            common &= common - 1;
            if strictly_between(n, i, j, k) {
                return Some(k);
            }
        }
        None
    }

    /// Removes the boundary edge from `a` to its clockwise successor `b`,
    /// substitutes `b` for `a` everywhere, and returns the triangulation of the
    /// polygon without `a`.
    pub fn delete_vertex(&self, a: u32) -> Result<Triangulation> {
        let n = self.n();
        if n < 4 {
            return Err(Error::TooSmall { n, min: 4 });
        }
        let p = self.polygon.position(a)?;
        let b = (p + 1) % n;
        let reindex = |q: usize| if q > p { q - 1 } else { q };
        let polygon = self.polygon.without(a)?;
        let mut diagonals = BTreeSet::new();
        let mut push = |x: usize, y: usize| {
            let x = if x == p { b } else { x };
            let y = if y == p { b } else { y };
            if x == y {
                return;
            }
            let (x, y) = (reindex(x), reindex(y));
            if !polygon.is_boundary_positions(x, y) {
                diagonals.insert(ordered(x, y));
            }
        };
        for &(x, y) in &self.diagonals {
            push(x as usize, y as usize);
        }
        // the boundary edge into `a` becomes the new boundary edge into `b`
        let out = Triangulation::from_positions(polygon, diagonals.into_iter().collect());
        debug_assert!(validate_triangulation(out.polygon(), out.diagonals()).is_ok());
        Ok(out)
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        let n = self.n();
        let shift = min_label_position(&self.polygon);
        if shift == 0 {
            return CanonicalKey::from_sorted(n, self.diagonals.clone().into_boxed_slice());
        }
        let mut diagonals: Vec<(u8, u8)> = self
            .diagonals
            .iter()
            .map(|&(a, b)| ordered(cw(n, shift, a as usize), cw(n, shift, b as usize)))
            .collect();
        diagonals.sort_unstable();
        CanonicalKey::from_sorted(n, diagonals.into_boxed_slice())
    }

    /// Same diagonals carried over to another polygon with the same number of
    /// vertices, matching clockwise positions.
    pub fn relabeled(&self, polygon: Polygon) -> Result<Triangulation> {
        if polygon.len() != self.n() {
            return Err(Error::PolygonMismatch);
        }
        Ok(Triangulation::from_positions(
            polygon,
            self.diagonals.clone(),
        ))
    }

    pub fn shared_diagonals(&self, other: &Triangulation) -> Result<usize> {
        if self.polygon != other.polygon {
            return Err(Error::PolygonMismatch);
        }
        Ok(self
            .diagonals
            .iter()
            .filter(|&&(a, b)| other.has_diagonal_positions(a as usize, b as usize))
            .count())
    }
}

fn min_label_position(polygon: &Polygon) -> usize {
    polygon
        .labels()
        .iter()
        .enumerate()
        .min_by_key(|&(_, l)| *l)
        .map(|(p, _)| p)
        .unwrap_or(0)
}

pub fn interior_degree(t: &Triangulation, v: u32) -> Result<usize> {
    t.interior_degree(v)
}

pub fn comb_gap(t: &Triangulation) -> usize {
    t.comb_gap()
}

pub fn ears(t: &Triangulation) -> BTreeSet<u32> {
    t.ears()
}

pub fn delete_vertex(t: &Triangulation, a: u32) -> Result<Triangulation> {
    t.delete_vertex(a)
}

pub fn canonical_key(t: &Triangulation) -> CanonicalKey {
    t.canonical_key()
}

pub fn triangles(t: &Triangulation) -> Vec<[u32; 3]> {
    t.triangles()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b)
    }

    fn tri(n: usize, ds: &[(u32, u32)]) -> Triangulation {
        Triangulation::new(
            Polygon::standard(n).unwrap(),
            ds.iter().map(|&(a, b)| e(a, b)),
        )
        .unwrap()
    }

    /// Straight-segment intersection on a regular polygon, used as an
    /// independent oracle for the combinatorial crossing test.
    fn segments_cross(n: usize, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
        let pt = |i: usize| {
            let t = std::f64::consts::TAU * i as f64 / n as f64;
            (t.cos(), -t.sin())
        };
        let orient = |p: (f64, f64), q: (f64, f64), r: (f64, f64)| {
            (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
        };
        if a == c || a == d || b == c || b == d {
            return false;
        }
        let (pa, pb, pc, pd) = (pt(a), pt(b), pt(c), pt(d));
        let o1 = orient(pa, pb, pc);
        let o2 = orient(pa, pb, pd);
        let o3 = orient(pc, pd, pa);
        let o4 = orient(pc, pd, pb);
        o1 * o2 < 0.0 && o3 * o4 < 0.0
    }

    #[test]
    fn crossing_examples() {
        let hex = Polygon::standard(6).unwrap();
        assert!(crossing(&hex, e(0, 2), e(1, 3)).unwrap());
        assert!(!crossing(&hex, e(0, 2), e(2, 4)).unwrap());
        assert!(!crossing(&hex, e(0, 2), e(3, 5)).unwrap());
        assert!(matches!(
            crossing(&hex, e(0, 9), e(1, 3)),
            Err(Error::InvalidEdge { .. })
        ));
    }

    #[test]
    fn crossing_matches_segment_oracle() {
        for n in 4..=9 {
            let poly = Polygon::standard(n).unwrap();
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            for &p in &pairs {
                for &q in &pairs {
                    let got = crossing(&poly, e(p.0 as u32, p.1 as u32), e(q.0 as u32, q.1 as u32))
                        .unwrap();
                    assert_eq!(got, segments_cross(n, p, q), "n={n} {p:?} {q:?}");
                }
            }
        }
    }

    #[test]
    fn validation_examples() {
        let pent = Polygon::standard(5).unwrap();
        assert!(validate_triangulation(&pent, [e(0, 2), e(0, 3)]).is_ok());
        assert!(matches!(
            validate_triangulation(&pent, [e(0, 2)]),
            Err(Error::Maximality { found: 1, .. })
        ));
        let hex = Polygon::standard(6).unwrap();
        assert_eq!(
            validate_triangulation(&hex, [e(0, 2), e(1, 3), e(0, 3)]),
            Err(Error::Crossing {
                first: e(0, 2),
                second: e(1, 3)
            })
        );
        assert!(matches!(
            validate_triangulation(&hex, [e(0, 1), e(0, 3), e(0, 4)]),
            Err(Error::InvalidEdge { .. })
        ));
        let tri3 = Polygon::standard(3).unwrap();
        assert_eq!(
            validate_triangulation(&tri3, []).unwrap().triangles().len(),
            1
        );
    }

    #[test]
    fn oriented_length_examples() {
        let hex = Polygon::standard(6).unwrap();
        assert_eq!(oriented_length(&hex, 0, 3).unwrap(), 3);
        assert_eq!(oriented_length(&hex, 4, 1).unwrap(), 3);
        let pent = Polygon::standard(5).unwrap();
        assert_eq!(oriented_length(&pent, 2, 3).unwrap(), 1);
        assert!(oriented_length(&pent, 2, 2).is_err());
        let oe = hex.oriented(4, 1).unwrap();
        assert_eq!(hex.left_of(&oe), vec![5, 0]);
        assert_eq!(hex.right_of(&oe), vec![2, 3]);
    }

    #[test]
    fn degrees_gap_and_ears() {
        let comb6 = tri(6, &[(0, 2), (0, 3), (0, 4)]);
        assert_eq!(comb6.interior_degree(0).unwrap(), 3);
        assert_eq!(comb6.interior_degree(1).unwrap(), 0);
        assert_eq!(comb6.comb_gap(), 0);
        assert_eq!(comb6.ears(), BTreeSet::from([1, 5]));
        let inner = tri(6, &[(0, 2), (2, 4), (0, 4)]);
        assert_eq!(inner.interior_degree(2).unwrap(), 2);
        assert_eq!(inner.comb_gap(), 1);
        assert_eq!(tri(5, &[(0, 2), (2, 4)]).ears(), BTreeSet::from([1, 3]));
        assert_eq!(tri(4, &[(0, 2)]).ears(), BTreeSet::from([1, 3]));
        assert_eq!(tri(4, &[(1, 3)]).comb_gap(), 0);
        assert!(comb6.interior_degree(17).is_err());
    }

    #[test]
    fn deletion_examples() {
        let t = tri(5, &[(0, 2), (0, 3)]);
        let d = t.delete_vertex(1).unwrap();
        assert_eq!(d.polygon().labels(), &[0, 2, 3, 4]);
        assert_eq!(d.diagonals(), vec![e(0, 3)]);

        let t = tri(5, &[(1, 3), (1, 4)]);
        let d = t.delete_vertex(1).unwrap();
        assert_eq!(d.polygon().labels(), &[0, 2, 3, 4]);
        assert_eq!(d.diagonals(), vec![e(2, 4)]);

        let d = tri(4, &[(0, 2)]).delete_vertex(1).unwrap();
        assert_eq!(d.polygon().labels(), &[0, 2, 3]);
        assert!(d.diagonals().is_empty());
        assert!(matches!(
            d.delete_vertex(0),
            Err(Error::TooSmall { n: 3, .. })
        ));
    }

    #[test]
    fn deletion_of_last_position_wraps() {
        // 5's successor is 0
        let t = tri(6, &[(0, 2), (2, 5), (3, 5)]);
        let d = t.delete_vertex(5).unwrap();
        assert_eq!(d.polygon().labels(), &[0, 1, 2, 3, 4]);
        assert_eq!(d.diagonals(), vec![e(0, 2), e(0, 3)]);
    }

    #[test]
    fn canonical_keys() {
        let a = tri(5, &[(0, 2), (0, 3)]);
        let b = tri(5, &[(0, 2), (0, 3)]);
        assert_eq!(a.canonical_key(), b.canonical_key());
        let poly = Polygon::new(vec![0, 2, 3, 4, 6]).unwrap();
        let c = Triangulation::new(poly, [e(0, 3), e(0, 4)]).unwrap();
        assert_eq!(a.canonical_key(), c.canonical_key());
        assert_ne!(a.canonical_key(), tri(5, &[(1, 3), (1, 4)]).canonical_key());
        // rotation of labels: smallest label sits at position 2
        let rot = Polygon::new(vec![7, 9, 1, 3, 5]).unwrap();
        let r = Triangulation::new(rot.clone(), [e(1, 5), e(1, 7)]).unwrap();
        let k = r.canonical_key();
        assert_eq!(k.diagonals(), &[(0, 2), (0, 3)]);
        assert_eq!(Triangulation::from_key_on(&rot, &k).unwrap(), r);
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(tri(4, &[(0, 2)]).triangles(), vec![[0, 1, 2], [0, 2, 3]]);
        assert_eq!(
            tri(5, &[(0, 2), (0, 3)]).triangles(),
            vec![[0, 1, 2], [0, 2, 3], [0, 3, 4]]
        );
        let mut got = tri(6, &[(0, 2), (2, 4), (0, 4)]).triangles();
        got.sort();
        assert_eq!(got, vec![[0, 1, 2], [0, 2, 4], [0, 4, 5], [2, 3, 4]]);
    }

    #[test]
    fn polygon_validation() {
        assert!(Polygon::new(vec![0, 1]).is_err());
        assert!(Polygon::new(vec![0, 1, 1]).is_err());
        assert!(Polygon::standard(65).is_err());
        let p = Polygon::new(vec![4, 9, 2]).unwrap();
        assert_eq!(p.succ(2).unwrap(), 4);
        assert_eq!(p.pred(4).unwrap(), 2);
    }
}
