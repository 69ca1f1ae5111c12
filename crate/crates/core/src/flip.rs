//! Flips and the flip-graph of a convex polygon.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polygon::{ordered, CanonicalKey, Edge, Polygon, Triangulation};

/// One flip: `removed` is replaced by `inserted`, the other diagonal of `quad`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FlipMove {
    pub removed: Edge,
    pub inserted: Edge,
    /// The four corners of the quadrilateral, clockwise.
    pub quad: [u32; 4],
}

impl FlipMove {
    pub fn inverse(&self) -> FlipMove {
        FlipMove {
            removed: self.inserted,
            inserted: self.removed,
            quad: self.quad,
        }
    }
}

impl Triangulation {
    /// Flips the diagonal at `position` pair `(i, j)`; the pair must be a diagonal.
    pub(crate) fn flip_positions(&self, i: usize, j: usize) -> (Triangulation, FlipMove) {
        let common = self.full_row(i) & self.full_row(j);
        debug_assert_eq!(common.count_ones(), 2);
        let k = common.trailing_zeros() as usize;
        let l = (common & (common - 1)).trailing_zeros() as usize;
        let inserted = ordered(k, l);
        let removed = ordered(i, j);
        let mut diagonals: Vec<(u8, u8)> = self
            .diagonal_positions()
            .iter()
            .copied()
            .filter(|&d| d != removed)
            .collect();
        let at = diagonals.partition_point(|&d| d < inserted);
        diagonals.insert(at, inserted);
        let mut quad = [i, j, k, l];
        quad.sort_unstable();
        let polygon = self.polygon();
        let mv = FlipMove {
            removed: polygon.edge_at(i, j),
            inserted: polygon.edge_at(k, l),
            quad: quad.map(|p| polygon.label(p)),
        };
        (
            Triangulation::from_positions(polygon.clone(), diagonals),
            mv,
        )
    }

    pub fn flip(&self, d: Edge) -> Result<(Triangulation, FlipMove)> {
        let (i, j) = self
            .polygon()
            .edge_positions(d)
            .map_err(|_| Error::InvalidFlip {
                edge: d,
                reason: "not an edge on the polygon",
            })?;
        if self.polygon().is_boundary_positions(i, j) {
            return Err(Error::InvalidFlip {
                edge: d,
                reason: "boundary edges cannot be flipped",
            });
        }
        if !self.has_diagonal_positions(i, j) {
            return Err(Error::InvalidFlip {
                edge: d,
                reason: "not a diagonal of the triangulation",
            });
        }
        Ok(self.flip_positions(i, j))
    }

    /// All flips, one per diagonal, in diagonal order.
    pub fn flips(&self) -> impl Iterator<Item = (Triangulation, FlipMove)> + '_ {
        self.diagonal_positions()
            .iter()
            .map(move |&(i, j)| self.flip_positions(i as usize, j as usize))
    }

    pub fn neighbors(&self) -> Vec<Triangulation> {
        self.flips().map(|(t, _)| t).collect()
    }

    /// Whether flipping `d` touches the triangle of this triangulation on the boundary edge `e`.
    pub fn flip_incident_to(&self, d: Edge, e: Edge) -> Result<bool> {
        if !self.contains_diagonal(d) {
            return Err(Error::InvalidFlip {
                edge: d,
                reason: "not a diagonal of the triangulation",
            });
        }
        let (a, b) = self.polygon().edge_positions(e)?;
        if !self.polygon().is_boundary_positions(a, b) {
            return Err(Error::InvalidEdge {
                edge: e,
                reason: "not a boundary edge",
            });
        }
        let n = self.n();
        let (a, b) = if (a + 1) % n == b { (a, b) } else { (b, a) };
        // the triangle on a boundary edge lies on its counter-clockwise side
        let apex = self
            .apex_positions(b, a)
            .ok_or_else(|| Error::Internal("boundary edge without triangle".into()))?;
        let (x, y) = self.polygon().edge_positions(d)?;
        let touches = |p: usize, q: usize| (p == x && q == y) || (p == y && q == x);
        Ok(touches(a, apex) || touches(b, apex))
    }
}

pub fn flip(t: &Triangulation, d: Edge) -> Result<(Triangulation, FlipMove)> {
    t.flip(d)
}

pub fn neighbors(t: &Triangulation) -> Vec<Triangulation> {
    t.neighbors()
}

pub fn flip_incident_to(t: &Triangulation, d: Edge, e: Edge) -> Result<bool> {
    t.flip_incident_to(d, e)
}

/// `Catalan(m)`; the `n`-gon has `catalan(n - 2)` triangulations.
pub fn catalan(m: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..m as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Triangulations of the positions `lo..=hi` hanging off the chord `{lo, hi}`.
fn fans(lo: usize, hi: usize, out: &mut Vec<Vec<(u8, u8)>>) {
    if hi - lo < 2 {
        out.push(Vec::new());
        return;
    }
    for apex in lo + 1..hi {
        let mut left = Vec::new();
        fans(lo, apex, &mut left);
        let mut right = Vec::new();
        fans(apex, hi, &mut right);
        for l in &left {
            for r in &right {
                let mut d = Vec::with_capacity(l.len() + r.len() + 2);
                d.extend_from_slice(l);
                d.extend_from_slice(r);
                if apex - lo > 1 {
                    d.push(ordered(lo, apex));
                }
                if hi - apex > 1 {
                    d.push(ordered(apex, hi));
                }
                out.push(d);
            }
        }
    }
}

/// Canonical keys of every triangulation of the `n`-gon, in lexicographic order.
pub fn all_keys(n: usize) -> Result<Vec<CanonicalKey>> {
    Polygon::standard(n)?;
    let mut raw = Vec::with_capacity(catalan(n - 2) as usize);
    fans(0, n - 1, &mut raw);
    let mut keys: Vec<CanonicalKey> = raw
        .into_iter()
        .map(|mut d| {
            d.sort_unstable();
            CanonicalKey::from_sorted(n, d.into_boxed_slice())
        })
        .collect();
    keys.sort_unstable();
    Ok(keys)
}

/// Every triangulation of the standard `n`-gon exactly once, lexicographically
/// by diagonal list.
pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = Triangulation>> {
    let polygon = Polygon::standard(n)?;
    let keys = all_keys(n)?;
    Ok(keys
        .into_iter()
        .map(move |k| Triangulation::from_positions(polygon.clone(), k.diagonals().to_vec())))
}

/// Fully materialized flip-graph of the `n`-gon. Node `i` is the `i`-th key
/// in lexicographic order; each node has exactly `n - 3` neighbours, listed in
/// the order of the diagonals they flip.
#[derive(Debug)]
pub struct FlipGraphSlice {
    n: usize,
    nodes: Vec<CanonicalKey>,
    index: HashMap<CanonicalKey, u32>,
    adjacency: Vec<u32>,
}

impl FlipGraphSlice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.n - 3
    }

    pub fn edge_count(&self) -> usize {
        self.len() * self.degree() / 2
    }

    pub fn key(&self, node: u32) -> &CanonicalKey {
        &self.nodes[node as usize]
    }

    pub fn keys(&self) -> &[CanonicalKey] {
        &self.nodes
    }

    pub fn triangulation(&self, node: u32) -> Triangulation {
        Triangulation::from_key(&self.nodes[node as usize])
    }

    pub fn index_of_key(&self, key: &CanonicalKey) -> Option<u32> {
        self.index.get(key).copied()
    }

    pub fn index_of(&self, t: &Triangulation) -> Option<u32> {
        if t.n() != self.n {
            return None;
        }
        self.index_of_key(&t.canonical_key())
    }

    pub fn neighbors(&self, node: u32) -> &[u32] {
        let d = self.degree();
        &self.adjacency[node as usize * d..(node as usize + 1) * d]
    }

    /// Single-source BFS distances; every node is reachable.
    pub fn distances_from(&self, source: u32) -> Vec<u8> {
        let mut dist = vec![u8::MAX; self.len()];
        let mut frontier = vec![source];
        let mut next = Vec::new();
        dist[source as usize] = 0;
        let mut depth = 0u8;
        while !frontier.is_empty() {
            depth += 1;
            for &u in &frontier {
                for &w in self.neighbors(u) {
                    if dist[w as usize] == u8::MAX {
                        dist[w as usize] = depth;
                        next.push(w);
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
            next.clear();
        }
        dist
    }

    /// Node indices of the images of `node` under the `2n` rotations and reflections.
    pub fn symmetry_images(&self, node: u32) -> Vec<u32> {
        let n = self.n;
        let key = &self.nodes[node as usize];
        let mut out = Vec::with_capacity(2 * n);
        for r in 0..n {
            for reflect in [false, true] {
                let map = |p: u8| {
                    let p = p as usize;
                    if reflect {
                        (r + n - p) % n
                    } else {
                        (p + r) % n
                    }
                };
                let mut d: Vec<(u8, u8)> = key
                    .diagonals()
                    .iter()
                    .map(|&(a, b)| ordered(map(a), map(b)))
                    .collect();
                d.sort_unstable();
                let image = CanonicalKey::from_sorted(n, d.into_boxed_slice());
                out.push(self.index[&image]);
            }
        }
        out
    }

    /// For each node, the smallest index in its orbit under the dihedral group.
    pub fn orbit_representatives(&self) -> Vec<u32> {
        let mut rep: Vec<u32> = vec![u32::MAX; self.len()];
        for node in 0..self.len() as u32 {
            if rep[node as usize] != u32::MAX {
                continue;
            }
            let images = self.symmetry_images(node);
            let min = *images.iter().min().expect("identity is an image");
            for img in images {
                rep[img as usize] = min;
            }
        }
        rep
    }

    /// Graphviz rendering; nodes are named by index and labelled with the text form.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph flip_graph_{} {{", self.n);
        for node in 0..self.len() as u32 {
            let _ = writeln!(s, "  {node} [label=\"{}\"];", self.triangulation(node));
        }
        for node in 0..self.len() as u32 {
            let mut nbs: Vec<u32> = self
                .neighbors(node)
                .iter()
                .copied()
                .filter(|&w| w > node)
                .collect();
            nbs.sort_unstable();
            for w in nbs {
                let _ = writeln!(s, "  {node} -- {w};");
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Node {
            id: u32,
            triangulation: String,
            neighbors: Vec<u32>,
        }
        #[derive(Serialize)]
        struct Graph {
            n: usize,
            nodes: usize,
            edges: usize,
            adjacency: Vec<Node>,
        }
        let graph = Graph {
            n: self.n,
            nodes: self.len(),
            edges: self.edge_count(),
            adjacency: (0..self.len() as u32)
                .map(|id| {
                    let mut neighbors = self.neighbors(id).to_vec();
                    neighbors.sort_unstable();
                    Node {
                        id,
                        triangulation: self.triangulation(id).to_string(),
                        neighbors,
                    }
                })
                .collect(),
        };
        serde_json::to_string(&graph).expect("plain data serializes")
    }
}

pub fn build_slice(n: usize, budget: &Budget) -> Result<FlipGraphSlice> {
    Polygon::standard(n)?;
    let count = catalan(n - 2);
    budget.check_slice(count)?;
    let nodes = all_keys(n)?;
    let index: HashMap<CanonicalKey, u32> = nodes
        .iter()
        .enumerate()
        .map(|(i, k)| (k.clone(), i as u32))
        .collect();
    let mut adjacency = Vec::with_capacity(nodes.len() * (n - 3));
    for key in &nodes {
        let t = Triangulation::from_key(key);
        for (nb, _) in t.flips() {
            adjacency.push(index[&nb.canonical_key()]);
        }
    }
    Ok(FlipGraphSlice {
        n,
        nodes,
        index,
        adjacency,
    })
}
