//! Simple undirected graphs on at most 64 vertices.
//!
//! A [`Graph`] stores one neighbor bitset per vertex, so every neighborhood
//! fits in a machine word. Values are immutable; every operation returns a
//! new graph.

mod clique;
mod coloring;
pub mod format;

use std::fmt;

use crate::error::{Error, Result};

pub use coloring::CHROMATIC_CAP;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Position of edge `{i, j}` (`i < j`) in the upper-triangle order
/// (0,1), (0,2), (1,2), (0,3), ... shared by graph6 and the enumerator.
#[inline]
pub const fn edge_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Number of vertex pairs, `n(n-1)/2`.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

/// Sorted degree sequence plus the 2-average degree of every vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    /// Degrees sorted in non-increasing order.
    pub degrees: Vec<usize>,
    /// `two_avg[v]` is the mean degree of the neighbors of vertex `v`,
    /// indexed by the original vertex id; `None` for isolated vertices.
    pub two_avg: Vec<Option<f64>>,
    /// Degrees indexed by the original vertex id.
    pub by_vertex: Vec<usize>,
}

impl DegreeProfile {
    pub fn max_degree(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }
}

impl Graph {
    fn check_order(n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(())
    }

    /// Builds a graph from rows that already satisfy the invariants.
    fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        let g = Graph { n, adj, m };
        g.debug_check();
        g
    }

    #[inline]
    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            let full = low_bits(self.n);
            assert_eq!(self.adj.len(), self.n);
            for u in 0..self.n {
                assert_eq!(self.adj[u] & !full, 0, "neighbor outside vertex range at {u}");
                assert_eq!(self.adj[u] & bit(u), 0, "self-loop at {u}");
                for v in bits(self.adj[u]) {
                    assert!(self.adj[v] & bit(u) != 0, "asymmetric edge {u}-{v}");
                }
            }
        }
    }

    /// Graph on `n` vertices with the given edges. Repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Self::from_rows(n, adj))
    }

    /// Graph from neighbor bitsets, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        Self::check_order(n)?;
        let full = low_bits(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & bit(u) != 0 {
                return Err(Error::SelfLoop(u));
            }
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            for v in bits(row) {
                if adj[v] & bit(u) == 0 {
                    return Err(Error::invalid(format!("adjacency not symmetric at {u}-{v}")));
                }
            }
        }
        Ok(Self::from_rows(n, adj))
    }

    /// Graph whose edge `k` (in upper-triangle order) is present iff bit `k`
    /// of `mask` is set. Requires `n(n-1)/2 <= 64`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        Self::check_order(n)?;
        let pairs = pair_count(n);
        if pairs > 64 {
            return Err(Error::invalid(format!("edge mask needs {pairs} bits")));
        }
        if mask & !low_bits(pairs) != 0 {
            return Err(Error::invalid("edge mask has bits beyond the last vertex pair"));
        }
        Ok(Self::from_rows(n, mask_rows(n, mask)))
    }

    /// Upper-triangle edge mask, or `None` when the graph has more than 11
    /// vertices.
    pub fn edge_mask(&self) -> Option<u64> {
        if pair_count(self.n) > 64 {
            return None;
        }
        let mut mask = 0u64;
        for j in 1..self.n {
            for i in bits(self.adj[j] & low_bits(j)) {
                mask |= bit(edge_index(i, j));
            }
        }
        Some(mask)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::check_order(n)?;
        let full = low_bits(n);
        Ok(Self::from_rows(n, (0..n).map(|v| full & !bit(v)).collect()))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::check_order(n)?;
        Ok(Self::from_rows(n, vec![0; n]))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn vertices(&self) -> u64 {
        low_bits(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| bits(self.adj[j] & low_bits(j)).map(move |i| (i, j)))
    }

    fn vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        Self::from_rows(self.n, (0..self.n).map(|v| full & !self.adj[v] & !bit(v)).collect())
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let left = self.vertices();
        let right = other.vertices() << self.n;
        let mut adj = Vec::with_capacity(n);
        for &row in &self.adj {
            adj.push(row | if cross { right } else { 0 });
        }
        for &row in &other.adj {
            adj.push((row << self.n) | if cross { left } else { 0 });
        }
        Ok(Self::from_rows(n, adj))
    }

    /// Duplicates `u` to `v`: drops every edge at `u`, then joins `u` to each
    /// neighbor of `v`. Afterwards `u` and `v` have the same neighborhood.
    pub fn duplicate_vertex(&self, u: usize, v: usize) -> Result<Graph> {
        self.vertex(u)?;
        self.vertex(v)?;
        if u == v {
            return Err(Error::DuplicateOntoSelf(u));
        }
        let mut adj = self.adj.clone();
        for w in bits(adj[u]) {
            adj[w] &= !bit(u);
        }
        let target = adj[v] & !bit(u);
        adj[u] = target;
        for w in bits(target) {
            adj[w] |= bit(u);
        }
        Ok(Self::from_rows(self.n, adj))
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.count_ones()` in
    /// ascending order of the original ids.
    pub fn induced(&self, keep: u64) -> Result<Graph> {
        let keep = keep & self.vertices();
        let order: Vec<usize> = bits(keep).collect();
        Self::check_order(order.len())?;
        let adj = order
            .iter()
            .map(|&v| {
                let row = self.adj[v] & keep;
                order
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| row & bit(w) != 0)
                    .fold(0u64, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        Ok(Self::from_rows(order.len(), adj))
    }

    /// Number of edges with both ends in `keep`.
    pub fn edges_within(&self, keep: u64) -> usize {
        bits(keep).map(|v| (self.adj[v] & keep).count_ones() as usize).sum::<usize>() / 2
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: perm.len() });
        }
        let mut seen = 0u64;
        for &p in perm {
            self.vertex(p)?;
            seen |= bit(p);
        }
        if seen != self.vertices() {
            return Err(Error::invalid("relabeling is not a permutation"));
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= bit(perm[v]);
            adj[perm[v]] |= bit(perm[u]);
        }
        Ok(Self::from_rows(self.n, adj))
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let by_vertex = self.degrees();
        let two_avg = (0..self.n)
            .map(|v| {
                let d = by_vertex[v];
                (d > 0).then(|| {
                    bits(self.adj[v]).map(|w| by_vertex[w]).sum::<usize>() as f64 / d as f64
                })
            })
            .collect();
        let mut degrees = by_vertex.clone();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeProfile { degrees, two_avg, by_vertex }
    }

    /// Exact clique number.
    pub fn clique_number(&self) -> usize {
        clique::clique_number(&self.adj)
    }

    /// A maximum clique as a vertex bitset.
    pub fn maximum_clique(&self) -> u64 {
        clique::maximum_clique(&self.adj)
    }

    /// Exact chromatic number, limited to [`CHROMATIC_CAP`] vertices.
    pub fn chromatic_number(&self) -> Result<usize> {
        if self.n > CHROMATIC_CAP {
            return Err(Error::ChromaticCap { n: self.n, limit: CHROMATIC_CAP });
        }
        Ok(coloring::chromatic_number(&self.adj))
    }

    /// Part sizes, in vertex order of first appearance, when the graph is
    /// complete multipartite (non-adjacency is an equivalence relation).
    pub fn multipartite_parts(&self) -> Option<Vec<usize>> {
        let full = self.vertices();
        let mut assigned = 0u64;
        let mut parts = Vec::new();
        for v in 0..self.n {
            if assigned & bit(v) != 0 {
                continue;
            }
            let class = full & !self.adj[v];
            for w in bits(class) {
                if full & !self.adj[w] != class {
                    return None;
                }
            }
            assigned |= class;
            parts.push(class.count_ones() as usize);
        }
        Some(parts)
    }

    /// Complete bipartite with both sides nonempty.
    pub fn is_complete_bipartite(&self) -> bool {
        matches!(self.multipartite_parts(), Some(p) if p.len() == 2)
    }

    /// Isomorphic to the Turán graph `T(n, t)`.
    pub fn is_turan(&self, t: usize) -> bool {
        match self.multipartite_parts() {
            Some(parts) if parts.len() == t => {
                let lo = parts.iter().min().copied().unwrap_or(0);
                let hi = parts.iter().max().copied().unwrap_or(0);
                hi - lo <= 1
            }
            _ => false,
        }
    }

    /// Connected, `n - 1` edges and no vertex of degree above two.
    pub fn is_path(&self) -> bool {
        self.m + 1 == self.n && self.max_degree() <= 2 && self.is_connected()
    }

    pub fn to_graph6(&self) -> String {
        format::to_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        format::from_graph6(text)
    }

    pub fn to_edge_list(&self) -> String {
        format::to_edge_list(self)
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        format::from_edge_list(text)
    }
}

pub(crate) fn mask_rows(n: usize, mask: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask & bit(k) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    adj
}

/// Connectivity straight from neighbor rows.
pub(crate) fn rows_connected(adj: &[u64]) -> bool {
    let full = low_bits(adj.len());
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("graph6", &self.to_graph6())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}
