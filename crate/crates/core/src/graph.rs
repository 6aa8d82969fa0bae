//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. The minor operations
//! ([`Graph::contract_edge`], [`Graph::delete_vertex`], [`Graph::delete_edge`])
//! return new graphs with a fixed relabeling:
//!
//! * deleting vertex `v` shifts every id above `v` down by one;
//! * contracting `uv` keeps the merged vertex in slot `min(u, v)`, removes
//!   slot `max(u, v)` and shifts every id above it down by one.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<FixedBitSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        true
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        if self.adj[u].contains(v) {
            self.adj[u].set(v, false);
            self.adj[v].set(u, false);
            self.m -= 1;
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Open neighborhood of `v` as a bitset over `0..n`.
    #[inline]
    pub fn neighborhood(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// All adjacency rows, indexed by vertex.
    #[inline]
    pub fn rows(&self) -> &[FixedBitSet] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// True when `v` is adjacent to every other vertex.
    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n
    }

    /// Whether the subgraph induced by `set` is connected.
    pub fn is_connected_subset(&self, set: &VertexSet) -> Result<bool> {
        let Some(&start) = set.as_slice().first() else {
            return Err(Error::EmptySet);
        };
        for &v in set.iter() {
            self.check_vertex(v)?;
        }
        let members = set.to_bitset(self.n);
        let mut seen = FixedBitSet::with_capacity(self.n);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].intersection(&members) {
                if !seen.put(w) {
                    queue.push_back(w);
                }
            }
        }
        Ok(seen.count_ones(..) == set.len())
    }

    /// Whether the whole graph is connected. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_subset(&VertexSet::full(self.n)).unwrap_or(false)
    }

    /// Builds the quotient graph in which vertex `v` is sent to `class[v]`
    /// (or dropped when `None`). Classes must be `0..k`. Edges inside a class
    /// vanish and parallel edges collapse.
    pub fn quotient(&self, class: &[Option<usize>], k: usize) -> Graph {
        debug_assert_eq!(class.len(), self.n);
        let mut g = Graph::empty(k);
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (class[u], class[v]) {
                if a != b {
                    g.insert_edge(a, b);
                }
            }
        }
        g
    }

    /// Subgraph induced by `keep`, relabeled in the order given.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut class = vec![None; self.n];
        for (i, &v) in keep.iter().enumerate() {
            class[v] = Some(i);
        }
        self.quotient(&class, keep.len())
    }

    /// Contracts edge `uv`. See the module docs for the relabeling.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAdjacent(u, v));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let class: Vec<Option<usize>> = (0..self.n)
            .map(|w| match w.cmp(&hi) {
                std::cmp::Ordering::Less => Some(w),
                std::cmp::Ordering::Equal => Some(lo),
                std::cmp::Ordering::Greater => Some(w - 1),
            })
            .collect();
        Ok(self.quotient(&class, self.n - 1))
    }

    /// Deletes vertex `v`; ids above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// Deletes edge `uv`; vertex ids are unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAdjacent(u, v));
        }
        let mut g = self.clone();
        g.remove_edge(u, v);
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are appended after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + self.n, v + self.n);
        }
        g
    }
}

/// A set of vertex ids, kept sorted and free of duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_bitset(bits: &FixedBitSet) -> Self {
        VertexSet(bits.ones().collect())
    }

    pub fn to_bitset(&self, n: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(n);
        for &v in &self.0 {
            bits.insert(v);
        }
        bits
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn min_vertex(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// Checks every member is a vertex of `g`.
    pub fn check_in(&self, g: &Graph) -> Result<()> {
        self.0.iter().try_for_each(|&v| g.check_vertex(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path};

    #[test]
    fn make_graph_examples() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.degrees(), vec![2, 2, 2]);
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.degrees(), vec![2; 5]);
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn connected_subsets() {
        let c5 = cycle(5);
        assert!(c5.is_connected_subset(&[0, 1, 2].into()).unwrap());
        assert!(!c5.is_connected_subset(&[0, 2].into()).unwrap());
        assert!(c5.is_connected_subset(&[3].into()).unwrap());
        assert!(c5.is_connected_subset(&[4, 0].into()).unwrap());
        assert_eq!(c5.is_connected_subset(&VertexSet::new()), Err(Error::EmptySet));
        assert!(c5.is_connected_subset(&[7].into()).is_err());
    }

    #[test]
    fn contraction_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.contract_edge(0, 1).unwrap(), Graph::complete(3));
        let c5 = cycle(5);
        for (u, v) in c5.edges() {
            let c = c5.contract_edge(u, v).unwrap();
            assert_eq!(c.n(), 4);
            assert_eq!(c.edge_count(), 4);
            assert_eq!(c.degrees(), vec![2; 4]);
            assert!(c.is_connected());
        }
        let p3 = path(3);
        assert_eq!(p3.contract_edge(0, 1).unwrap(), Graph::complete(2));
        assert_eq!(p3.contract_edge(0, 2), Err(Error::NotAdjacent(0, 2)));
    }

    #[test]
    fn contraction_relabeling() {
        // star with center 2; contracting (2,4) keeps slot 2
        let g = Graph::new(5, &[(2, 0), (2, 1), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = g.contract_edge(4, 2).unwrap();
        assert_eq!(c.edges(), vec![(0, 2), (1, 2), (2, 3)]);
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(Graph::complete(4).delete_vertex(2).unwrap(), Graph::complete(3));
        let p5 = cycle(5).delete_edge(4, 0).unwrap();
        assert_eq!(p5, path(5));
        let empty = Graph::complete(1).delete_vertex(0).unwrap();
        assert_eq!(empty.n(), 0);
        assert!(cycle(5).delete_edge(0, 2).is_err());
        assert!(cycle(5).delete_vertex(5).is_err());
    }

    #[test]
    fn vertex_set_normalizes() {
        let s: VertexSet = vec![3, 1, 3, 2].into();
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert_eq!(s.min_vertex(), Some(1));
    }
}
