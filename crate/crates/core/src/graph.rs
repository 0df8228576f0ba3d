//! Oriented graphs, vertex subsets and the `k`-special predicate.
//!
//! Vertices are dense ids `0..N`. Edges are kept in lexicographic order and
//! mirrored in per-vertex out- and in-lists, so every traversal in the crate
//! is deterministic.

use std::collections::{BinaryHeap, HashSet};
use std::cmp::Reverse;
use std::fmt;

use thiserror::Error;

/// A directed edge `(tail, head)`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge #{index} ({u}, {u}) is a self-loop")]
    SelfLoop { index: usize, u: usize },
    #[error("edge #{index} ({u}, {v}) reverses an earlier edge ({v}, {u})")]
    BidirectedPair { index: usize, u: usize, v: usize },
    #[error("edge #{index} ({u}, {v}) appears more than once")]
    DuplicateEdge { index: usize, u: usize, v: usize },
    #[error("edge #{index} ({u}, {v}) has an endpoint outside 0..{vertex_count}")]
    VertexOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        vertex_count: usize,
    },
    #[error("vertex {vertex} is outside 0..{vertex_count}")]
    NotAVertex { vertex: usize, vertex_count: usize },
}

impl GraphError {
    /// Position of the offending edge in the input list, when there is one.
    pub fn edge_index(&self) -> Option<usize> {
        match *self {
            GraphError::SelfLoop { index, .. }
            | GraphError::BidirectedPair { index, .. }
            | GraphError::DuplicateEdge { index, .. }
            | GraphError::VertexOutOfRange { index, .. } => Some(index),
            GraphError::NotAVertex { .. } => None,
        }
    }
}

/// A directed graph with no loops, no parallel edges and no pair of opposite
/// edges. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrientedGraph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

impl OrientedGraph {
    /// Validates `edges` and builds the graph. Violations are reported for the
    /// first offending edge in input order.
    pub fn new(vertex_count: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut seen: HashSet<Edge> = HashSet::with_capacity(edges.len());
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    index,
                    u,
                    v,
                    vertex_count,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, u });
            }
            if seen.contains(&(v, u)) {
                return Err(GraphError::BidirectedPair { index, u, v });
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { index, u, v });
            }
        }
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        Ok(Self::from_sorted_unchecked(vertex_count, edges))
    }

    /// The graph on `vertex_count` vertices with no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Self::from_sorted_unchecked(vertex_count, Vec::new())
    }

    // `edges` must be sorted and already satisfy every invariant.
    pub(crate) fn from_sorted_unchecked(vertex_count: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut out = vec![Vec::new(); vertex_count];
        let mut inc = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            out[u].push(v);
            inc[v].push(u);
        }
        // Out-lists come out sorted from the edge order; in-lists too, since
        // tails are visited in increasing order.
        Self {
            vertex_count,
            edges,
            out,
            inc,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    /// Degree in the underlying undirected graph.
    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len() + self.inc[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.out[u].binary_search(&v).is_ok()
    }

    /// Position of `(u, v)` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u, v)).ok()
    }

    /// Iterates over the ids `0..N`.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count
    }

    /// All vertices as a [`VertexSet`].
    pub fn all_vertices(&self) -> VertexSet {
        VertexSet(self.vertices().collect())
    }

    fn check_subset(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.0.last() {
            Some(&vertex) if vertex >= self.vertex_count => Err(GraphError::NotAVertex {
                vertex,
                vertex_count: self.vertex_count,
            }),
            _ => Ok(()),
        }
    }

    fn membership(&self, s: &VertexSet) -> Vec<bool> {
        let mut mask = vec![false; self.vertex_count];
        for &v in s.iter() {
            mask[v] = true;
        }
        mask
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in increasing order
    /// of original id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(OrientedGraph, Relabel), GraphError> {
        self.check_subset(s)?;
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in s.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &u in s.iter() {
            for &v in &self.out[u] {
                if local[v] != usize::MAX {
                    edges.push((local[u], local[v]));
                }
            }
        }
        // `s` is increasing and out-lists are sorted, so `edges` is sorted.
        let sub = OrientedGraph::from_sorted_unchecked(s.len(), edges);
        Ok((sub, Relabel(s.clone())))
    }

    /// Connected components of the underlying graph induced by `s`, each
    /// sorted, listed by smallest member.
    pub fn underlying_components(&self, s: &VertexSet) -> Result<Vec<VertexSet>, GraphError> {
        self.check_subset(s)?;
        let member = self.membership(s);
        let mut seen = vec![false; self.vertex_count];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for &root in s.iter() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut component = Vec::new();
            while let Some(x) = stack.pop() {
                component.push(x);
                for &y in self.out[x].iter().chain(&self.inc[x]) {
                    if member[y] && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            components.push(VertexSet::from_iter(component));
        }
        Ok(components)
    }

    /// Kahn's algorithm, always taking the smallest available source.
    pub fn topological_order(&self) -> Result<Vec<usize>, CyclicError> {
        let mut indegree: Vec<usize> = self.inc.iter().map(Vec::len).collect();
        let mut ready: BinaryHeap<Reverse<usize>> = self
            .vertices()
            .filter(|&v| indegree[v] == 0)
            .map(Reverse)
            .collect();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(Reverse(v)) = ready.pop() {
            order.push(v);
            for &w in &self.out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(Reverse(w));
                }
            }
        }
        if order.len() == self.vertex_count {
            return Ok(order);
        }
        // Every leftover vertex still has a leftover in-neighbour, so walking
        // backwards must revisit a vertex.
        let leftover: Vec<bool> = indegree.iter().map(|&d| d > 0).collect();
        let start = leftover.iter().position(|&b| b).expect("cycle exists");
        let mut position = vec![usize::MAX; self.vertex_count];
        let mut walk = Vec::new();
        let mut x = start;
        while position[x] == usize::MAX {
            position[x] = walk.len();
            walk.push(x);
            x = *self.inc[x]
                .iter()
                .find(|&&p| leftover[p])
                .expect("leftover vertex has a leftover in-neighbour");
        }
        let mut cycle: Vec<usize> = walk[position[x]..].to_vec();
        cycle.reverse();
        let min_at = cycle
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        cycle.rotate_left(min_at);
        cycle.push(cycle[0]);
        Err(CyclicError { cycle })
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Whether `s` is acyclic and every underlying component of `s` has at
    /// most `k` vertices.
    pub fn is_k_special(&self, s: &VertexSet, k: usize) -> Result<bool, GraphError> {
        let components = self.underlying_components(s)?;
        if components.iter().any(|c| c.len() > k) {
            return Ok(false);
        }
        let (sub, _) = self.induced_subgraph(s)?;
        Ok(sub.is_acyclic())
    }
}

/// Returned by [`OrientedGraph::topological_order`] on a cyclic graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph contains the directed cycle {cycle:?}")]
pub struct CyclicError {
    /// A closed walk `v0, v1, ..., v0` starting at its smallest vertex.
    pub cycle: Vec<usize>,
}

/// Sorted, duplicate-free list of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).copied().collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().all(|&v| !large.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|&v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Order-preserving bijection between a vertex subset and `0..|s|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabel(VertexSet);

impl Relabel {
    /// Original id of local vertex `i`.
    pub fn original(&self, i: usize) -> usize {
        self.0.as_slice()[i]
    }

    pub fn local(&self, v: usize) -> Option<usize> {
        self.0.as_slice().binary_search(&v).ok()
    }

    pub fn members(&self) -> &VertexSet {
        &self.0
    }

    /// Maps a set of local ids back to original ids.
    pub fn lift(&self, local: &VertexSet) -> VertexSet {
        local.iter().map(|&i| self.original(i)).collect()
    }
}

/// A vertex set certified `k`-special in the graph it was built against.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SpecialSet {
    members: VertexSet,
    k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialSetError {
    #[error("component bound must be at least 1")]
    ZeroBound,
    #[error("vertex set is not {k}-special")]
    NotSpecial { k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl SpecialSet {
    pub fn new(g: &OrientedGraph, members: VertexSet, k: usize) -> Result<Self, SpecialSetError> {
        if k == 0 {
            return Err(SpecialSetError::ZeroBound);
        }
        if !g.is_k_special(&members, k)? {
            return Err(SpecialSetError::NotSpecial { k });
        }
        Ok(Self { members, k })
    }

    pub(crate) fn new_unchecked(members: VertexSet, k: usize) -> Self {
        Self { members, k }
    }

    pub fn empty(k: usize) -> Self {
        Self {
            members: VertexSet::new(),
            k,
        }
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[Edge]) -> OrientedGraph {
        OrientedGraph::new(n, edges).unwrap()
    }

    fn two_triangles() -> OrientedGraph {
        g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn build_rejects_each_violation() {
        assert!(matches!(
            OrientedGraph::new(2, &[(0, 1), (1, 0)]),
            Err(GraphError::BidirectedPair { index: 1, u: 1, v: 0 })
        ));
        assert!(matches!(
            OrientedGraph::new(2, &[(1, 1)]),
            Err(GraphError::SelfLoop { index: 0, u: 1 })
        ));
        assert!(matches!(
            OrientedGraph::new(3, &[(0, 1), (1, 2), (0, 1)]),
            Err(GraphError::DuplicateEdge { index: 2, .. })
        ));
        assert!(matches!(
            OrientedGraph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { index: 0, .. })
        ));
    }

    #[test]
    fn build_sorts_edges() {
        let c = g(3, &[(2, 0), (0, 1), (1, 2)]);
        assert_eq!(c.edges(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(c.edge_index(2, 0), Some(2));
        assert_eq!(OrientedGraph::new(4, &[]).unwrap().edge_count(), 0);
    }

    #[test]
    fn induced_subgraph_of_cycle_is_an_edge() {
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let (sub, map) = c.induced_subgraph(&set(&[0, 1])).unwrap();
        assert_eq!(sub.edges(), &[(0, 1)]);
        assert_eq!(map.original(1), 1);
        let (sub, _) = c.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(sub.vertex_count(), 0);
        assert!(c.induced_subgraph(&set(&[5])).is_err());
    }

    #[test]
    fn induced_transitive_tournament() {
        let edges: Vec<Edge> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        let t4 = g(4, &edges);
        let (sub, map) = t4.induced_subgraph(&set(&[0, 2, 3])).unwrap();
        // retained: 0->2, 0->3, 2->3
        assert_eq!(sub.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(map.local(2), Some(1));
        assert_eq!(map.local(1), None);
    }

    #[test]
    fn components() {
        let t = two_triangles();
        assert_eq!(
            t.underlying_components(&t.all_vertices()).unwrap(),
            vec![set(&[0, 1, 2]), set(&[3, 4, 5])]
        );
        let e = OrientedGraph::empty(5);
        assert_eq!(e.underlying_components(&e.all_vertices()).unwrap().len(), 5);
        let path = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(
            path.underlying_components(&set(&[0, 1, 3, 4])).unwrap(),
            vec![set(&[0, 1]), set(&[3, 4])]
        );
    }

    #[test]
    fn topological_orders() {
        let p = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p.topological_order().unwrap(), vec![0, 1, 2, 3]);
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(c.topological_order().unwrap_err().cycle, vec![0, 1, 2, 0]);
        let diamond = g(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(diamond.topological_order().unwrap(), vec![0, 1, 2, 3]);
        let rev = g(3, &[(2, 1), (1, 0)]);
        assert_eq!(rev.topological_order().unwrap(), vec![2, 1, 0]);
    }

    #[test]
    fn cycle_witness_is_a_real_cycle() {
        // a cycle hanging off a source, plus a tail
        let x = g(6, &[(0, 1), (1, 3), (3, 4), (4, 1), (4, 5)]);
        let cycle = x.topological_order().unwrap_err().cycle;
        assert_eq!(cycle, vec![1, 3, 4, 1]);
        assert!(cycle.windows(2).all(|w| x.has_edge(w[0], w[1])));
    }

    #[test]
    fn special_predicate() {
        let t = two_triangles();
        assert!(t.is_k_special(&set(&[0, 1, 3, 4]), 2).unwrap());
        assert!(!t.is_k_special(&set(&[0, 1, 3, 4]), 1).unwrap());
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!c.is_k_special(&c.all_vertices(), 3).unwrap());
        let e = OrientedGraph::empty(5);
        assert!(e.is_k_special(&e.all_vertices(), 1).unwrap());
        assert!(SpecialSet::new(&c, set(&[0, 1]), 0).is_err());
    }

    #[test]
    fn vertex_set_ops() {
        let a = set(&[5, 1, 3, 1]);
        assert_eq!(a.as_slice(), &[1, 3, 5]);
        assert_eq!(a.difference(&set(&[3])).as_slice(), &[1, 5]);
        assert!(a.is_disjoint(&set(&[0, 2])));
        assert!(set(&[1, 5]).is_subset(&a));
    }
}
