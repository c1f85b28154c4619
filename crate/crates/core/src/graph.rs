//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Graphs are immutable once built. Every operation that produces a smaller
//! graph also returns a [`VertexMap`] so results computed on the subgraph can
//! be lifted back to the labels of the host.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod io;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge {0} {1} has an endpoint outside 0..{2}")]
    EdgeOutOfRange(Vertex, Vertex, usize),
    #[error("vertex {0} is not in 0..{1}")]
    InvalidVertex(Vertex, usize),
}

/// A sorted set of distinct vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds a set from a vector that is already strictly increasing.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Self(v)
    }

    /// Collects the vertices flagged `true`.
    pub fn from_mask(mask: &[bool]) -> Self {
        Self(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &b)| b.then_some(v))
                .collect(),
        )
    }

    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        Self(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        Self(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    /// `0..n` minus this set.
    pub fn complement(&self, n: usize) -> VertexSet {
        Self((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple cycle given as a vertex sequence; consecutive vertices (and the
/// last and first) are adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<Vertex>);

impl Cycle {
    /// Wraps a vertex sequence, rotating it to start at its minimum vertex and
    /// orienting it toward the smaller of that vertex's two cycle neighbours.
    pub fn new(mut seq: Vec<Vertex>) -> Self {
        assert!(seq.len() >= 3, "a cycle needs at least three vertices");
        let pos = seq
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap();
        seq.rotate_left(pos);
        if seq[1] > seq[seq.len() - 1] {
            seq[1..].reverse();
        }
        Self(seq)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Edges of the cycle as `(min, max)` pairs in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| {
            let (a, b) = (self.0[i], self.0[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
    }

    /// Checks simplicity and that every consecutive pair is an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let distinct = self.vertex_set().len() == self.0.len();
        distinct
            && self.0.iter().all(|&v| v < g.n())
            && self.edges().all(|(u, v)| g.has_edge(u, v))
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Cycle {
        Cycle::new(self.0.iter().map(|&v| f(v)).collect())
    }
}

/// Mapping from the vertex ids of a derived graph to those of its host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    to_host: Vec<Vertex>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        Self {
            to_host: (0..n).collect(),
        }
    }

    pub fn to_host(&self, v: Vertex) -> Vertex {
        self.to_host[v]
    }

    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        // the map is increasing, so order is preserved
        VertexSet::from_sorted(set.iter().map(|v| self.to_host[v]).collect())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.to_host
    }
}

/// Result of a two-colouring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    Bipartite { left: VertexSet, right: VertexSet },
    OddCycle(Cycle),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and endpoints
    /// outside `0..n`.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Self {
            adj,
            m: edges.len(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Adjacency lists must be sorted, symmetric and loop-free.
    pub(crate) fn from_adjacency(adj: Vec<Vec<Vertex>>) -> Self {
        let twice: usize = adj.iter().map(Vec::len).sum();
        debug_assert!(twice.is_multiple_of(2));
        Self { adj, m: twice / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.adj
    }

    /// Renames vertex `v` to `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        if perm.len() != self.n() {
            return Err(GraphError::InvalidVertex(perm.len(), self.n()));
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n(), &edges)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v, self.n()))
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        match set.last() {
            Some(v) if v >= self.n() => Err(GraphError::InvalidVertex(v, self.n())),
            _ => Ok(()),
        }
    }

    /// `G - v`. Vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: Vertex) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(v)?;
        let mut keep = vec![true; self.n()];
        keep[v] = false;
        Ok(self.induced_by_mask(&keep))
    }

    /// `G - X`.
    pub fn delete_vertices(&self, set: &VertexSet) -> Result<(Graph, VertexMap), GraphError> {
        self.check_set(set)?;
        let mut keep = vec![true; self.n()];
        for v in set.iter() {
            keep[v] = false;
        }
        Ok(self.induced_by_mask(&keep))
    }

    /// `G[X]`, with vertices renumbered in increasing order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, VertexMap), GraphError> {
        self.check_set(set)?;
        Ok(self.induced_by_mask(&set.to_mask(self.n())))
    }

    pub(crate) fn induced_by_mask(&self, keep: &[bool]) -> (Graph, VertexMap) {
        let mut index = vec![usize::MAX; self.n()];
        let mut to_host = Vec::new();
        for v in self.vertices().filter(|&v| keep[v]) {
            index[v] = to_host.len();
            to_host.push(v);
        }
        let adj = to_host
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| keep[w])
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        (Graph::from_adjacency(adj), VertexMap { to_host })
    }

    /// `N(S)`, the union of the neighbourhoods. May intersect `S`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut mark = vec![false; self.n()];
        for v in set.iter() {
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        VertexSet::from_mask(&mark)
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut mark = set.to_mask(self.n());
        for v in set.iter() {
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        VertexSet::from_mask(&mark)
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|v| self.adj[v].iter().all(|&w| !set.contains(w)))
    }

    /// Component label per vertex plus the number of components. Labels are
    /// assigned in order of each component's smallest vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        let (label, count) = self.component_labels();
        let mut comps = vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            comps[c].push(v);
        }
        comps.into_iter().map(VertexSet::from_sorted).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    /// Breadth-first two-colouring. On failure, returns the odd cycle closed
    /// by the first same-layer edge met, traced through the BFS tree down to
    /// the lowest common ancestor of its endpoints.
    pub fn bipartition_or_odd_cycle(&self) -> Bipartition {
        let n = self.n();
        let mut depth = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if depth[s] != usize::MAX {
                continue;
            }
            depth[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if depth[w] == depth[u] {
                        return Bipartition::OddCycle(trace_cycle(&parent, u, w));
                    }
                }
            }
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (v, d) in depth.iter().enumerate() {
            if d % 2 == 0 {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Bipartition::Bipartite {
            left: VertexSet::from_sorted(left),
            right: VertexSet::from_sorted(right),
        }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition_or_odd_cycle(), Bipartition::Bipartite { .. })
    }

    /// Vertex `v` becomes `v` and `v + n`; each edge `uv` becomes the two
    /// edges `u ~ v + n` and `v ~ u + n`.
    pub fn bipartite_double_cover(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); 2 * n];
        for u in 0..n {
            adj[u] = self.adj[u].iter().map(|&v| v + n).collect();
            adj[u + n] = self.adj[u].clone();
        }
        Graph::from_adjacency(adj)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + shift).collect()),
        );
        Graph::from_adjacency(adj)
    }
}

fn trace_cycle(parent: &[Vertex], u: Vertex, w: Vertex) -> Cycle {
    // u and w sit on the same BFS layer, so they reach their common ancestor
    // after the same number of steps
    let mut up = vec![u];
    let mut down = vec![w];
    let (mut a, mut b) = (u, w);
    while parent[a] != parent[b] {
        a = parent[a];
        b = parent[b];
        up.push(a);
        down.push(b);
    }
    up.push(parent[a]);
    up.extend(down.into_iter().rev());
    Cycle::new(up)
}

/// Named graphs used throughout the tests and the self-test suite.
pub mod named {
    use super::{Graph, Vertex};

    fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::new(n, edges).expect("named graphs are simple")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        build(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        build(n, &edges)
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        build(leaves + 1, &edges)
    }

    /// `K4` minus the edge `0 3`: a=0, b=1, c=2, d=3 with `a`, `d` non-adjacent.
    pub fn diamond() -> Graph {
        build(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    /// Two triangles `{0,1,2}` and `{2,3,4}` sharing the centre 2.
    pub fn bowtie() -> Graph {
        build(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    }

    /// Three internally disjoint paths of lengths `a`, `b`, `c` between
    /// vertex 0 and vertex 1. Interior vertices are numbered path by path.
    pub fn theta(a: usize, b: usize, c: usize) -> Graph {
        assert!(a >= 1 && b >= 1 && c >= 1);
        assert!([a, b, c].iter().filter(|&&l| l == 1).count() <= 1);
        let mut edges = Vec::new();
        let mut next = 2;
        for len in [a, b, c] {
            let mut prev = 0;
            for _ in 1..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        build(next, &edges)
    }

    pub fn two_triangles() -> Graph {
        build(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    }

    /// Triangles `{0,1,2}` and `{3,4,5}` joined by the bridge `0 3`.
    pub fn bridged_triangles() -> Graph {
        build(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3)])
    }

    /// Triangles `{0,1,2}` and `{3,4,5}` joined through the middle vertex 6.
    pub fn path2_triangles() -> Graph {
        build(
            7,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 6), (3, 6)],
        )
    }

    /// `C5` on `0..5` plus the separate edge `5 6`.
    pub fn c5_plus_edge() -> Graph {
        cycle(5).disjoint_union(&path(2))
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        build(10, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn build_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn build_empty() {
        let g = Graph::new(0, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
    }

    #[test]
    fn build_rejects_bad_edges() {
        let err = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 2)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(0, 2));
        let err = Graph::new(4, &[(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(0, 1));
        assert_eq!(Graph::new(3, &[(1, 1)]).unwrap_err(), GraphError::SelfLoop(1));
        assert_eq!(
            Graph::new(3, &[(0, 3)]).unwrap_err(),
            GraphError::EdgeOutOfRange(0, 3, 3)
        );
    }

    #[test]
    fn delete_vertex_examples() {
        let (g, map) = complete(3).delete_vertex(0).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(map.as_slice(), &[1, 2]);

        for v in 0..5 {
            let (g, _) = cycle(5).delete_vertex(v).unwrap();
            assert_eq!((g.n(), g.m()), (4, 3));
            assert!(g.is_connected() && g.is_bipartite());
            assert_eq!((0..4).filter(|&u| g.degree(u) == 1).count(), 2);
        }

        let (g, _) = path(3).delete_vertex(1).unwrap();
        assert_eq!((g.n(), g.m()), (2, 0));

        assert_eq!(
            path(3).delete_vertex(3).unwrap_err(),
            GraphError::InvalidVertex(3, 3)
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let (g, _) = complete(3).induced_subgraph(&VertexSet::from([0, 1])).unwrap();
        assert_eq!(g.m(), 1);
        let (g, _) = bowtie().induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(g.n(), 0);
        let (g, map) = cycle(5).induced_subgraph(&VertexSet::from([0, 1, 2])).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(map.lift(&VertexSet::from([0, 2])), VertexSet::from([0, 2]));
        assert!(cycle(5).induced_subgraph(&VertexSet::from([7])).is_err());
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(
            cycle(5).neighborhood(&VertexSet::from([0])),
            VertexSet::from([1, 4])
        );
        assert!(cycle(5).neighborhood(&VertexSet::new()).is_empty());
        assert_eq!(
            complete(3).neighborhood(&VertexSet::from([0, 1])),
            VertexSet::from([0, 1, 2])
        );
    }

    #[test]
    fn components() {
        let comps = two_triangles().connected_components();
        assert_eq!(comps, vec![VertexSet::from([0, 1, 2]), VertexSet::from([3, 4, 5])]);
        assert_eq!(cycle(5).connected_components().len(), 1);
        let comps = Graph::empty(3).connected_components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn two_colouring() {
        match cycle(4).bipartition_or_odd_cycle() {
            Bipartition::Bipartite { left, right } => {
                assert_eq!(left, VertexSet::from([0, 2]));
                assert_eq!(right, VertexSet::from([1, 3]));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            complete(3).bipartition_or_odd_cycle(),
            Bipartition::OddCycle(Cycle::new(vec![0, 1, 2]))
        );
        match cycle(5).bipartition_or_odd_cycle() {
            Bipartition::OddCycle(c) => {
                assert_eq!(c.vertices(), &[0, 1, 2, 3, 4]);
                assert!(c.is_valid_in(&cycle(5)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn odd_cycle_witness_is_simple() {
        let g = petersen();
        match g.bipartition_or_odd_cycle() {
            Bipartition::OddCycle(c) => assert!(c.is_odd() && c.is_valid_in(&g)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn double_cover_examples() {
        let b = complete(3).bipartite_double_cover();
        assert_eq!((b.n(), b.m()), (6, 6));
        assert!(b.is_connected());
        assert!((0..6).all(|v| b.degree(v) == 2));

        let b = cycle(4).bipartite_double_cover();
        assert_eq!((b.n(), b.m()), (8, 8));
        let comps = b.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 4));

        let b = path(2).bipartite_double_cover();
        assert_eq!((b.n(), b.m()), (4, 2));
        assert_eq!(b.connected_components().len(), 2);
    }

    #[test]
    fn cycle_canonical_form() {
        let c = Cycle::new(vec![3, 1, 4, 2]);
        assert_eq!(c.vertices(), &[1, 3, 2, 4]);
        let c = Cycle::new(vec![5, 2, 7]);
        assert_eq!(c.vertices(), &[2, 5, 7]);
    }

    #[test]
    fn theta_shape() {
        let g = theta(1, 2, 3);
        assert_eq!((g.n(), g.m()), (5, 6));
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
    }
}
