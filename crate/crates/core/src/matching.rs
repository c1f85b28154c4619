//! Maximum matchings: Edmonds' blossom search for general graphs and
//! Hopcroft–Karp for bipartite ones, plus the König cover and Hall-style
//! certificates built on top of them.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edge {0} {1} joins two vertices on the same side")]
    MonochromaticEdge(Vertex, Vertex),
    #[error("the two sides do not partition the vertex set")]
    NotAPartition,
    #[error("vertex sets overlap at {0}")]
    SetsOverlap(Vertex),
    #[error("matching is not maximum: cover has {cover} vertices, matching {size} edges")]
    NotMaximum { cover: usize, size: usize },
    #[error("pair {0} {1} is not a valid matching edge")]
    InvalidPair(Vertex, Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A set of pairwise disjoint edges, stored as the involution `v -> M(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<Vertex>>,
    size: usize,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Self {
            mate: vec![None; n],
            size: 0,
        }
    }

    fn from_raw(raw: &[usize]) -> Self {
        let mate: Vec<Option<Vertex>> = raw.iter().map(|&w| (w != NONE).then_some(w)).collect();
        let size = mate.iter().filter(|m| m.is_some()).count() / 2;
        Self { mate, size }
    }

    /// Builds a matching from explicit pairs, rejecting shared endpoints.
    pub fn from_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self, MatchingError> {
        let mut m = Self::empty(n);
        for &(u, v) in pairs {
            if u >= n || v >= n || u == v || m.mate[u].is_some() || m.mate[v].is_some() {
                return Err(MatchingError::InvalidPair(u, v));
            }
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
            m.size += 1;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.mate.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn is_matched(&self, v: Vertex) -> bool {
        self.mate[v].is_some()
    }

    /// `M(v)`: the partner of `v`, or `v` itself when unmatched.
    pub fn apply(&self, v: Vertex) -> Vertex {
        self.mate[v].unwrap_or(v)
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| v > u).map(|v| (u, v)))
            .collect()
    }

    pub fn matched_vertices(&self) -> VertexSet {
        VertexSet::from_mask(&self.mate.iter().map(Option::is_some).collect::<Vec<_>>())
    }

    /// The involution is consistent and every pair is an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && self.mate.iter().enumerate().all(|(v, m)| match *m {
                None => true,
                Some(w) => w != v && self.mate[w] == Some(v) && g.has_edge(v, w),
            })
            && self.size * 2 == self.mate.iter().filter(|m| m.is_some()).count()
    }

    /// Image of a vertex set under the matching, skipping unmatched vertices.
    pub fn partners(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.mate[v]).collect()
    }
}

/// Hopcroft–Karp on an explicit bipartite adjacency (`adj[u]` lists right
/// indices). Returns `(mate_left, mate_right)` with `usize::MAX` for free.
pub(crate) fn hopcroft_karp(adj: &[Vec<usize>], n_right: usize) -> (Vec<usize>, Vec<usize>) {
    let n_left = adj.len();
    let mut mate_l = vec![NONE; n_left];
    let mut mate_r = vec![NONE; n_right];
    for u in 0..n_left {
        if let Some(&v) = adj[u].iter().find(|&&v| mate_r[v] == NONE) {
            mate_l[u] = v;
            mate_r[v] = u;
        }
    }

    let mut dist = vec![NONE; n_left];
    let mut next = vec![0usize; n_left];
    let mut queue = VecDeque::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut via: Vec<usize> = Vec::new();
    loop {
        queue.clear();
        for u in 0..n_left {
            if mate_l[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = NONE;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mate_r[v];
                if w == NONE {
                    found = true;
                } else if dist[w] == NONE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }

        next.iter_mut().for_each(|i| *i = 0);
        for root in 0..n_left {
            if mate_l[root] != NONE {
                continue;
            }
            stack.clear();
            via.clear();
            stack.push(root);
            while let Some(&u) = stack.last() {
                if next[u] == adj[u].len() {
                    dist[u] = NONE;
                    stack.pop();
                    via.pop();
                    continue;
                }
                let v = adj[u][next[u]];
                next[u] += 1;
                let w = mate_r[v];
                if w == NONE {
                    via.push(v);
                    for (&a, &b) in stack.iter().zip(&via) {
                        mate_l[a] = b;
                        mate_r[b] = a;
                    }
                    break;
                }
                if dist[w] != NONE && dist[w] == dist[u] + 1 {
                    via.push(v);
                    stack.push(w);
                }
            }
        }
    }
    (mate_l, mate_r)
}

struct Sides {
    /// position of each vertex inside its side
    index: Vec<usize>,
    left: Vec<Vertex>,
    right: Vec<Vertex>,
    adj: Vec<Vec<usize>>,
}

fn check_sides(g: &Graph, left: &VertexSet, right: &VertexSet) -> Result<Sides, MatchingError> {
    g.check_set(left)?;
    g.check_set(right)?;
    if left.len() + right.len() != g.n() {
        return Err(MatchingError::NotAPartition);
    }
    let is_left = left.to_mask(g.n());
    if right.iter().any(|v| is_left[v]) {
        return Err(MatchingError::NotAPartition);
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| is_left[u] == is_left[v]) {
        return Err(MatchingError::MonochromaticEdge(u, v));
    }
    let mut index = vec![0; g.n()];
    for (i, v) in left.iter().enumerate() {
        index[v] = i;
    }
    for (i, v) in right.iter().enumerate() {
        index[v] = i;
    }
    let adj = left
        .iter()
        .map(|u| g.neighbors(u).iter().map(|&v| index[v]).collect())
        .collect();
    Ok(Sides {
        index,
        left: left.as_slice().to_vec(),
        right: right.as_slice().to_vec(),
        adj,
    })
}

/// Maximum matching of a bipartite graph with the given sides.
pub fn maximum_matching_bipartite(
    g: &Graph,
    left: &VertexSet,
    right: &VertexSet,
) -> Result<Matching, MatchingError> {
    let sides = check_sides(g, left, right)?;
    let (mate_l, _) = hopcroft_karp(&sides.adj, sides.right.len());
    let mut raw = vec![NONE; g.n()];
    for (i, &r) in mate_l.iter().enumerate() {
        if r != NONE {
            let (u, v) = (sides.left[i], sides.right[r]);
            raw[u] = v;
            raw[v] = u;
        }
    }
    Ok(Matching::from_raw(&raw))
}

/// König's construction: with `Z` the vertices reachable from free left
/// vertices by alternating paths, `(left \ Z) ∪ (right ∩ Z)` covers every edge.
pub fn min_vertex_cover_bipartite(
    g: &Graph,
    left: &VertexSet,
    right: &VertexSet,
    m: &Matching,
) -> Result<VertexSet, MatchingError> {
    let sides = check_sides(g, left, right)?;
    if !m.is_valid_in(g) {
        return Err(MatchingError::NotMaximum {
            cover: 0,
            size: m.size(),
        });
    }
    let mut reached = vec![false; g.n()];
    let mut stack: Vec<Vertex> = sides
        .left
        .iter()
        .copied()
        .filter(|&u| !m.is_matched(u))
        .collect();
    for &u in &stack {
        reached[u] = true;
    }
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if reached[v] || m.mate(u) == Some(v) {
                continue;
            }
            reached[v] = true;
            if let Some(w) = m.mate(v) {
                if !reached[w] {
                    reached[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let _ = sides.index;
    let cover: VertexSet = sides
        .left
        .iter()
        .copied()
        .filter(|&u| !reached[u])
        .chain(sides.right.iter().copied().filter(|&v| reached[v]))
        .collect();
    if cover.len() != m.size() {
        return Err(MatchingError::NotMaximum {
            cover: cover.len(),
            size: m.size(),
        });
    }
    Ok(cover)
}

/// Outcome of [`matching_from_into`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FromInto {
    /// Every vertex of `A` is matched into `B`.
    Saturating(Matching),
    /// A subset `S ⊆ A` with `|N(S) ∩ B| < |S|`.
    HallViolation(VertexSet),
}

/// Looks for a matching from `a` into `b` using only `a`–`b` edges.
pub fn matching_from_into(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<FromInto, MatchingError> {
    g.check_set(a)?;
    g.check_set(b)?;
    if let Some(v) = a.iter().find(|&v| b.contains(v)) {
        return Err(MatchingError::SetsOverlap(v));
    }
    let mut index = vec![NONE; g.n()];
    for (i, v) in b.iter().enumerate() {
        index[v] = i;
    }
    let adj: Vec<Vec<usize>> = a
        .iter()
        .map(|u| {
            g.neighbors(u)
                .iter()
                .filter(|&&v| index[v] != NONE)
                .map(|&v| index[v])
                .collect()
        })
        .collect();
    let (mate_l, mate_r) = hopcroft_karp(&adj, b.len());
    let a_list = a.as_slice();
    let b_list = b.as_slice();
    if mate_l.iter().all(|&r| r != NONE) {
        let pairs: Vec<_> = mate_l
            .iter()
            .enumerate()
            .map(|(i, &r)| (a_list[i], b_list[r]))
            .collect();
        return Ok(FromInto::Saturating(Matching::from_pairs(g.n(), &pairs)?));
    }
    let mut reached = vec![false; a.len()];
    let mut stack: Vec<usize> = (0..a.len()).filter(|&i| mate_l[i] == NONE).collect();
    for &i in &stack {
        reached[i] = true;
    }
    while let Some(i) = stack.pop() {
        for &r in &adj[i] {
            let w = mate_r[r];
            if w != NONE && !reached[w] {
                reached[w] = true;
                stack.push(w);
            }
        }
    }
    Ok(FromInto::HallViolation(
        (0..a.len()).filter(|&i| reached[i]).map(|i| a_list[i]).collect(),
    ))
}

/// Maximum cardinality matching of a general graph.
///
/// Starts from a greedy matching and then grows an alternating tree from each
/// free vertex in ascending order, shrinking odd cycles into their base. A
/// search that fails leaves a Hungarian tree whose vertices can never lie on
/// an augmenting path again, so they are dropped for the rest of the run.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut search = BlossomSearch::new(g);
    search.greedy();
    for root in 0..g.n() {
        if search.mate[root] != NONE || search.dead[root] {
            continue;
        }
        match search.find_path(root) {
            Some(end) => search.augment(end),
            None => search.bury(),
        }
        search.reset();
    }
    let m = Matching::from_raw(&search.mate);
    debug_assert!(m.is_valid_in(g));
    m
}

/// True if some free vertex starts an augmenting path, i.e. `m` is not
/// maximum (Berge). Runs the full blossom search without pruning.
pub fn has_augmenting_path(g: &Graph, m: &Matching) -> bool {
    let mut search = BlossomSearch::new(g);
    for v in 0..g.n() {
        search.mate[v] = m.mate(v).unwrap_or(NONE);
    }
    for root in 0..g.n() {
        if search.mate[root] != NONE {
            continue;
        }
        if search.find_path(root).is_some() {
            return true;
        }
        search.reset();
    }
    false
}

struct BlossomSearch<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    /// tree predecessor of inner vertices
    parent: Vec<usize>,
    base: Vec<usize>,
    outer: Vec<bool>,
    dead: Vec<bool>,
    in_tree: Vec<bool>,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
    stamp: Vec<u64>,
    clock: u64,
    in_blossom: Vec<u64>,
}

impl<'a> BlossomSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Self {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            outer: vec![false; n],
            dead: vec![false; n],
            in_tree: vec![false; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
            stamp: vec![0; n],
            clock: 0,
            in_blossom: vec![0; n],
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.g.n() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.g.neighbors(v).iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
    }

    fn touch(&mut self, v: usize) {
        if !self.in_tree[v] {
            self.in_tree[v] = true;
            self.touched.push(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.parent[v] = NONE;
            self.base[v] = v;
            self.outer[v] = false;
            self.in_tree[v] = false;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn bury(&mut self) {
        for &v in &self.touched {
            self.dead[v] = true;
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.clock += 1;
        loop {
            a = self.base[a];
            self.stamp[a] = self.clock;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.stamp[b] == self.clock {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = self.clock;
            self.in_blossom[self.base[m]] = self.clock;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.touch(root);
        self.outer[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.g.degree(v) {
                let to = self.g.neighbors(v)[i];
                if self.dead[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_outer = to == root
                    || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_outer {
                    let cur = self.lca(v, to);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    let clock = self.clock;
                    for k in 0..self.touched.len() {
                        let x = self.touched[k];
                        if self.in_blossom[self.base[x]] == clock {
                            self.base[x] = cur;
                            if !self.outer[x] {
                                self.outer[x] = true;
                                self.queue.push_back(x);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    self.touch(to);
                    let m = self.mate[to];
                    if m == NONE {
                        return Some(to);
                    }
                    self.touch(m);
                    self.outer[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn bip_sides(g: &Graph) -> (VertexSet, VertexSet) {
        match g.bipartition_or_odd_cycle() {
            crate::graph::Bipartition::Bipartite { left, right } => (left, right),
            _ => panic!("not bipartite"),
        }
    }

    #[test]
    fn general_examples() {
        assert_eq!(maximum_matching(&cycle(5)).size(), 2);
        assert_eq!(maximum_matching(&two_triangles()).size(), 2);
        assert_eq!(maximum_matching(&Graph::empty(4)).size(), 0);
        assert_eq!(maximum_matching(&petersen()).size(), 5);
        assert_eq!(maximum_matching(&complete(7)).size(), 3);
    }

    #[test]
    fn blossom_needed() {
        // greedy matches 0-1 and 2-3 on this graph; the augmenting path from
        // 5 runs through the triangle 1-2-3 and must be found by shrinking it
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (0, 6)]).unwrap();
        let m = maximum_matching(&g);
        assert_eq!(m.size(), 3);
        assert!(m.is_valid_in(&g));
        assert!(!has_augmenting_path(&g, &m));
    }

    #[test]
    fn deterministic_mates() {
        let g = petersen();
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }

    #[test]
    fn involution_view() {
        let m = Matching::from_pairs(4, &[(0, 1)]).unwrap();
        assert_eq!(m.apply(0), 1);
        assert_eq!(m.apply(3), 3);
        assert!(Matching::from_pairs(3, &[(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let c6 = cycle(6);
        let (l, r) = bip_sides(&c6);
        assert_eq!(maximum_matching_bipartite(&c6, &l, &r).unwrap().size(), 3);
        let s = star(3);
        let (l, r) = bip_sides(&s);
        assert_eq!(maximum_matching_bipartite(&s, &l, &r).unwrap().size(), 1);
        let g = path(2).disjoint_union(&path(2));
        let (l, r) = bip_sides(&g);
        assert_eq!(maximum_matching_bipartite(&g, &l, &r).unwrap().size(), 2);
    }

    #[test]
    fn bipartite_rejects_bad_sides() {
        let g = complete(3);
        let err = maximum_matching_bipartite(&g, &VertexSet::from([0]), &VertexSet::from([1, 2]));
        assert_eq!(err.unwrap_err(), MatchingError::MonochromaticEdge(1, 2));
        let err = maximum_matching_bipartite(&g, &VertexSet::from([0]), &VertexSet::from([1]));
        assert_eq!(err.unwrap_err(), MatchingError::NotAPartition);
    }

    #[test]
    fn konig_cover_examples() {
        let c6 = cycle(6);
        let (l, r) = bip_sides(&c6);
        let m = maximum_matching_bipartite(&c6, &l, &r).unwrap();
        let cover = min_vertex_cover_bipartite(&c6, &l, &r, &m).unwrap();
        assert_eq!(cover.len(), 3);
        assert!(c6.edges().all(|(u, v)| cover.contains(u) || cover.contains(v)));

        let s = star(3);
        let (l, r) = bip_sides(&s);
        let m = maximum_matching_bipartite(&s, &l, &r).unwrap();
        assert_eq!(
            min_vertex_cover_bipartite(&s, &l, &r, &m).unwrap(),
            VertexSet::from([0])
        );

        let e = Graph::empty(3);
        let (l, r) = bip_sides(&e);
        let m = Matching::empty(3);
        assert!(min_vertex_cover_bipartite(&e, &l, &r, &m).unwrap().is_empty());
    }

    #[test]
    fn konig_cover_detects_non_maximum() {
        let c6 = cycle(6);
        let (l, r) = bip_sides(&c6);
        let m = Matching::from_pairs(6, &[(0, 1)]).unwrap();
        assert!(matches!(
            min_vertex_cover_bipartite(&c6, &l, &r, &m),
            Err(MatchingError::NotMaximum { .. })
        ));
    }

    #[test]
    fn from_into_examples() {
        let p3 = path(3);
        match matching_from_into(&p3, &VertexSet::from([1]), &VertexSet::from([0, 2])).unwrap() {
            FromInto::Saturating(m) => assert_eq!(m.pairs(), vec![(0, 1)]),
            other => panic!("{other:?}"),
        }

        let s = star(3);
        assert_eq!(
            matching_from_into(&s, &VertexSet::from([1, 2, 3]), &VertexSet::from([0])).unwrap(),
            FromInto::HallViolation(VertexSet::from([1, 2, 3]))
        );

        let d = diamond();
        match matching_from_into(&d, &VertexSet::from([1, 2]), &VertexSet::from([0, 3])).unwrap() {
            FromInto::Saturating(m) => {
                assert_eq!(m.size(), 2);
                assert!(m.is_valid_in(&d));
            }
            other => panic!("{other:?}"),
        }

        assert_eq!(
            matching_from_into(&s, &VertexSet::from([0, 1]), &VertexSet::from([1])).unwrap_err(),
            MatchingError::SetsOverlap(1)
        );
    }
}
