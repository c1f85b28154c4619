//! Recognition of graphs with at most two odd cycles and a description of
//! how those cycles sit relative to each other.
//!
//! Every cycle lives inside one block. A block with cyclomatic number 1 is a
//! cycle, one with cyclomatic number 2 is a theta (three internally disjoint
//! paths between two branch vertices) and carries zero or two odd cycles. A
//! non-bipartite block with cyclomatic number 3 or more always has at least
//! three odd cycles.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Bipartition, Cycle, Graph, Vertex, VertexSet};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OddCycleError {
    #[error("the graph is bipartite")]
    Bipartite,
}

/// Biconnected blocks (bridges included as two-vertex blocks) and the cut
/// vertices joining them. Isolated vertices belong to no block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTree {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

/// DFS low-point decomposition. Blocks are sorted.
pub fn block_decomposition(g: &Graph) -> BlockTree {
    let n = g.n();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut clock = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut frames: Vec<(Vertex, Vertex, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != NONE || g.degree(root) == 0 {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        frames.push((root, NONE, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w] == NONE {
                    edge_stack.push((v, w));
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if parent == NONE {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let mut members = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    members.push(a);
                    members.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                blocks.push(VertexSet::from(members));
            }
        }
    }
    blocks.sort();
    let mut count = vec![0usize; n];
    for b in &blocks {
        for v in b.iter() {
            count[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| count[v] > 1).collect();
    BlockTree {
        blocks,
        cut_vertices,
    }
}

/// Vertices common to all odd cycles: the vertices `v` of one odd cycle for
/// which `G - v` is bipartite.
pub fn all_odd_cycle_intersection(g: &Graph) -> Result<VertexSet, OddCycleError> {
    let Bipartition::OddCycle(c) = g.bipartition_or_odd_cycle() else {
        return Err(OddCycleError::Bipartite);
    };
    Ok(c.vertices()
        .iter()
        .copied()
        .filter(|&v| g.delete_vertex(v).expect("cycle vertex").0.is_bipartite())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CycleKind {
    Bipartite,
    OneOddCycle,
    TwoSharingPath,
    TwoSharingVertex,
    TwoDisjoint,
    OutOfClass,
}

impl CycleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CycleKind::Bipartite => "Bipartite",
            CycleKind::OneOddCycle => "OneOddCycle",
            CycleKind::TwoSharingPath => "TwoSharingPath",
            CycleKind::TwoSharingVertex => "TwoSharingVertex",
            CycleKind::TwoDisjoint => "TwoDisjoint",
            CycleKind::OutOfClass => "OutOfClass",
        }
    }

    /// Number of odd cycles, or `None` for three or more.
    pub fn odd_cycles(self) -> Option<usize> {
        match self {
            CycleKind::Bipartite => Some(0),
            CycleKind::OneOddCycle => Some(1),
            CycleKind::OutOfClass => None,
            _ => Some(2),
        }
    }
}

impl std::fmt::Display for CycleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Shape of the odd cycles of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleProfile {
    pub kind: CycleKind,
    /// The odd cycles themselves, sorted; empty when out of class.
    pub witnesses: Vec<Cycle>,
    /// Vertices lying on every odd cycle.
    pub intersection: VertexSet,
    /// The shared vertex of two odd cycles meeting in exactly one vertex.
    pub cut_vertex: Option<Vertex>,
    pub connected: bool,
}

/// Classifies the odd cycles of `g` block by block.
pub fn census(g: &Graph) -> OddCycleProfile {
    let tree = block_decomposition(g);
    let mut witnesses: Vec<Cycle> = Vec::new();
    let mut shared_path: Option<VertexSet> = None;
    let mut out = false;
    for block in &tree.blocks {
        if block.len() < 3 {
            continue;
        }
        let (h, map) = g.induced_subgraph(block).expect("block vertices are valid");
        if h.is_bipartite() {
            continue;
        }
        match h.m() + 1 - h.n() {
            1 => witnesses.push(walk_cycle(&h).map(|v| map.to_host(v))),
            2 => {
                let (odd, path) = theta_odd_cycles(&h);
                witnesses.extend(odd.into_iter().map(|c| c.map(|v| map.to_host(v))));
                shared_path = Some(map.lift(&path));
            }
            _ => out = true,
        }
        if out || witnesses.len() > 2 {
            out = true;
            break;
        }
    }
    let connected = g.is_connected();
    if out {
        return OddCycleProfile {
            kind: CycleKind::OutOfClass,
            witnesses: Vec::new(),
            intersection: VertexSet::new(),
            cut_vertex: None,
            connected,
        };
    }
    witnesses.sort();
    let (kind, intersection, cut_vertex) = match witnesses.as_slice() {
        [] => (CycleKind::Bipartite, VertexSet::new(), None),
        [c] => (CycleKind::OneOddCycle, c.vertex_set(), None),
        [a, b] => {
            if let Some(path) = shared_path {
                (CycleKind::TwoSharingPath, path, None)
            } else {
                let common = a.vertex_set().intersection(&b.vertex_set());
                match common.first() {
                    Some(x) => (CycleKind::TwoSharingVertex, common, Some(x)),
                    None => (CycleKind::TwoDisjoint, common, None),
                }
            }
        }
        _ => unreachable!("more than two witnesses are out of class"),
    };
    OddCycleProfile {
        kind,
        witnesses,
        intersection,
        cut_vertex,
        connected,
    }
}

pub fn is_in_class(g: &Graph) -> bool {
    census(g).kind != CycleKind::OutOfClass
}

/// The cycle of a connected 2-regular graph.
fn walk_cycle(h: &Graph) -> Cycle {
    let mut seq = vec![0];
    let mut prev = NONE;
    let mut cur = 0;
    loop {
        let next = *h
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev)
            .expect("cycle vertices have degree 2");
        if next == 0 {
            break;
        }
        seq.push(next);
        prev = cur;
        cur = next;
    }
    Cycle::new(seq)
}

/// The two odd cycles of a non-bipartite theta and the path they share.
fn theta_odd_cycles(h: &Graph) -> (Vec<Cycle>, VertexSet) {
    let branch: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) == 3).collect();
    assert_eq!(branch.len(), 2, "a theta block has two branch vertices");
    let (s, t) = (branch[0], branch[1]);
    let paths: Vec<Vec<Vertex>> = h
        .neighbors(s)
        .iter()
        .map(|&first| {
            let mut path = vec![s];
            let (mut prev, mut cur) = (s, first);
            while cur != t {
                path.push(cur);
                let next = *h.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
                prev = cur;
                cur = next;
            }
            path.push(t);
            path
        })
        .collect();
    // the path whose length parity differs from the other two is on both odd cycles
    let parity: Vec<usize> = paths.iter().map(|p| (p.len() - 1) % 2).collect();
    let shared = (0..3)
        .find(|&i| parity[i] != parity[(i + 1) % 3] && parity[i] != parity[(i + 2) % 3])
        .expect("a non-bipartite theta has a path of distinct parity");
    let cycles = (0..3)
        .filter(|&i| i != shared)
        .map(|i| {
            let mut seq = paths[shared].clone();
            seq.extend(paths[i][1..paths[i].len() - 1].iter().rev());
            Cycle::new(seq)
        })
        .collect();
    (cycles, paths[shared].iter().copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn blocks_examples() {
        let t = block_decomposition(&bowtie());
        assert_eq!(t.blocks, vec![VertexSet::from([0, 1, 2]), VertexSet::from([2, 3, 4])]);
        assert_eq!(t.cut_vertices, VertexSet::from([2]));
        assert_eq!(block_decomposition(&cycle(5)).blocks.len(), 1);
        let t = block_decomposition(&path(4));
        assert_eq!(t.blocks.len(), 3);
        assert_eq!(t.cut_vertices, VertexSet::from([1, 2]));
        assert!(block_decomposition(&Graph::empty(3)).blocks.is_empty());
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(all_odd_cycle_intersection(&cycle(5)).unwrap(), VertexSet::full(5));
        assert_eq!(all_odd_cycle_intersection(&bowtie()).unwrap(), VertexSet::from([2]));
        assert!(all_odd_cycle_intersection(&two_triangles()).unwrap().is_empty());
        assert_eq!(
            all_odd_cycle_intersection(&cycle(4)),
            Err(OddCycleError::Bipartite)
        );
    }

    #[test]
    fn census_examples() {
        let p = census(&theta(1, 2, 3));
        assert_eq!(p.kind, CycleKind::TwoSharingPath);
        assert_eq!(p.intersection, VertexSet::from([0, 1, 2]));
        assert_eq!(p.witnesses.len(), 2);
        assert_eq!(p.witnesses[0].len() + p.witnesses[1].len(), 8);

        let p = census(&bowtie());
        assert_eq!(p.kind, CycleKind::TwoSharingVertex);
        assert_eq!(p.cut_vertex, Some(2));
        assert_eq!(p.intersection, VertexSet::from([2]));

        assert_eq!(census(&complete(4)).kind, CycleKind::OutOfClass);
        assert_eq!(census(&petersen()).kind, CycleKind::OutOfClass);

        let p = census(&two_triangles());
        assert_eq!(p.kind, CycleKind::TwoDisjoint);
        assert!(!p.connected);
        assert!(census(&bridged_triangles()).connected);

        let p = census(&cycle(5));
        assert_eq!(p.kind, CycleKind::OneOddCycle);
        assert_eq!(p.witnesses, vec![Cycle::new(vec![0, 1, 2, 3, 4])]);

        assert_eq!(census(&cycle(6)).kind, CycleKind::Bipartite);
        assert_eq!(census(&Graph::empty(0)).kind, CycleKind::Bipartite);
    }

    #[test]
    fn chorded_pentagon_is_in_class() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert!(is_in_class(&g));
        assert_eq!(census(&g).kind, CycleKind::TwoSharingPath);
        assert!(is_in_class(&star(3)));
        assert!(!is_in_class(&petersen()));
    }

    #[test]
    fn witnesses_are_cycles_of_the_graph() {
        for g in [theta(1, 2, 3), theta(2, 3, 3), bowtie(), path2_triangles(), c5_plus_edge()] {
            for c in census(&g).witnesses {
                assert!(c.is_odd() && c.is_valid_in(&g));
            }
        }
    }
}
