//! Seeded instances for each odd-cycle pattern.
//!
//! Planted odd cycles form their own blocks. The remaining vertices are split
//! into bipartite pieces (a random tree plus random edges between its colour
//! classes), each hanging from a single planted vertex or floating free, so
//! no piece adds a cycle through the planted structure. Labels are shuffled
//! at the end.

use std::collections::HashSet;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{count_odd_cycles_exact, CYCLE_BUDGET};
use crate::graph::{Graph, Vertex};
use crate::larson;
use crate::oddcycles::census;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pattern {
    Bipartite,
    Ke,
    OneOdd,
    SharePath,
    ShareVertex,
    DisjointConnected,
    DisjointDisconnected,
    RandomFiltered,
}

impl Pattern {
    pub const ALL: [Pattern; 8] = [
        Pattern::Bipartite,
        Pattern::Ke,
        Pattern::OneOdd,
        Pattern::SharePath,
        Pattern::ShareVertex,
        Pattern::DisjointConnected,
        Pattern::DisjointDisconnected,
        Pattern::RandomFiltered,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::Bipartite => "bipartite",
            Pattern::Ke => "ke",
            Pattern::OneOdd => "one-odd",
            Pattern::SharePath => "share-path",
            Pattern::ShareVertex => "share-vertex",
            Pattern::DisjointConnected => "disjoint-connected",
            Pattern::DisjointDisconnected => "disjoint-disconnected",
            Pattern::RandomFiltered => "random-filtered",
        }
    }

    /// Fewest vertices the pattern can be built on.
    pub fn min_n(self) -> usize {
        match self {
            Pattern::Bipartite | Pattern::RandomFiltered => 0,
            Pattern::OneOdd => 3,
            Pattern::SharePath => 4,
            Pattern::ShareVertex => 5,
            Pattern::Ke | Pattern::DisjointConnected | Pattern::DisjointDisconnected => 6,
        }
    }
}

impl FromStr for Pattern {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| GenError::UnknownPattern(s.to_string()))
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("pattern {pattern} needs at least {min} vertices, got {n}")]
    TooSmall { pattern: Pattern, n: usize, min: usize },
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
    #[error("no {0} instance found after {1} attempts")]
    GaveUp(Pattern, usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub n: usize,
    /// Probability of each extra edge between the colour classes of a piece
    /// (or of each edge at all, for `random-filtered`).
    pub p: f64,
}

const ATTEMPTS: usize = 1000;

pub fn generate(pattern: Pattern, params: GenParams, seed: u64) -> Result<Graph, GenError> {
    let GenParams { n, p } = params;
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadProbability(p));
    }
    if n < pattern.min_n() {
        return Err(GenError::TooSmall {
            pattern,
            n,
            min: pattern.min_n(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let g = match pattern {
            Pattern::RandomFiltered => gnp(n, p, &mut rng),
            _ => planted(pattern, n, p, &mut rng),
        };
        if accepts(pattern, &g) {
            return Ok(g);
        }
    }
    Err(GenError::GaveUp(pattern, ATTEMPTS))
}

/// Like [`generate`], with the extra-edge probability tuned by bisection so
/// that the edge count lands as close as possible to `m_target`.
pub fn generate_with_edges(
    pattern: Pattern,
    n: usize,
    m_target: usize,
    seed: u64,
) -> Result<Graph, GenError> {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut best = generate(pattern, GenParams { n, p: 0.0 }, seed)?;
    for _ in 0..16 {
        let p = (lo + hi) / 2.0;
        let g = generate(pattern, GenParams { n, p }, seed)?;
        if g.m().abs_diff(m_target) < best.m().abs_diff(m_target) {
            best = g.clone();
        }
        if g.m() < m_target {
            lo = p;
        } else {
            hi = p;
        }
    }
    Ok(best)
}

fn accepts(pattern: Pattern, g: &Graph) -> bool {
    let odd = match count_odd_cycles_exact(g, 3, CYCLE_BUDGET) {
        Ok(c) if c.at_cap => return false,
        Ok(c) => c.count,
        // too many cycles to enumerate; the block census decides
        Err(_) => match census(g).kind.odd_cycles() {
            Some(k) => k,
            None => return false,
        },
    };
    match pattern {
        Pattern::Bipartite => odd == 0,
        Pattern::OneOdd => odd == 1,
        Pattern::RandomFiltered => true,
        Pattern::Ke => larson::larson_decomposition(g).lc.is_empty(),
        _ => odd == 2,
    }
}

fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("distinct pairs")
}

struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn fresh(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    fn path_from(&mut self, from: Vertex, to: Vertex, len: usize) {
        let mut prev = from;
        for _ in 1..len {
            let v = self.fresh();
            self.edges.push((prev, v));
            prev = v;
        }
        self.edges.push((prev, to));
    }

    /// An odd cycle of length `len` through `start`; returns its vertices.
    fn cycle_through(&mut self, start: Vertex, len: usize) -> Vec<Vertex> {
        let mut cyc = vec![start];
        for _ in 1..len {
            let v = self.fresh();
            self.edges.push((*cyc.last().unwrap(), v));
            cyc.push(v);
        }
        self.edges.push((*cyc.last().unwrap(), start));
        cyc
    }
}

fn odd_len(rng: &mut ChaCha8Rng, budget: usize) -> usize {
    let top = budget.clamp(3, 9);
    let choices = (top - 1) / 2;
    3 + 2 * rng.gen_range(0..choices)
}

fn planted(pattern: Pattern, n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut b = Builder {
        n: 0,
        edges: Vec::new(),
    };
    // planted vertices that pieces may hang from
    let mut anchors: Vec<Vertex> = Vec::new();
    match pattern {
        Pattern::Bipartite | Pattern::RandomFiltered => {}
        Pattern::OneOdd => {
            let s = b.fresh();
            anchors = b.cycle_through(s, odd_len(rng, n));
        }
        Pattern::Ke => {
            let s = b.fresh();
            let cyc = b.cycle_through(s, odd_len(rng, n / 2));
            for &v in &cyc {
                let leaf = b.fresh();
                b.edges.push((v, leaf));
            }
            anchors = cyc;
        }
        Pattern::SharePath => {
            // three internally disjoint paths, not all of one parity
            let budget = n.min(10);
            loop {
                let lens = [rng.gen_range(1..=4), rng.gen_range(2..=4), rng.gen_range(2..=4)];
                let parities: Vec<_> = lens.iter().map(|l| l % 2).collect();
                let size = 2 + lens.iter().map(|l| l - 1).sum::<usize>();
                if size <= budget && !(parities[0] == parities[1] && parities[1] == parities[2]) {
                    let (s, t) = (b.fresh(), b.fresh());
                    for len in lens {
                        b.path_from(s, t, len);
                    }
                    break;
                }
            }
            anchors = (0..b.n).collect();
        }
        Pattern::ShareVertex => {
            let x = b.fresh();
            let first = odd_len(rng, n / 2 + 1);
            let a = b.cycle_through(x, first);
            let c = b.cycle_through(x, odd_len(rng, n + 1 - first));
            anchors = a.into_iter().chain(c.into_iter().skip(1)).collect();
        }
        Pattern::DisjointConnected | Pattern::DisjointDisconnected => {
            let connected = pattern == Pattern::DisjointConnected;
            let gap = if connected {
                rng.gen_range(1..=(n - 5).min(3))
            } else {
                0
            };
            let room = n.saturating_sub(gap.saturating_sub(1));
            let first = odd_len(rng, room / 2);
            let second = odd_len(rng, room - first);
            let s = b.fresh();
            let a = b.cycle_through(s, first);
            let t = b.fresh();
            let c = b.cycle_through(t, second);
            if connected {
                b.path_from(a[rng.gen_range(0..a.len())], c[rng.gen_range(0..c.len())], gap);
            }
            anchors = (0..b.n).collect();
        }
    }
    let planted_n = b.n;
    debug_assert!(planted_n <= n);

    // the rest: bipartite pieces hanging from anchors or floating free
    let mut rest: Vec<Vertex> = (planted_n..n).collect();
    rest.shuffle(rng);
    let mut pieces: Vec<(Option<Vertex>, Vec<Vertex>)> =
        anchors.iter().map(|&a| (Some(a), Vec::new())).collect();
    pieces.push((None, Vec::new()));
    for v in rest {
        let i = if anchors.is_empty() || rng.gen_bool(0.1) {
            pieces.len() - 1
        } else {
            rng.gen_range(0..anchors.len())
        };
        pieces[i].1.push(v);
    }
    let mut edges = b.edges;
    let mut present: HashSet<(Vertex, Vertex)> = HashSet::new();
    for (anchor, members) in pieces {
        let order: Vec<Vertex> = anchor.into_iter().chain(members).collect();
        if order.is_empty() {
            continue;
        }
        let mut colour = vec![false; order.len()];
        // a free piece may itself split into a few trees
        for i in 1..order.len() {
            if anchor.is_none() && rng.gen_bool(0.05) {
                continue;
            }
            let j = rng.gen_range(0..i);
            colour[i] = !colour[j];
            edges.push((order[j], order[i]));
            present.insert((order[i].min(order[j]), order[i].max(order[j])));
        }
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                if colour[i] != colour[j] && p > 0.0 && rng.gen_bool(p) {
                    let e = (order[i].min(order[j]), order[i].max(order[j]));
                    if present.insert(e) {
                        edges.push(e);
                    }
                }
            }
        }
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(n, &edges).expect("generated edges are simple")
}
