//! Exponential-time ground truth on bitmasks: maximum independent sets,
//! critical sets, matchings and odd cycles, plus seeded instance generators.

mod generate;

pub use generate::{generate, generate_with_edges, GenError, GenParams, Pattern};

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Cycle, Graph, Vertex, VertexSet};
use crate::oddcycles::CycleKind;

/// Default vertex bound for the exact routines.
pub const ORACLE_CAP: usize = 25;
/// Default bound used by `verify`.
pub const DEFAULT_ORACLE_LIMIT: usize = 20;
/// Step budget for cycle enumeration.
pub const CYCLE_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle cap is {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("cycle enumeration ran out of budget")]
    BudgetExceeded,
}

fn masks(g: &Graph, cap: usize) -> Result<Vec<u64>, OracleError> {
    let cap = cap.min(64);
    if g.n() > cap {
        return Err(OracleError::TooLarge { n: g.n(), cap });
    }
    Ok(g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect())
}

fn to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn bits(mask: u64) -> impl Iterator<Item = Vertex> {
    let mut m = mask;
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as Vertex;
            m &= m - 1;
            v
        })
    })
}

/// Candidate of maximum degree inside `cand`, with that degree.
fn branch_vertex(adj: &[u64], cand: u64) -> (Vertex, u32) {
    bits(cand)
        .map(|v| (v, (adj[v] & cand).count_ones()))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .expect("nonempty candidate set")
}

fn alpha_rec(adj: &[u64], cand: u64, cur: u32, best: &mut u32) {
    if cur + cand.count_ones() <= *best {
        return;
    }
    if cand == 0 {
        *best = cur;
        return;
    }
    let (v, deg) = branch_vertex(adj, cand);
    if deg == 0 {
        *best = cur + cand.count_ones();
        return;
    }
    alpha_rec(adj, cand & !adj[v] & !(1 << v), cur + 1, best);
    alpha_rec(adj, cand & !(1 << v), cur, best);
}

/// `α(G)` by branch and bound.
pub fn brute_alpha(g: &Graph) -> Result<usize, OracleError> {
    let adj = masks(g, ORACLE_CAP)?;
    let mut best = 0;
    alpha_rec(&adj, full_mask(g.n()), 0, &mut best);
    Ok(best as usize)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All maximum independent sets, possibly cut short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisFamily {
    pub alpha: usize,
    pub sets: Vec<VertexSet>,
    pub truncated: bool,
}

struct MisWalk<'a> {
    adj: &'a [u64],
    alpha: u32,
    limit: usize,
    found: Vec<u64>,
    truncated: bool,
}

impl MisWalk<'_> {
    fn run(&mut self, cand: u64, chosen: u64) {
        if self.truncated || chosen.count_ones() + cand.count_ones() < self.alpha {
            return;
        }
        if cand == 0 {
            if self.found.len() == self.limit {
                self.truncated = true;
            } else {
                self.found.push(chosen);
            }
            return;
        }
        let (v, deg) = branch_vertex(self.adj, cand);
        if deg == 0 {
            self.run(0, chosen | cand);
            return;
        }
        self.run(cand & !self.adj[v] & !(1 << v), chosen | 1 << v);
        self.run(cand & !(1 << v), chosen);
    }
}

/// `Ω(G)`, listing at most `limit` sets.
pub fn brute_all_mis(g: &Graph, limit: usize) -> Result<MisFamily, OracleError> {
    let adj = masks(g, ORACLE_CAP)?;
    let alpha = brute_alpha(g)?;
    let mut walk = MisWalk {
        adj: &adj,
        alpha: alpha as u32,
        limit,
        found: Vec::new(),
        truncated: false,
    };
    walk.run(full_mask(g.n()), 0);
    let mut sets: Vec<VertexSet> = walk.found.into_iter().map(to_set).collect();
    sets.sort();
    Ok(MisFamily {
        alpha,
        sets,
        truncated: walk.truncated,
    })
}

/// Intersection and union of all maximum independent sets.
pub fn brute_core_corona(g: &Graph) -> Result<(VertexSet, VertexSet), OracleError> {
    let adj = masks(g, ORACLE_CAP)?;
    let alpha = brute_alpha(g)?;
    let mut walk = MisWalk {
        adj: &adj,
        alpha: alpha as u32,
        limit: usize::MAX,
        found: Vec::new(),
        truncated: false,
    };
    walk.run(full_mask(g.n()), 0);
    let core = walk.found.iter().fold(full_mask(g.n()), |a, &s| a & s);
    let corona = walk.found.iter().fold(0, |a, &s| a | s);
    Ok((to_set(core), to_set(corona)))
}

/// Every independent set ranked by `|I| - |N(I)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalFamily {
    pub d: usize,
    /// All maximizers, sorted.
    pub critical: Vec<VertexSet>,
    /// Lexicographically least maximizer of maximum size.
    pub max_critical: VertexSet,
    /// Best `|I| - |N(I)|` over independent sets containing each vertex.
    pub best_with: Vec<isize>,
}

impl CriticalFamily {
    /// No nonempty independent set has `|N(S)| <= |S|`.
    pub fn is_2bicritical(&self) -> bool {
        self.best_with.iter().all(|&b| b <= -1)
    }
}

pub fn brute_critical(g: &Graph) -> Result<CriticalFamily, OracleError> {
    let adj = masks(g, ORACLE_CAP)?;
    let n = g.n();
    let mut best = isize::MIN;
    let mut maximizers: Vec<u64> = Vec::new();
    let mut best_with = vec![isize::MIN; n];
    // depth-first over vertices in order: (next vertex, set, its neighbourhood)
    let mut stack = vec![(0usize, 0u64, 0u64)];
    while let Some((i, set, nb)) = stack.pop() {
        if i == n {
            let diff = set.count_ones() as isize - nb.count_ones() as isize;
            for v in bits(set) {
                best_with[v] = best_with[v].max(diff);
            }
            if diff > best {
                best = diff;
                maximizers.clear();
            }
            if diff == best {
                maximizers.push(set);
            }
            continue;
        }
        stack.push((i + 1, set, nb));
        if (set | nb) >> i & 1 == 0 && adj[i] & set == 0 {
            stack.push((i + 1, set | 1 << i, nb | adj[i]));
        }
    }
    let mut critical: Vec<VertexSet> = maximizers.into_iter().map(to_set).collect();
    critical.sort();
    let top = critical.iter().map(VertexSet::len).max().unwrap_or(0);
    let max_critical = critical
        .iter()
        .filter(|s| s.len() == top)
        .min_by(|a, b| a.as_slice().cmp(b.as_slice()))
        .cloned()
        .unwrap_or_default();
    Ok(CriticalFamily {
        d: best as usize,
        critical,
        max_critical,
        best_with,
    })
}

/// `μ(G)` by exhaustive search with memoisation over remaining vertices.
pub fn brute_matching_number(g: &Graph) -> Result<usize, OracleError> {
    fn rec(adj: &[u64], rest: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if rest == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&rest) {
            return r;
        }
        let v = rest.trailing_zeros() as usize;
        let without = rest & !(1 << v);
        let mut best = rec(adj, without, memo);
        for w in bits(adj[v] & without) {
            best = best.max(1 + rec(adj, without & !(1 << w), memo));
        }
        memo.insert(rest, best);
        best
    }
    let adj = masks(g, ORACLE_CAP)?;
    Ok(rec(&adj, full_mask(g.n()), &mut HashMap::new()))
}

/// Odd cycles found by exhaustive enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleCount {
    /// Exact when `at_cap` is false, otherwise a lower bound equal to the cap.
    pub count: usize,
    pub at_cap: bool,
    pub cycles: Vec<Cycle>,
}

/// Enumerates simple cycles from their minimum vertex, each direction once,
/// stopping after `cap` odd ones. Distinct edge sets count as distinct cycles.
pub fn count_odd_cycles_exact(g: &Graph, cap: usize, budget: u64) -> Result<OddCycleCount, OracleError> {
    let n = g.n();
    let mut cycles = Vec::new();
    let mut steps = 0u64;
    let mut on_path = vec![false; n];
    let mut path: Vec<Vertex> = Vec::new();
    let mut next: Vec<usize> = Vec::new();
    for s in 0..n {
        path.clear();
        next.clear();
        path.push(s);
        next.push(0);
        on_path[s] = true;
        while let Some(&v) = path.last() {
            let i = *next.last().unwrap();
            if i == g.degree(v) {
                on_path[v] = false;
                path.pop();
                next.pop();
                continue;
            }
            *next.last_mut().unwrap() += 1;
            steps += 1;
            if steps > budget {
                return Err(OracleError::BudgetExceeded);
            }
            let w = g.neighbors(v)[i];
            if w == s {
                // keep one of the two orientations
                if path.len() >= 3 && path[1] < v && path.len() % 2 == 1 {
                    cycles.push(Cycle::new(path.clone()));
                    if cycles.len() == cap {
                        return Ok(OddCycleCount {
                            count: cap,
                            at_cap: true,
                            cycles,
                        });
                    }
                }
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                next.push(0);
            }
        }
    }
    cycles.sort();
    Ok(OddCycleCount {
        count: cycles.len(),
        at_cap: false,
        cycles,
    })
}

/// Cycle shape read off an exhaustive enumeration.
pub fn kind_from_cycles(count: &OddCycleCount) -> CycleKind {
    if count.at_cap {
        return CycleKind::OutOfClass;
    }
    match count.cycles.as_slice() {
        [] => CycleKind::Bipartite,
        [_] => CycleKind::OneOddCycle,
        [a, b] => match a.vertex_set().intersection(&b.vertex_set()).len() {
            0 => CycleKind::TwoDisjoint,
            1 => CycleKind::TwoSharingVertex,
            _ => CycleKind::TwoSharingPath,
        },
        _ => CycleKind::OutOfClass,
    }
}

/// Everything the oracle knows about a small graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub alpha: usize,
    pub mis_count: usize,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub d: usize,
    pub max_critical: VertexSet,
    pub odd_cycles: OddCycleCount,
}

pub fn solve(g: &Graph, limit: usize) -> Result<OracleResult, OracleError> {
    if g.n() > limit.min(ORACLE_CAP) {
        return Err(OracleError::TooLarge {
            n: g.n(),
            cap: limit.min(ORACLE_CAP),
        });
    }
    let family = brute_all_mis(g, usize::MAX)?;
    let (core, corona) = brute_core_corona(g)?;
    let crit = brute_critical(g)?;
    Ok(OracleResult {
        alpha: family.alpha,
        mis_count: family.sets.len(),
        core,
        corona,
        d: crit.d,
        max_critical: crit.max_critical,
        odd_cycles: count_odd_cycles_exact(g, 3, CYCLE_BUDGET)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn mis_examples() {
        let f = brute_all_mis(&cycle(5), 100).unwrap();
        assert_eq!((f.alpha, f.sets.len()), (2, 5));
        let f = brute_all_mis(&complete(3), 100).unwrap();
        assert_eq!((f.alpha, f.sets.len()), (1, 3));
        let f = brute_all_mis(&diamond(), 100).unwrap();
        assert_eq!(f.sets, vec![VertexSet::from([0, 3])]);
        let f = brute_all_mis(&cycle(5), 2).unwrap();
        assert!(f.truncated && f.sets.len() == 2);
        assert_eq!(brute_alpha(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(brute_alpha(&petersen()).unwrap(), 4);
        assert!(brute_alpha(&Graph::empty(30)).is_err());
    }

    #[test]
    fn core_corona_examples() {
        let (c, k) = brute_core_corona(&path(3)).unwrap();
        assert_eq!((c, k), (VertexSet::from([0, 2]), VertexSet::from([0, 2])));
        let (c, k) = brute_core_corona(&cycle(5)).unwrap();
        assert!(c.is_empty() && k.len() == 5);
        let (c, k) = brute_core_corona(&bowtie()).unwrap();
        assert!(c.is_empty());
        assert_eq!(k, VertexSet::from([0, 1, 3, 4]));
        let (c, k) = brute_core_corona(&Graph::empty(0)).unwrap();
        assert!(c.is_empty() && k.is_empty());
    }

    #[test]
    fn critical_examples() {
        let f = brute_critical(&path(3)).unwrap();
        assert_eq!((f.d, f.max_critical.clone()), (1, VertexSet::from([0, 2])));
        assert_eq!(f.best_with[0], 1);
        let f = brute_critical(&cycle(5)).unwrap();
        assert_eq!(f.d, 0);
        assert!(f.max_critical.is_empty());
        assert!(f.is_2bicritical());
        let f = brute_critical(&Graph::empty(3)).unwrap();
        assert_eq!((f.d, f.max_critical), (3, VertexSet::full(3)));
        // C5 plus an edge 5-6: the critical sets are ∅, {5}, {6}
        let f = brute_critical(&cycle(5).disjoint_union(&path(2))).unwrap();
        assert_eq!(f.critical.len(), 3);
        assert_eq!(f.max_critical, VertexSet::from([5]));
        assert!(!brute_critical(&diamond()).unwrap().is_2bicritical());
    }

    #[test]
    fn odd_cycle_counts() {
        let c = count_odd_cycles_exact(&complete(4), 3, CYCLE_BUDGET).unwrap();
        assert!(c.at_cap && c.count == 3);
        let c = count_odd_cycles_exact(&theta(1, 2, 3), 3, CYCLE_BUDGET).unwrap();
        assert_eq!(c.count, 2);
        let mut lens: Vec<_> = c.cycles.iter().map(Cycle::len).collect();
        lens.sort();
        assert_eq!(lens, vec![3, 5]);
        assert_eq!(count_odd_cycles_exact(&cycle(6), 3, CYCLE_BUDGET).unwrap().count, 0);
        assert_eq!(count_odd_cycles_exact(&bowtie(), 3, CYCLE_BUDGET).unwrap().count, 2);
        assert_eq!(
            count_odd_cycles_exact(&complete(12), 1000, 10),
            Err(OracleError::BudgetExceeded)
        );
    }

    #[test]
    fn matching_number_examples() {
        assert_eq!(brute_matching_number(&cycle(5)).unwrap(), 2);
        assert_eq!(brute_matching_number(&petersen()).unwrap(), 5);
        assert_eq!(brute_matching_number(&star(3)).unwrap(), 1);
    }

    #[test]
    fn core_is_where_alpha_drops() {
        for g in [path(3), bowtie(), path2_triangles(), diamond(), theta(1, 2, 3)] {
            let (core, _) = brute_core_corona(&g).unwrap();
            let a = brute_alpha(&g).unwrap();
            let drops: VertexSet = g
                .vertices()
                .filter(|&v| brute_alpha(&g.delete_vertex(v).unwrap().0).unwrap() < a)
                .collect();
            assert_eq!(core, drops);
        }
    }
}
