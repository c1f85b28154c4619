//! Critical independent sets and the split `V = L ∪ Lc`, where `L = J ∪ N(J)`
//! for a maximum critical independent set `J`, `G[L]` is König–Egerváry and
//! `G[Lc]` is 2-bicritical.
//!
//! Everything here comes from one maximum matching of the bipartite double
//! cover. Reading the matching as a partial map `σ` (left copy of `u` to the
//! right copy of `σ(u)`):
//!
//! * vertices reachable from unmatched left copies by alternating paths form
//!   the intersection `K` of all maximum critical sets; `K ∪ N(K)` lies in `L`;
//! * on the remaining vertices `W`, `σ` is a permutation. Odd permutation
//!   cycles never meet `L`; even ones are cut into pairs, and a pair member
//!   `u` may join `J` unless choosing it forces, through the implications
//!   "`a` in `J`, `x ∈ N(a)` ⇒ the partner of `x` in `J`", either a vertex of
//!   an odd cycle or the partner of `u` itself.
//!
//! The implications are skew-symmetric under the pairing, so they behave like
//! a 2-SAT implication graph: `u` is blocked exactly when it implies its own
//! partner.

use serde::Serialize;

use crate::corecorona;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::matching::{hopcroft_karp, maximum_matching};
use crate::oracle;

const NONE: usize = usize::MAX;

/// The split `V = L ∪ Lc` with its witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LarsonDecomposition {
    #[serde(rename = "L")]
    pub l: VertexSet,
    #[serde(rename = "Lc")]
    pub lc: VertexSet,
    /// A maximum critical independent set with `L = J ∪ N(J)`.
    #[serde(rename = "J")]
    pub j: VertexSet,
    /// Critical difference `max |I| - |N(I)|` over independent `I`.
    pub d: usize,
}

/// Raw output of [`split`], kept as masks for the hot path in `core`.
pub(crate) struct Split {
    pub d: usize,
    pub in_l: Vec<bool>,
    /// `|J|`, which is also `α(G[L])`.
    pub j_size: usize,
    /// Membership in `J`; empty unless requested.
    pub in_j: Vec<bool>,
}

pub(crate) fn split(g: &Graph, with_j: bool) -> Split {
    let n = g.n();
    let adj = g.adjacency();
    let (sigma, sigma_inv) = hopcroft_karp(adj, n);
    let d = sigma.iter().filter(|&&r| r == NONE).count();

    // K: alternating reach from the unmatched left copies
    let mut in_k = vec![false; n];
    let mut stack: Vec<Vertex> = (0..n).filter(|&u| sigma[u] == NONE).collect();
    for &u in &stack {
        in_k[u] = true;
    }
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            let w = sigma_inv[v];
            if w != NONE && !in_k[w] {
                in_k[w] = true;
                stack.push(w);
            }
        }
    }
    let mut near_k = vec![false; n];
    for u in (0..n).filter(|&u| in_k[u]) {
        for &v in &adj[u] {
            near_k[v] = true;
        }
    }
    let in_w: Vec<bool> = (0..n).map(|v| !in_k[v] && !near_k[v]).collect();

    // permutation cycles of σ on W
    let mut odd = vec![false; n];
    let mut twin = vec![NONE; n];
    let mut seen = vec![false; n];
    let mut cyc = Vec::new();
    for s in 0..n {
        if !in_w[s] || seen[s] {
            continue;
        }
        cyc.clear();
        let mut x = s;
        loop {
            debug_assert!(in_w[x], "σ leaves W at {x}");
            seen[x] = true;
            cyc.push(x);
            x = sigma[x];
            if x == s {
                break;
            }
        }
        if cyc.len() % 2 == 1 {
            for &x in &cyc {
                odd[x] = true;
            }
        } else {
            for p in cyc.chunks(2) {
                twin[p[0]] = p[1];
                twin[p[1]] = p[0];
            }
        }
    }

    let good = good_literals(adj, &in_w, &odd, &twin);

    let mut in_l: Vec<bool> = (0..n).map(|v| !in_w[v]).collect();
    let mut pairs = 0;
    for u in 0..n {
        if twin[u] != NONE && (good[u] || good[twin[u]]) {
            in_l[u] = true;
            if u < twin[u] {
                pairs += 1;
            }
        }
    }
    let k_size = in_k.iter().filter(|&&b| b).count();

    let in_j = if with_j {
        choose_j(adj, &in_w, &twin, &good, in_k)
    } else {
        Vec::new()
    };
    Split {
        d,
        in_l,
        j_size: k_size + pairs,
        in_j,
    }
}

/// Successors of `a` in the implication graph, or `None` if `a` forces an
/// odd-cycle vertex.
fn for_each_implied(
    adj: &[Vec<Vertex>],
    in_w: &[bool],
    odd: &[bool],
    twin: &[usize],
    a: Vertex,
    mut f: impl FnMut(Vertex) -> bool,
) -> bool {
    for &x in &adj[a] {
        if !in_w[x] {
            continue;
        }
        if odd[x] || !f(twin[x]) {
            return false;
        }
    }
    true
}

/// Pair members that do not imply their own partner.
fn good_literals(adj: &[Vec<Vertex>], in_w: &[bool], odd: &[bool], twin: &[usize]) -> Vec<bool> {
    let n = adj.len();
    // 0 unknown, 1 good, 2 bad
    let mut status = vec![0u8; n];
    let mut stamp = vec![0u32; n];
    let mut clock = 0u32;
    let mut order = Vec::new();
    for u in 0..n {
        if twin[u] == NONE || status[u] != 0 {
            continue;
        }
        clock += 1;
        order.clear();
        order.push(u);
        stamp[u] = clock;
        let target = twin[u];
        let mut head = 0;
        let mut consistent = true;
        while head < order.len() && consistent {
            let a = order[head];
            head += 1;
            consistent = for_each_implied(adj, in_w, odd, twin, a, |b| {
                if b == target || status[b] == 2 {
                    return false;
                }
                if stamp[b] != clock {
                    stamp[b] = clock;
                    order.push(b);
                }
                true
            });
        }
        if consistent {
            for &b in &order {
                status[b] = 1;
            }
            continue;
        }
        // everything implying u is blocked as well
        status[u] = 2;
        let mut back = vec![u];
        while let Some(b) = back.pop() {
            for &a in &adj[twin[b]] {
                if in_w[a] && !odd[a] && status[a] != 2 {
                    status[a] = 2;
                    back.push(a);
                }
            }
        }
    }
    status.iter().map(|&s| s == 1).collect()
}

/// Picks one member of every pair that has a good member, closing each pick
/// under the implications. Ascending scan, so the result is deterministic.
fn choose_j(
    adj: &[Vec<Vertex>],
    in_w: &[bool],
    twin: &[usize],
    good: &[bool],
    mut in_j: Vec<bool>,
) -> Vec<bool> {
    let n = adj.len();
    let mut decided = vec![false; n];
    let mut stack = Vec::new();
    for u in 0..n {
        if twin[u] == NONE || decided[u] {
            continue;
        }
        let pick = if good[u] {
            u
        } else if good[twin[u]] {
            twin[u]
        } else {
            continue;
        };
        stack.push(pick);
        in_j[pick] = true;
        decided[pick] = true;
        decided[twin[pick]] = true;
        while let Some(a) = stack.pop() {
            for &x in &adj[a] {
                if !in_w[x] {
                    continue;
                }
                let b = twin[x];
                debug_assert!(b != NONE && !in_j[x], "closure of a good vertex is consistent");
                if !in_j[b] {
                    in_j[b] = true;
                    decided[b] = true;
                    decided[x] = true;
                    stack.push(b);
                }
            }
        }
    }
    in_j
}

/// `d(G) = max |I| - |N(I)|`, via `n - μ(B(G))`.
pub fn critical_difference(g: &Graph) -> usize {
    let (sigma, _) = hopcroft_karp(g.adjacency(), g.n());
    sigma.iter().filter(|&&r| r == NONE).count()
}

/// Maximum of `|I| - |N(I)|` over independent sets containing `v`, which is
/// `1 - deg(v) + d(G - N[v])`.
pub fn critical_difference_with(g: &Graph, v: Vertex) -> Result<isize, crate::graph::GraphError> {
    g.check_vertex(v)?;
    let closed = g.closed_neighborhood(&VertexSet::from([v]));
    let (rest, _) = g.delete_vertices(&closed)?;
    Ok(1 - g.degree(v) as isize + critical_difference(&rest) as isize)
}

/// Every nonempty independent set `S` has `|N(S)| > |S|`.
pub fn is_2bicritical(g: &Graph) -> bool {
    g.vertices()
        .all(|v| critical_difference_with(g, v).expect("valid vertex") <= -1)
}

pub fn max_critical_independent_set(g: &Graph) -> VertexSet {
    VertexSet::from_mask(&split(g, true).in_j)
}

pub fn larson_decomposition(g: &Graph) -> LarsonDecomposition {
    let s = split(g, true);
    let l = VertexSet::from_mask(&s.in_l);
    LarsonDecomposition {
        lc: l.complement(g.n()),
        l,
        j: VertexSet::from_mask(&s.in_j),
        d: s.d,
    }
}

/// One line of [`verify_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub item: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub items: Vec<CheckItem>,
}

impl DecompositionReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

/// Rechecks the four defining properties of a decomposition:
/// (a) `α(G) = α(G[L]) + α(G[Lc])`, (b) `G[L]` is König–Egerváry,
/// (c) `L = J ∪ N(J)` with `J` independent and `|J| - |N(J)| = d`,
/// (d) `G[Lc]` is 2-bicritical.
///
/// Independence numbers come from the exact solver up to `oracle_limit`
/// vertices and from the decomposition formula above it.
pub fn verify_decomposition(
    g: &Graph,
    dec: &LarsonDecomposition,
    oracle_limit: usize,
) -> DecompositionReport {
    let mut items = Vec::new();
    let valid = g.check_set(&dec.l).is_ok()
        && g.check_set(&dec.lc).is_ok()
        && dec.l.is_disjoint(&dec.lc)
        && dec.l.len() + dec.lc.len() == g.n();
    if !valid {
        items.push(CheckItem {
            item: "partition",
            passed: false,
            detail: "L and Lc do not partition the vertex set".into(),
        });
        return DecompositionReport { items };
    }
    let (gl, _) = g.induced_subgraph(&dec.l).expect("checked");
    let (glc, _) = g.induced_subgraph(&dec.lc).expect("checked");
    let alpha = |h: &Graph| -> Option<usize> {
        if h.n() <= oracle_limit {
            oracle::brute_alpha(h).ok()
        } else {
            corecorona::independence_number_extended(h).ok()
        }
    };

    let (a, al, alc) = (alpha(g), alpha(&gl), alpha(&glc));
    items.push(CheckItem {
        item: "(a) additivity",
        passed: matches!((a, al, alc), (Some(x), Some(y), Some(z)) if x == y + z),
        detail: format!("α(G)={a:?} α(G[L])={al:?} α(G[Lc])={alc:?}"),
    });

    let mu_l = maximum_matching(&gl).size();
    let j_inside = dec.j.is_subset(&dec.l) && g.is_independent(&dec.j);
    // an independent J ⊆ L with |J| + μ(G[L]) = |L| certifies α(G[L]) + μ(G[L]) = |L|
    items.push(CheckItem {
        item: "(b) G[L] König-Egerváry",
        passed: j_inside && dec.j.len() + mu_l == dec.l.len(),
        detail: format!("|L|={} μ(G[L])={mu_l} |J|={}", dec.l.len(), dec.j.len()),
    });

    let nj = g.neighborhood(&dec.j);
    let closed = dec.j.union(&nj);
    let diff = dec.j.len() as isize - nj.len() as isize;
    items.push(CheckItem {
        item: "(c) L = J ∪ N(J)",
        passed: g.is_independent(&dec.j) && closed == dec.l && diff == dec.d as isize,
        detail: format!("|J|-|N(J)|={diff} d={}", dec.d),
    });

    items.push(CheckItem {
        item: "(d) G[Lc] 2-bicritical",
        passed: is_2bicritical(&glc),
        detail: format!("|Lc|={}", dec.lc.len()),
    });
    DecompositionReport { items }
}
