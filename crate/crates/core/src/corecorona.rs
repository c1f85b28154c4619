//! Independence number, core and corona for graphs with at most two odd
//! cycles, and the report tying them to the decomposition and cycle shape.
//!
//! `α(G) = α(G[L]) + α(G[Lc])`. The first term is `|L| - μ(G[L])`, which is
//! `|J|`; every component of the 2-bicritical part `G[Lc]` with at most two
//! odd cycles has `α + μ = n - 1`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Cycle, Graph, GraphError, Vertex, VertexSet};
use crate::larson::{self, LarsonDecomposition};
use crate::matching::maximum_matching;
use crate::oddcycles::{census, CycleKind, OddCycleProfile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("out_of_class: the graph has three or more odd cycles")]
    OutOfClass,
    #[error("out_of_class: G[Lc] has three or more odd cycles")]
    LcOutOfClass,
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn require_in_class(g: &Graph) -> Result<(), AnalysisError> {
    if census(g).kind == CycleKind::OutOfClass {
        Err(AnalysisError::OutOfClass)
    } else {
        Ok(())
    }
}

/// `|J| + |Lc| - (components of G[Lc]) - μ(G[Lc])`.
fn alpha_from_split(g: &Graph, split: &larson::Split) -> usize {
    let outside: Vec<bool> = split.in_l.iter().map(|&b| !b).collect();
    let size = outside.iter().filter(|&&b| b).count();
    if size == 0 {
        return split.j_size;
    }
    let (h, _) = g.induced_by_mask(&outside);
    let (_, comps) = h.component_labels();
    split.j_size + size - comps - maximum_matching(&h).size()
}

fn alpha_unchecked(g: &Graph) -> usize {
    alpha_from_split(g, &larson::split(g, false))
}

/// `α(G)` for a graph with at most two odd cycles.
pub fn independence_number(g: &Graph) -> Result<usize, AnalysisError> {
    require_in_class(g)?;
    Ok(alpha_unchecked(g))
}

/// `α(G)` by the same formula, trusting the caller that `g` is in class.
pub fn independence_number_promised(g: &Graph) -> usize {
    alpha_unchecked(g)
}

/// `α(G)` whenever `G[Lc]` has at most two odd cycles, whatever happens
/// inside `L`.
pub fn independence_number_extended(g: &Graph) -> Result<usize, AnalysisError> {
    let split = larson::split(g, false);
    let outside: Vec<bool> = split.in_l.iter().map(|&b| !b).collect();
    let (h, _) = g.induced_by_mask(&outside);
    if census(&h).kind == CycleKind::OutOfClass {
        return Err(AnalysisError::LcOutOfClass);
    }
    Ok(alpha_from_split(g, &split))
}

fn core_unchecked(g: &Graph, alpha: usize) -> VertexSet {
    let mut keep = vec![true; g.n()];
    let mut core = Vec::new();
    for v in g.vertices() {
        keep[v] = false;
        let (h, _) = g.induced_by_mask(&keep);
        keep[v] = true;
        if alpha_unchecked(&h) != alpha {
            core.push(v);
        }
    }
    VertexSet::from(core)
}

/// Vertices whose deletion lowers `α`.
pub fn core(g: &Graph) -> Result<VertexSet, AnalysisError> {
    require_in_class(g)?;
    Ok(core_unchecked(g, alpha_unchecked(g)))
}

fn lc_profile(g: &Graph, dec: &LarsonDecomposition) -> OddCycleProfile {
    let (h, map) = g.induced_subgraph(&dec.lc).expect("Lc is a vertex set of g");
    let local = census(&h);
    OddCycleProfile {
        kind: local.kind,
        witnesses: local.witnesses.iter().map(|c| c.map(|v| map.to_host(v))).collect(),
        intersection: map.lift(&local.intersection),
        cut_vertex: local.cut_vertex.map(|v| map.to_host(v)),
        connected: local.connected,
    }
}

/// `V - N(core)`, except that when the two odd cycles of `G[Lc]` meet in a
/// single vertex `x`, `x` lies in no maximum independent set although it is
/// not adjacent to the core.
fn corona_from(
    g: &Graph,
    alpha: usize,
    core: &VertexSet,
    lc_profile: &OddCycleProfile,
) -> Result<VertexSet, AnalysisError> {
    let mut excluded = g.neighborhood(core);
    if let (CycleKind::TwoSharingVertex, Some(x)) = (lc_profile.kind, lc_profile.cut_vertex) {
        let (h, _) = g.delete_vertex(x)?;
        if !h.is_bipartite() {
            return Err(AnalysisError::ContractViolation(format!(
                "G - {x} is not bipartite"
            )));
        }
        let a = alpha_unchecked(&h);
        if a != alpha {
            return Err(AnalysisError::ContractViolation(format!(
                "α(G - {x}) = {a} but α(G) = {alpha}"
            )));
        }
        excluded = excluded.union(&VertexSet::from([x]));
    }
    Ok(excluded.complement(g.n()))
}

/// Union of all maximum independent sets.
pub fn corona(g: &Graph) -> Result<VertexSet, AnalysisError> {
    require_in_class(g)?;
    let alpha = alpha_unchecked(g);
    let core = core_unchecked(g, alpha);
    let dec = larson::larson_decomposition(g);
    corona_from(g, alpha, &core, &lc_profile(g, &dec))
}

/// Predicted `|core| + |corona| - 2α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SumPrediction {
    pub k: u8,
    /// Two disjoint odd cycles in a connected `G[Lc]`: the prediction is
    /// reported but not reliable.
    pub unresolved: bool,
}

fn predict(lc_empty: bool, profile: &OddCycleProfile) -> Result<SumPrediction, AnalysisError> {
    let (k, unresolved) = if lc_empty {
        (0, false)
    } else {
        match profile.kind {
            CycleKind::OneOddCycle | CycleKind::TwoSharingPath => (1, false),
            CycleKind::TwoSharingVertex => (0, false),
            CycleKind::TwoDisjoint if !profile.connected => (2, false),
            CycleKind::TwoDisjoint => (0, true),
            CycleKind::OutOfClass => return Err(AnalysisError::LcOutOfClass),
            CycleKind::Bipartite => {
                return Err(AnalysisError::ContractViolation(
                    "G[Lc] is nonempty and bipartite".into(),
                ))
            }
        }
    };
    Ok(SumPrediction { k, unresolved })
}

pub fn classify_sum(g: &Graph) -> Result<SumPrediction, AnalysisError> {
    let dec = larson::larson_decomposition(g);
    predict(dec.lc.is_empty(), &lc_profile(g, &dec))
}

/// Outcome of testing `corona ∪ N(core) = V` as a disjoint union.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCheck {
    pub holds: bool,
    /// Vertices in neither set.
    pub uncovered: VertexSet,
    /// Vertices in both sets.
    pub overlap: VertexSet,
    /// Whether `holds` matches the absence of two odd cycles sharing exactly
    /// one vertex in `G[Lc]`.
    pub matches_census: bool,
}

fn partition_of(g: &Graph, core: &VertexSet, corona: &VertexSet, lc_kind: CycleKind) -> PartitionCheck {
    let near = g.neighborhood(core);
    let uncovered = corona.union(&near).complement(g.n());
    let overlap = corona.intersection(&near);
    let holds = uncovered.is_empty() && overlap.is_empty();
    PartitionCheck {
        holds,
        uncovered,
        overlap,
        matches_census: holds == (lc_kind != CycleKind::TwoSharingVertex),
    }
}

pub fn partition_check(g: &Graph) -> Result<PartitionCheck, AnalysisError> {
    let report = analyze(g, false)?;
    Ok(partition_of(
        g,
        &report.core,
        &report.corona,
        report.profile.kind,
    ))
}

/// Odd-cycle shape of `G[Lc]` in host vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileSummary {
    pub kind: CycleKind,
    pub cycles: Vec<Cycle>,
    pub intersection: VertexSet,
    pub cut_vertex: Option<Vertex>,
}

/// Everything `analyze` computes. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreCoronaReport {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub k_observed: i64,
    pub k_predicted: u8,
    pub k_unresolved: bool,
    pub partition_holds: bool,
    #[serde(rename = "L")]
    pub l: VertexSet,
    #[serde(rename = "Lc")]
    pub lc: VertexSet,
    #[serde(rename = "J")]
    pub j: VertexSet,
    pub d: usize,
    pub profile: ProfileSummary,
}

impl CoreCoronaReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn decomposition(&self) -> LarsonDecomposition {
        LarsonDecomposition {
            l: self.l.clone(),
            lc: self.lc.clone(),
            j: self.j.clone(),
            d: self.d,
        }
    }
}

/// Full analysis. Without `promise_in_class`, graphs with three or more odd
/// cycles are rejected.
pub fn analyze(g: &Graph, promise_in_class: bool) -> Result<CoreCoronaReport, AnalysisError> {
    if !promise_in_class {
        require_in_class(g)?;
    }
    let dec = larson::larson_decomposition(g);
    let profile = lc_profile(g, &dec);
    let alpha = alpha_unchecked(g);
    let core = core_unchecked(g, alpha);
    let corona = corona_from(g, alpha, &core, &profile)?;
    let prediction = predict(dec.lc.is_empty(), &profile)?;
    let partition = partition_of(g, &core, &corona, profile.kind);
    Ok(CoreCoronaReport {
        n: g.n(),
        m: g.m(),
        alpha,
        mu: maximum_matching(g).size(),
        k_observed: (core.len() + corona.len()) as i64 - 2 * alpha as i64,
        core,
        corona,
        k_predicted: prediction.k,
        k_unresolved: prediction.unresolved,
        partition_holds: partition.holds,
        l: dec.l,
        lc: dec.lc,
        j: dec.j,
        d: dec.d,
        profile: ProfileSummary {
            kind: profile.kind,
            cycles: profile.witnesses,
            intersection: profile.intersection,
            cut_vertex: profile.cut_vertex,
        },
    })
}
