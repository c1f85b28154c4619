//! Side-by-side comparison of the polynomial algorithms with the exact oracle.

use serde::Serialize;
use serde_json::{json, Value};

use corona_core::corecorona::{analyze, AnalysisError, CoreCoronaReport};
use corona_core::graph::{Graph, VertexSet};
use corona_core::larson::verify_decomposition;
use corona_core::matching::{matching_from_into, maximum_matching, FromInto};
use corona_core::oddcycles::{census, CycleKind};
use corona_core::oracle::{self, OracleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    /// Shown for information only; never fails a run.
    Reported,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    /// The statement this check exercises, used to group the self-test table.
    pub statement: &'static str,
    pub expected: Value,
    pub actual: Value,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub m: usize,
    pub checks: Vec<Check>,
    pub all_match: bool,
}

impl VerifyReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub oracle_limit: usize,
    pub promise_in_class: bool,
    /// Flip vertex 0 in the computed core before comparing. Exists to test
    /// the mismatch path.
    pub corrupt_core: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            oracle_limit: oracle::DEFAULT_ORACLE_LIMIT,
            promise_in_class: false,
            corrupt_core: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    Analysis(AnalysisError),
    Oracle(OracleError),
}

pub const ALPHA: &str = "α(G) is the size of a largest independent set";
pub const CORE: &str = "core(G) = {v : α(G - v) ≠ α(G)}";
pub const CORONA: &str = "corona(G) is the union of all maximum independent sets";
pub const CRITICAL: &str = "d(G) = n - μ(B(G)) and J is a maximum critical independent set";
pub const CENSUS: &str = "block census recognises at most two odd cycles";
pub const ADDITIVE: &str = "α(G) = α(G[L]) + α(G[Lc])";
pub const KE_PART: &str = "G[L] is König-Egerváry";
pub const L_FROM_J: &str = "L = J ∪ N(J)";
pub const BICRITICAL: &str = "G[Lc] is 2-bicritical";
pub const MATCHING_IDENTITY: &str =
    "α + μ = n - 1 on connected 2-bicritical pieces, n - 2 on disconnected ones";
pub const SUM: &str = "|core(G)| + |corona(G)| = 2α(G[L]) + |core(G[Lc])| + |corona(G[Lc])|";
pub const REDUCTION: &str = "core(G) ∩ Lc = core(G[Lc]) and corona(G) ∩ Lc = corona(G[Lc])";
pub const BOUND: &str = "2α ≤ |core| + |corona| ≤ 2α + 2";
pub const PREDICTION: &str = "|core| + |corona| - 2α follows from the odd cycles of G[Lc]";
pub const PARTITION: &str =
    "corona ∪ N(core) = V, disjointly, iff no two odd cycles of G[Lc] share exactly one vertex";
pub const KE_NEIGHBOURHOOD: &str = "N(core) = V - corona on König-Egerváry graphs";
pub const KE_MATCHING: &str = "a matching from V - corona into core exists on König-Egerváry graphs";
pub const EXTENSION: &str = "every critical independent set lies in a maximum independent set";
pub const DELETION: &str = "deleting a vertex lowers α by at most one";

/// Every statement in the order the self-test prints them.
pub const STATEMENTS: [&str; 19] = [
    ALPHA,
    CORE,
    CORONA,
    CRITICAL,
    CENSUS,
    ADDITIVE,
    KE_PART,
    L_FROM_J,
    BICRITICAL,
    MATCHING_IDENTITY,
    SUM,
    REDUCTION,
    BOUND,
    PREDICTION,
    PARTITION,
    KE_NEIGHBOURHOOD,
    KE_MATCHING,
    EXTENSION,
    DELETION,
];

struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: Serialize + PartialEq>(&mut self, name: &'static str, statement: &'static str, expected: T, actual: T) {
        let status = if expected == actual {
            Status::Match
        } else {
            Status::Mismatch
        };
        self.push(name, statement, json!(expected), json!(actual), status);
    }

    fn holds(&mut self, name: &'static str, statement: &'static str, ok: bool) {
        self.eq(name, statement, true, ok);
    }

    fn push(&mut self, name: &'static str, statement: &'static str, expected: Value, actual: Value, status: Status) {
        self.0.push(Check {
            name,
            statement,
            expected,
            actual,
            status,
        });
    }
}

fn alpha(g: &Graph) -> Result<usize, VerifyError> {
    oracle::brute_alpha(g).map_err(VerifyError::Oracle)
}

fn core_corona(g: &Graph) -> Result<(VertexSet, VertexSet), VerifyError> {
    oracle::brute_core_corona(g).map_err(VerifyError::Oracle)
}

/// Runs `analyze` and the oracle on `g` and compares every quantity they
/// both produce, plus the structural statements the oracle can confirm.
pub fn verify_graph(g: &Graph, opts: &VerifyOptions) -> Result<VerifyReport, VerifyError> {
    let limit = opts.oracle_limit.min(oracle::ORACLE_CAP);
    if g.n() > limit {
        return Err(VerifyError::Oracle(OracleError::TooLarge { n: g.n(), cap: limit }));
    }
    let mut report = analyze(g, opts.promise_in_class).map_err(VerifyError::Analysis)?;
    if opts.corrupt_core && g.n() > 0 {
        let flip = VertexSet::from([0]);
        report.core = if report.core.contains(0) {
            report.core.difference(&flip)
        } else {
            report.core.union(&flip)
        };
    }
    let checks = compare(g, &report, limit)?;
    let all_match = checks.iter().all(|c| c.status != Status::Mismatch);
    Ok(VerifyReport {
        n: g.n(),
        m: g.m(),
        checks,
        all_match,
    })
}

fn compare(g: &Graph, r: &CoreCoronaReport, limit: usize) -> Result<Vec<Check>, VerifyError> {
    let mut c = Checks(Vec::new());
    let n = g.n();
    let a = alpha(g)?;
    let (core, corona) = core_corona(g)?;
    let crit = oracle::brute_critical(g).map_err(VerifyError::Oracle)?;

    c.eq("alpha", ALPHA, a, r.alpha);
    c.eq("core", CORE, &core, &r.core);
    c.eq("corona", CORONA, &corona, &r.corona);
    c.eq("d", CRITICAL, crit.d, r.d);
    c.eq("max_critical_size", CRITICAL, crit.max_critical.len(), r.j.len());

    match oracle::count_odd_cycles_exact(g, 3, oracle::CYCLE_BUDGET) {
        Ok(count) => c.eq(
            "census_kind",
            CENSUS,
            oracle::kind_from_cycles(&count),
            census(g).kind,
        ),
        Err(e) => c.push(
            "census_kind",
            CENSUS,
            json!(e.to_string()),
            json!(census(g).kind),
            Status::Reported,
        ),
    }

    let dec = r.decomposition();
    let items = verify_decomposition(g, &dec, limit);
    for (item, (name, statement)) in items.items.iter().zip([
        ("additivity", ADDITIVE),
        ("l_is_ke", KE_PART),
        ("l_from_j", L_FROM_J),
        ("lc_bicritical", BICRITICAL),
    ]) {
        c.holds(name, statement, item.passed);
    }

    let (gl, _) = g.induced_subgraph(&dec.l).expect("L is a vertex set of g");
    let (glc, lc_map) = g.induced_subgraph(&dec.lc).expect("Lc is a vertex set of g");
    if glc.n() > 0 {
        let comps = glc.connected_components().len();
        c.eq(
            "lc_alpha_plus_mu",
            MATCHING_IDENTITY,
            glc.n() - comps,
            alpha(&glc)? + maximum_matching(&glc).size(),
        );
    }

    let observed = (core.len() + corona.len()) as i64 - 2 * a as i64;
    let (lc_core, lc_corona) = core_corona(&glc)?;
    c.eq(
        "sum_split",
        SUM,
        core.len() + corona.len(),
        2 * alpha(&gl)? + lc_core.len() + lc_corona.len(),
    );
    c.eq("core_reduction", REDUCTION, lc_map.lift(&lc_core), core.intersection(&dec.lc));
    c.eq(
        "corona_reduction",
        REDUCTION,
        lc_map.lift(&lc_corona),
        corona.intersection(&dec.lc),
    );
    c.holds("sum_bound", BOUND, (0..=2).contains(&observed));
    c.eq("k_observed", BOUND, observed, r.k_observed);
    if r.k_unresolved {
        c.push(
            "k_predicted",
            PREDICTION,
            json!(observed),
            json!(r.k_predicted),
            Status::Reported,
        );
    } else {
        c.eq("k_predicted", PREDICTION, observed, r.k_predicted as i64);
    }

    let near = g.neighborhood(&core);
    let partition = corona.union(&near).len() == n && corona.is_disjoint(&near);
    c.eq("partition_holds", PARTITION, partition, r.partition_holds);
    c.eq(
        "partition_vs_shape",
        PARTITION,
        r.profile.kind != CycleKind::TwoSharingVertex,
        partition,
    );

    if dec.lc.is_empty() {
        c.eq("ke_neighbourhood", KE_NEIGHBOURHOOD, corona.complement(n), near);
        let outside = corona.complement(n);
        let saturating = matches!(
            matching_from_into(g, &outside, &core),
            Ok(FromInto::Saturating(_))
        );
        c.holds("ke_matching", KE_MATCHING, saturating);
    }

    let closed = r.j.union(&g.neighborhood(&r.j));
    let (rest, _) = g.delete_vertices(&closed).expect("valid set");
    c.eq("critical_extension", EXTENSION, a, r.j.len() + alpha(&rest)?);

    let mut gaps_ok = true;
    for v in g.vertices() {
        let (h, _) = g.delete_vertex(v).expect("valid vertex");
        let drop = a - alpha(&h)?;
        gaps_ok &= drop <= 1;
    }
    c.holds("alpha_deletion_gap", DELETION, gaps_ok);
    Ok(c.0)
}
