//! Fixed suite of small named graphs run through `verify`.

use std::time::Instant;

use serde::Serialize;

use corona_core::graph::named::*;
use corona_core::graph::Graph;

use crate::verify::{verify_graph, Status, VerifyOptions, STATEMENTS};

pub fn suite() -> Vec<(&'static str, Graph)> {
    vec![
        ("empty", Graph::empty(0)),
        ("C5", cycle(5)),
        ("K3", complete(3)),
        ("P3", path(3)),
        ("P4", path(4)),
        ("C4", cycle(4)),
        ("diamond", diamond()),
        ("K1,3", star(3)),
        ("bowtie", bowtie()),
        ("theta(1,2,3)", theta(1, 2, 3)),
        ("two triangles", two_triangles()),
        ("bridged triangles", bridged_triangles()),
        ("path-2 triangles", path2_triangles()),
        ("C5+K2", c5_plus_edge()),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceRow {
    pub name: &'static str,
    pub n: usize,
    pub all_match: bool,
    pub under_1s: bool,
    /// Checks reported without being asserted.
    pub reported: Vec<&'static str>,
    #[serde(skip)]
    pub millis: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct StatementRow {
    pub statement: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub reported: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelfTest {
    pub instances: Vec<InstanceRow>,
    pub statements: Vec<StatementRow>,
    pub passed: bool,
}

pub fn run() -> SelfTest {
    let mut instances = Vec::new();
    let mut statements: Vec<StatementRow> = STATEMENTS
        .iter()
        .map(|&statement| StatementRow {
            statement,
            checked: 0,
            failed: 0,
            reported: 0,
        })
        .collect();
    for (name, g) in suite() {
        let start = Instant::now();
        let result = verify_graph(&g, &VerifyOptions::default());
        let millis = start.elapsed().as_secs_f64() * 1e3;
        let (all_match, reported) = match &result {
            Ok(r) => {
                for check in &r.checks {
                    let row = statements
                        .iter_mut()
                        .find(|s| s.statement == check.statement)
                        .expect("every check names a listed statement");
                    row.checked += 1;
                    match check.status {
                        Status::Match => {}
                        Status::Mismatch => row.failed += 1,
                        Status::Reported => row.reported += 1,
                    }
                }
                let reported = r
                    .checks
                    .iter()
                    .filter(|c| c.status == Status::Reported)
                    .map(|c| c.name)
                    .collect();
                (r.all_match, reported)
            }
            Err(_) => (false, Vec::new()),
        };
        instances.push(InstanceRow {
            name,
            n: g.n(),
            all_match,
            under_1s: millis < 1000.0,
            reported,
            millis,
        });
    }
    let passed = instances.iter().all(|i| i.all_match && i.under_1s)
        && statements.iter().all(|s| s.failed == 0);
    SelfTest {
        instances,
        statements,
        passed,
    }
}

impl SelfTest {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("instance              n  result  time\n");
        for i in &self.instances {
            let result = if i.all_match { "pass" } else { "FAIL" };
            let note = if i.reported.is_empty() {
                String::new()
            } else {
                format!("  (reported only: {})", i.reported.join(", "))
            };
            out.push_str(&format!(
                "{:<20} {:>2}  {:<6}  {:>7.2} ms{}\n",
                i.name, i.n, result, i.millis, note
            ));
        }
        out.push_str("\nstatement                                                                     checks  result\n");
        for s in &self.statements {
            let result = if s.failed > 0 {
                "FAIL".to_string()
            } else if s.reported > 0 {
                format!("pass ({} reported only)", s.reported)
            } else {
                "pass".to_string()
            };
            out.push_str(&format!("{:<78} {:>6}  {}\n", s.statement, s.checked, result));
        }
        out.push_str(if self.passed { "\nself-test passed\n" } else { "\nself-test FAILED\n" });
        out
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn fresh_build_passes() {
        let report = super::run();
        assert!(report.passed, "{}", report.render_text());
        let empty = &report.instances[0];
        assert_eq!((empty.name, empty.n), ("empty", 0));
        let bridged = report.instances.iter().find(|i| i.name == "bridged triangles").unwrap();
        assert_eq!(bridged.reported, vec!["k_predicted"]);
    }
}
