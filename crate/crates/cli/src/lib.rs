//! The `corona` command line: analyze, verify, gen and selftest.

pub mod selftest;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use corona_core::corecorona::{analyze, AnalysisError, CoreCoronaReport};
use corona_core::graph::io::{self, Format};
use corona_core::graph::Graph;
use corona_core::oracle::{self, GenParams, OracleError, Pattern};

use verify::{verify_graph, Status, VerifyError, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OUT_OF_CLASS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "corona", version, about = "α, core and corona of graphs with at most two odd cycles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Dimacs,
    Json,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Edgelist => Format::EdgeList,
            InputFormat::Dimacs => Format::Dimacs,
            InputFormat::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute α, μ, core, corona and the decomposition of a graph.
    Analyze {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
        #[arg(long, value_enum, default_value = "json")]
        out: Output,
        /// Skip the odd-cycle check and trust that the graph is in class.
        #[arg(long)]
        promise_in_class: bool,
    },
    /// Compare every computed quantity with the exact oracle.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
        #[arg(long, value_enum, default_value = "json")]
        out: Output,
        #[arg(long)]
        promise_in_class: bool,
        /// Largest graph handed to the oracle (at most 25).
        #[arg(long, default_value_t = oracle::DEFAULT_ORACLE_LIMIT as u64,
              value_parser = clap::value_parser!(u64).range(0..=oracle::ORACLE_CAP as u64))]
        oracle_limit: u64,
        #[arg(long, hide = true)]
        corrupt_core: bool,
    },
    /// Generate a seeded instance.
    Gen {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.2)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: InputFormat,
    },
    /// Run the built-in suite of named graphs through verify.
    Selftest {
        #[arg(long, value_enum, default_value = "text")]
        out: Output,
    },
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, kind: &str, message: String) -> Self {
        Self {
            code,
            stdout: format!("{}\n", json!({ "error": kind, "message": message })),
            stderr: format!("corona: {message}\n"),
        }
    }
}

fn load(path: &PathBuf, format: InputFormat) -> Result<Graph, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Outcome::error(EXIT_INPUT, "io_error", format!("{}: {e}", path.display()))
    })?;
    io::parse(&text, format.into())
        .map_err(|e| Outcome::error(EXIT_INPUT, "parse_error", format!("{}: {e}", path.display())))
}

fn analysis_failure(e: AnalysisError) -> Outcome {
    match e {
        AnalysisError::OutOfClass | AnalysisError::LcOutOfClass => {
            Outcome::error(EXIT_OUT_OF_CLASS, "out_of_class", e.to_string())
        }
        AnalysisError::ContractViolation(_) => {
            Outcome::error(EXIT_MISMATCH, "contract_violation", e.to_string())
        }
        AnalysisError::Graph(_) => Outcome::error(EXIT_INPUT, "invalid_graph", e.to_string()),
    }
}

pub fn render_report_text(r: &CoreCoronaReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("n = {}, m = {}\n", r.n, r.m));
    out.push_str(&format!("alpha = {}, mu = {}, d = {}\n", r.alpha, r.mu, r.d));
    out.push_str(&format!("core   = {}\n", r.core));
    out.push_str(&format!("corona = {}\n", r.corona));
    let unresolved = if r.k_unresolved { " (unresolved)" } else { "" };
    out.push_str(&format!(
        "|core| + |corona| - 2 alpha = {}, predicted {}{}\n",
        r.k_observed, r.k_predicted, unresolved
    ));
    out.push_str(&format!("partition corona + N(core) = V: {}\n", r.partition_holds));
    out.push_str(&format!("L  = {}\nLc = {}\nJ  = {}\n", r.l, r.lc, r.j));
    out.push_str(&format!("odd cycles of G[Lc]: {}", r.profile.kind));
    if let Some(x) = r.profile.cut_vertex {
        out.push_str(&format!(", shared vertex {x}"));
    }
    out.push('\n');
    for c in &r.profile.cycles {
        out.push_str(&format!("  cycle {:?}\n", c.vertices()));
    }
    out
}

fn render_verify_text(r: &verify::VerifyReport) -> String {
    let mut out = format!("n = {}, m = {}\n", r.n, r.m);
    for c in &r.checks {
        let status = match c.status {
            Status::Match => "ok",
            Status::Mismatch => "MISMATCH",
            Status::Reported => "reported",
        };
        out.push_str(&format!(
            "{:<20} {:<9} oracle {} / computed {}\n",
            c.name, status, c.expected, c.actual
        ));
    }
    out.push_str(if r.all_match { "all match\n" } else { "mismatches found\n" });
    out
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Analyze {
            input,
            format,
            out,
            promise_in_class,
        } => {
            let g = match load(&input, format) {
                Ok(g) => g,
                Err(o) => return o,
            };
            match analyze(&g, promise_in_class) {
                Ok(r) => Outcome::ok(match out {
                    Output::Json => format!("{}\n", r.to_json()),
                    Output::Text => render_report_text(&r),
                }),
                Err(e) => analysis_failure(e),
            }
        }
        Command::Verify {
            input,
            format,
            out,
            promise_in_class,
            oracle_limit,
            corrupt_core,
        } => {
            let g = match load(&input, format) {
                Ok(g) => g,
                Err(o) => return o,
            };
            let opts = VerifyOptions {
                oracle_limit: oracle_limit as usize,
                promise_in_class,
                corrupt_core,
            };
            match verify_graph(&g, &opts) {
                Ok(r) => {
                    let stdout = match out {
                        Output::Json => format!(
                            "{}\n",
                            serde_json::to_string(&r).expect("plain data serializes")
                        ),
                        Output::Text => render_verify_text(&r),
                    };
                    Outcome {
                        code: if r.all_match { EXIT_OK } else { EXIT_MISMATCH },
                        stdout,
                        stderr: String::new(),
                    }
                }
                Err(VerifyError::Analysis(e)) => analysis_failure(e),
                Err(VerifyError::Oracle(e @ OracleError::TooLarge { .. })) => {
                    Outcome::error(EXIT_INPUT, "too_large", e.to_string())
                }
                Err(VerifyError::Oracle(e)) => Outcome::error(EXIT_INPUT, "oracle_budget", e.to_string()),
            }
        }
        Command::Gen {
            pattern,
            n,
            p,
            seed,
            format,
        } => {
            let pattern: Pattern = match pattern.parse() {
                Ok(p) => p,
                Err(e) => return Outcome::error(EXIT_INPUT, "bad_parameters", format!("{e}")),
            };
            match oracle::generate(pattern, GenParams { n, p }, seed) {
                Ok(g) => {
                    let mut text = io::serialize(&g, format.into());
                    if !text.ends_with('\n') {
                        text.push('\n');
                    }
                    Outcome::ok(text)
                }
                Err(e) => Outcome::error(EXIT_INPUT, "bad_parameters", e.to_string()),
            }
        }
        Command::Selftest { out } => {
            let report = selftest::run();
            let stdout = match out {
                Output::Json => format!(
                    "{}\n",
                    serde_json::to_string(&report).expect("plain data serializes")
                ),
                Output::Text => report.render_text(),
            };
            Outcome {
                code: if report.passed { EXIT_OK } else { EXIT_MISMATCH },
                stdout,
                stderr: String::new(),
            }
        }
    }
}
