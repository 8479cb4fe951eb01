//! `antiramsey` command-line tool.
//!
//! Structured output goes to stdout as JSON; human-readable summaries go to
//! stderr. Exit codes: 0 success, 1 mismatch or failed check, 2 usage or
//! input error, 3 search budget exhausted.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use antiramsey_core::coloring::Construction;
use antiramsey_core::search::{Search, DEFAULT_SYMMETRY_VERTICES};
use antiramsey_core::table::verify_table;
use antiramsey_core::{ar_formula, catalog, lookup, verify_certificate, EdgeColoring, Error, SearchBudget};

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "antiramsey", version, about = "Anti-Ramsey numbers of graphs with at most four edges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the pattern graphs.
    Catalog {
        /// Print JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the closed-form value of AR(n, G).
    Formula {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: u64,
    },
    /// Write an extremal coloring as a certificate file.
    Construct {
        /// One of matching, star, min, clique+1:<k>, c4+1, c3p2-k5.
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a coloring has the claimed number of colors and no rainbow copy.
    Check {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        claimed: usize,
    },
    /// Compute AR(n, G) by exhaustive search.
    Search {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Leading vertices covered by symmetry breaking (0 disables it).
        #[arg(long, default_value_t = DEFAULT_SYMMETRY_VERTICES)]
        symmetry: usize,
        /// Include wall-clock time in the JSON output.
        #[arg(long)]
        timings: bool,
    },
    /// Recompute every table entry with n <= n-max and compare.
    VerifyTable {
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock times (makes the JSON non-reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
struct BudgetArgs {
    /// Node cap per search.
    #[arg(long, env = "ANTIRAMSEY_MAX_NODES", default_value_t = 1_000_000_000)]
    max_nodes: u64,
    /// Wall-time cap per search, in seconds.
    #[arg(long, env = "ANTIRAMSEY_MAX_SECONDS")]
    max_seconds: Option<f64>,
    #[arg(long, env = "ANTIRAMSEY_THREADS", default_value_t = 1)]
    threads: usize,
    /// Edge depth at which parallel runs split the search tree.
    #[arg(long, default_value_t = 8)]
    parallel_depth: usize,
}

impl BudgetArgs {
    fn budget(&self) -> anyhow::Result<SearchBudget> {
        let mut budget = SearchBudget::default()
            .with_max_nodes(self.max_nodes)
            .with_threads(self.threads)
            .with_parallel_depth(self.parallel_depth);
        if let Some(secs) = self.max_seconds {
            let time = Duration::try_from_secs_f64(secs).map_err(|_| Error::InvalidArgument(format!("bad --max-seconds {secs}")))?;
            budget = budget.with_max_time(time);
        }
        Ok(budget)
    }
}

#[derive(Serialize)]
struct CatalogRow {
    name: &'static str,
    num_vertices: usize,
    num_edges: usize,
    edges: Vec<(usize, usize)>,
    aut_count: u64,
}

#[derive(Serialize)]
struct FormulaOutput<'a> {
    graph: &'a str,
    n: u64,
    #[serde(flatten)]
    value: antiramsey_core::FormulaValue,
}

#[derive(Serialize)]
struct SearchOutput<'a> {
    graph: &'a str,
    n: usize,
    anti_ramsey: usize,
    is_final: bool,
    #[serde(flatten)]
    result: &'a antiramsey_core::SearchResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Catalog { json } => {
            let rows: Vec<CatalogRow> = catalog()
                .iter()
                .map(|p| CatalogRow {
                    name: p.name(),
                    num_vertices: p.num_vertices(),
                    num_edges: p.num_edges(),
                    edges: p.edges().to_vec(),
                    aut_count: p.aut_count(),
                })
                .collect();
            if json {
                print_json(&rows)?;
            } else {
                let mut text = format!("{:<8} {:>8} {:>5} {:>5}  edges\n", "graph", "vertices", "edges", "aut");
                for r in rows {
                    let edges: Vec<String> = r.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    text += &format!(
                        "{:<8} {:>8} {:>5} {:>5}  {}\n",
                        r.name,
                        r.num_vertices,
                        r.num_edges,
                        r.aut_count,
                        edges.join(" ")
                    );
                }
                emit(&text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Formula { graph, n } => {
            let pattern = lookup(&graph)?;
            let value = ar_formula(pattern, n)?;
            print_json(&FormulaOutput {
                graph: pattern.name(),
                n,
                value,
            })?;
            Ok(EXIT_OK)
        }
        Command::Construct { name, n, out } => {
            let construction: Construction = name.parse()?;
            let coloring = construction.build(n)?;
            let text = coloring.to_json();
            match &out {
                Some(path) => {
                    fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
                    eprintln!(
                        "{construction} coloring of K_{n} with {} colors written to {}",
                        coloring.num_colors(),
                        path.display()
                    );
                }
                None => emit(&text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Check { coloring, graph, claimed } => {
            let pattern = lookup(&graph)?;
            let text = fs::read_to_string(&coloring)
                .map_err(Error::from)
                .with_context(|| format!("reading {}", coloring.display()))?;
            let c = EdgeColoring::from_json(&text)?;
            let report = verify_certificate(&c, pattern, claimed)?;
            print_json(&report)?;
            if report.passed {
                eprintln!("PASS: AR({}, {}) > {claimed}", c.n(), pattern.name());
                Ok(EXIT_OK)
            } else {
                eprintln!("FAIL: {}", report.failures.join("; "));
                Ok(EXIT_FAIL)
            }
        }
        Command::Search {
            graph,
            n,
            budget,
            symmetry,
            timings,
        } => {
            let pattern = lookup(&graph)?;
            let result = Search::new(pattern, n)?
                .budget(budget.budget()?)
                .symmetry_vertices(symmetry)
                .max_colors()?;
            print_json(&SearchOutput {
                graph: pattern.name(),
                n,
                anti_ramsey: result.anti_ramsey(),
                is_final: result.is_complete(),
                result: &result,
                elapsed_ms: timings.then_some(result.elapsed.as_secs_f64() * 1e3),
            })?;
            if result.is_complete() {
                eprintln!("AR({n}, {}) = {}", pattern.name(), result.anti_ramsey());
                Ok(EXIT_OK)
            } else {
                eprintln!(
                    "budget exhausted after {} nodes: AR({n}, {}) >= {}",
                    result.nodes_explored,
                    pattern.name(),
                    result.anti_ramsey()
                );
                Ok(EXIT_BUDGET)
            }
        }
        Command::VerifyTable {
            n_max,
            budget,
            out,
            timings,
        } => {
            let report = verify_table(n_max, &budget.budget()?, timings)?;
            let json = report.to_json()?;
            if let Some(path) = &out {
                fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
            }
            emit(&json)?;
            eprint!("{}", report.render_text());
            Ok(if report.has_mismatch() {
                EXIT_FAIL
            } else if report.summary.budget_exhausted > 0 {
                EXIT_BUDGET
            } else {
                EXIT_OK
            })
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::UnsupportedDomain(_)) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
