//! The `q1lab` command-line driver.
//!
//! Exit status: 0 on success, 1 when a check finds a violation, 2 on usage,
//! parse or size errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{evaluate_with, BoundReport, EvalOptions};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::spectral::zykov_chain;
use crate::verify::{self, Checks, SweepReport, VerifyConfig, VerifyRecord};
use crate::EQ_TOL;

/// Environment variable overriding the equality tolerance.
pub const EQ_TOL_ENV: &str = "Q1LAB_EQ_TOL";

#[derive(Debug, Parser)]
#[command(name = "q1lab", version, about = "Signless Laplacian spectral radius: bounds, extremal graphs, exhaustive checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every bound on one graph.
    Eval {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a named family member, e.g. `turan:10,3` or `kite:7,4`.
    Family {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::G6)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check inequalities over every connected graph of one order.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CheckArg::All)]
        check: CheckArg,
        /// One representative per isomorphism class.
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        workers: Option<usize>,
        /// For `--check region`: check the Turán graphs of order n (any
        /// n up to 64) instead of enumerating.
        #[arg(long)]
        family_level: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Turán graphs exceeding 3n/2 + ω − 4 for 10 ≤ n ≤ n-max.
    Counterexamples {
        #[arg(long, default_value_t = 14)]
        n_max: usize,
        /// Report q1 − ω on the conjectured extremal graphs (n ≤ 12) instead.
        #[arg(long)]
        extremal: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The comparison table on T(10,3) and the seven-vertex example.
    Table {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterate the symmetrization step and print the q1 trajectory.
    Zykov {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exactly one graph source.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Edge-list file: `n m` then `m` lines `u v`.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    #[arg(long)]
    pub graph6: Option<String>,
    /// Family descriptor such as `turan:10,3`.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    G6,
    Edges,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Upper,
    Lower,
    Ratio,
    Region,
    Soundness,
    All,
}

/// Parses the process arguments, runs, and returns the exit status.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let tol = std::env::var(EQ_TOL_ENV).ok();
    run(cli, tol.as_deref(), &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// Runs `cli`, writing results to `stdout` (or the `--out` file) and
/// diagnostics to `stderr`. `eq_tol` is the raw tolerance override, if any.
pub fn run(cli: Cli, eq_tol: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = parse_tol(eq_tol).and_then(|tol| execute(cli.command, tol, stderr));
    match result {
        Ok(Output { text, path }) => match write_output(&text, path.as_ref(), stdout) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                2
            }
        },
        Err(Failure::Violation { text, path, message }) => {
            let _ = writeln!(stderr, "{message}");
            let _ = write_output(&text, path.as_ref(), stdout);
            1
        }
        Err(Failure::Usage(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn parse_tol(raw: Option<&str>) -> std::result::Result<f64, Failure> {
    match raw {
        None => Ok(EQ_TOL),
        Some(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
            _ => Err(Failure::Usage(Error::invalid(format!("{EQ_TOL_ENV} must be a nonnegative number, got {s:?}")))),
        },
    }
}

fn write_output(text: &str, path: Option<&PathBuf>, stdout: &mut dyn Write) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

struct Output {
    text: String,
    path: Option<PathBuf>,
}

enum Failure {
    Usage(Error),
    /// A falsified check; `text` is still written to the output.
    Violation { text: String, path: Option<PathBuf>, message: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

/// Turns an `Error::Violation` into an exit-1 failure carrying its JSON or
/// text rendering.
fn violation_failure(e: Error, format: Format, path: Option<PathBuf>) -> Failure {
    match e {
        Error::Violation(v) => {
            let text = match format {
                Format::Json => format!("{}\n", json(&serde_json::json!({ "violation": v }))),
                _ => v.report.as_ref().map(BoundReport::render_table).unwrap_or_default(),
            };
            Failure::Violation { text, path, message: format!("violation: {v}") }
        }
        other => Failure::Usage(other),
    }
}

fn read_graph(input: &Input) -> Result<(Graph, Option<FamilySpec>)> {
    if let Some(path) = &input.edges {
        let text = fs::read_to_string(path).map_err(|e| Error::parse(format!("{}: {e}", path.display())))?;
        return Ok((Graph::from_edge_list(&text)?, None));
    }
    if let Some(s) = &input.graph6 {
        return Ok((Graph::from_graph6(s)?, None));
    }
    let spec: FamilySpec = input.family.as_deref().expect("clap enforces one input").parse()?;
    Ok((spec.build()?, Some(spec)))
}

fn execute(command: Command, eq_tol: f64, stderr: &mut dyn Write) -> std::result::Result<Output, Failure> {
    match command {
        Command::Eval { input, format, out } => {
            let (g, spec) = read_graph(&input)?;
            if !g.is_connected() {
                let _ = writeln!(stderr, "warning: graph is disconnected; connectivity-dependent bounds are n/a");
            }
            let opts = EvalOptions { eq_tol, chi: spec.map(|s| s.chromatic_number()) };
            let report = evaluate_with(&g, &opts)?;
            let text = match format {
                Format::Table => report.render_table(),
                Format::Csv => format!("{}\n{}\n", BoundReport::CSV_HEADER, report.csv_row()),
                Format::Json => format!("{}\n", json(&report)),
            };
            Ok(Output { text, path: out })
        }
        Command::Family { spec, format, out } => {
            let spec: FamilySpec = spec.parse()?;
            let g = spec.build()?;
            let text = match format {
                GraphFormat::G6 => format!("{}\n", g.to_graph6()),
                GraphFormat::Edges => g.to_edge_list(),
                GraphFormat::Json => format!(
                    "{}\n",
                    json(&serde_json::json!({
                        "family": spec.to_string(),
                        "graph6": g.to_graph6(),
                        "n": g.n(),
                        "m": g.m(),
                        "omega": spec.clique_number(),
                        "chi": spec.chromatic_number(),
                        "edges": g.edges().collect::<Vec<_>>(),
                    }))
                ),
            };
            Ok(Output { text, path: out })
        }
        Command::Sweep { n, check, dedup, workers, family_level, format, out } => {
            if family_level {
                if check != CheckArg::Region {
                    return Err(Error::invalid("--family-level applies to --check region only").into());
                }
                let rows = verify::conjecture_region_family(n).map_err(|e| violation_failure(e, format, out.clone()))?;
                return Ok(Output { text: render_region_rows(n, &rows, format), path: out });
            }
            let mut cfg = VerifyConfig { eq_tol, dedup, ..VerifyConfig::default() };
            if let Some(w) = workers {
                if w == 0 {
                    return Err(Error::invalid("--workers must be at least 1").into());
                }
                cfg.workers = w;
            }
            let checks = match check {
                CheckArg::Upper => Checks::UPPER,
                CheckArg::Lower => Checks::LOWER,
                CheckArg::Ratio => Checks::RATIO,
                CheckArg::Region => Checks::REGION,
                CheckArg::Soundness => Checks::SOUNDNESS,
                CheckArg::All if n < verify::REGION_MIN_ORDER => Checks { region: false, ..Checks::ALL },
                CheckArg::All => Checks::ALL,
            };
            let report = verify::sweep(n, checks, &cfg).map_err(|e| violation_failure(e, format, out.clone()))?;
            Ok(Output { text: render_sweep(&report, format), path: out })
        }
        Command::Counterexamples { n_max, extremal, format, out } => {
            let text = if extremal {
                let mut rows = Vec::new();
                for n in 4..=n_max.min(12) {
                    rows.extend(verify::conjecture1_extremal_report(n)?);
                }
                render_extremal(&rows, format)
            } else {
                render_certs(&verify::find_counterexamples(n_max)?, format)
            };
            Ok(Output { text, path: out })
        }
        Command::Table { format, out } => {
            let rows = verify::example_table()?;
            let text = match format {
                Format::Table => verify::render_table(&rows),
                Format::Csv => verify::table_csv(&rows),
                Format::Json => rows.iter().map(|r| json(r) + "\n").collect(),
            };
            Ok(Output { text, path: out })
        }
        Command::Zykov { input, format, out } => {
            let (g, _) = read_graph(&input)?;
            let chain = zykov_chain(&g)?;
            let text = match format {
                Format::Json => format!("{}\n", json(&chain)),
                Format::Csv => {
                    let mut s = String::from("step,graph6,q1\n");
                    for (i, (h, q)) in chain.graphs.iter().zip(&chain.q1).enumerate() {
                        let _ = writeln!(s, "{i},{},{q}", h.to_graph6());
                    }
                    s
                }
                Format::Table => {
                    let mut s = format!("{:>4}  {:<16} {:>10}\n", "step", "graph6", "q1");
                    for (i, (h, q)) in chain.graphs.iter().zip(&chain.q1).enumerate() {
                        let _ = writeln!(s, "{i:>4}  {:<16} {q:>10.4}", h.to_graph6());
                    }
                    let _ = writeln!(s, "parts: {:?}", chain.parts);
                    s
                }
            };
            Ok(Output { text, path: out })
        }
    }
}

const RECORD_HEADER: &str = "check,id,mask,n,m,omega,chi,q1,bound,slack,attained,family";

fn record_csv(r: &VerifyRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        r.check,
        r.id,
        r.mask,
        r.n,
        r.m,
        r.omega,
        r.chi.map(|c| c.to_string()).unwrap_or_default(),
        r.q1,
        r.bound,
        r.slack,
        r.attained,
        r.family.as_deref().unwrap_or("")
    )
}

fn render_sweep(report: &SweepReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s: String = report.records.iter().map(|r| json(r) + "\n").collect();
            s.push_str(&json(&serde_json::json!({ "summary": report })));
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = format!("{RECORD_HEADER}\n");
            for r in &report.records {
                s.push_str(&record_csv(r));
                s.push('\n');
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "n = {}{}: {} connected graphs out of {} masks, no violations\n",
                report.n,
                if report.dedup { " (up to isomorphism)" } else { "" },
                report.connected,
                report.masks
            );
            for c in &report.checks {
                let _ = writeln!(
                    s,
                    "{}: {} graphs, {} extremal, min slack {:.3e}",
                    c.check,
                    c.examined,
                    c.equality,
                    c.min_slack.unwrap_or(f64::NAN)
                );
                for o in &c.by_omega {
                    let _ = writeln!(
                        s,
                        "  omega {}: {} graphs, {} extremal (expected {}){}",
                        o.omega,
                        o.graphs,
                        o.equality,
                        o.expected.unwrap_or(0),
                        o.bound.map(|b| format!(", bound {b:.4}")).unwrap_or_default()
                    );
                }
            }
            if let Some(sound) = &report.soundness {
                let _ = writeln!(s, "soundness: {} graphs", sound.examined);
                for (k, v) in &sound.min_slack {
                    let _ = writeln!(s, "  {k:<4} min slack {v:.3e}");
                }
                for w in &sound.witnesses {
                    let _ = writeln!(s, "  {} < {} on {} ({:.4} vs {:.4})", w.better, w.worse, w.graph6, w.better_value, w.worse_value);
                }
                for (a, b) in &sound.missing {
                    let _ = writeln!(s, "  {a} < {b}: no witness at this order");
                }
            }
            if !report.records.is_empty() {
                let _ = writeln!(s, "extremal graphs:");
                for r in &report.records {
                    let _ = writeln!(
                        s,
                        "  {:<6} {:<12} omega={} q1={:.4} bound={:.4} {}",
                        r.check,
                        r.id,
                        r.omega,
                        r.q1,
                        r.bound,
                        r.family.as_deref().unwrap_or("")
                    );
                }
            }
            s
        }
    }
}

fn render_region_rows(n: usize, rows: &[verify::RegionRow], format: Format) -> String {
    match format {
        Format::Json => rows.iter().map(|r| json(r) + "\n").collect(),
        Format::Csv => {
            let mut s = String::from("n,omega,q1,threshold,slack,equality\n");
            for r in rows {
                let _ = writeln!(s, "{n},{},{},{},{},{}", r.omega, r.q1, r.threshold, r.slack, r.equality);
            }
            s
        }
        Format::Table => {
            let mut s = format!("n = {n}: q1(T(n,omega)) against 3n/2 + omega - 4\n");
            for r in rows {
                let _ = writeln!(
                    s,
                    "  omega {:>2}: q1 {:>9.4}  threshold {:>7.1}  slack {:>8.4}{}",
                    r.omega,
                    r.q1,
                    r.threshold,
                    r.slack,
                    if r.equality { "  equality" } else { "" }
                );
            }
            s
        }
    }
}

fn render_certs(certs: &[verify::CounterexampleCert], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s: String = certs.iter().map(|c| json(c) + "\n").collect();
            s.push_str(&json(&serde_json::json!({ "summary": { "certificates": certs.len() } })));
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("n,omega,q1,closed_form,threshold,margin,parts,chi,q1_minus_chi,chi_threshold\n");
            for c in certs {
                let parts: Vec<String> = c.parts.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{},{}",
                    c.n,
                    c.omega,
                    c.q1,
                    c.closed_form,
                    c.threshold,
                    c.margin,
                    parts.join(" "),
                    c.chi,
                    c.q1_minus_chi,
                    c.chi_threshold
                );
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "{:>3} {:>5} {:>10} {:>9} {:>8}  {:<22} {:>8} {:>8}\n",
                "n", "omega", "q1", "threshold", "margin", "parts", "q1-chi", "3n/2-4"
            );
            for c in certs {
                let _ = writeln!(
                    s,
                    "{:>3} {:>5} {:>10.4} {:>9.1} {:>8.4}  {:<22} {:>8.4} {:>8.1}",
                    c.n,
                    c.omega,
                    c.q1,
                    c.threshold,
                    c.margin,
                    format!("{:?}", c.parts),
                    c.q1_minus_chi,
                    c.chi_threshold
                );
            }
            let _ = writeln!(s, "{} certificates", certs.len());
            s
        }
    }
}

fn render_extremal(rows: &[verify::ExtremalRow], format: Format) -> String {
    match format {
        Format::Json => rows.iter().map(|r| json(r) + "\n").collect(),
        Format::Csv => {
            let mut s = String::from("n,graph,graph6,connected,q1,omega,q1_minus_omega,threshold\n");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    r.n, r.graph, r.graph6, r.connected, r.q1, r.omega, r.q1_minus_omega, r.threshold
                );
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "{:>3} {:<12} {:>9} {:>9} {:>5} {:>9} {:>9}\n",
                "n", "graph", "connected", "q1", "omega", "q1-omega", "3n/2-4"
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:>3} {:<12} {:>9} {:>9.4} {:>5} {:>9.4} {:>9.1}",
                    r.n, r.graph, r.connected, r.q1, r.omega, r.q1_minus_omega, r.threshold
                );
            }
            s
        }
    }
}
