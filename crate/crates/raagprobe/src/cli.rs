//! The `raagprobe` command line.
//!
//! Exit codes: 0 success, 1 a check failed (bound violation, counterexample,
//! incoherent estimate), 2 bad flags, unreadable input or invalid config.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use raagprobe_core::sampler::{derive_stream, sample_gnp};

use crate::experiments::{
    bound_audit, gnuplot_script, lemma_property_fuzz, threshold_sweep, worker_pool, write_sweep_csv,
    AuditGrid, AuditReport, FuzzSource, SweepConfig,
};
use crate::format::{read_graph_file, write_graph, write_graph_file};
use crate::report::{analyze, expect_row, render_analyze_text, render_expect_csv, render_expect_text};

/// Probes the finiteness of `Out(A_Γ)` for Erdős–Rényi graphs.
#[derive(Debug, Parser)]
#[command(name = "raagprobe", version, about)]
pub struct Cli {
    /// Worker threads; defaults to the available parallelism. Results do not
    /// depend on it.
    #[arg(long, global = true, env = "RAAGPROBE_WORKERS")]
    pub workers: Option<usize>,
    /// Subcommand.
    #[command(subcommand)]
    pub command: Command,
}

/// Output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text.
    Text,
    /// JSON document.
    Json,
    /// Comma-separated values.
    Csv,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every detector on a graph file.
    Analyze(AnalyzeArgs),
    /// Write sampled G(n,p) graphs as files.
    Sample(SampleArgs),
    /// Tabulate closed forms, bounds, threshold and regime.
    Expect(ExpectArgs),
    /// Run a Monte Carlo sweep described by a JSON config.
    Sweep(SweepArgs),
    /// Check the bounds on E[U_k] over a grid.
    Audit(AuditArgs),
    /// Check the structural lemmas on sampled or enumerated graphs.
    Fuzz(FuzzArgs),
}

/// `analyze` flags.
#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Graph file.
    pub input: PathBuf,
    /// `text` or `json`.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cap on each witness list; counts are always exact.
    #[arg(long, default_value_t = 100)]
    pub max_witnesses: usize,
    /// Output file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// `sample` flags.
#[derive(Debug, Args)]
pub struct SampleArgs {
    /// Vertices.
    #[arg(long)]
    pub n: usize,
    /// Edge probability.
    #[arg(long)]
    pub p: f64,
    /// Master seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of graphs; trial indices run from 0.
    #[arg(long, visible_alias = "trials", default_value_t = 1)]
    pub count: u64,
    /// Directory for `trial_<index>.g` files.
    #[arg(long, visible_alias = "out")]
    pub out_dir: PathBuf,
}

/// `expect` flags.
#[derive(Debug, Args)]
pub struct ExpectArgs {
    /// Vertices.
    #[arg(long)]
    pub n: usize,
    /// Edge probability.
    #[arg(long)]
    pub p: f64,
    /// Separation sizes: `3`, `1-4`, `1..=4` or a comma list of those.
    #[arg(long)]
    pub k: Option<String>,
    /// Margin for the regime label.
    #[arg(long, default_value_t = 3.0)]
    pub omega: f64,
    /// `text`, `csv` or `json`.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Output file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// `sweep` flags.
#[derive(Debug, Args)]
pub struct SweepArgs {
    /// JSON sweep config.
    pub config: PathBuf,
    /// CSV path; overrides the config's `output`. Without either, stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Overrides the config's seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Overrides the config's trials per cell.
    #[arg(long)]
    pub trials: Option<u64>,
    /// Also write a gnuplot script plotting existence frequency against n.
    #[arg(long)]
    pub gnuplot_script: Option<PathBuf>,
}

/// `audit` flags.
#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Smallest n.
    #[arg(long, default_value_t = 6)]
    pub n_min: usize,
    /// Largest n.
    #[arg(long, default_value_t = 60)]
    pub n_max: usize,
    /// `text` or `json`.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Output file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Multiplies every bound; for exercising the failure path.
    #[arg(long, default_value_t = 1.0, hide = true)]
    pub bound_scale: f64,
}

/// `fuzz` flags.
#[derive(Debug, Args)]
pub struct FuzzArgs {
    /// Vertices.
    #[arg(long)]
    pub n: usize,
    /// Edge probability; required unless `--exhaustive`.
    #[arg(long, required_unless_present = "exhaustive")]
    pub p: Option<f64>,
    /// Sampled graphs.
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    /// Master seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Check every graph on n <= 6 vertices instead of sampling.
    #[arg(long, conflicts_with = "p")]
    pub exhaustive: bool,
    /// Where a counterexample graph is written.
    #[arg(long, default_value = "counterexample.g")]
    pub out: PathBuf,
    /// Adds a false property so the failure path can be tested.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Pass,
    CheckFailed,
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn check_p(p: f64) -> anyhow::Result<()> {
    if !(0.0..=1.0).contains(&p) {
        bail!("--p {p} outside [0, 1]");
    }
    Ok(())
}

/// Parses `3`, `1-4`, `1..=4` and comma lists of those.
pub fn parse_k_list(s: &str) -> anyhow::Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        let range = part.split_once("..=").or_else(|| part.split_once('-'));
        match range {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
                if a > b {
                    bail!("empty k range `{part}`");
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().with_context(|| format!("bad k `{part}`"))?),
        }
    }
    Ok(out)
}

fn run_analyze(a: &AnalyzeArgs) -> anyhow::Result<Outcome> {
    let g = read_graph_file(&a.input)?;
    let report = analyze(&g, &a.input.display().to_string(), a.max_witnesses)?;
    let text = match a.format {
        Format::Text => render_analyze_text(&report),
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Csv => bail!("analyze supports --format text or json"),
    };
    emit(a.out.as_deref(), &text)?;
    Ok(Outcome::Pass)
}

fn run_sample(a: &SampleArgs) -> anyhow::Result<Outcome> {
    check_p(a.p)?;
    fs::create_dir_all(&a.out_dir).with_context(|| format!("cannot create {}", a.out_dir.display()))?;
    for i in 0..a.count {
        let g = sample_gnp(a.n, a.p, derive_stream(a.seed, i))?;
        let path = a.out_dir.join(format!("trial_{i}.g"));
        let text = format!("# G(n={}, p={}) seed={} trial={i}\n{}", a.n, a.p, a.seed, write_graph(&g));
        fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(Outcome::Pass)
}

fn run_expect(a: &ExpectArgs) -> anyhow::Result<Outcome> {
    let ks: Vec<Option<usize>> = match &a.k {
        Some(s) => parse_k_list(s)?.into_iter().map(Some).collect(),
        None => vec![None],
    };
    let rows = ks
        .into_iter()
        .map(|k| expect_row(a.n, a.p, k, a.omega))
        .collect::<Result<Vec<_>, _>>()?;
    let text = match a.format {
        Format::Text => render_expect_text(&rows, a.omega),
        Format::Csv => render_expect_csv(&rows, a.omega),
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
    };
    emit(a.out.as_deref(), &text)?;
    Ok(Outcome::Pass)
}

fn run_sweep(a: &SweepArgs, workers: Option<usize>) -> anyhow::Result<Result<Outcome, anyhow::Error>> {
    let text = fs::read_to_string(&a.config).with_context(|| format!("cannot read {}", a.config.display()))?;
    let mut cfg = SweepConfig::from_json(&text).with_context(|| a.config.display().to_string())?;
    if let Some(seed) = a.seed {
        cfg.seed = seed;
    }
    if let Some(trials) = a.trials {
        cfg.trials = trials;
    }
    if let Some(out) = &a.out {
        cfg.output = Some(out.display().to_string());
    }
    cfg.points()?;
    let pool = worker_pool(workers)?;
    // errors from here on are not configuration problems
    let run = || -> anyhow::Result<Outcome> {
        let rows = threshold_sweep(&cfg, &pool)?;
        let mut csv = Vec::new();
        write_sweep_csv(&cfg, &rows, &mut csv)?;
        emit(cfg.output.as_deref().map(Path::new), std::str::from_utf8(&csv)?)?;
        if let Some(script) = &a.gnuplot_script {
            let image = script.with_extension("png").display().to_string();
            fs::write(script, gnuplot_script(&rows, &image))?;
        }
        // a non-negative integer count is positive at most as often as its mean
        let incoherent: Vec<String> = rows
            .iter()
            .filter(|r| r.existence_frequency > r.mean_count + 4.0 * r.std_error_mean)
            .map(|r| format!("n={} p={} {}", r.n, r.p, r.statistic))
            .collect();
        if !incoherent.is_empty() {
            eprintln!("existence frequency exceeds mean count in: {}", incoherent.join("; "));
            return Ok(Outcome::CheckFailed);
        }
        Ok(Outcome::Pass)
    };
    Ok(run())
}

fn render_audit_text(r: &AuditReport) -> String {
    let mut s = format!(
        "# audit n={}..={} over {} probabilities, bound scale {}\npoints {}\n",
        r.grid.n_min,
        r.grid.n_max,
        r.grid.p_values.len(),
        r.bound_scale,
        r.points
    );
    for t in &r.tightness {
        let at = t.at.map(|(n, p, k)| format!(" at n={n} p={p} k={k}")).unwrap_or_default();
        s += &format!("{:<8} checks {:>6}  max E/bound {:.6e}{at}\n", t.bound.to_string(), t.checks, t.max_ratio);
    }
    for c in &r.corners {
        s += &format!(
            "corner {} k={}: {:.6} (limit {:.6}, gap {:.4})\n",
            c.envelope,
            c.k,
            c.value,
            c.limit,
            (c.value - c.limit).abs()
        );
    }
    for v in r.violations.iter().take(20) {
        s += &format!(
            "VIOLATION n={} p={} k={}: E={:e} > {}={:e}\n",
            v.n, v.p, v.k, v.expectation, v.bound, v.bound_value
        );
    }
    s += &format!("violations {}\n", r.violations.len());
    s
}

fn run_audit(a: &AuditArgs) -> anyhow::Result<Outcome> {
    let grid = AuditGrid { n_min: a.n_min, n_max: a.n_max, ..AuditGrid::default() };
    let report = bound_audit(&grid, a.bound_scale)?;
    let text = match a.format {
        Format::Text => render_audit_text(&report),
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Csv => bail!("audit supports --format text or json"),
    };
    emit(a.out.as_deref(), &text)?;
    Ok(if report.passed() { Outcome::Pass } else { Outcome::CheckFailed })
}

fn run_fuzz(a: &FuzzArgs, workers: Option<usize>) -> anyhow::Result<Outcome> {
    let source = match a.p {
        _ if a.exhaustive => FuzzSource::Exhaustive,
        Some(p) => {
            check_p(p)?;
            FuzzSource::Sampled { p, trials: a.trials, seed: a.seed }
        }
        None => bail!("--p is required unless --exhaustive"),
    };
    let pool = worker_pool(workers)?;
    let report = lemma_property_fuzz(a.n, source, a.inject_fault, &pool)?;
    match &report.counterexample {
        None => {
            println!("fuzz n={} {:?}: {} graphs, all properties hold", a.n, source, report.graphs);
            Ok(Outcome::Pass)
        }
        Some(c) => {
            write_graph_file(&a.out, &c.graph).with_context(|| format!("cannot write {}", a.out.display()))?;
            println!(
                "fuzz n={} {:?}: {} fails on graph {}; written to {}",
                a.n,
                source,
                c.property,
                c.index,
                a.out.display()
            );
            Ok(Outcome::CheckFailed)
        }
    }
}

fn report_error(e: &anyhow::Error) -> ExitCode {
    eprintln!("error: {e:#}");
    ExitCode::from(2)
}

/// Parses `args` and runs the chosen subcommand.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let workers = cli.workers;
    let result = match &cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::Sample(a) => run_sample(a),
        Command::Expect(a) => run_expect(a),
        Command::Audit(a) => run_audit(a),
        Command::Fuzz(a) => run_fuzz(a, workers),
        Command::Sweep(a) => match run_sweep(a, workers) {
            Ok(Ok(outcome)) => Ok(outcome),
            Ok(Err(e)) => {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => report_error(&e),
    }
}
