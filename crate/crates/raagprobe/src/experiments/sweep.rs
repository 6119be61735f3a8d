//! Grids of Monte Carlo cells written as CSV.

use std::fmt::Write as _;
use std::io;

use raagprobe_core::formulas::{classify_regime, threshold};
use raagprobe_core::sampler::mix64;
use rayon::ThreadPool;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::estimate::monte_carlo_many;
use super::{ExperimentError, Statistic};

/// Margin used for the `regime` column.
pub const REGIME_MARGIN: f64 = 3.0;

/// Header line of every sweep CSV.
pub const CSV_HEADER: &str =
    "n,p,k,statistic,trials,seed,mean_count,existence_frequency,std_error_mean,exact_expectation,regime";

/// How the edge probabilities of a sweep are chosen.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ProbabilityRule {
    /// The same list of probabilities at every `n`.
    Explicit(Vec<f64>),
    /// `p = (ln n + ln ln n + ω)/n` for each `ω`, and with `dual` also
    /// `1 − p`.
    ThresholdRelative(ThresholdRule),
}

/// Parameters of [`ProbabilityRule::ThresholdRelative`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThresholdRule {
    /// Offsets added to `ln n + ln ln n`; may be negative.
    pub omega: Vec<f64>,
    /// Also run the mirrored probability `1 − p`.
    #[serde(default)]
    pub dual: bool,
}

/// A sweep description, usually read from JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    /// Vertex counts, run in the given order.
    pub n_list: Vec<usize>,
    /// Edge probability rule.
    pub probability: ProbabilityRule,
    /// Trials per cell.
    pub trials: u64,
    /// Master seed.
    pub seed: u64,
    /// Statistics measured in every cell, on shared samples.
    pub statistics: Vec<Statistic>,
    /// Where the CSV goes; the CLI `--out` flag overrides it.
    #[serde(default)]
    pub output: Option<String>,
}

/// One `(n, p)` point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    /// Vertex count.
    pub n: usize,
    /// Edge probability.
    pub p: f64,
    /// Offset that produced `p`, for threshold-relative rules.
    pub omega: Option<f64>,
    /// `p` is the mirrored `1 − (…)/n` value.
    pub dual: bool,
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    /// Vertex count.
    pub n: usize,
    /// Edge probability.
    pub p: f64,
    /// Separation size for `ProperStarKSep`.
    pub k: Option<usize>,
    /// Statistic.
    pub statistic: Statistic,
    /// Trials in this cell.
    pub trials: u64,
    /// Master seed of the sweep.
    pub seed: u64,
    /// Sample mean.
    pub mean_count: f64,
    /// Fraction of trials with a positive value.
    pub existence_frequency: f64,
    /// Standard error of the mean.
    pub std_error_mean: f64,
    /// Closed-form mean, where one exists.
    pub exact_expectation: Option<f64>,
    /// Regime label at margin [`REGIME_MARGIN`], when `n >= 3`.
    pub regime: Option<&'static str>,
    /// Offset that produced `p`; not written to CSV.
    #[serde(skip)]
    pub omega: Option<f64>,
    /// Mirrored probability; not written to CSV.
    #[serde(skip)]
    pub dual: bool,
}

impl SweepConfig {
    /// Parses JSON, rejecting unknown fields, then validates.
    pub fn from_json(text: &str) -> Result<Self, ExperimentError> {
        let cfg: SweepConfig =
            serde_json::from_str(text).map_err(|e| ExperimentError::Config(e.to_string()))?;
        cfg.points()?;
        Ok(cfg)
    }

    /// Hex SHA-256 of the canonical JSON form, leaving out `output` so the
    /// hash names the experiment rather than where it was written.
    pub fn hash(&self) -> String {
        let experiment = SweepConfig { output: None, ..self.clone() };
        let canonical = serde_json::to_string(&experiment).expect("config serializes");
        Sha256::digest(canonical.as_bytes())
            .iter()
            .fold(String::with_capacity(64), |mut s, b| {
                let _ = write!(s, "{b:02x}");
                s
            })
    }

    /// Every `(n, p)` point in run order; checks the whole config.
    pub fn points(&self) -> Result<Vec<SweepPoint>, ExperimentError> {
        let bad = |m: String| Err(ExperimentError::Config(m));
        if self.n_list.is_empty() {
            return bad("n_list is empty".into());
        }
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.statistics.is_empty() {
            return bad("statistics is empty".into());
        }
        let mut out = Vec::new();
        for &n in &self.n_list {
            for s in &self.statistics {
                s.check_n(n).map_err(ExperimentError::Config)?;
            }
            match &self.probability {
                ProbabilityRule::Explicit(ps) => {
                    if ps.is_empty() {
                        return bad("explicit probability list is empty".into());
                    }
                    out.extend(ps.iter().map(|&p| SweepPoint { n, p, omega: None, dual: false }));
                }
                ProbabilityRule::ThresholdRelative(rule) => {
                    if rule.omega.is_empty() {
                        return bad("omega list is empty".into());
                    }
                    let t = threshold(n).map_err(|e| ExperimentError::Config(format!("n={n}: {e}")))?;
                    for &w in &rule.omega {
                        let p = t + w / n as f64;
                        out.push(SweepPoint { n, p, omega: Some(w), dual: false });
                        if rule.dual {
                            out.push(SweepPoint { n, p: 1.0 - p, omega: Some(w), dual: true });
                        }
                    }
                }
            }
        }
        for pt in &out {
            if !(0.0..=1.0).contains(&pt.p) {
                return bad(format!("cell n={} has p={} outside [0, 1]", pt.n, pt.p));
            }
        }
        Ok(out)
    }
}

/// Seed of one cell, so that cells use unrelated streams.
fn cell_seed(master: u64, n: usize, p: f64) -> u64 {
    mix64(master ^ mix64((n as u64).wrapping_add(mix64(p.to_bits()))))
}

/// Runs every cell. Cells run in order; trials within a cell run on `pool`.
pub fn threshold_sweep(cfg: &SweepConfig, pool: &ThreadPool) -> Result<Vec<SweepRow>, ExperimentError> {
    let mut rows = Vec::new();
    for pt in cfg.points()? {
        let seed = cell_seed(cfg.seed, pt.n, pt.p);
        let regime = classify_regime(pt.n, pt.p, REGIME_MARGIN).ok().map(|r| r.regime.as_str());
        for e in monte_carlo_many(pt.n, pt.p, &cfg.statistics, cfg.trials, seed, pool)? {
            rows.push(SweepRow {
                n: e.n,
                p: e.p,
                k: e.statistic.k(),
                statistic: e.statistic,
                trials: e.trials,
                seed: cfg.seed,
                mean_count: e.mean_count,
                existence_frequency: e.existence_frequency,
                std_error_mean: e.std_error_mean,
                exact_expectation: e.exact_expectation,
                regime,
                omega: pt.omega,
                dual: pt.dual,
            });
        }
    }
    Ok(rows)
}

/// 17 significant digits.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// Writes metadata comments, the header and one line per row.
pub fn write_sweep_csv(cfg: &SweepConfig, rows: &[SweepRow], mut w: impl io::Write) -> io::Result<()> {
    writeln!(w, "# raagprobe {}", env!("CARGO_PKG_VERSION"))?;
    writeln!(w, "# seed {}", cfg.seed)?;
    writeln!(w, "# config_sha256 {}", cfg.hash())?;
    writeln!(w, "# regime_margin {REGIME_MARGIN}")?;
    writeln!(w, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.n,
            real(r.p),
            opt(r.k),
            r.statistic.name(),
            r.trials,
            r.seed,
            real(r.mean_count),
            real(r.existence_frequency),
            real(r.std_error_mean),
            opt(r.exact_expectation.map(real)),
            r.regime.unwrap_or(""),
        )?;
    }
    Ok(())
}

/// A gnuplot script plotting existence frequency against `n`, one line per
/// statistic and probability rule. The data is inlined.
pub fn gnuplot_script(rows: &[SweepRow], image: &str) -> String {
    let mut series: Vec<(String, Vec<&SweepRow>)> = Vec::new();
    for r in rows {
        let label = match (r.omega, r.dual) {
            (Some(w), false) => format!("{} omega={w}", r.statistic),
            (Some(w), true) => format!("{} omega={w} dual", r.statistic),
            (None, _) => format!("{} p={}", r.statistic, r.p),
        };
        match series.iter_mut().find(|(l, _)| *l == label) {
            Some((_, v)) => v.push(r),
            None => series.push((label, vec![r])),
        }
    }
    let mut s = String::new();
    let _ = writeln!(s, "set terminal pngcairo size 900,600");
    let _ = writeln!(s, "set output '{image}'");
    let _ = writeln!(s, "set logscale x 2");
    let _ = writeln!(s, "set xlabel 'n'");
    let _ = writeln!(s, "set ylabel 'existence frequency'");
    let _ = writeln!(s, "set yrange [0:1]");
    let _ = writeln!(s, "set key outside");
    for (i, (_, rs)) in series.iter().enumerate() {
        let _ = writeln!(s, "$s{i} << EOD");
        for r in rs {
            let _ = writeln!(s, "{} {} {}", r.n, real(r.existence_frequency), real(r.mean_count));
        }
        let _ = writeln!(s, "EOD");
    }
    let plots: Vec<String> = series
        .iter()
        .enumerate()
        .map(|(i, (label, _))| format!("$s{i} using 1:2 with linespoints title '{label}'"))
        .collect();
    let _ = writeln!(s, "plot {}", plots.join(", \\\n     "));
    s
}
