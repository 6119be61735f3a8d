//! Exact enumeration means and Monte Carlo estimates.

use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;

use raagprobe_core::sampler::{derive_stream, graph_probability, sample_gnp};

use super::enumerate::{enumerate_graphs_up_to, ORACLE_MAX_N};
use super::{ExperimentError, Statistic};

/// Pairwise summation. The split points depend only on the length, so the
/// result is a fixed function of the input order.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const LEAF: usize = 32;
    if xs.len() <= LEAF {
        return xs.iter().sum();
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

/// `Σ_Γ Pr(Γ) · stat(Γ)` over every graph on `n <= 6` vertices.
pub fn oracle_expectation(n: usize, p: f64, stat: Statistic) -> Result<f64, ExperimentError> {
    oracle_expectation_up_to(n, p, stat, ORACLE_MAX_N)
}

/// [`oracle_expectation`] with a caller-chosen enumeration ceiling.
pub fn oracle_expectation_up_to(
    n: usize,
    p: f64,
    stat: Statistic,
    ceiling: usize,
) -> Result<f64, ExperimentError> {
    stat.check_n(n).map_err(ExperimentError::Config)?;
    let mut terms = Vec::new();
    for g in enumerate_graphs_up_to(n, ceiling)? {
        let w = graph_probability(&g, p)?.exp();
        if w > 0.0 {
            terms.push(w * stat.evaluate(&g)?);
        }
    }
    Ok(pairwise_sum(&terms))
}

/// One Monte Carlo cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Estimate {
    /// Vertex count.
    pub n: usize,
    /// Edge probability.
    pub p: f64,
    /// What was measured.
    pub statistic: Statistic,
    /// Number of sampled graphs.
    pub trials: u64,
    /// Sample mean of the statistic.
    pub mean_count: f64,
    /// Fraction of trials where the statistic was positive.
    pub existence_frequency: f64,
    /// Sample standard deviation over `sqrt(trials)`.
    pub std_error_mean: f64,
    /// Closed-form mean, where one exists.
    pub exact_expectation: Option<f64>,
    /// Master seed of the trial streams.
    pub seed: u64,
}

impl Estimate {
    /// `|mean − exact| / std_error`; `None` without a closed form.
    /// Differences at rounding level count as 0, so a zero standard error
    /// gives 0 on a match and infinity otherwise.
    pub fn z_score(&self) -> Option<f64> {
        let exact = self.exact_expectation?;
        let diff = (self.mean_count - exact).abs();
        Some(if diff <= 1e-12 * exact.abs().max(1.0) { 0.0 } else { diff / self.std_error_mean })
    }
}

fn summarize(n: usize, p: f64, stat: Statistic, seed: u64, values: &[f64]) -> Estimate {
    let trials = values.len();
    let tf = trials as f64;
    let mean = pairwise_sum(values) / tf;
    let sq: Vec<f64> = values.iter().map(|x| (x - mean) * (x - mean)).collect();
    let var = if trials > 1 { pairwise_sum(&sq) / (tf - 1.0) } else { 0.0 };
    let hits = values.iter().filter(|&&x| x > 0.0).count();
    Estimate {
        n,
        p,
        statistic: stat,
        trials: trials as u64,
        mean_count: mean,
        existence_frequency: hits as f64 / tf,
        std_error_mean: (var / tf).sqrt(),
        exact_expectation: stat.exact_expectation(n, p),
        seed,
    }
}

/// Estimates several statistics on the same sampled graphs.
///
/// Trial `i` uses the stream `derive_stream(seed, i)`. Per-trial values are
/// gathered in trial order before any summation, so the output does not
/// depend on the pool size.
pub fn monte_carlo_many(
    n: usize,
    p: f64,
    stats: &[Statistic],
    trials: u64,
    seed: u64,
    pool: &ThreadPool,
) -> Result<Vec<Estimate>, ExperimentError> {
    if trials == 0 {
        return Err(ExperimentError::Config("trials must be at least 1".into()));
    }
    for s in stats {
        s.check_n(n).map_err(ExperimentError::Config)?;
    }
    let rows: Vec<Vec<f64>> = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| {
                let g = sample_gnp(n, p, derive_stream(seed, i))?;
                stats
                    .iter()
                    .map(|s| s.evaluate(&g).map_err(ExperimentError::from))
                    .collect()
            })
            .collect::<Result<_, ExperimentError>>()
    })?;
    Ok(stats
        .iter()
        .enumerate()
        .map(|(j, &s)| {
            let column: Vec<f64> = rows.iter().map(|r| r[j]).collect();
            summarize(n, p, s, seed, &column)
        })
        .collect())
}

/// Estimates one statistic.
pub fn monte_carlo(
    n: usize,
    p: f64,
    stat: Statistic,
    trials: u64,
    seed: u64,
    pool: &ThreadPool,
) -> Result<Estimate, ExperimentError> {
    Ok(monte_carlo_many(n, p, &[stat], trials, seed, pool)?.remove(0))
}
