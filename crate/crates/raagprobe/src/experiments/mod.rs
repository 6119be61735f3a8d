//! Verification machinery: an enumeration oracle for small `n`, Monte Carlo
//! estimates against closed forms, threshold sweeps, bound audits and lemma
//! fuzzing.
//!
//! Everything that samples is deterministic given its seed. Parallel work is
//! split per trial and the results are gathered in trial order, so outputs
//! are identical for any worker count.

mod audit;
mod enumerate;
mod estimate;
mod fuzz;
mod statistic;
mod sweep;

pub use audit::{
    bound_audit, corner_ratio_f, corner_ratio_g, AuditGrid, AuditReport, BoundKind, CornerRatio,
    Tightness, Violation, AUDIT_MAX_N, CORNER_LIMIT_F, CORNER_LIMIT_G, ENVELOPE_SPLIT,
};
pub use enumerate::{
    enumerate_graphs, enumerate_graphs_up_to, GraphEnumeration, EXTENDED_MAX_N, ORACLE_MAX_N,
};
pub use estimate::{
    monte_carlo, monte_carlo_many, oracle_expectation, oracle_expectation_up_to, pairwise_sum,
    Estimate,
};
pub use fuzz::{check_graph, lemma_property_fuzz, Counterexample, FuzzReport, FuzzSource, Property};
pub use statistic::{Statistic, UnknownStatistic};
pub use sweep::{
    gnuplot_script, real, threshold_sweep, write_sweep_csv, ProbabilityRule, SweepConfig,
    SweepPoint, SweepRow, ThresholdRule, CSV_HEADER, REGIME_MARGIN,
};

use raagprobe_core::detectors::DetectorError;
use raagprobe_core::formulas::FormulaError;
use raagprobe_core::sampler::SamplerError;
use rayon::{ThreadPool, ThreadPoolBuilder};

/// Errors from the experiment layer.
#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    /// Enumeration requested above the ceiling.
    #[error("enumeration of n={n} exceeds the ceiling n <= {max}")]
    OracleTooLarge {
        /// Requested size.
        n: usize,
        /// Ceiling in force.
        max: usize,
    },
    /// Invalid parameters.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// A closed form rejected its arguments.
    #[error(transparent)]
    Formula(#[from] FormulaError),
    /// The sampler rejected its arguments.
    #[error(transparent)]
    Sampler(#[from] SamplerError),
    /// A detector rejected its arguments.
    #[error(transparent)]
    Detector(#[from] DetectorError),
    /// The thread pool could not be built.
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// A pool with `workers` threads, or one per available core.
pub fn worker_pool(workers: Option<usize>) -> Result<ThreadPool, ExperimentError> {
    if workers == Some(0) {
        return Err(ExperimentError::Config("worker count must be at least 1".into()));
    }
    Ok(ThreadPoolBuilder::new().num_threads(workers.unwrap_or(0)).build()?)
}
