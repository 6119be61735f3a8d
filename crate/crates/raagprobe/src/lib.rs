//! Graph files, reports, experiments and the command line for
//! [`raagprobe_core`].
//!
//! - [`format`]: the `n`/`e` graph text format;
//! - [`report`]: JSON and text reports for single graphs and closed forms;
//! - [`experiments`]: enumeration oracle, Monte Carlo estimates, threshold
//!   sweeps, bound audits and lemma fuzzing;
//! - [`cli`]: the `raagprobe` binary.
#![deny(unsafe_code)]
#![warn(missing_docs)]

pub mod cli;
pub mod experiments;
pub mod format;
pub mod report;

pub use raagprobe_core as core;
