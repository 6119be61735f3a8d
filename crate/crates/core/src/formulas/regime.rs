//! Connectivity-style threshold `(ln n + ln ln n)/n` and the finite-n
//! reading of the asymptotic domination regimes.
//!
//! The asymptotic statements use a sequence `ω(n) → ∞`; at finite `n` a
//! single user margin `ω >= 0` stands in for it. `x → 0` is read as
//! `x <= 1/ω` and `x → ∞` as `x >= ω` (with `ω = 0`: `x = 0` and `x > 0`).

use core::fmt;

use libm::log;

use super::{check_probability, FormulaError};

fn ln_ln_sum(n: usize) -> Result<f64, FormulaError> {
    if n < 3 {
        return Err(FormulaError::TooFewVertices { n, min: 3 });
    }
    let ln_n = log(n as f64);
    Ok(ln_n + log(ln_n))
}

/// `t(n) = (ln n + ln ln n) / n`, defined for `n >= 3`.
pub fn threshold(n: usize) -> Result<f64, FormulaError> {
    Ok(ln_ln_sum(n)? / n as f64)
}

fn check_margin(omega: f64) -> Result<(), FormulaError> {
    if omega.is_finite() && omega >= 0.0 {
        Ok(())
    } else {
        Err(FormulaError::Margin(omega))
    }
}

/// `lo = t(n) + ω₁/n < p < hi = 1 − t(n) − ω₂/n`: the band where no
/// domination pairs are expected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdWindow {
    /// Vertex count.
    pub n: usize,
    /// Lower margin.
    pub omega1: f64,
    /// Upper margin.
    pub omega2: f64,
    /// Lower endpoint.
    pub lo: f64,
    /// Upper endpoint.
    pub hi: f64,
}

impl ThresholdWindow {
    /// Strict containment.
    pub fn contains(&self, p: f64) -> bool {
        self.lo < p && p < self.hi
    }
}

/// Builds the window; fails when `lo >= hi` or a margin is negative.
pub fn threshold_window(n: usize, omega1: f64, omega2: f64) -> Result<ThresholdWindow, FormulaError> {
    check_margin(omega1)?;
    check_margin(omega2)?;
    let s = ln_ln_sum(n)?;
    let nf = n as f64;
    let lo = (s + omega1) / nf;
    let hi = 1.0 - (s + omega2) / nf;
    if lo >= hi {
        return Err(FormulaError::EmptyWindow { lo, hi });
    }
    Ok(ThresholdWindow {
        n,
        omega1,
        omega2,
        lo,
        hi,
    })
}

/// Primary regime of `(n, p)` at margin `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `p n² → 0`: almost surely edgeless.
    NearEdgeless,
    /// Below the lower threshold: domination pairs expected.
    SparseInfinite,
    /// Inside the window: no domination pairs expected.
    Window,
    /// Above the upper threshold: domination pairs expected.
    DenseInfinite,
    /// `(1 − p) n² → 0`: almost surely complete.
    NearComplete,
}

impl Regime {
    /// Stable name used in tables and CSV.
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::NearEdgeless => "NearEdgeless",
            Regime::SparseInfinite => "SparseInfinite",
            Regime::Window => "Window",
            Regime::DenseInfinite => "DenseInfinite",
            Regime::NearComplete => "NearComplete",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Regime plus which kinds of domination pairs the asymptotic statements
/// predict at this point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegimeLabel {
    /// Primary label.
    pub regime: Regime,
    /// Adjacent domination pairs are predicted to exist.
    pub adjacent_expected: bool,
    /// Non-adjacent domination pairs are predicted to exist.
    pub nonadjacent_expected: bool,
}

fn vanishing(x: f64, omega: f64) -> bool {
    if omega > 0.0 {
        x <= 1.0 / omega
    } else {
        x == 0.0
    }
}

fn diverging(x: f64, omega: f64) -> bool {
    if omega > 0.0 {
        x >= omega
    } else {
        x > 0.0
    }
}

/// Classifies `(n, p)` with margin `ω`.
///
/// `Window` requires `p` strictly inside [`threshold_window`]`(n, ω, ω)`;
/// everything else, including the critical bands of width `2ω/n` around the
/// thresholds, gets an infinite-side label. `NearEdgeless` and
/// `NearComplete` refine the sparse and dense sides.
pub fn classify_regime(n: usize, p: f64, omega: f64) -> Result<RegimeLabel, FormulaError> {
    check_probability(p)?;
    check_margin(omega)?;
    let s = ln_ln_sum(n)?;
    let nf = n as f64;
    let n2 = nf * nf;
    let q = 1.0 - p;

    let window = threshold_window(n, omega, omega).ok();
    let sparse_side = match window {
        Some(w) if w.contains(p) => None,
        Some(w) => Some(p <= w.lo),
        None => Some(p <= 0.5),
    };
    let regime = match sparse_side {
        None => Regime::Window,
        Some(true) if vanishing(p * n2, omega) => Regime::NearEdgeless,
        Some(true) => Regime::SparseInfinite,
        Some(false) if vanishing(q * n2, omega) => Regime::NearComplete,
        Some(false) => Regime::DenseInfinite,
    };

    let below = p < (s - omega) / nf;
    let above = p > 1.0 - (s - omega) / nf;
    let adjacent_expected =
        !vanishing(p * n2, omega) && ((below && diverging(p * n2, omega)) || above);
    let nonadjacent_expected =
        !vanishing(q * n2, omega) && (below || (above && diverging(q * n2, omega)));
    Ok(RegimeLabel {
        regime,
        adjacent_expected,
        nonadjacent_expected,
    })
}
