//! Numeric audit of the upper bounds on `E[U_k]`.

use std::fmt;

use raagprobe_core::formulas::{
    envelope_g, expected_proper_star_k_separations, highp_envelope_f, star_sep_bound_a,
    star_sep_bound_b, threshold,
};
use serde::Serialize;

use super::ExperimentError;

/// Boundary between the high-p and low-p envelope regions.
pub const ENVELOPE_SPLIT: f64 = 0.4;

/// Limits of the corner ratios `F(k+1, 2k+2, 3/5)/F(k, 2k, 3/5)` and
/// `G(k+1, 2k+2, 2/5)/G(k, 2k, 2/5)`.
pub const CORNER_LIMIT_F: f64 = 72.0 / 125.0;
/// See [`CORNER_LIMIT_F`].
pub const CORNER_LIMIT_G: f64 = 24.0 / 25.0;

/// Largest `n` an audit grid may reach.
pub const AUDIT_MAX_N: usize = 10_000;

/// Points to audit: every `n` in range, every `1 <= k <= ⌊n/2⌋`, every `p`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditGrid {
    /// Smallest `n`.
    pub n_min: usize,
    /// Largest `n`.
    pub n_max: usize,
    /// Edge probabilities.
    pub p_values: Vec<f64>,
}

impl Default for AuditGrid {
    /// `n ∈ 6..=60`, `p ∈ {0.05, 0.10, …, 0.95}`.
    fn default() -> Self {
        AuditGrid {
            n_min: 6,
            n_max: 60,
            p_values: (1..20).map(|i| f64::from(i) / 20.0).collect(),
        }
    }
}

/// Which inequality a check is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum BoundKind {
    /// First bound, `n² C(n−1,k) (1−p)^(2k+1) …`.
    BoundA,
    /// Second bound, `k n² C(n−1,k) (1−p)^(k+1) p² …`.
    BoundB,
    /// High-p envelope, on `p >= 2/5`.
    EnvelopeF,
    /// Low-p envelope, on `t(n) <= p <= 2/5`.
    EnvelopeG,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::BoundA => "bound_A",
            BoundKind::BoundB => "bound_B",
            BoundKind::EnvelopeF => "F_env",
            BoundKind::EnvelopeG => "G_env",
        })
    }
}

/// A grid point where `E[U_k]` exceeded a bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    /// Vertex count.
    pub n: usize,
    /// Edge probability.
    pub p: f64,
    /// Separation size.
    pub k: usize,
    /// The failed inequality.
    pub bound: BoundKind,
    /// `E[U_k]`.
    pub expectation: f64,
    /// Bound value after scaling.
    pub bound_value: f64,
}

/// Tightest observed `E[U_k] / bound` for one inequality.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tightness {
    /// The inequality.
    pub bound: BoundKind,
    /// Points checked.
    pub checks: usize,
    /// Largest ratio seen; at most 1 when the bound holds everywhere.
    pub max_ratio: f64,
    /// Where it was attained, as `(n, p, k)`.
    pub at: Option<(usize, f64, usize)>,
}

/// Finite-k value of a corner ratio against its limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CornerRatio {
    /// `F_env` or `G_env`.
    pub envelope: BoundKind,
    /// Ratio taken between `k` and `k + 1`.
    pub k: usize,
    /// Value at this `k`.
    pub value: f64,
    /// Limit as `k → ∞`.
    pub limit: f64,
}

/// Outcome of [`bound_audit`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    /// The audited grid.
    pub grid: AuditGrid,
    /// Factor applied to every bound before comparing (1 unless testing).
    pub bound_scale: f64,
    /// `(n, p, k)` points evaluated.
    pub points: usize,
    /// Per-inequality tightness.
    pub tightness: Vec<Tightness>,
    /// Every failed check.
    pub violations: Vec<Violation>,
    /// Corner ratios at `k = 40`; informational.
    pub corners: Vec<CornerRatio>,
}

impl AuditReport {
    /// No violations.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `F(k+1, 2k+2, 3/5) / F(k, 2k, 3/5)`.
pub fn corner_ratio_f(k: usize) -> Result<f64, ExperimentError> {
    Ok(highp_envelope_f(k + 1, 2 * k + 2, 0.6)? / highp_envelope_f(k, 2 * k, 0.6)?)
}

/// `G(k+1, 2k+2, 2/5) / G(k, 2k, 2/5)`.
pub fn corner_ratio_g(k: usize) -> Result<f64, ExperimentError> {
    Ok(envelope_g(k + 1, 2 * k + 2, 0.4)? / envelope_g(k, 2 * k, 0.4)?)
}

fn holds(e: f64, bound: f64) -> bool {
    e <= bound * (1.0 + 1e-12) + 1e-12
}

/// Checks `E[U_k] <= min(A, B)` everywhere, `E[U_k] <= F_env` for
/// `p >= 2/5` and `E[U_k] <= G_env` for `t(n) <= p <= 2/5`.
///
/// `bound_scale` multiplies every bound; values below 1 are a fault
/// injection hook for testing the violation path.
pub fn bound_audit(grid: &AuditGrid, bound_scale: f64) -> Result<AuditReport, ExperimentError> {
    if grid.n_min < 2 || grid.n_min > grid.n_max || grid.n_max > AUDIT_MAX_N {
        return Err(ExperimentError::Config(format!(
            "audit grid needs 2 <= n_min <= n_max <= {AUDIT_MAX_N}, got {}..={}",
            grid.n_min, grid.n_max
        )));
    }
    if grid.p_values.iter().any(|p| !(0.0..=1.0).contains(p)) || grid.p_values.is_empty() {
        return Err(ExperimentError::Config("audit probabilities must lie in [0, 1]".into()));
    }
    let kinds = [BoundKind::BoundA, BoundKind::BoundB, BoundKind::EnvelopeF, BoundKind::EnvelopeG];
    let mut tightness: Vec<Tightness> = kinds
        .iter()
        .map(|&bound| Tightness { bound, checks: 0, max_ratio: 0.0, at: None })
        .collect();
    let mut violations = Vec::new();
    let mut points = 0;
    for n in grid.n_min..=grid.n_max {
        let t = threshold(n).ok();
        for k in 1..=n / 2 {
            for &p in &grid.p_values {
                points += 1;
                let e = expected_proper_star_k_separations(n, p, k)?;
                let mut checks: Vec<(BoundKind, f64)> = Vec::with_capacity(3);
                // A and B need n >= k + 2, which k <= n/2 gives for n >= 4
                if let (Ok(a), Ok(b)) = (star_sep_bound_a(n, p, k), star_sep_bound_b(n, p, k)) {
                    checks.push((BoundKind::BoundA, a));
                    checks.push((BoundKind::BoundB, b));
                }
                if p >= ENVELOPE_SPLIT {
                    checks.push((BoundKind::EnvelopeF, highp_envelope_f(k, n, 1.0 - p)?));
                }
                if t.is_some_and(|t| t <= p) && p <= ENVELOPE_SPLIT {
                    checks.push((BoundKind::EnvelopeG, envelope_g(k, n, p)?));
                }
                for (kind, raw) in checks {
                    let bound = raw * bound_scale;
                    let slot = &mut tightness[kind as usize];
                    slot.checks += 1;
                    let ratio = if e == 0.0 {
                        0.0
                    } else if bound == 0.0 {
                        f64::INFINITY
                    } else {
                        e / bound
                    };
                    if ratio > slot.max_ratio {
                        slot.max_ratio = ratio;
                        slot.at = Some((n, p, k));
                    }
                    if !holds(e, bound) {
                        violations.push(Violation { n, p, k, bound: kind, expectation: e, bound_value: bound });
                    }
                }
            }
        }
    }
    let corners = vec![
        CornerRatio { envelope: BoundKind::EnvelopeF, k: 40, value: corner_ratio_f(40)?, limit: CORNER_LIMIT_F },
        CornerRatio { envelope: BoundKind::EnvelopeG, k: 40, value: corner_ratio_g(40)?, limit: CORNER_LIMIT_G },
    ];
    Ok(AuditReport {
        grid: grid.clone(),
        bound_scale,
        points,
        tightness,
        violations,
        corners,
    })
}
