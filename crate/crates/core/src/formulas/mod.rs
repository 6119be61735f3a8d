//! Closed-form expectations over `G(n,p)`, analytic upper bounds, threshold
//! functions and a finite-n regime classifier.
//!
//! All logarithms are natural. Products whose exponents grow with `n` are
//! evaluated as sums of logarithms and exponentiated once at the end, so
//! every function stays finite for `n` up to at least `10⁷`.

mod bounds;
mod expectations;
mod lnmath;
mod regime;

pub use bounds::{convexity_bound_f, envelope_g, highp_envelope_f, star_sep_bound_a, star_sep_bound_b};
pub use expectations::{
    expected_adjacent_domination_pairs, expected_domination_diamonds, expected_isolated_edges,
    expected_isolated_vertices, expected_nonadjacent_domination_pairs,
    expected_proper_star_k_separations, expected_proper_star_k_separations_direct,
    expected_valence_one_vertices,
};
pub use lnmath::{binomial_exact, ln_binomial};
pub use regime::{classify_regime, threshold, threshold_window, Regime, RegimeLabel, ThresholdWindow};

/// Domain errors for the numeric functions in this module.
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum FormulaError {
    /// `n` below the smallest meaningful value.
    #[error("n={n} is too small (need n >= {min})")]
    TooFewVertices {
        /// Supplied vertex count.
        n: usize,
        /// Smallest accepted value.
        min: usize,
    },
    /// A probability outside `[0, 1]` or not finite.
    #[error("probability {0} outside [0, 1]")]
    Probability(f64),
    /// Separation size outside its admissible range.
    #[error("k={k} out of range for n={n}")]
    SizeOutOfRange {
        /// Requested size.
        k: usize,
        /// Vertex count.
        n: usize,
    },
    /// A real argument outside the function's domain.
    #[error("argument out of domain: {0}")]
    Domain(&'static str),
    /// Threshold window with `lo >= hi`.
    #[error("empty threshold window: lo={lo} >= hi={hi}")]
    EmptyWindow {
        /// Lower endpoint.
        lo: f64,
        /// Upper endpoint.
        hi: f64,
    },
    /// A margin that is negative or not finite.
    #[error("margin {0} must be finite and non-negative")]
    Margin(f64),
    /// A closed form came out clearly negative; indicates a numerical bug.
    #[error("closed form evaluated to {0} < 0")]
    Negative(f64),
}

pub(crate) fn check_probability(p: f64) -> Result<(), FormulaError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(FormulaError::Probability(p))
    }
}

/// Negative rounding residue below this magnitude is reported as zero.
pub const NEGATIVE_CLAMP: f64 = 1e-12;

/// Every closed form and bound at one `(n, p, k)`.
///
/// Quantities whose preconditions fail at this point are `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectationPoint {
    /// Vertex count.
    pub n: usize,
    /// Edge probability.
    pub p: f64,
    /// Separation size, when star-separation quantities were requested.
    pub k: Option<usize>,
    /// `E[X]`, non-adjacent domination pairs.
    pub e_nonadj_dom: f64,
    /// Adjacent domination pairs.
    pub e_adj_dom: f64,
    /// `E[W]`, domination diamonds (`n >= 4`).
    pub e_diamonds: Option<f64>,
    /// `E[U_k]`, proper star k-separations.
    pub e_proper_star_k: Option<f64>,
    /// First bound on `E[U_k]` (`n >= k + 2`).
    pub bound_a: Option<f64>,
    /// Second bound on `E[U_k]` (`n >= k + 2`).
    pub bound_b: Option<f64>,
    /// High-p envelope at `q = 1 − p` (`n >= 2k`).
    pub f_env: Option<f64>,
    /// Low-p envelope (`n >= 2k`).
    pub g_env: Option<f64>,
    /// `(ln n + ln ln n) / n` (`n >= 3`).
    pub threshold: Option<f64>,
}

impl ExpectationPoint {
    /// Evaluates everything defined at `(n, p, k)`. Requires `n >= 2` and,
    /// when given, `1 <= k <= n − 1`.
    pub fn evaluate(n: usize, p: f64, k: Option<usize>) -> Result<Self, FormulaError> {
        let e_nonadj_dom = expected_nonadjacent_domination_pairs(n, p)?;
        let e_adj_dom = expected_adjacent_domination_pairs(n, p)?;
        let e_diamonds = expected_domination_diamonds(n, p).ok();
        let mut point = ExpectationPoint {
            n,
            p,
            k,
            e_nonadj_dom,
            e_adj_dom,
            e_diamonds,
            e_proper_star_k: None,
            bound_a: None,
            bound_b: None,
            f_env: None,
            g_env: None,
            threshold: threshold(n).ok(),
        };
        if let Some(k) = k {
            point.e_proper_star_k = Some(expected_proper_star_k_separations(n, p, k)?);
            point.bound_a = star_sep_bound_a(n, p, k).ok();
            point.bound_b = star_sep_bound_b(n, p, k).ok();
            point.f_env = highp_envelope_f(k, n, 1.0 - p).ok();
            point.g_env = envelope_g(k, n, p).ok();
        }
        Ok(point)
    }
}
