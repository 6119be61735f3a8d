//! Upper bounds and envelopes for `E[U_k]`, plus the convexity function used
//! for the domination limits.

use libm::{exp, log};

use super::lnmath::{ln_binomial, ln_pow, ln_stay};
use super::{check_probability, FormulaError};

fn check_bound_args(n: usize, k: usize) -> Result<(), FormulaError> {
    if k == 0 {
        return Err(FormulaError::SizeOutOfRange { k, n });
    }
    if n < k + 2 {
        return Err(FormulaError::TooFewVertices { n, min: k + 2 });
    }
    Ok(())
}

/// `n² C(n−1,k) (1−p)^(2k+1) (p+(1−p)^(k+1))^(n−k−2)`; requires `n >= k + 2`.
pub fn star_sep_bound_a(n: usize, p: f64, k: usize) -> Result<f64, FormulaError> {
    check_bound_args(n, k)?;
    check_probability(p)?;
    let q = 1.0 - p;
    let ln = 2.0 * log(n as f64)
        + ln_binomial((n - 1) as u64, k as u64)
        + ln_pow(q, (2 * k + 1) as f64)
        + (n - k - 2) as f64 * ln_stay(q, k as u32);
    Ok(exp(ln))
}

/// `k n² C(n−1,k) (1−p)^(k+1) p² (p+(1−p)^(k+1))^(n−k−2)`; requires `n >= k + 2`.
pub fn star_sep_bound_b(n: usize, p: f64, k: usize) -> Result<f64, FormulaError> {
    check_bound_args(n, k)?;
    check_probability(p)?;
    let q = 1.0 - p;
    let ln = log(k as f64)
        + 2.0 * log(n as f64)
        + ln_binomial((n - 1) as u64, k as u64)
        + ln_pow(q, (k + 1) as f64)
        + ln_pow(p, 2.0)
        + (n - k - 2) as f64 * ln_stay(q, k as u32);
    Ok(exp(ln))
}

/// `F(x, y) = x^(k+1) (y + (1−y)^(k+1))^(x−k−1)` for real `x > k + 1`.
pub fn convexity_bound_f(k: usize, x: f64, y: f64) -> Result<f64, FormulaError> {
    if k == 0 {
        return Err(FormulaError::Domain("k must be at least 1"));
    }
    let kf = k as f64;
    if !x.is_finite() || x <= kf + 1.0 {
        return Err(FormulaError::Domain("x must exceed k + 1"));
    }
    check_probability(y)?;
    let ln = (kf + 1.0) * log(x) + (x - kf - 1.0) * ln_stay(1.0 - y, k as u32);
    Ok(exp(ln))
}

/// `ln(n^n / ((n−k)^(n−k) k^j))`, the binomial envelope with `k^j` below.
fn ln_binomial_envelope(n: usize, k: usize, j: usize) -> f64 {
    let (nf, kf) = (n as f64, k as f64);
    nf * log(nf) - (nf - kf) * log(nf - kf) - j as f64 * log(kf)
}

fn check_envelope_args(n: usize, k: usize) -> Result<(), FormulaError> {
    if k == 0 {
        return Err(FormulaError::SizeOutOfRange { k, n });
    }
    if n < 2 * k {
        return Err(FormulaError::TooFewVertices { n, min: 2 * k });
    }
    Ok(())
}

/// High-p envelope in `q = 1 − p`:
///
/// `n^n/((n−k)^(n−k) k^k) · n² q^(2k+1) (1−q+q^(k+1))^(n−k−2)`; requires `n >= 2k`.
pub fn highp_envelope_f(k: usize, n: usize, q: f64) -> Result<f64, FormulaError> {
    check_envelope_args(n, k)?;
    check_probability(q)?;
    let ln = ln_binomial_envelope(n, k, k)
        + 2.0 * log(n as f64)
        + ln_pow(q, (2 * k + 1) as f64)
        + (n as f64 - k as f64 - 2.0) * ln_stay(q, k as u32);
    Ok(exp(ln))
}

/// Low-p envelope:
///
/// `n^n/((n−k)^(n−k) k^(k−1)) · n² p² (1−p)^(k+1) (p+(1−p)^(k+1))^(n−k−2)`;
/// requires `n >= 2k`.
pub fn envelope_g(k: usize, n: usize, p: f64) -> Result<f64, FormulaError> {
    check_envelope_args(n, k)?;
    check_probability(p)?;
    let q = 1.0 - p;
    let ln = ln_binomial_envelope(n, k, k - 1)
        + 2.0 * log(n as f64)
        + ln_pow(p, 2.0)
        + ln_pow(q, (k + 1) as f64)
        + (n as f64 - k as f64 - 2.0) * ln_stay(q, k as u32);
    Ok(exp(ln))
}
