//! Exact expectations of detector counts over `G(n,p)`.

use libm::{exp, log, log1p};

use super::lnmath::{ln_binomial, ln_one_minus_pow, ln_pow, ln_stay};
use super::{check_probability, FormulaError, NEGATIVE_CLAMP};

fn need(n: usize, min: usize) -> Result<(), FormulaError> {
    if n < min {
        Err(FormulaError::TooFewVertices { n, min })
    } else {
        Ok(())
    }
}

/// `ln(n (n−1) ⋯ (n−r+1))`.
fn ln_falling(n: usize, r: usize) -> f64 {
    (0..r).map(|i| log((n - i) as f64)).sum()
}

/// Expected number of ordered non-adjacent domination pairs:
/// `n(n−1)(1−p)(p+(1−p)²)^(n−2)`.
pub fn expected_nonadjacent_domination_pairs(n: usize, p: f64) -> Result<f64, FormulaError> {
    need(n, 2)?;
    check_probability(p)?;
    let q = 1.0 - p;
    let ln = ln_falling(n, 2) + ln_pow(q, 1.0) + (n - 2) as f64 * ln_stay(q, 1);
    Ok(exp(ln))
}

/// Expected number of ordered adjacent domination pairs. The complement of
/// `G(n,p)` is `G(n,1−p)` and swaps the two kinds, so this is the
/// non-adjacent count at `1 − p`.
pub fn expected_adjacent_domination_pairs(n: usize, p: f64) -> Result<f64, FormulaError> {
    check_probability(p)?;
    expected_nonadjacent_domination_pairs(n, 1.0 - p)
}

/// Expected number of ordered domination diamonds:
/// `n!/(n−4)! · p⁴(1−p)²(p+(1−p)²)^(n−4)`.
pub fn expected_domination_diamonds(n: usize, p: f64) -> Result<f64, FormulaError> {
    need(n, 4)?;
    check_probability(p)?;
    let q = 1.0 - p;
    let ln = ln_falling(n, 4) + ln_pow(p, 4.0) + ln_pow(q, 2.0) + (n - 4) as f64 * ln_stay(q, 1);
    Ok(exp(ln))
}

fn check_k(n: usize, k: usize) -> Result<(), FormulaError> {
    need(n, 2)?;
    if k == 0 || k >= n {
        return Err(FormulaError::SizeOutOfRange { k, n });
    }
    Ok(())
}

/// `ln` of the bracketed probability in `E[U_k]`, i.e. of
///
/// `(p+q^(k+1))^m + (1−p^m)(1−q^(km)) − 1`,  `m = n−k−1`,
///
/// computed as a sum of non-negative terms. Each of the `m` outside
/// vertices is either in `lk(a)` (and then adjacent to `S` or not) or
/// misses both `a` and `S`; the bracket asks for at least one vertex of
/// the second kind and at least one edge into `S`. Grouping by the number
/// `j` of second-kind vertices gives
///
/// `Σ_{j=1}^{m−1} C(m,j) q^((k+1)j) p^(m−j) (1 − q^(k(m−j)))`.
///
/// The log-terms are concave in `j`, so the walk stops once it is past the
/// peak and the terms are negligible.
fn ln_star_bracket(m: usize, k: usize, p: f64) -> f64 {
    let q = 1.0 - p;
    if m < 2 || p == 0.0 || q == 0.0 {
        return f64::NEG_INFINITY;
    }
    let (ln_p, ln_q) = (log(p), log1p(-p));
    let kf = k as f64;
    let mut ln_choose = 0.0;
    let mut peak = f64::NEG_INFINITY;
    // running sum of exp(term − peak)
    let mut scaled = 0.0;
    for j in 1..m {
        ln_choose += log((m - j + 1) as f64) - log(j as f64);
        let term = ln_choose
            + (kf + 1.0) * j as f64 * ln_q
            + (m - j) as f64 * ln_p
            + ln_one_minus_pow(q, kf * (m - j) as f64);
        if term > peak {
            scaled = scaled * exp(peak - term) + 1.0;
            peak = term;
        } else {
            scaled += exp(term - peak);
            if term < peak - 60.0 {
                break;
            }
        }
    }
    peak + log(scaled)
}

/// Expected number of proper star `k`-separations:
///
/// `n C(n−1,k) (1−p)^k [(p+(1−p)^(k+1))^(n−k−1) + (1−p^(n−k−1))(1−(1−p)^(k(n−k−1))) − 1]`.
///
/// Requires `1 <= k <= n − 1`.
pub fn expected_proper_star_k_separations(n: usize, p: f64, k: usize) -> Result<f64, FormulaError> {
    check_k(n, k)?;
    check_probability(p)?;
    let m = n - k - 1;
    let ln = log(n as f64)
        + ln_binomial((n - 1) as u64, k as u64)
        + ln_pow(1.0 - p, k as f64)
        + ln_star_bracket(m, k, p);
    Ok(exp(ln))
}

/// The same quantity evaluated literally, with the bracket as printed.
///
/// Subject to cancellation when the bracket is tiny; residues down to
/// `−1e−12` are clamped to zero, anything more negative is an error.
pub fn expected_proper_star_k_separations_direct(
    n: usize,
    p: f64,
    k: usize,
) -> Result<f64, FormulaError> {
    check_k(n, k)?;
    check_probability(p)?;
    let q = 1.0 - p;
    let m = (n - k - 1) as f64;
    let kf = k as f64;
    let bracket = exp(m * ln_stay(q, k as u32))
        + (1.0 - exp(ln_pow(p, m))) * (1.0 - exp(ln_pow(q, kf * m)))
        - 1.0;
    let scale = exp(log(n as f64) + ln_binomial((n - 1) as u64, k as u64) + ln_pow(q, kf));
    let value = scale * bracket;
    if value >= 0.0 {
        Ok(value)
    } else if value > -NEGATIVE_CLAMP {
        Ok(0.0)
    } else {
        Err(FormulaError::Negative(value))
    }
}

/// Expected number of isolated vertices, `n(1−p)^(n−1)`.
pub fn expected_isolated_vertices(n: usize, p: f64) -> Result<f64, FormulaError> {
    need(n, 1)?;
    check_probability(p)?;
    Ok(exp(log(n as f64) + ln_pow(1.0 - p, (n - 1) as f64)))
}

/// Expected number of degree-1 vertices, `n(n−1)p(1−p)^(n−2)`.
pub fn expected_valence_one_vertices(n: usize, p: f64) -> Result<f64, FormulaError> {
    need(n, 2)?;
    check_probability(p)?;
    Ok(exp(ln_falling(n, 2) + ln_pow(p, 1.0) + ln_pow(1.0 - p, (n - 2) as f64)))
}

/// Expected number of isolated edges, `C(n,2) p (1−p)^(2(n−2))`.
pub fn expected_isolated_edges(n: usize, p: f64) -> Result<f64, FormulaError> {
    need(n, 2)?;
    check_probability(p)?;
    Ok(exp(
        ln_falling(n, 2) - log(2.0) + ln_pow(p, 1.0) + ln_pow(1.0 - p, 2.0 * (n - 2) as f64),
    ))
}
