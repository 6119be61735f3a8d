//! Log-space helpers shared by the closed forms.

use libm::{expm1, lgamma, log, log1p};

/// `ln(base^exp)` with `0^0 = 1`.
#[inline]
pub(crate) fn ln_pow(base: f64, exp: f64) -> f64 {
    if exp == 0.0 {
        0.0
    } else if base == 0.0 {
        if exp > 0.0 {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    } else {
        exp * log(base)
    }
}

/// `ln(1 − q^x)` for `q ∈ [0, 1]`, `x >= 0`; `−∞` when the value is 0.
#[inline]
pub(crate) fn ln_one_minus_pow(q: f64, x: f64) -> f64 {
    if x == 0.0 || q == 1.0 {
        f64::NEG_INFINITY
    } else if q == 0.0 {
        0.0
    } else {
        log(-expm1(x * log(q)))
    }
}

/// `ln(1 − q + q^(j+1))`, i.e. `ln(p + q^(j+1))` with `p = 1 − q`, written
/// as `log1p(−q(1 − q^j))` so it stays accurate when the base is near 1.
#[inline]
pub(crate) fn ln_stay(q: f64, j: u32) -> f64 {
    if q == 0.0 || j == 0 {
        return 0.0;
    }
    let gap = -expm1(f64::from(j) * log(q));
    log1p(-q * gap)
}

/// Exact `C(n, k)` when it fits in a `u128`.
pub fn binomial_exact(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // c·(n − i) is divisible by (i + 1) at every step.
        c = c.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    Some(c)
}

/// Past this many factors the ratio sum hands over to log-gamma.
const RATIO_SUM_LIMIT: u64 = 256;

fn ln_binomial_ratio_sum(n: u64, k: u64) -> f64 {
    (1..=k)
        .map(|i| log((n - k + i) as f64) - log(i as f64))
        .sum()
}

fn ln_binomial_lgamma(n: u64, k: u64) -> f64 {
    lgamma(n as f64 + 1.0) - lgamma(k as f64 + 1.0) - lgamma((n - k) as f64 + 1.0)
}

/// `ln C(n, k)`: exact integer arithmetic while it fits, then a ratio sum
/// for small `min(k, n − k)`, then log-gamma. `−∞` when `k > n`.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    if let Some(c) = binomial_exact(n, k) {
        return log(c as f64);
    }
    if k <= RATIO_SUM_LIMIT {
        ln_binomial_ratio_sum(n, k)
    } else {
        ln_binomial_lgamma(n, k)
    }
}
