//! Upper bounds on star separation counts.

use raagprobe_core::formulas::*;
use raagprobe_core::formulas::expected_proper_star_k_separations as euk;

#[test]
fn vanishing_factors() {
    assert_eq!(star_sep_bound_b(10, 0.0, 2).unwrap(), 0.0);
    assert_eq!(star_sep_bound_a(10, 1.0, 2).unwrap(), 0.0);
    assert_eq!(envelope_g(2, 10, 0.0).unwrap(), 0.0);
    assert_eq!(envelope_g(2, 10, 1.0).unwrap(), 0.0);
    assert_eq!(highp_envelope_f(2, 10, 0.0).unwrap(), 0.0);
}

#[test]
fn bounds_dominate_at_examples() {
    for &(n, p, k) in &[(10usize, 0.3f64, 2usize), (20, 0.7, 3)] {
        let e = euk(n, p, k).unwrap();
        let a = star_sep_bound_a(n, p, k).unwrap();
        let b = star_sep_bound_b(n, p, k).unwrap();
        assert!(e <= a.min(b), "n={n} p={p} k={k}: {e} vs {a} {b}");
    }
    assert!(euk(10, 0.3, 2).unwrap() <= envelope_g(2, 10, 0.3).unwrap());
    assert!(euk(10, 0.4, 1).unwrap() <= highp_envelope_f(1, 10, 0.6).unwrap());
}

#[test]
fn bound_preconditions() {
    assert!(star_sep_bound_a(4, 0.5, 3).is_err());
    assert!(star_sep_bound_b(5, 0.5, 3).is_ok());
    assert!(envelope_g(3, 5, 0.5).is_err());
    assert!(highp_envelope_f(0, 5, 0.5).is_err());
}

#[test]
fn convexity_function() {
    let x: f64 = 37.5;
    for k in 1..4 {
        let want = libm::pow(x, k as f64 + 1.0);
        assert!((convexity_bound_f(k, x, 1.0).unwrap() / want - 1.0).abs() < 1e-13);
        assert!((convexity_bound_f(k, x, 0.0).unwrap() / want - 1.0).abs() < 1e-13);
    }
    // 10⁴ · 0.84^98, reference from 40-digit arithmetic
    let f = convexity_bound_f(1, 100.0, 0.2).unwrap();
    let reference = 3.796_383_123_103_143e-4;
    assert!((f / reference - 1.0).abs() < 1e-12, "{f}");
    assert!(convexity_bound_f(1, 2.0, 0.5).is_err());
    assert!(convexity_bound_f(0, 5.0, 0.5).is_err());
    assert!(convexity_bound_f(1, 5.0, 1.5).is_err());
}
