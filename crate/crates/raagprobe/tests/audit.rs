//! Bound audit and corner ratios.

use raagprobe::experiments::*;

fn tiny() -> AuditGrid {
    AuditGrid { n_min: 3, n_max: 14, p_values: vec![0.1, 0.4, 0.7] }
}

#[test]
fn small_grid_passes() {
    let r = bound_audit(&tiny(), 1.0).unwrap();
    assert!(r.passed(), "{:?}", r.violations);
    assert!(r.tightness.iter().all(|t| t.checks > 0 && t.max_ratio <= 1.0));
}

#[test]
fn n3_row_is_trivial() {
    let g = AuditGrid { n_min: 3, n_max: 3, p_values: vec![0.5] };
    let r = bound_audit(&g, 1.0).unwrap();
    assert_eq!(r.points, 1);
    assert!(r.passed());
}

#[test]
fn scaled_bounds_are_caught() {
    let r = bound_audit(&tiny(), 0.5).unwrap();
    assert!(!r.passed());
    assert!(r.violations.iter().all(|v| v.expectation > v.bound_value));
}

#[test]
fn corner_ratios_converge() {
    // the G ratio behaves like (24/25)(1 + 1/k)³, the F ratio like (72/125)(1 + 1/k)²
    let f = corner_ratio_f(400).unwrap();
    let g = corner_ratio_g(400).unwrap();
    assert!((f / (CORNER_LIMIT_F * (1.0025f64).powi(2)) - 1.0).abs() < 1e-3, "{f}");
    assert!((g / (CORNER_LIMIT_G * (1.0025f64).powi(3)) - 1.0).abs() < 1e-3, "{g}");
}

#[test]
fn grid_limits() {
    assert!(bound_audit(&AuditGrid { n_min: 10, n_max: 5, p_values: vec![0.5] }, 1.0).is_err());
    assert!(bound_audit(&AuditGrid { n_min: 6, n_max: 20_000, p_values: vec![0.5] }, 1.0).is_err());
    assert!(bound_audit(&AuditGrid { n_min: 6, n_max: 7, p_values: vec![1.5] }, 1.0).is_err());
}
