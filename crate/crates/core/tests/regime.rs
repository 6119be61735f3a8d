//! Threshold window and regime labels.

use raagprobe_core::formulas::*;

#[test]
fn threshold_values() {
    let t = threshold(1000).unwrap();
    assert!((t - 0.008_840_400_012_898_2).abs() < 1e-15);
    assert!(threshold(2).is_err());
    assert!(threshold(3).unwrap() > 0.0);
}

#[test]
fn windows() {
    let w = threshold_window(1000, 0.0, 0.0).unwrap();
    let t = threshold(1000).unwrap();
    assert_eq!(w.lo, t);
    assert!((w.hi - (1.0 - t)).abs() < 1e-15);
    assert!(matches!(
        threshold_window(10, 5.0, 5.0),
        Err(FormulaError::EmptyWindow { .. })
    ));
    assert!(threshold_window(100, -1.0, 0.0).is_err());
}

#[test]
fn regimes() {
    let r = classify_regime(1000, 0.5, 3.0).unwrap();
    assert_eq!(r.regime, Regime::Window);
    assert!(!r.adjacent_expected && !r.nonadjacent_expected);

    let r = classify_regime(1000, 0.001, 3.0).unwrap();
    assert_eq!(r.regime, Regime::SparseInfinite);
    assert!(r.adjacent_expected && r.nonadjacent_expected);

    let r = classify_regime(1000, 0.9995, 3.0).unwrap();
    assert_eq!(r.regime, Regime::DenseInfinite);
    assert!(r.adjacent_expected && r.nonadjacent_expected);

    let r = classify_regime(1000, 1e-8, 3.0).unwrap();
    assert_eq!(r.regime, Regime::NearEdgeless);
    assert!(!r.adjacent_expected && r.nonadjacent_expected);

    let r = classify_regime(1000, 1.0, 3.0).unwrap();
    assert_eq!(r.regime, Regime::NearComplete);
    assert!(r.adjacent_expected && !r.nonadjacent_expected);
}

#[test]
fn ties_go_to_infinite_side() {
    let w = threshold_window(1000, 3.0, 3.0).unwrap();
    assert_eq!(classify_regime(1000, w.lo, 3.0).unwrap().regime, Regime::SparseInfinite);
    assert_eq!(classify_regime(1000, w.hi, 3.0).unwrap().regime, Regime::DenseInfinite);
    // the critical band is labelled infinite but predicts nothing
    let mid = threshold(1000).unwrap();
    let r = classify_regime(1000, mid, 3.0).unwrap();
    assert_eq!(r.regime, Regime::SparseInfinite);
    assert!(!r.nonadjacent_expected);
}

#[test]
fn degenerate_window_and_zero_margin() {
    // n = 10, ω = 5 has no window at all
    assert_eq!(classify_regime(10, 0.5, 5.0).unwrap().regime, Regime::SparseInfinite);
    assert_eq!(classify_regime(10, 0.6, 5.0).unwrap().regime, Regime::DenseInfinite);
    assert_eq!(classify_regime(100, 0.0, 0.0).unwrap().regime, Regime::NearEdgeless);
    assert_eq!(classify_regime(100, 0.01, 0.0).unwrap().regime, Regime::SparseInfinite);
    assert!(classify_regime(100, 0.5, -1.0).is_err());
    assert!(classify_regime(2, 0.5, 1.0).is_err());
}
