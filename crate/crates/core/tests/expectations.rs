//! Closed-form expectations.

use raagprobe_core::formulas::*;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn nonadjacent_pairs() {
    for n in 2..10 {
        let e0 = expected_nonadjacent_domination_pairs(n, 0.0).unwrap();
        assert!(close(e0, (n * (n - 1)) as f64, 1e-9));
        assert_eq!(expected_nonadjacent_domination_pairs(n, 1.0).unwrap(), 0.0);
    }
    assert!(close(expected_nonadjacent_domination_pairs(4, 0.5).unwrap(), 3.375, 1e-12));
    assert!(expected_nonadjacent_domination_pairs(1, 0.5).is_err());
    assert!(expected_nonadjacent_domination_pairs(5, 1.5).is_err());
    assert!(expected_nonadjacent_domination_pairs(5, f64::NAN).is_err());
}

#[test]
fn adjacent_pairs() {
    for n in 2..10 {
        let e1 = expected_adjacent_domination_pairs(n, 1.0).unwrap();
        assert!(close(e1, (n * (n - 1)) as f64, 1e-9));
        assert_eq!(expected_adjacent_domination_pairs(n, 0.0).unwrap(), 0.0);
    }
    assert!(close(expected_adjacent_domination_pairs(4, 0.5).unwrap(), 3.375, 1e-12));
    // closed form n(n−1) p (1−p+p²)^(n−2)
    let (n, p) = (7usize, 0.3f64);
    let direct = 42.0 * p * libm::pow(1.0 - p + p * p, 5.0);
    assert!(close(expected_adjacent_domination_pairs(n, p).unwrap(), direct, 1e-12));
}

#[test]
fn diamonds() {
    assert_eq!(expected_domination_diamonds(6, 0.0).unwrap(), 0.0);
    assert_eq!(expected_domination_diamonds(6, 1.0).unwrap(), 0.0);
    for &p in &[0.1, 0.5, 0.8] {
        let want = 24.0 * libm::pow(p, 4.0) * libm::pow(1.0 - p, 2.0);
        assert!(close(expected_domination_diamonds(4, p).unwrap(), want, 1e-12));
    }
    assert!(close(expected_domination_diamonds(5, 0.5).unwrap(), 1.40625, 1e-12));
    assert!(expected_domination_diamonds(3, 0.5).is_err());
}

#[test]
fn star_separations_vanish() {
    for n in 2..8 {
        for k in 1..n {
            assert_eq!(expected_proper_star_k_separations(n, 1.0, k).unwrap(), 0.0);
            assert_eq!(expected_proper_star_k_separations(n, 0.0, k).unwrap(), 0.0);
        }
    }
    for i in 0..=20 {
        let p = f64::from(i) / 20.0;
        assert_eq!(expected_proper_star_k_separations(3, p, 1).unwrap(), 0.0);
        assert!(expected_proper_star_k_separations_direct(3, p, 1).unwrap().abs() < 1e-12);
    }
    assert!(expected_proper_star_k_separations(4, 0.5, 4).is_err());
    assert!(expected_proper_star_k_separations(4, 0.5, 0).is_err());
}

#[test]
fn series_matches_direct_where_well_conditioned() {
    for n in 3..40 {
        for k in 1..n {
            for i in 1..20 {
                let p = f64::from(i) / 20.0;
                let a = expected_proper_star_k_separations(n, p, k).unwrap();
                let b = expected_proper_star_k_separations_direct(n, p, k).unwrap();
                // the literal bracket cancels terms of size up to 1 against each other
                let scale =
                    ((n as f64).ln() + ln_binomial((n - 1) as u64, k as u64) + k as f64 * (1.0 - p).ln()).exp();
                assert!(
                    (a - b).abs() <= 1e-12 * a.max(1.0) + 8.0 * f64::EPSILON * scale,
                    "n={n} k={k} p={p}: series {a} direct {b}"
                );
            }
        }
    }
}

#[test]
fn matches_extended_precision() {
    // 40-digit evaluations of the printed formula
    let cases = [
        (26usize, 0.15f64, 9usize, 0.539_614_278_417_310_4),
        (10, 0.3, 2, 6.781_623_855_252_617),
    ];
    for (n, p, k, want) in cases {
        let got = expected_proper_star_k_separations(n, p, k).unwrap();
        assert!((got / want - 1.0).abs() < 1e-13, "n={n} k={k} p={p}: {got}");
    }
}

#[test]
fn small_graph_values() {
    // From exhaustive enumeration over all labelled graphs.
    assert!(close(expected_proper_star_k_separations(4, 0.5, 1).unwrap(), 0.75, 1e-12));
    assert!(close(expected_proper_star_k_separations(5, 0.5, 1).unwrap(), 1.875, 1e-12));
    assert!(close(expected_proper_star_k_separations(5, 0.5, 2).unwrap(), 0.703125, 1e-12));
    assert_eq!(expected_proper_star_k_separations(4, 0.3, 2).unwrap(), 0.0);
}

#[test]
fn classical_counts() {
    assert!(close(expected_isolated_vertices(5, 0.0).unwrap(), 5.0, 1e-12));
    assert!(close(expected_valence_one_vertices(2, 1.0).unwrap(), 2.0, 1e-12));
    assert!(close(expected_isolated_edges(2, 1.0).unwrap(), 1.0, 1e-12));
    assert!(close(expected_isolated_edges(4, 0.5).unwrap(), 6.0 * 0.5 / 16.0, 1e-12));
}

#[test]
fn huge_n_is_finite() {
    for &n in &[1_000usize, 100_000, 10_000_000] {
        for i in 1..20 {
            let p = f64::from(i) / 20.0;
            for f in [
                expected_nonadjacent_domination_pairs(n, p).unwrap(),
                expected_adjacent_domination_pairs(n, p).unwrap(),
                expected_domination_diamonds(n, p).unwrap(),
                expected_isolated_vertices(n, p).unwrap(),
            ] {
                assert!(f.is_finite() && f >= 0.0);
            }
        }
        let t = (libm::log(n as f64) + libm::log(libm::log(n as f64))) / n as f64;
        for k in 1..4 {
            let e = expected_proper_star_k_separations(n, t, k).unwrap();
            assert!(e.is_finite() && e >= 0.0, "n={n} k={k}");
        }
    }
}
