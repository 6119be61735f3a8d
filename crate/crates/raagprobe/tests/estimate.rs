//! Oracle means and Monte Carlo estimates.

use raagprobe::experiments::*;
use raagprobe::experiments::worker_pool;

#[test]
fn pairwise_matches_naive_on_integers() {
    let xs: Vec<f64> = (0..1000).map(f64::from).collect();
    assert_eq!(pairwise_sum(&xs), 499_500.0);
    assert_eq!(pairwise_sum(&[]), 0.0);
}

#[test]
fn oracle_small_values() {
    let e = oracle_expectation(4, 0.5, Statistic::NonAdjDomPairs).unwrap();
    assert!((e - 3.375).abs() < 1e-12);
    let e = oracle_expectation(4, 0.5, Statistic::Diamonds).unwrap();
    assert!((e - 0.375).abs() < 1e-12);
    for &p in &[0.1, 0.5, 0.9] {
        assert_eq!(oracle_expectation(3, p, Statistic::ProperStarKSep(1)).unwrap(), 0.0);
    }
    assert!(oracle_expectation(7, 0.5, Statistic::Diamonds).is_err());
}

#[test]
fn degenerate_probabilities() {
    let pool = worker_pool(Some(2)).unwrap();
    let e = monte_carlo(7, 0.0, Statistic::NonAdjDomPairs, 50, 1, &pool).unwrap();
    assert_eq!((e.mean_count, e.std_error_mean, e.existence_frequency), (42.0, 0.0, 1.0));
    assert_eq!(e.z_score(), Some(0.0));
    let e = monte_carlo(7, 1.0, Statistic::StarCutVertices, 50, 1, &pool).unwrap();
    assert_eq!((e.mean_count, e.existence_frequency), (0.0, 0.0));
    assert!(monte_carlo(7, 0.5, Statistic::Diamonds, 0, 1, &pool).is_err());
    assert!(monte_carlo(3, 0.5, Statistic::ProperStarKSep(4), 5, 1, &pool).is_err());
}

#[test]
fn pool_size_does_not_matter() {
    let stats = [Statistic::DomPairsTotal, Statistic::ProperStarKSep(1)];
    let one = monte_carlo_many(20, 0.2, &stats, 300, 9, &worker_pool(Some(1)).unwrap()).unwrap();
    let four = monte_carlo_many(20, 0.2, &stats, 300, 9, &worker_pool(Some(4)).unwrap()).unwrap();
    assert_eq!(one, four);
}
