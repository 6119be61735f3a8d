//! Exhaustive graph enumeration.

use raagprobe::experiments::*;
use raagprobe::core::Graph;

#[test]
fn counts() {
    assert_eq!(enumerate_graphs(0).unwrap().count(), 1);
    assert_eq!(enumerate_graphs(2).unwrap().count(), 2);
    assert_eq!(enumerate_graphs(3).unwrap().len(), 8);
    let four: Vec<Graph> = enumerate_graphs(4).unwrap().collect();
    assert_eq!(four.len(), 64);
    assert_eq!(four.iter().filter(|g| g.is_connected()).count(), 38);
    assert_eq!(four[0], Graph::edgeless(4));
    assert_eq!(four[63], Graph::complete(4));
    assert!(four[1].has_edge(0, 1) && four[1].m() == 1);
}

#[test]
fn ceiling() {
    assert!(matches!(
        enumerate_graphs(7),
        Err(ExperimentError::OracleTooLarge { n: 7, max: 6 })
    ));
    assert_eq!(enumerate_graphs_up_to(7, EXTENDED_MAX_N).unwrap().len(), 1 << 21);
    assert!(enumerate_graphs_up_to(8, 100).is_err());
}
