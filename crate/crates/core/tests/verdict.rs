//! The finiteness verdict.

use raagprobe_core::detectors::*;
use raagprobe_core::Graph;

#[test]
fn textbook_verdicts() {
    assert_eq!(finiteness_verdict(&Graph::cycle(5)).label, FinitenessLabel::Finite);
    let p4 = finiteness_verdict(&Graph::path(4));
    assert_eq!(p4.label, FinitenessLabel::InfiniteByDomination);
    assert_eq!(p4.domination_witness, Some((1, 0)));
    let p5 = finiteness_verdict(&Graph::path(5));
    assert_eq!(p5.label, FinitenessLabel::InfiniteByBoth);
    assert_eq!(p5.star_cut_witness, Some(2));
}

#[test]
fn degenerate_graphs_are_finite() {
    assert!(finiteness_verdict(&Graph::edgeless(0)).is_finite());
    assert!(finiteness_verdict(&Graph::edgeless(1)).is_finite());
    // two vertices always dominate each other
    assert!(!finiteness_verdict(&Graph::edgeless(2)).is_finite());
}
