//! Round trips through the text formats.

use proptest::prelude::*;

use raagprobe::core::{Graph, GraphBuilder};
use raagprobe::experiments::Statistic;
use raagprobe::format::{parse_graph, write_graph};

fn graph() -> impl Strategy<Value = Graph> {
    (0usize..90).prop_flat_map(|n| {
        proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..=2 * n).prop_map(move |pairs| {
            let mut b = GraphBuilder::new(n);
            for (u, v) in pairs {
                if u != v {
                    b.add_edge(u, v);
                }
            }
            b.build()
        })
    })
}

proptest! {
    #[test]
    fn write_then_parse_is_identity(g in graph()) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn comments_blanks_and_reversed_edges_are_ignored(g in graph(), pad in 0usize..3) {
        let mut text = String::from("# generated\n\n");
        text += &format!("n {}\n", g.n());
        for (u, v) in g.edges() {
            text += &"\n".repeat(pad);
            text += &format!("  e {v} {u}\n# between\ne {u} {v}\n");
        }
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn junk_never_panics(text in "\\PC{0,200}") {
        let _ = parse_graph(&text);
    }

    #[test]
    fn statistic_names_round_trip(k in 1usize..500) {
        let s = Statistic::ProperStarKSep(k);
        prop_assert_eq!(s.to_string().parse::<Statistic>().unwrap(), s);
    }
}

#[test]
fn every_named_statistic_parses_back() {
    for s in [
        Statistic::NonAdjDomPairs,
        Statistic::AdjDomPairs,
        Statistic::DomPairsTotal,
        Statistic::Diamonds,
        Statistic::StarCutVertices,
        Statistic::IsolatedVertices,
        Statistic::ValenceOne,
        Statistic::IsolatedEdges,
        Statistic::OutFinite,
    ] {
        assert_eq!(s.to_string().parse::<Statistic>().unwrap(), s);
    }
    assert!("ProperStarKSep(0)".parse::<Statistic>().is_err());
    assert!("ProperStarKSep(2".parse::<Statistic>().is_err());
    assert!("Triangles".parse::<Statistic>().is_err());
}
