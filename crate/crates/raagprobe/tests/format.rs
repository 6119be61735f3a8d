//! Graph file parsing and writing.

use raagprobe::format::*;
use raagprobe::core::{Graph, GraphError};

#[test]
fn reads_with_comments_and_duplicates() {
    let g = parse_graph("# P4\n\nn 4\ne 0 1\ne 1 2\n  # mid\ne 2 3\ne 1 0\n").unwrap();
    assert_eq!(g, Graph::path(4));
    assert_eq!(write_graph(&g), "n 4\ne 0 1\ne 1 2\ne 2 3\n");
}

#[test]
fn empty_graphs() {
    assert_eq!(parse_graph("n 0\n").unwrap().n(), 0);
    assert_eq!(write_graph(&Graph::edgeless(2)), "n 2\n");
}

#[test]
fn errors_name_the_line() {
    let e = parse_graph("n 3\ne 0 1\ne 0\n").unwrap_err();
    assert_eq!(e.line, 3);
    assert!(matches!(e.kind, ParseErrorKind::BadEdge(_)));
    assert_eq!(e.to_string(), "line 3: expected `e <u> <v>`, found `e 0`");

    let e = parse_graph("# c\nn 3\ne 1 1\n").unwrap_err();
    assert_eq!((e.line, e.kind), (3, ParseErrorKind::Graph(GraphError::SelfLoop(1))));
    assert_eq!(parse_graph("n 3\ne 0 3\n").unwrap_err().line, 2);
    assert_eq!(parse_graph("e 0 1\n").unwrap_err().line, 1);
    assert_eq!(parse_graph("n x\n").unwrap_err().line, 1);
    assert_eq!(parse_graph("n 2 2\n").unwrap_err().line, 1);
    assert_eq!(parse_graph("n 3\ne 0 1 2\n").unwrap_err().line, 2);
    assert_eq!(parse_graph("n 3\ne 0 -1\n").unwrap_err().line, 2);
    let e = parse_graph("# only\n\n").unwrap_err();
    assert_eq!((e.line, e.kind), (3, ParseErrorKind::MissingHeader));
}
