use alloc::vec::Vec;

use crate::graph::bits;
use crate::{Graph, VertexSet};

fn with_degree(g: &Graph, d: usize) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for v in (0..g.n()).filter(|&v| g.degree_unchecked(v) == d) {
        out.insert(v);
    }
    out
}

/// Vertices of degree 0.
pub fn isolated_vertices(g: &Graph) -> VertexSet {
    with_degree(g, 0)
}

/// Vertices of degree 1.
pub fn valence_one_vertices(g: &Graph) -> VertexSet {
    with_degree(g, 1)
}

fn only_neighbour(g: &Graph, v: usize) -> usize {
    bits(g.row(v)).next().expect("valence-one vertex has a neighbour")
}

/// Edges `(u, v)`, `u < v`, whose endpoints both have degree 1.
pub fn isolated_edges(g: &Graph) -> Vec<(usize, usize)> {
    valence_one_vertices(g)
        .iter()
        .filter_map(|u| {
            let v = only_neighbour(g, u);
            (u < v && g.degree_unchecked(v) == 1).then_some((u, v))
        })
        .collect()
}

/// Degree-1 vertices whose neighbour has degree at least 2.
pub fn valence_one_not_on_isolated_edge(g: &Graph) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for v in valence_one_vertices(g).iter() {
        if g.degree_unchecked(only_neighbour(g, v)) >= 2 {
            out.insert(v);
        }
    }
    out
}
