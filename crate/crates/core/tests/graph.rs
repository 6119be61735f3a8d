//! Bitset graphs and vertex sets.

use raagprobe_core::{Graph, GraphError, VertexSet};

fn set(n: usize, xs: &[usize]) -> VertexSet {
    VertexSet::from_members(n, xs.iter().copied()).unwrap()
}

#[test]
fn construction_and_dedup() {
    assert_eq!(Graph::new(2, []).unwrap().m(), 0);
    let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(p4, Graph::path(4));
    assert_eq!(p4.m(), 3);
    assert_eq!(Graph::new(3, [(0, 1), (0, 1)]).unwrap().m(), 1);
    assert_eq!(Graph::new(3, [(0, 1), (1, 0)]).unwrap().m(), 1);
}

#[test]
fn construction_errors() {
    assert_eq!(
        Graph::new(3, [(0, 3)]),
        Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
    );
    assert_eq!(Graph::new(3, [(2, 2)]), Err(GraphError::SelfLoop(2)));
}

#[test]
fn complement_examples() {
    assert_eq!(Graph::edgeless(3).complement(), Graph::complete(3));
    let c = Graph::path(4).complement();
    assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3)]);
    assert_eq!(c.m(), 3);
    assert_eq!(Graph::edgeless(0).complement().m(), 0);
    assert_eq!(Graph::complete(70).m(), 70 * 69 / 2);
}

#[test]
fn star_and_link() {
    let g = Graph::new(3, [(0, 1)]).unwrap();
    assert_eq!(g.star(2).unwrap(), set(3, &[2]));
    assert!(g.link(2).unwrap().is_empty());
    assert_eq!(Graph::complete(4).star(1).unwrap(), VertexSet::full(4));
    let p4 = Graph::path(4);
    assert_eq!(p4.star(1).unwrap(), set(4, &[0, 1, 2]));
    assert_eq!(p4.link(1).unwrap(), set(4, &[0, 2]));
    assert!(p4.star(4).is_err());
}

#[test]
fn induced_delete_examples() {
    let p5 = Graph::path(5);
    let (h, map) = p5.induced_delete(&VertexSet::empty(5)).unwrap();
    assert_eq!(h, p5);
    assert_eq!(map, vec![0, 1, 2, 3, 4]);

    let (h, map) = p5.induced_delete(&p5.star(2).unwrap()).unwrap();
    assert_eq!(h, Graph::edgeless(2));
    assert_eq!(map, vec![0, 4]);

    let (h, map) = p5.induced_delete(&VertexSet::full(5)).unwrap();
    assert_eq!(h.n(), 0);
    assert!(map.is_empty());
    assert!(p5.induced_delete(&VertexSet::empty(4)).is_err());
}

#[test]
fn components_examples() {
    let k4 = Graph::complete(4);
    assert_eq!(k4.components(), vec![VertexSet::full(4)]);
    assert_eq!(
        Graph::edgeless(3).components(),
        vec![set(3, &[0]), set(3, &[1]), set(3, &[2])]
    );
    let g = Graph::new(5, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(
        g.components(),
        vec![set(5, &[0, 1]), set(5, &[2, 3]), set(5, &[4])]
    );
    assert!(Graph::edgeless(0).components().is_empty());
}

#[test]
fn degree_and_connectivity() {
    let c5 = Graph::cycle(5);
    assert!((0..5).all(|v| c5.degree(v).unwrap() == 2));
    assert!(c5.is_connected());
    let e2 = Graph::edgeless(2);
    assert_eq!(e2.degrees(), vec![0, 0]);
    assert!(!e2.is_connected());
    let p4 = Graph::path(4);
    assert_eq!(p4.degrees(), vec![1, 2, 2, 1]);
    assert!(p4.is_connected());
    assert!(Graph::edgeless(0).is_connected());
    assert!(Graph::edgeless(1).is_connected());
    assert!(p4.degree(9).is_err());
}

#[test]
fn multiword_rows() {
    let g = Graph::path(130);
    assert_eq!(g.stride(), 3);
    assert!(g.is_connected());
    assert_eq!(g.link(64).unwrap().to_vec(), vec![63, 65]);
    assert_eq!(g.complement().complement(), g);
}

#[test]
fn vertex_set_order_and_ops() {
    let a = set(10, &[1, 5]);
    let b = set(10, &[1, 7]);
    assert!(a < b);
    assert_eq!(a.union(&b).to_vec(), vec![1, 5, 7]);
    assert_eq!(a.intersection(&b).to_vec(), vec![1]);
    assert_eq!(a.difference(&b).to_vec(), vec![5]);
    assert_eq!(a.complement().len(), 8);
    assert!(set(10, &[1]).is_subset(&a));
    assert!(VertexSet::from_members(3, [3]).is_err());
}
