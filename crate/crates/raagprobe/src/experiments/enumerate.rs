//! Every labelled graph on a small vertex set.

use raagprobe_core::{Graph, GraphBuilder};

use super::ExperimentError;

/// Largest `n` accepted by default; 2¹⁵ graphs.
pub const ORACLE_MAX_N: usize = 6;

/// Largest `n` accepted when explicitly allowed; 2²¹ graphs.
pub const EXTENDED_MAX_N: usize = 7;

/// Iterator over all `2^C(n,2)` graphs on `n` vertices.
///
/// Graph number `mask` has edge slot `i` present iff bit `i` of `mask` is
/// set, with slots `(u, v)`, `u < v`, numbered row-major.
#[derive(Debug, Clone)]
pub struct GraphEnumeration {
    n: usize,
    slots: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut b = GraphBuilder::new(self.n);
        for (i, &(u, v)) in self.slots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                b.add_edge(u, v);
            }
        }
        Some(b.build())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GraphEnumeration {}

/// All graphs on `n <= 6` vertices in edge-mask order.
pub fn enumerate_graphs(n: usize) -> Result<GraphEnumeration, ExperimentError> {
    enumerate_graphs_up_to(n, ORACLE_MAX_N)
}

/// Like [`enumerate_graphs`] with a caller-chosen ceiling of at most
/// [`EXTENDED_MAX_N`].
pub fn enumerate_graphs_up_to(n: usize, ceiling: usize) -> Result<GraphEnumeration, ExperimentError> {
    let max = ceiling.min(EXTENDED_MAX_N);
    if n > max {
        return Err(ExperimentError::OracleTooLarge { n, max });
    }
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(GraphEnumeration {
        n,
        end: 1u64 << slots.len(),
        slots,
        next: 0,
    })
}
