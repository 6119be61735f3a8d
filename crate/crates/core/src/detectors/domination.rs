//! Domination pairs and domination diamonds.
//!
//! `a` dominates `b` (written `a > b`) when `a ≠ b` and `lk(b) ⊆ st(a)`.
//! Pairs and diamonds are ordered tuples throughout.

use alloc::vec::Vec;

use crate::graph::{bits, word_bit};
use crate::{Graph, GraphError};

/// Word-parallel `lk(b) ⊆ st(a)`, with no range or distinctness checks.
#[inline]
pub(crate) fn dominates_raw(g: &Graph, a: usize, b: usize) -> bool {
    let (wa, ba) = word_bit(a);
    g.row(b)
        .iter()
        .zip(g.row(a))
        .enumerate()
        .all(|(i, (&rb, &ra))| {
            let mut stray = rb & !ra;
            if i == wa {
                stray &= !ba;
            }
            stray == 0
        })
}

/// Whether `a` dominates `b`.
pub fn dominates(g: &Graph, a: usize, b: usize) -> Result<bool, GraphError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(GraphError::SameVertex(a));
    }
    Ok(dominates_raw(g, a, b))
}

/// Vertices that could dominate `b`: everything when `b` is isolated,
/// otherwise `st(c) ∖ {b}` for the lowest-degree neighbour `c` of `b`
/// (a dominator must be `c` itself or adjacent to it).
fn candidate_dominators(g: &Graph, b: usize, mut visit: impl FnMut(usize)) {
    let pivot = bits(g.row(b)).min_by_key(|&c| g.degree_unchecked(c));
    match pivot {
        None => (0..g.n()).filter(|&a| a != b).for_each(visit),
        Some(c) => {
            visit(c);
            bits(g.row(c)).filter(|&a| a != b).for_each(visit);
        }
    }
}

/// Calls `f(a, b, adjacent)` for every domination pair. Order is unspecified.
pub fn for_each_domination_pair(g: &Graph, mut f: impl FnMut(usize, usize, bool)) {
    for b in 0..g.n() {
        candidate_dominators(g, b, |a| {
            if dominates_raw(g, a, b) {
                f(a, b, g.has_edge(a, b));
            }
        });
    }
}

/// Exact pair counts, split by adjacency.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DominationCounts {
    /// Ordered pairs `(a, b)` with `a > b` and `a ∼ b`.
    pub adjacent: u64,
    /// Ordered pairs `(a, b)` with `a > b` and `a ≁ b`.
    pub nonadjacent: u64,
}

impl DominationCounts {
    /// Sum of both kinds.
    pub fn total(&self) -> u64 {
        self.adjacent + self.nonadjacent
    }
}

/// Counts domination pairs without materialising them.
pub fn count_domination_pairs(g: &Graph) -> DominationCounts {
    let mut counts = DominationCounts::default();
    for_each_domination_pair(g, |_, _, adjacent| {
        if adjacent {
            counts.adjacent += 1;
        } else {
            counts.nonadjacent += 1;
        }
    });
    counts
}

/// True when some domination pair exists.
pub fn has_domination_pair(g: &Graph) -> bool {
    (0..g.n()).any(|b| {
        let mut found = false;
        candidate_dominators(g, b, |a| found = found || dominates_raw(g, a, b));
        found
    })
}

/// True when some non-adjacent domination pair exists.
pub fn has_nonadjacent_domination_pair(g: &Graph) -> bool {
    (0..g.n()).any(|b| {
        let mut found = false;
        candidate_dominators(g, b, |a| {
            found = found || (!g.has_edge(a, b) && dominates_raw(g, a, b));
        });
        found
    })
}

/// Lexicographically smallest domination pair.
pub fn first_domination_pair(g: &Graph) -> Option<(usize, usize)> {
    (0..g.n())
        .flat_map(|a| (0..g.n()).map(move |b| (a, b)))
        .find(|&(a, b)| a != b && dominates_raw(g, a, b))
}

/// Ordered pairs `(b, d)` of distinct, non-adjacent vertices of `lk(c)`.
fn nonadjacent_ordered_pairs_in_link(g: &Graph, c: usize) -> u64 {
    let link = g.row(c);
    let d = g.degree_unchecked(c) as u64;
    let inner: u64 = bits(link)
        .map(|b| {
            g.row(b)
                .iter()
                .zip(link)
                .map(|(x, y)| (x & y).count_ones() as u64)
                .sum::<u64>()
        })
        .sum();
    // `inner` counts each edge inside lk(c) twice, i.e. ordered adjacent pairs.
    d * d.saturating_sub(1) - inner
}

/// Number of ordered domination diamonds `(a, b, c, d)`.
///
/// Every diamond arises from a non-adjacent pair `a > c`; its middle
/// vertices are then any ordered non-adjacent pair inside `lk(c) ⊆ lk(a)`.
pub fn count_domination_diamonds(g: &Graph) -> u64 {
    let mut per_c: Vec<Option<u64>> = alloc::vec![None; g.n()];
    let mut total = 0;
    for_each_domination_pair(g, |_, c, adjacent| {
        if !adjacent {
            total += *per_c[c].get_or_insert_with(|| nonadjacent_ordered_pairs_in_link(g, c));
        }
    });
    total
}

/// Exhaustive domination data for one graph.
///
/// Counts are always exact; the witness lists hold the lexicographically
/// smallest entries up to the cap they were built with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationReport {
    /// Total ordered adjacent domination pairs.
    pub adjacent_count: u64,
    /// Total ordered non-adjacent domination pairs.
    pub nonadjacent_count: u64,
    /// Total ordered domination diamonds.
    pub diamond_count: u64,
    /// `(a, b)` with `a > b`, `a ∼ b`, sorted.
    pub adjacent_pairs: Vec<(usize, usize)>,
    /// `(a, b)` with `a > b`, `a ≁ b`, sorted.
    pub nonadjacent_pairs: Vec<(usize, usize)>,
    /// `(a, b, c, d)` with `a ∼ b ∼ c ∼ d ∼ a`, `a ≁ c`, `b ≁ d`, `a > c`, sorted.
    pub diamonds: Vec<[usize; 4]>,
}

impl DominationReport {
    /// True when neither kind of domination pair exists.
    pub fn is_empty(&self) -> bool {
        self.adjacent_count == 0 && self.nonadjacent_count == 0
    }

    /// Whether any witness list was cut short.
    pub fn is_truncated(&self) -> bool {
        self.adjacent_pairs.len() as u64 != self.adjacent_count
            || self.nonadjacent_pairs.len() as u64 != self.nonadjacent_count
            || self.diamonds.len() as u64 != self.diamond_count
    }
}

/// Full report with uncapped witness lists.
pub fn domination_report(g: &Graph) -> DominationReport {
    domination_report_capped(g, usize::MAX)
}

/// Report whose witness lists keep at most `max_witnesses` entries each.
pub fn domination_report_capped(g: &Graph, max_witnesses: usize) -> DominationReport {
    let n = g.n();
    let mut report = DominationReport {
        adjacent_count: 0,
        nonadjacent_count: 0,
        diamond_count: 0,
        adjacent_pairs: Vec::new(),
        nonadjacent_pairs: Vec::new(),
        diamonds: Vec::new(),
    };
    let mut per_c: Vec<Option<u64>> = alloc::vec![None; n];
    for a in 0..n {
        let mut triples: Vec<[usize; 3]> = Vec::new();
        for b in (0..n).filter(|&b| b != a) {
            if !dominates_raw(g, a, b) {
                continue;
            }
            if g.has_edge(a, b) {
                report.adjacent_count += 1;
                if report.adjacent_pairs.len() < max_witnesses {
                    report.adjacent_pairs.push((a, b));
                }
                continue;
            }
            report.nonadjacent_count += 1;
            if report.nonadjacent_pairs.len() < max_witnesses {
                report.nonadjacent_pairs.push((a, b));
            }
            let c = b;
            report.diamond_count +=
                *per_c[c].get_or_insert_with(|| nonadjacent_ordered_pairs_in_link(g, c));
            if report.diamonds.len() < max_witnesses {
                for x in bits(g.row(c)) {
                    for y in bits(g.row(c)) {
                        if x != y && !g.has_edge(x, y) {
                            triples.push([x, c, y]);
                        }
                    }
                }
            }
        }
        triples.sort_unstable();
        for [x, c, y] in triples {
            if report.diamonds.len() >= max_witnesses {
                break;
            }
            report.diamonds.push([a, x, c, y]);
        }
    }
    report
}
