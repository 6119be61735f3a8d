//! Randomised and exhaustive checks of the structural lemmas.

use std::fmt;

use raagprobe_core::detectors::{
    count_domination_pairs, dominates, for_each_domination_pair, proper_star_k_separations,
};
use raagprobe_core::sampler::{derive_stream, sample_gnp};
use raagprobe_core::Graph;
use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;

use super::enumerate::enumerate_graphs;
use super::ExperimentError;

/// A checked implication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Property {
    /// Adjacent pairs of `Γ` equal non-adjacent pairs of the complement, and
    /// vice versa.
    Duality,
    /// A proper star 1-separation `(a, {b})` makes `(a, b)` a non-adjacent
    /// domination pair.
    StarOneSeparation,
    /// A non-adjacent domination pair `(a, c)` with `c` not isolated and no
    /// adjacent dominator of `c` comes with a diamond `(a, ·, c, ·)`.
    DiamondForcing,
    /// Deliberately false claim ("no domination pairs"); only used to
    /// exercise the failure path.
    InjectedFault,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Duality => "duality",
            Property::StarOneSeparation => "star-1-separation implies non-adjacent domination",
            Property::DiamondForcing => "diamond forcing",
            Property::InjectedFault => "injected fault",
        })
    }
}

/// Which graphs to check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum FuzzSource {
    /// `trials` samples of `G(n,p)` from `seed`.
    Sampled {
        /// Edge probability.
        p: f64,
        /// Number of graphs.
        trials: u64,
        /// Master seed.
        seed: u64,
    },
    /// Every graph on `n <= 6` vertices.
    Exhaustive,
}

/// The first failing graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    /// Trial index or enumeration mask.
    pub index: u64,
    /// Violated property.
    pub property: Property,
    /// The graph.
    pub graph: Graph,
}

/// Outcome of [`lemma_property_fuzz`].
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzReport {
    /// Vertex count.
    pub n: usize,
    /// Source of graphs.
    pub source: FuzzSource,
    /// Graphs examined.
    pub graphs: u64,
    /// Lowest-index failure, if any.
    pub counterexample: Option<Counterexample>,
}

impl FuzzReport {
    /// No counterexample.
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn duality_holds(g: &Graph) -> bool {
    let here = count_domination_pairs(g);
    let there = count_domination_pairs(&g.complement());
    here.adjacent == there.nonadjacent && here.nonadjacent == there.adjacent
}

fn star_one_holds(g: &Graph) -> bool {
    let seps = proper_star_k_separations(g, 1).unwrap_or_default();
    seps.iter().all(|s| {
        let b = s.set.first().expect("k = 1");
        !g.has_edge(s.centre, b) && dominates(g, s.centre, b).unwrap_or(false)
    })
}

/// A 4-cycle `a ∼ b ∼ c ∼ d ∼ a` with `b ≁ d`, found by direct search.
fn has_diamond_through(g: &Graph, a: usize, c: usize) -> bool {
    let n = g.n();
    (0..n).any(|b| {
        g.has_edge(a, b)
            && g.has_edge(b, c)
            && (0..n).any(|d| d != b && g.has_edge(c, d) && g.has_edge(d, a) && !g.has_edge(b, d))
    })
}

fn diamond_forcing_holds(g: &Graph) -> bool {
    let mut ok = true;
    for_each_domination_pair(g, |a, c, adjacent| {
        if adjacent || !ok || g.degree_unchecked(c) == 0 {
            return;
        }
        // every neighbour of c is tried as a dominator; no shortcut
        let has_adjacent_dominator =
            (0..g.n()).any(|x| g.has_edge(x, c) && dominates(g, x, c).unwrap_or(false));
        if !has_adjacent_dominator && !has_diamond_through(g, a, c) {
            ok = false;
        }
    });
    ok
}

/// The first property `g` violates.
pub fn check_graph(g: &Graph, inject_fault: bool) -> Option<Property> {
    if !duality_holds(g) {
        return Some(Property::Duality);
    }
    if !star_one_holds(g) {
        return Some(Property::StarOneSeparation);
    }
    if !diamond_forcing_holds(g) {
        return Some(Property::DiamondForcing);
    }
    if inject_fault && count_domination_pairs(g).total() > 0 {
        return Some(Property::InjectedFault);
    }
    None
}

/// Checks every property on each graph from `source`. The reported
/// counterexample is the one with the lowest index, whatever the pool size.
pub fn lemma_property_fuzz(
    n: usize,
    source: FuzzSource,
    inject_fault: bool,
    pool: &ThreadPool,
) -> Result<FuzzReport, ExperimentError> {
    let (graphs, counterexample) = match source {
        FuzzSource::Sampled { p, trials, seed } => {
            if trials == 0 {
                return Err(ExperimentError::Config("trials must be at least 1".into()));
            }
            let found = pool.install(|| {
                (0..trials).into_par_iter().try_fold(
                    || None::<Counterexample>,
                    |best, i| -> Result<_, ExperimentError> {
                        if best.as_ref().is_some_and(|b| b.index < i) {
                            return Ok(best);
                        }
                        let g = sample_gnp(n, p, derive_stream(seed, i))?;
                        Ok(check_graph(&g, inject_fault)
                            .map(|property| Counterexample { index: i, property, graph: g })
                            .or(best))
                    },
                )
                .try_reduce(|| None, |a, b| Ok(lowest(a, b)))
            })?;
            (trials, found)
        }
        FuzzSource::Exhaustive => {
            let all: Vec<Graph> = enumerate_graphs(n)?.collect();
            let found = pool.install(|| {
                all.par_iter().enumerate().find_map_first(|(i, g)| {
                    check_graph(g, inject_fault).map(|property| Counterexample {
                        index: i as u64,
                        property,
                        graph: g.clone(),
                    })
                })
            });
            (all.len() as u64, found)
        }
    };
    Ok(FuzzReport { n, source, graphs, counterexample })
}

fn lowest(a: Option<Counterexample>, b: Option<Counterexample>) -> Option<Counterexample> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x.index <= y.index { x } else { y }),
        (x, y) => x.or(y),
    }
}
