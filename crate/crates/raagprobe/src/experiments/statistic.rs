//! Per-graph random variables and their closed-form means.

use std::fmt;
use std::str::FromStr;

use raagprobe_core::detectors::{
    count_domination_diamonds, count_domination_pairs, finiteness_verdict, isolated_edges,
    isolated_vertices, proper_star_k_separation_count, star_cut_vertices, valence_one_vertices,
    DetectorError,
};
use raagprobe_core::formulas::{
    expected_adjacent_domination_pairs, expected_domination_diamonds, expected_isolated_edges,
    expected_isolated_vertices, expected_nonadjacent_domination_pairs,
    expected_proper_star_k_separations, expected_valence_one_vertices,
};
use raagprobe_core::Graph;
use serde::{Deserialize, Serialize};

/// A count (or indicator) computed on each sampled graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Statistic {
    /// Ordered non-adjacent domination pairs.
    NonAdjDomPairs,
    /// Ordered adjacent domination pairs.
    AdjDomPairs,
    /// All ordered domination pairs.
    DomPairsTotal,
    /// Ordered domination diamonds.
    Diamonds,
    /// Proper star k-separations for the given `k >= 1`.
    ProperStarKSep(usize),
    /// Number of star-cut-vertices.
    StarCutVertices,
    /// Number of isolated vertices.
    IsolatedVertices,
    /// Number of degree-1 vertices.
    ValenceOne,
    /// Number of isolated edges.
    IsolatedEdges,
    /// 1 when the finiteness verdict is `Finite`, else 0.
    OutFinite,
}

impl Statistic {
    /// Name without the size parameter, as used in the CSV `statistic` column.
    pub fn name(self) -> &'static str {
        match self {
            Statistic::NonAdjDomPairs => "NonAdjDomPairs",
            Statistic::AdjDomPairs => "AdjDomPairs",
            Statistic::DomPairsTotal => "DomPairsTotal",
            Statistic::Diamonds => "Diamonds",
            Statistic::ProperStarKSep(_) => "ProperStarKSep",
            Statistic::StarCutVertices => "StarCutVertices",
            Statistic::IsolatedVertices => "IsolatedVertices",
            Statistic::ValenceOne => "ValenceOne",
            Statistic::IsolatedEdges => "IsolatedEdges",
            Statistic::OutFinite => "OutFinite",
        }
    }

    /// The separation size, for [`Statistic::ProperStarKSep`].
    pub fn k(self) -> Option<usize> {
        match self {
            Statistic::ProperStarKSep(k) => Some(k),
            _ => None,
        }
    }

    /// Whether the statistic is defined on graphs with `n` vertices.
    pub fn check_n(self, n: usize) -> Result<(), String> {
        match self {
            Statistic::ProperStarKSep(k) if k > n => {
                Err(format!("{self} needs at least {k} vertices, got n={n}"))
            }
            _ => Ok(()),
        }
    }

    /// Value on one graph.
    pub fn evaluate(self, g: &Graph) -> Result<f64, DetectorError> {
        Ok(match self {
            Statistic::NonAdjDomPairs => count_domination_pairs(g).nonadjacent as f64,
            Statistic::AdjDomPairs => count_domination_pairs(g).adjacent as f64,
            Statistic::DomPairsTotal => count_domination_pairs(g).total() as f64,
            Statistic::Diamonds => count_domination_diamonds(g) as f64,
            Statistic::ProperStarKSep(k) => proper_star_k_separation_count(g, k)? as f64,
            Statistic::StarCutVertices => star_cut_vertices(g).len() as f64,
            Statistic::IsolatedVertices => isolated_vertices(g).len() as f64,
            Statistic::ValenceOne => valence_one_vertices(g).len() as f64,
            Statistic::IsolatedEdges => isolated_edges(g).len() as f64,
            Statistic::OutFinite => f64::from(u8::from(finiteness_verdict(g).is_finite())),
        })
    }

    /// Closed-form mean over `G(n,p)`, where one exists and is defined at `n`.
    pub fn exact_expectation(self, n: usize, p: f64) -> Option<f64> {
        let e = match self {
            Statistic::NonAdjDomPairs => expected_nonadjacent_domination_pairs(n, p),
            Statistic::AdjDomPairs => expected_adjacent_domination_pairs(n, p),
            Statistic::DomPairsTotal => expected_nonadjacent_domination_pairs(n, p)
                .and_then(|x| Ok(x + expected_adjacent_domination_pairs(n, p)?)),
            Statistic::Diamonds => expected_domination_diamonds(n, p),
            Statistic::ProperStarKSep(k) => expected_proper_star_k_separations(n, p, k),
            Statistic::IsolatedVertices => expected_isolated_vertices(n, p),
            Statistic::ValenceOne => expected_valence_one_vertices(n, p),
            Statistic::IsolatedEdges => expected_isolated_edges(n, p),
            Statistic::StarCutVertices | Statistic::OutFinite => return None,
        };
        e.ok()
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::ProperStarKSep(k) => write!(f, "ProperStarKSep({k})"),
            s => f.write_str(s.name()),
        }
    }
}

/// An unrecognised statistic name.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown statistic `{0}`")]
pub struct UnknownStatistic(pub String);

impl FromStr for Statistic {
    type Err = UnknownStatistic;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || UnknownStatistic(s.to_string());
        if let Some(rest) = s.strip_prefix("ProperStarKSep(") {
            let k: usize = rest.strip_suffix(')').and_then(|k| k.parse().ok()).ok_or_else(bad)?;
            return if k == 0 { Err(bad()) } else { Ok(Statistic::ProperStarKSep(k)) };
        }
        Ok(match s {
            "NonAdjDomPairs" => Statistic::NonAdjDomPairs,
            "AdjDomPairs" => Statistic::AdjDomPairs,
            "DomPairsTotal" => Statistic::DomPairsTotal,
            "Diamonds" => Statistic::Diamonds,
            "StarCutVertices" => Statistic::StarCutVertices,
            "IsolatedVertices" => Statistic::IsolatedVertices,
            "ValenceOne" => Statistic::ValenceOne,
            "IsolatedEdges" => Statistic::IsolatedEdges,
            "OutFinite" => Statistic::OutFinite,
            _ => return Err(bad()),
        })
    }
}

impl TryFrom<String> for Statistic {
    type Error = UnknownStatistic;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Statistic> for String {
    fn from(s: Statistic) -> String {
        s.to_string()
    }
}
