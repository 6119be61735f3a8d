use core::fmt;

use super::{first_domination_pair, first_star_cut_vertex};
use crate::Graph;

/// Which obstructions to finiteness of `Out(A_Γ)` are present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FinitenessLabel {
    /// Star 2-connected and no domination pairs.
    Finite,
    /// Domination pairs only.
    InfiniteByDomination,
    /// Star-cut-vertices only.
    InfiniteByStarCut,
    /// Both obstructions.
    InfiniteByBoth,
}

impl FinitenessLabel {
    /// Stable name used in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            FinitenessLabel::Finite => "Finite",
            FinitenessLabel::InfiniteByDomination => "InfiniteByDomination",
            FinitenessLabel::InfiniteByStarCut => "InfiniteByStarCut",
            FinitenessLabel::InfiniteByBoth => "InfiniteByBoth",
        }
    }
}

impl fmt::Display for FinitenessLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Finiteness verdict with lexicographically smallest witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinitenessVerdict {
    /// The verdict.
    pub label: FinitenessLabel,
    /// Smallest domination pair `(a, b)`, `a > b`, if any.
    pub domination_witness: Option<(usize, usize)>,
    /// Smallest star-cut-vertex, if any.
    pub star_cut_witness: Option<usize>,
}

impl FinitenessVerdict {
    /// `label == Finite`.
    pub fn is_finite(&self) -> bool {
        self.label == FinitenessLabel::Finite
    }
}

/// `Out(A_Γ)` is finite iff `Γ` is star 2-connected with no domination pairs.
pub fn finiteness_verdict(g: &Graph) -> FinitenessVerdict {
    let domination_witness = first_domination_pair(g);
    let star_cut_witness = first_star_cut_vertex(g);
    let label = match (domination_witness.is_some(), star_cut_witness.is_some()) {
        (false, false) => FinitenessLabel::Finite,
        (true, false) => FinitenessLabel::InfiniteByDomination,
        (false, true) => FinitenessLabel::InfiniteByStarCut,
        (true, true) => FinitenessLabel::InfiniteByBoth,
    };
    FinitenessVerdict {
        label,
        domination_witness,
        star_cut_witness,
    }
}
