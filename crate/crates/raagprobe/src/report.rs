//! Serializable reports for `analyze` and `expect`.
//!
//! Field order is fixed by the struct definitions: counts first, then the
//! verdict, then witness lists, then the echoed configuration.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use raagprobe_core::detectors::{
    domination_report_capped, finiteness_verdict, is_star_two_connected, star_separation_report,
    DetectorError,
};
use raagprobe_core::formulas::{classify_regime, ExpectationPoint, FormulaError};
use raagprobe_core::Graph;
use serde::Serialize;

use crate::experiments::real;

/// Exact counts; never truncated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counts {
    /// Vertices.
    pub n: usize,
    /// Edges.
    pub m: usize,
    /// Ordered adjacent domination pairs.
    pub adjacent_domination_pairs: u64,
    /// Ordered non-adjacent domination pairs.
    pub nonadjacent_domination_pairs: u64,
    /// Ordered domination diamonds.
    pub domination_diamonds: u64,
    /// Star-cut-vertices.
    pub star_cut_vertices: usize,
    /// `k ↦` proper star k-separations, non-zero entries only.
    pub proper_star_k_separations: BTreeMap<usize, u128>,
}

/// The finiteness verdict and related flags.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    /// `Finite`, `InfiniteByDomination`, `InfiniteByStarCut` or `InfiniteByBoth`.
    pub label: &'static str,
    /// Lexicographically smallest domination pair.
    pub domination_witness: Option<[usize; 2]>,
    /// Smallest star-cut-vertex.
    pub star_cut_witness: Option<usize>,
    /// No star-cut-vertices.
    pub star_two_connected: bool,
    /// Every star-cut-vertex leaves at most one multi-vertex component.
    pub transvection_reducible: bool,
}

/// Components of `Γ ∖ st(a)` for one star-cut-vertex `a`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutComponents {
    /// The star-cut-vertex.
    pub vertex: usize,
    /// Its complementary components.
    pub components: Vec<Vec<usize>>,
}

/// Witness lists, each capped at `max_witnesses` entries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witnesses {
    /// Some list was cut short.
    pub truncated: bool,
    /// `(a, b)`: `a` dominates `b`, `a ∼ b`.
    pub adjacent_pairs: Vec<[usize; 2]>,
    /// `(a, b)`: `a` dominates `b`, `a ≁ b`.
    pub nonadjacent_pairs: Vec<[usize; 2]>,
    /// `(a, b, c, d)` domination diamonds.
    pub diamonds: Vec<[usize; 4]>,
    /// Star-cut-vertices with their complementary components.
    pub star_cuts: Vec<CutComponents>,
}

/// Settings that produced a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalyzeConfig {
    /// Input path as given.
    pub input: String,
    /// Witness cap.
    pub max_witnesses: usize,
    /// Tool version.
    pub version: &'static str,
}

/// Everything `analyze` knows about one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalyzeReport {
    /// Exact counts.
    pub counts: Counts,
    /// Verdict.
    pub verdict: Verdict,
    /// Capped witness lists.
    pub witnesses: Witnesses,
    /// Echoed configuration.
    pub config: AnalyzeConfig,
}

/// Runs every detector on `g`.
pub fn analyze(g: &Graph, input: &str, max_witnesses: usize) -> Result<AnalyzeReport, DetectorError> {
    let dom = domination_report_capped(g, max_witnesses);
    let sep = star_separation_report(g)?;
    let v = finiteness_verdict(g);
    let cut: Vec<usize> = sep.star_cut_vertices.iter().collect();
    let star_cuts: Vec<CutComponents> = cut
        .iter()
        .take(max_witnesses)
        .map(|&a| CutComponents {
            vertex: a,
            components: sep.per_vertex_components[a].iter().map(|c| c.to_vec()).collect(),
        })
        .collect();
    Ok(AnalyzeReport {
        counts: Counts {
            n: g.n(),
            m: g.m(),
            adjacent_domination_pairs: dom.adjacent_count,
            nonadjacent_domination_pairs: dom.nonadjacent_count,
            domination_diamonds: dom.diamond_count,
            star_cut_vertices: cut.len(),
            proper_star_k_separations: sep.proper_k_separation_counts.clone(),
        },
        verdict: Verdict {
            label: v.label.as_str(),
            domination_witness: v.domination_witness.map(|(a, b)| [a, b]),
            star_cut_witness: v.star_cut_witness,
            star_two_connected: is_star_two_connected(g),
            transvection_reducible: sep.reducible,
        },
        witnesses: Witnesses {
            truncated: dom.is_truncated() || star_cuts.len() < cut.len(),
            adjacent_pairs: dom.adjacent_pairs.iter().map(|&(a, b)| [a, b]).collect(),
            nonadjacent_pairs: dom.nonadjacent_pairs.iter().map(|&(a, b)| [a, b]).collect(),
            diamonds: dom.diamonds,
            star_cuts,
        },
        config: AnalyzeConfig {
            input: input.to_string(),
            max_witnesses,
            version: env!("CARGO_PKG_VERSION"),
        },
    })
}

fn pairs(ps: &[[usize; 2]]) -> String {
    let v: Vec<String> = ps.iter().map(|[a, b]| format!("({a},{b})")).collect();
    v.join(" ")
}

/// Human-readable rendering of an [`AnalyzeReport`].
pub fn render_analyze_text(r: &AnalyzeReport) -> String {
    let c = &r.counts;
    let w = &r.witnesses;
    let mut s = String::new();
    let _ = writeln!(s, "# raagprobe {} analyze {}", r.config.version, r.config.input);
    let _ = writeln!(s, "# max_witnesses {}", r.config.max_witnesses);
    let _ = writeln!(s, "n {}  m {}", c.n, c.m);
    let _ = writeln!(s, "adjacent domination pairs     {}", c.adjacent_domination_pairs);
    let _ = writeln!(s, "non-adjacent domination pairs {}", c.nonadjacent_domination_pairs);
    let _ = writeln!(s, "domination diamonds           {}", c.domination_diamonds);
    let _ = writeln!(s, "star-cut-vertices             {}", c.star_cut_vertices);
    for (k, count) in &c.proper_star_k_separations {
        let _ = writeln!(s, "proper star {k}-separations     {count}");
    }
    let _ = writeln!(s, "verdict {}", r.verdict.label);
    if let Some([a, b]) = r.verdict.domination_witness {
        let _ = writeln!(s, "  domination witness ({a},{b})");
    }
    if let Some(a) = r.verdict.star_cut_witness {
        let _ = writeln!(s, "  star-cut witness {a}");
    }
    let _ = writeln!(s, "transvection reducible {}", r.verdict.transvection_reducible);
    if !w.adjacent_pairs.is_empty() {
        let _ = writeln!(s, "adjacent pairs: {}", pairs(&w.adjacent_pairs));
    }
    if !w.nonadjacent_pairs.is_empty() {
        let _ = writeln!(s, "non-adjacent pairs: {}", pairs(&w.nonadjacent_pairs));
    }
    for d in &w.diamonds {
        let _ = writeln!(s, "diamond ({},{},{},{})", d[0], d[1], d[2], d[3]);
    }
    for cut in &w.star_cuts {
        let comps: Vec<String> = cut.components.iter().map(|c| format!("{c:?}")).collect();
        let _ = writeln!(s, "st({}) leaves {}", cut.vertex, comps.join(" "));
    }
    if w.truncated {
        let _ = writeln!(s, "(witness lists truncated)");
    }
    s
}

/// One row of the `expect` table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectRow {
    /// Vertex count.
    pub n: usize,
    /// Edge probability.
    pub p: f64,
    /// Separation size, if requested.
    pub k: Option<usize>,
    /// Non-adjacent domination pairs.
    pub e_nonadj_dom: f64,
    /// Adjacent domination pairs.
    pub e_adj_dom: f64,
    /// Diamonds.
    pub e_diamonds: Option<f64>,
    /// Proper star k-separations.
    pub e_proper_star_k: Option<f64>,
    /// First bound.
    #[serde(rename = "bound_A")]
    pub bound_a: Option<f64>,
    /// Second bound.
    #[serde(rename = "bound_B")]
    pub bound_b: Option<f64>,
    /// High-p envelope.
    #[serde(rename = "F_env")]
    pub f_env: Option<f64>,
    /// Low-p envelope.
    #[serde(rename = "G_env")]
    pub g_env: Option<f64>,
    /// `(ln n + ln ln n)/n`.
    pub threshold: Option<f64>,
    /// Regime at margin `omega`.
    pub regime: Option<&'static str>,
    /// Margin used for the regime.
    pub omega: f64,
}

/// Column names of the `expect` table.
pub const EXPECT_COLUMNS: [&str; 13] = [
    "n",
    "p",
    "k",
    "e_nonadj_dom",
    "e_adj_dom",
    "e_diamonds",
    "e_proper_star_k",
    "bound_A",
    "bound_B",
    "F_env",
    "G_env",
    "threshold",
    "regime",
];

/// Evaluates one `expect` row.
pub fn expect_row(n: usize, p: f64, k: Option<usize>, omega: f64) -> Result<ExpectRow, FormulaError> {
    let pt = ExpectationPoint::evaluate(n, p, k)?;
    let regime = match classify_regime(n, p, omega) {
        Ok(r) => Some(r.regime.as_str()),
        Err(FormulaError::TooFewVertices { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ExpectRow {
        n,
        p,
        k,
        e_nonadj_dom: pt.e_nonadj_dom,
        e_adj_dom: pt.e_adj_dom,
        e_diamonds: pt.e_diamonds,
        e_proper_star_k: pt.e_proper_star_k,
        bound_a: pt.bound_a,
        bound_b: pt.bound_b,
        f_env: pt.f_env,
        g_env: pt.g_env,
        threshold: pt.threshold,
        regime,
        omega,
    })
}

fn cells(r: &ExpectRow, missing: &str) -> Vec<String> {
    let o = |x: Option<f64>| x.map(real).unwrap_or_else(|| missing.to_string());
    vec![
        r.n.to_string(),
        real(r.p),
        r.k.map(|k| k.to_string()).unwrap_or_else(|| missing.to_string()),
        real(r.e_nonadj_dom),
        real(r.e_adj_dom),
        o(r.e_diamonds),
        o(r.e_proper_star_k),
        o(r.bound_a),
        o(r.bound_b),
        o(r.f_env),
        o(r.g_env),
        o(r.threshold),
        r.regime.unwrap_or(missing).to_string(),
    ]
}

/// CSV with a `#` line recording the regime margin.
pub fn render_expect_csv(rows: &[ExpectRow], omega: f64) -> String {
    let mut s = format!("# raagprobe {} expect omega={omega}\n", env!("CARGO_PKG_VERSION"));
    s.push_str(&EXPECT_COLUMNS.join(","));
    s.push('\n');
    for r in rows {
        s.push_str(&cells(r, "").join(","));
        s.push('\n');
    }
    s
}

/// Space-aligned table; missing values show as `-`.
pub fn render_expect_text(rows: &[ExpectRow], omega: f64) -> String {
    let body: Vec<Vec<String>> = rows.iter().map(|r| cells(r, "-")).collect();
    let mut widths: Vec<usize> = EXPECT_COLUMNS.iter().map(|c| c.len()).collect();
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cols: Vec<&str>| -> String {
        let padded: Vec<String> = cols.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = format!("# regime margin omega={omega}\n");
    s.push_str(&line(EXPECT_COLUMNS.to_vec()));
    for row in &body {
        s.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    s
}
