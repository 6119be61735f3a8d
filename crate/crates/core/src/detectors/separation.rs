//! Star-cut-vertices and star separations.
//!
//! A *separation* of a graph is a nonempty proper vertex subset with no edges
//! leaving it. A *star separation* `(a, S)` has `S` a separation of
//! `Γ ∖ st(a)`; it is *proper* when `S` is not also a separation of `Γ`.
//! Any edge-free cut of `Γ ∖ st(a)` is a union of its components, so
//! separations are enumerated over component subsets.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::DetectorError;
use crate::graph::bits;
use crate::{Graph, GraphError, VertexSet};

/// Components of `Γ ∖ st(a)`, ascending by smallest member, original labels.
pub fn complementary_components(g: &Graph, a: usize) -> Result<Vec<VertexSet>, GraphError> {
    let rest = g.star(a)?.complement();
    Ok(g.components_within(&rest))
}

fn is_star_cut_vertex_raw(g: &Graph, a: usize) -> bool {
    let mut rest = VertexSet::full(g.n());
    rest.remove(a);
    for v in bits(g.row(a)) {
        rest.remove(v);
    }
    match rest.first() {
        None => false,
        Some(root) => {
            g.grow_component(root, &mut rest);
            !rest.is_empty()
        }
    }
}

/// Whether `Γ ∖ st(a)` is disconnected (has at least two components).
pub fn is_star_cut_vertex(g: &Graph, a: usize) -> Result<bool, GraphError> {
    g.check_vertex(a)?;
    Ok(is_star_cut_vertex_raw(g, a))
}

/// All star-cut-vertices.
pub fn star_cut_vertices(g: &Graph) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for a in (0..g.n()).filter(|&a| is_star_cut_vertex_raw(g, a)) {
        out.insert(a);
    }
    out
}

/// Smallest star-cut-vertex, if any.
pub fn first_star_cut_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&a| is_star_cut_vertex_raw(g, a))
}

/// No vertex is a star-cut-vertex.
pub fn is_star_two_connected(g: &Graph) -> bool {
    first_star_cut_vertex(g).is_none()
}

/// For every star-cut-vertex `a`, at most one component of `Γ ∖ st(a)` has
/// two or more vertices.
pub fn transvection_reducible(g: &Graph) -> bool {
    (0..g.n()).all(|a| {
        let comps = complementary_components(g, a).expect("vertex in range");
        comps.len() < 2 || comps.iter().filter(|c| c.len() >= 2).count() <= 1
    })
}

/// One component of `Γ ∖ st(a)` together with whether it has an edge into
/// `lk(a)`. A union of components is a separation of `Γ` itself exactly
/// when none of them touches `lk(a)`.
struct Piece {
    set: VertexSet,
    size: usize,
    touches_link: bool,
}

fn pieces(g: &Graph, a: usize) -> Vec<Piece> {
    let link = g.row(a);
    g.components_within(&g.star(a).expect("vertex in range").complement())
        .into_iter()
        .map(|set| {
            let touches_link = set
                .iter()
                .any(|v| g.row(v).iter().zip(link).any(|(x, y)| x & y != 0));
            Piece {
                size: set.len(),
                set,
                touches_link,
            }
        })
        .collect()
}

/// A proper star separation `(a, S)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StarSeparation {
    /// The star centre.
    pub centre: usize,
    /// The separated set `S ⊆ V ∖ st(a)`.
    pub set: VertexSet,
}

fn check_size(g: &Graph, k: usize) -> Result<(), DetectorError> {
    if k == 0 || k > g.n() {
        Err(DetectorError::SizeOutOfRange { k, n: g.n() })
    } else {
        Ok(())
    }
}

/// Every proper star `k`-separation, sorted by centre then by set.
pub fn proper_star_k_separations(g: &Graph, k: usize) -> Result<Vec<StarSeparation>, DetectorError> {
    check_size(g, k)?;
    let mut out = Vec::new();
    for a in 0..g.n() {
        let ps = pieces(g, a);
        if ps.len() < 2 {
            continue;
        }
        let mut chosen = Vec::new();
        collect_unions(&ps, 0, k, &mut chosen, &mut |picked: &[usize]| {
            if picked.len() == ps.len() || !picked.iter().any(|&i| ps[i].touches_link) {
                return;
            }
            let mut set = VertexSet::empty(g.n());
            for &i in picked {
                set.union_with(&ps[i].set);
            }
            out.push(StarSeparation { centre: a, set });
        });
    }
    out.sort();
    Ok(out)
}

/// Depth-first walk over subsets of `ps[from..]` whose sizes sum to `remaining`.
fn collect_unions(
    ps: &[Piece],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    for i in from..ps.len() {
        if ps[i].size <= remaining {
            chosen.push(i);
            collect_unions(ps, i + 1, remaining - ps[i].size, chosen, emit);
            chosen.pop();
        }
    }
}

/// Subset-sum counts of proper unions for one centre, indexed by size
/// `0..=max_size`.
fn proper_union_counts(ps: &[Piece], max_size: usize) -> Option<Vec<u128>> {
    // all[s]: subsets of every piece with total size s;
    // inert[s]: subsets using only pieces that do not touch lk(a).
    let mut all = vec![0u128; max_size + 1];
    let mut inert = vec![0u128; max_size + 1];
    all[0] = 1;
    inert[0] = 1;
    for p in ps {
        for s in (p.size..=max_size).rev() {
            all[s] = all[s].checked_add(all[s - p.size])?;
            if !p.touches_link {
                inert[s] = inert[s].checked_add(inert[s - p.size])?;
            }
        }
    }
    let whole: usize = ps.iter().map(|p| p.size).sum();
    let whole_is_proper = ps.iter().any(|p| p.touches_link);
    let mut counts: Vec<u128> = all.iter().zip(&inert).map(|(x, y)| x - y).collect();
    if whole_is_proper && whole <= max_size {
        counts[whole] -= 1;
    }
    counts[0] = 0;
    Some(counts)
}

/// Number of proper star `k`-separations, without enumerating them.
pub fn proper_star_k_separation_count(g: &Graph, k: usize) -> Result<u128, DetectorError> {
    check_size(g, k)?;
    let mut total: u128 = 0;
    for a in 0..g.n() {
        let ps = pieces(g, a);
        if ps.len() < 2 {
            continue;
        }
        let counts = proper_union_counts(&ps, k).ok_or(DetectorError::CountOverflow { k })?;
        total = total
            .checked_add(counts[k])
            .ok_or(DetectorError::CountOverflow { k })?;
    }
    Ok(total)
}

/// Star-cut structure of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSeparationReport {
    /// Vertices `a` with `Γ ∖ st(a)` disconnected.
    pub star_cut_vertices: VertexSet,
    /// Components of `Γ ∖ st(a)` for every `a`.
    pub per_vertex_components: Vec<Vec<VertexSet>>,
    /// `k ↦` number of proper star `k`-separations; zero counts omitted.
    pub proper_k_separation_counts: BTreeMap<usize, u128>,
    /// See [`transvection_reducible`].
    pub reducible: bool,
}

/// Builds the full [`StarSeparationReport`].
pub fn star_separation_report(g: &Graph) -> Result<StarSeparationReport, DetectorError> {
    let n = g.n();
    let mut per_vertex_components = Vec::with_capacity(n);
    let mut cut = VertexSet::empty(n);
    let mut totals = vec![0u128; n + 1];
    let mut reducible = true;
    for a in 0..n {
        let ps = pieces(g, a);
        if ps.len() >= 2 {
            cut.insert(a);
            if ps.iter().filter(|p| p.size >= 2).count() > 1 {
                reducible = false;
            }
            let counts = proper_union_counts(&ps, n).ok_or(DetectorError::CountOverflow { k: n })?;
            for (k, c) in counts.into_iter().enumerate() {
                totals[k] = totals[k]
                    .checked_add(c)
                    .ok_or(DetectorError::CountOverflow { k })?;
            }
        }
        per_vertex_components.push(ps.into_iter().map(|p| p.set).collect());
    }
    let proper_k_separation_counts = totals
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect();
    Ok(StarSeparationReport {
        star_cut_vertices: cut,
        per_vertex_components,
        proper_k_separation_counts,
        reducible,
    })
}
