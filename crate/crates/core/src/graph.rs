//! Simple undirected graphs on dense vertex ids `0..n`, stored as packed
//! bit-set adjacency rows.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn word_bit(v: usize) -> (usize, u64) {
    (v / WORD_BITS, 1u64 << (v % WORD_BITS))
}

/// Errors raised when constructing or querying a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    /// An edge endpoint or queried vertex is not below `n`.
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange {
        /// Offending vertex.
        vertex: usize,
        /// Vertex count of the graph.
        n: usize,
    },
    /// An edge `(v, v)` was supplied.
    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),
    /// A pair-valued query was called with equal vertices.
    #[error("distinct vertices required, got ({0}, {0})")]
    SameVertex(usize),
    /// Two vertex sets over different universes were combined.
    #[error("vertex set universe {found} does not match graph size {expected}")]
    UniverseMismatch {
        /// Expected universe size.
        expected: usize,
        /// Universe of the set that was passed in.
        found: usize,
    },
}

/// A subset of `{0, …, universe − 1}` packed into 64-bit words.
///
/// Bits at positions `≥ universe` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    /// The empty set over `universe` vertices.
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            words: vec![0; words_for(universe)],
            universe,
        }
    }

    /// The set of all `universe` vertices.
    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet {
            words: vec![u64::MAX; words_for(universe)],
            universe,
        };
        s.trim();
        s
    }

    /// Builds a set from an iterator of members.
    ///
    /// Returns an error if any member is `≥ universe`.
    pub fn from_members<I>(universe: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(universe);
        for v in members {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_words(universe: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(universe));
        let mut s = VertexSet { words, universe };
        s.trim();
        s
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the ambient vertex set.
    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    /// The packed words, least significant bit first.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Adds `v`. Panics if `v ≥ universe`.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = word_bit(v);
        self.words[w] |= b;
    }

    /// Removes `v` if present.
    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            let (w, b) = word_bit(v);
            self.words[w] &= !b;
        }
    }

    /// Membership test; out-of-universe vertices are never members.
    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = word_bit(v);
        self.words[w] & b != 0
    }

    /// Number of members.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when the set has no members.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Members<'_> {
        Members::new(&self.words)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// `self ∩ other = ∅`.
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == 0)
    }

    /// In-place union.
    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// In-place intersection.
    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// In-place difference `self ∖ other`.
    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// `self ∪ other`.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    /// `self ∩ other`.
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    /// `self ∖ other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// `V ∖ self`.
    pub fn complement(&self) -> VertexSet {
        let words = self.words.iter().map(|w| !w).collect();
        VertexSet::from_words(self.universe, words)
    }

    /// Members collected into a vector.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the ascending member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

/// Ascending iterator over the set bits of a word slice.
#[derive(Clone)]
pub struct Members<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Members<'a> {
    fn new(words: &'a [u64]) -> Self {
        Members {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Members<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// Iterates the set bits of a raw row.
#[inline]
pub(crate) fn bits(words: &[u64]) -> Members<'_> {
    Members::new(words)
}

/// Immutable simple graph with bit-set adjacency rows.
///
/// Invariants: rows are symmetric, there are no self-loops, and the cached
/// edge count equals half the total row population.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from unordered pairs. Duplicate pairs
    /// collapse; out-of-range endpoints and self-loops are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        Graph::edgeless(n).complement()
    }

    /// Path `0 − 1 − … − (n−1)`.
    pub fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.add_edge(v - 1, v);
        }
        b.build()
    }

    /// Cycle `0 − 1 − … − (n−1) − 0`; requires `n ≥ 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut b = GraphBuilder::new(n);
        for v in 0..n {
            b.add_edge(v, (v + 1) % n);
        }
        b.build()
    }

    /// Vertex count.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Raw adjacency row of `v` (the link as packed words).
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    /// Words per row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    /// Whether `u ∼ v`. Out-of-range vertices are never adjacent.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        let (w, b) = word_bit(v);
        self.row(u)[w] & b != 0
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.universe() == self.n {
            Ok(())
        } else {
            Err(GraphError::UniverseMismatch {
                expected: self.n,
                found: s.universe(),
            })
        }
    }

    /// Degree of `v` without a range check.
    #[inline]
    pub fn degree_unchecked(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|lk(v)|`.
    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.degree_unchecked(v))
    }

    /// `lk(v)`: the neighbours of `v`.
    pub fn link(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_words(self.n, self.row(v).to_vec()))
    }

    /// `st(v) = lk(v) ∪ {v}`.
    pub fn star(&self, v: usize) -> Result<VertexSet, GraphError> {
        let mut s = self.link(v)?;
        s.insert(v);
        Ok(s)
    }

    /// The complement graph: `u ∼ v` there iff `u ≠ v` and `u ≁ v` here.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let mut adj = Vec::with_capacity(self.adj.len());
        for v in 0..self.n {
            let (w, b) = word_bit(v);
            for (i, (&r, &f)) in self.row(v).iter().zip(full.words()).enumerate() {
                let mut x = !r & f;
                if i == w {
                    x &= !b;
                }
                adj.push(x);
            }
        }
        let total = self.n * self.n.saturating_sub(1) / 2;
        Graph {
            n: self.n,
            stride: self.stride,
            adj,
            m: total - self.m,
        }
    }

    /// Full subgraph on `V ∖ drop`, relabelled densely in increasing order.
    ///
    /// The returned map sends each new vertex id to its original id.
    pub fn induced_delete(&self, drop: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(drop)?;
        let keep: Vec<usize> = drop.complement().to_vec();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut b = GraphBuilder::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for u in bits(self.row(v)) {
                let j = new_id[u];
                if j != usize::MAX && j > i {
                    b.add_edge(i, j);
                }
            }
        }
        Ok((b.build(), keep))
    }

    /// Connected components in ascending order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.n))
    }

    /// Components of the full subgraph on `within`, with original labels.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut unvisited = within.clone();
        let mut out = Vec::new();
        while let Some(root) = unvisited.first() {
            let comp = self.grow_component(root, &mut unvisited);
            out.push(comp);
        }
        out
    }

    /// Removes from `unvisited` and returns the component of `root` inside
    /// `unvisited ∪ {root}`.
    pub(crate) fn grow_component(&self, root: usize, unvisited: &mut VertexSet) -> VertexSet {
        let mut comp = VertexSet::empty(self.n);
        let mut frontier = VertexSet::empty(self.n);
        frontier.insert(root);
        unvisited.remove(root);
        comp.insert(root);
        let mut next = vec![0u64; self.stride];
        while !frontier.is_empty() {
            next.iter_mut().for_each(|w| *w = 0);
            for v in frontier.iter() {
                for (x, r) in next.iter_mut().zip(self.row(v)) {
                    *x |= r;
                }
            }
            for (x, u) in next.iter_mut().zip(unvisited.words.iter_mut()) {
                *x &= *u;
                *u &= !*x;
            }
            frontier.words.copy_from_slice(&next);
            comp.union_with(&frontier);
        }
        comp
    }

    /// True when the graph has at most one component.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut unvisited = VertexSet::full(self.n);
        self.grow_component(0, &mut unvisited);
        unvisited.is_empty()
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.row(u)).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Degree sequence indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree_unchecked(v)).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental edge insertion for [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
    m: usize,
}

impl GraphBuilder {
    /// Empty builder on `n` vertices.
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        GraphBuilder {
            n,
            stride,
            adj: vec![0; n * stride],
            m: 0,
        }
    }

    /// Adds `u ∼ v` after validating the endpoints. Returns whether the edge
    /// was new.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(self.add_edge(u, v))
    }

    /// Adds `u ∼ v`. Panics on a self-loop or out-of-range endpoint.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v && u < self.n && v < self.n, "invalid edge ({u}, {v})");
        let (wv, bv) = word_bit(v);
        let slot = &mut self.adj[u * self.stride + wv];
        if *slot & bv != 0 {
            return false;
        }
        *slot |= bv;
        let (wu, bu) = word_bit(u);
        self.adj[v * self.stride + wu] |= bu;
        self.m += 1;
        true
    }

    /// Freezes the builder.
    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            stride: self.stride,
            adj: self.adj,
            m: self.m,
        }
    }
}
