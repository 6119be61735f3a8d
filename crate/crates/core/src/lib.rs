//! Structural predicates, closed-form expectations and Erdős–Rényi sampling
//! for studying when `Out(A_Γ)` of a random right-angled Artin group is finite.
//!
//! `Out(A_Γ)` is finite exactly when `Γ` is star 2-connected and has no
//! domination pairs. This crate provides:
//!
//! - [`graph`]: an immutable bit-set adjacency [`Graph`] with star, link,
//!   complement and component primitives;
//! - [`detectors`]: domination pairs, domination diamonds, star-cut-vertices,
//!   proper star k-separations, classical degree predicates and the
//!   finiteness verdict;
//! - [`formulas`]: exact expectations over `G(n,p)`, the analytic bounds on
//!   them, threshold functions and a finite-n regime classifier;
//! - [`sampler`]: reproducible `G(n,p)` sampling with dense and geometric
//!   skip paths, plus exact log-probabilities of individual graphs.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled.
#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![deny(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod detectors;
pub mod formulas;
pub mod graph;
pub mod sampler;

pub use graph::{Graph, GraphBuilder, GraphError, VertexSet};
