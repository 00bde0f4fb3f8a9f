//! Which matching numbers can a degree sequence realize?
//!
//! This crate decides, for a tree degree sequence or a bipartite degree
//! sequence, exactly which matching numbers `ν` occur among its realizations.
//! The achievable values always form a closed integer interval. Endpoints of
//! the tree interval come from closed formulas; bipartite feasibility for a
//! single `ν` reduces to a max-flow problem on a small network, or
//! equivalently to a cubic family of Gale-Ryser-style inequalities evaluated
//! on "clean" cuts. Every achievable value comes with an explicit witness
//! realization, built either by the flow route or by walking degree-preserving
//! edge swaps between extremal realizations.
//!
//! The [`oracle`] module enumerates all realizations of small instances
//! (Prüfer strings for trees, 0/1 matrices for bipartite graphs) and is the
//! ground truth the rest of the crate is tested against.
//!
//! The crate is `no_std` (it requires `alloc`); everything is a pure function
//! over immutable inputs.
//!
//! ```
//! use degmatch_core::cuts::matching_interval_bipartite;
//! use degmatch_core::flow::{realize_bipartite_with_nu, BipRealization};
//! use degmatch_core::{BipartiteDegreeSequence, DegreeSequence};
//!
//! let dd = BipartiteDegreeSequence::new(
//!     DegreeSequence::new(vec![2, 1, 1]).unwrap(),
//!     DegreeSequence::new(vec![2, 1, 1]).unwrap(),
//! );
//! let interval = matching_interval_bipartite(&dd);
//! assert!(interval.contains(2) && interval.contains(3));
//! if let BipRealization::Realized { graph, .. } = realize_bipartite_with_nu(&dd, 2).unwrap() {
//!     assert_eq!(graph.degree_vectors().0, &[2, 1, 1]);
//! }
//! ```

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod cuts;
pub mod flow;
pub mod graph;
pub mod oracle;
pub mod swap;
pub mod tree;

pub use graph::{
    BipartiteDegreeSequence, DegreeSequence, LabeledBipartiteGraph, LabeledTree, Matching,
    VertexCover,
};
