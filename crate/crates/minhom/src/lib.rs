//! Minimum-cost homomorphisms to reflexive digraph templates.
//!
//! For a fixed reflexive digraph H, MinHOM(H) asks for a homomorphism
//! f: G -> H minimizing a sum of per-vertex costs c_{f(u)}(u). The
//! problem is polynomial exactly when H admits a Min-Max ordering and
//! NP-complete otherwise. This crate provides:
//!
//! - the dichotomy classifier with forbidden-subgraph certificates
//!   ([`recognition`]),
//! - Min-Max ordering search and the exchange construction that repairs
//!   a bipartite ordering of B(H) into one of H ([`order`]),
//! - an exact min-cut solver for Min-Max-ordered templates ([`solver`]),
//! - brute-force oracles and exhaustive theorem verification
//!   ([`oracle`]),
//! - derivation of the minimal obstruction catalog ([`recognition`])
//!   and the NP-hardness gadget reductions ([`hardness`]),
//! - text formats and DOT export ([`io`]).

pub mod bitset;
pub mod error;
pub mod graph;
pub mod hardness;
pub mod induced;
pub mod io;
pub mod oracle;
pub mod order;
pub mod patterns;
pub mod recognition;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Digraph, UndirectedGraph, VertexId};
pub use order::{BipartiteOrdering, Ordering};
pub use recognition::{classify, derive_obstruction_catalog, DichotomyVerdict, ObstructionCatalog};
pub use solver::{solve, CostMatrix, Homomorphism};
