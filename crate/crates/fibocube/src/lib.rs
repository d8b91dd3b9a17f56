//! Independent subsets of path powers, their counting formulas, and the
//! Hasse diagram of their inclusion order.
//!
//! The h-power of a path on n vertices joins every pair of vertices at index
//! distance at most h. Its independent subsets are the length-n bitstrings
//! whose 1s are more than h apart; for h = 1 these are Fibonacci strings and
//! the inclusion order's Hasse diagram is the Fibonacci cube, for h = 0 the
//! Boolean lattice. The crate provides:
//!
//! - [`counting`]: exact closed forms, recurrences, the h-Fibonacci sequence,
//!   and the edge count of the Hasse diagram by two independent routes
//!   (rank-weighted binomial sum and sequence self-convolution);
//! - [`enumeration`]: deterministic generation of the gap-constrained
//!   bitstrings;
//! - [`hasse`]: materialization of the cover-edge graph;
//! - [`oracle`]: brute-force re-counts used to cross-verify everything;
//! - [`cli`]: the command-line interface.

pub mod cli;
pub mod counting;
pub mod enumeration;
pub mod error;
pub mod hasse;
pub mod oracle;

pub use counting::PathPower;
pub use enumeration::IndependentSubset;
pub use error::{Error, Result};
pub use hasse::HasseGraph;
