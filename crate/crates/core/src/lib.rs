//! Covering r-graphs with perfect matchings.
//!
//! An r-graph is an r-regular multigraph in which every odd vertex set has at
//! least r edges leaving it. This crate provides:
//!
//! - [`graph`] / [`generators`]: multigraphs with stable edge ids, the
//!   edge-list format and a small corpus of named and random r-graphs;
//! - [`cuts`]: exact minimum odd cuts (Gomory–Hu) and tight-cut enumeration;
//! - [`matching`]: maximum-weight perfect matching and enumeration;
//! - [`fractional`]: fractional 1-factors, convex decomposition into perfect
//!   matchings, multicolorings and double-cover search;
//! - [`cover`]: the self-certifying greedy that picks k perfect matchings;
//! - [`bounds`]: closed-form lower bounds on the covered fraction;
//! - [`exact`]: brute-force best k-unions and the excessive index;
//! - [`cli`]: the command-line front end used by the `pmcover` binary.

mod blossom;
pub mod bounds;
pub mod cli;
pub mod cover;
pub mod cuts;
pub mod error;
pub mod exact;
pub mod fractional;
pub mod generators;
pub mod graph;
mod lp;
pub mod matching;
pub mod numeric;

pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeSet, Multigraph, VertexSet};
pub use matching::Matching;
pub use numeric::Rational;
