//! Structure and dicoloring algorithms for oriented graphs that exclude an
//! orientation of the four-vertex path.
//!
//! The crate is organized around a small set of building blocks:
//!
//! * [`graph`] — the oriented-graph representation plus elementary directed
//!   algorithms (strongly connected components, shortest directed paths,
//!   acyclicity checks with witnesses, neighborhoods).
//! * [`patterns`] — detection of the four induced path orientations,
//!   maximum-tournament enumeration, and strong neighborhoods.
//! * [`structure`] — path-minimizing closed tournaments, dipolar sets, and
//!   the attachment partitions of a path neighborhood.
//! * [`dicolor`] — the constructive dicoloring engine together with the
//!   binding function that bounds its palette.
//! * [`oracle`] — exact brute-force ground truth at desk scale.
//! * [`gen`] — seeded instance generators.

pub mod dicolor;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod patterns;
pub mod structure;

#[cfg(test)]
pub(crate) mod testutil;

pub use graph::{Acyclicity, DirectedPath, GraphError, OrientedGraph, SccDecomposition};
pub use patterns::{
    find_pattern, is_induced_copy, maximum_tournaments, strong_neighborhood, MaximumTournaments,
    PatternId, PatternWitness,
};
