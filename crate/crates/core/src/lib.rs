//! Anti-Ramsey and Turán numbers of paths, cycles and matchings in complete
//! `s`-uniform hypergraphs.
//!
//! The crate is organized bottom-up:
//!
//! * [`model`]: the host `K_n^(s)`, colex edge ranks, edge sets and colorings.
//! * [`motif`]: linear, loose and Berge paths and cycles, matchings, and the
//!   exhaustive (rainbow) copy search.
//! * [`constructions`]: extremal families and lower-bound colorings.
//! * [`formulas`]: closed-form Turán and anti-Ramsey values with their
//!   regimes of validity.
//! * [`solver`]: exact values on small hosts and Monte Carlo estimates.
//! * [`cli`]: the `arc` command-line front end.

pub mod binom;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod formulas;
pub mod model;
pub mod motif;
pub mod solver;

pub use error::{Error, Result};
pub use exec::Execution;
pub use model::{Coloring, Edge, EdgeSet, HostGraph, VertexSet};
pub use motif::{MotifKind, MotifSpec, Witness};
