//! Exact solvers, kernels and reduction generators for the balance-fair
//! shortest path problem: given a vertex-colored graph and terminals `s`, `t`,
//! decide whether some shortest s-t path uses every color equally often, up
//! to a difference of one.

pub mod cli;
pub mod deadline;
pub mod fpt;
pub mod graph;
pub mod kernel;
pub mod matroid;
pub mod random;
pub mod reduction;
pub mod report;
pub mod solver;

pub use graph::{ColoredInstance, PathSolution};
