//! Monochromatic triangle tilings of 2-edge-coloured graphs: exact and
//! heuristic solvers, extremal constructions, regularity tooling and the
//! structural routines behind the minimum-degree bounds.

pub mod bitset;
pub mod bounds;
pub mod error;
pub mod generators;
pub mod graph;
pub mod independence;
pub mod io;
pub mod regularity;
pub mod report;
pub mod scalar;
pub mod solver;
pub mod theory;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Color, ColoredGraph, Graph, Mode, Tiling, Triangle, TriangleColor};
pub use scalar::Scalar;
pub use solver::{max_mono_tiling_exact, SolveResult};

/// Exact arithmetic used wherever a threshold boundary matters.
pub type Exact = num_rational::BigRational;
/// Fixed-width rational, adequate for small parameters.
pub type Rational = num_rational::Rational64;
/// Floating-point instantiation.
pub type Real = f64;
