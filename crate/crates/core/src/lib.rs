//! Exact rational machinery for the polytope of row-stochastic matrices and
//! its centrosymmetric subpolytope.
//!
//! Everything is computed over arbitrary-precision rationals. Matrix indices
//! in the public API are 1-based (row `i`, column `j`), matching the usual
//! mathematical convention `a_{i,j}`.

pub mod bases;
pub mod batch;
pub mod combination;
pub mod decompose;
mod error;
pub mod extremes;
pub mod faces;
pub mod graph;
pub mod matrix;
pub mod perm;
pub mod rank;
pub mod rational;
pub mod sample;
pub mod smx;

pub use combination::{ConvexCombination, Term};
pub use error::{Error, Result};
pub use faces::FacePattern;
pub use graph::BipartiteGraph;
pub use matrix::Matrix;
pub use perm::RectPermMatrix;
pub use rank::rank_of_family;
pub use rational::Rational;
