//! Exact computations on simplicial complexes: homology, Macaulay inverse
//! systems and stresses, Lefschetz properties of monomial artinian
//! reductions, composition counts and Linial–Meshulam random complexes.

pub mod artinian;
pub mod cli;
pub mod complex;
pub mod compositions;
pub mod datasets;
pub mod error;
pub mod homology;
pub mod inverse;
pub mod linalg;
pub mod poly;
pub mod random;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use linalg::{ExactMatrix, Field};
