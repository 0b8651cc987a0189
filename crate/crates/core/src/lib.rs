//! Exact algebra over the Gaussian rationals for Lie bialgebras, classical
//! r-matrices, finite Hopf algebras with Drinfel'd twists and truncated twist
//! star products.

pub mod bialg;
pub mod catalog;
pub mod cohomology;
pub mod decomp;
pub mod deform;
pub mod error;
pub mod hopf;
pub mod io;
pub mod liealg;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod verdict;

pub use error::{Error, LiteralError, Result};
pub use liealg::LieAlgebra;
pub use linalg::{Matrix, Subspace, Tensor3, Vector};
pub use scalar::Scalar;
