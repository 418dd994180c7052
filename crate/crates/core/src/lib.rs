//! Exact computations around quaternionic structures that preserve polar
//! foliations of spheres: Clifford systems, FKM quartics, weight systems of
//! symmetric-space isotropy representations, and the resulting moduli counts.

pub mod classify;
pub mod clifford;
pub mod error;
pub mod export;
pub mod fkm;
pub mod liealg;
pub mod linsolve;
pub mod matrix;
pub mod poly;
pub mod quat;
pub mod rational;
pub mod sparse;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use rational::Rational;
