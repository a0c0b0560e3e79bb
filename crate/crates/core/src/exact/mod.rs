//! Exact scalar and matrix arithmetic: rationals, Gaussian rationals,
//! dense matrices, rank, determinant and signature.

pub mod gaussian;
pub mod int_ring;
pub mod matrix;
pub mod rank;
pub mod rational;
pub mod scalar;
pub mod signature;

pub use gaussian::GaussianRational;
pub use matrix::Matrix;
pub use rank::{determinant, exact_rank};
pub use rational::Rational;
pub use scalar::Scalar;
pub use signature::{char_poly, signature, signature_by_congruence};
