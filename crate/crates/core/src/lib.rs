//! Exact construction and verification of algebraic minimal cones.

pub mod classify;
pub mod clifford;
pub mod coefficient;
pub mod cones;
pub mod diffgeom;
pub mod error;
pub mod field;
pub mod hypercomplex;
pub mod matrix;
pub mod monomial;
pub mod polynomial;
pub mod selftest;
pub mod text;

pub use coefficient::{Coefficient, Radical};
pub use error::PolyError;
pub use field::Field;
pub use matrix::Matrix;
pub use monomial::{Monomial, MAX_VARS};
pub use polynomial::{Accumulator, Polynomial};

/// Polynomials over ℚ(√2,√3), the default throughout the crate.
pub type Poly = Polynomial<Coefficient>;
/// Polynomials over ℚ.
pub type RationalPoly = Polynomial<num_rational::BigRational>;
/// Matrices over ℚ(√2,√3).
pub type CoeffMatrix = Matrix<Coefficient>;
