//! Free algebras whose associative product splits into several operations
//! (dendriform, tridendriform, two-associative, Zinbiel, associative,
//! magmatic), their bialgebra structure, and tools for checking that an
//! operad presentation is coherent with a unit action.
//!
//! Everything is exact: coefficients are rationals, and the linear algebra
//! is fraction-free elimination. The core is generic over a [`Scalar`]
//! field; [`Rational`] is the default.

pub mod exactlin;
pub mod freealg;
pub mod hopf;
pub mod presentations;
pub mod scalar;
pub mod selftest;
pub mod series;
pub mod trees;

pub use scalar::Scalar;

/// Arbitrary-precision rationals, the default scalar field.
pub type Rational = num_rational::BigRational;

/// Machine-word rationals; faster, but overflow panics.
pub type Rational64 = num_rational::Ratio<i64>;

/// Wider machine-word rationals.
pub type Rational128 = num_rational::Ratio<i128>;
