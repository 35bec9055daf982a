//! Coefficient fields.
//!
//! Every computation in this crate is exact, so the scalar type must be a
//! field with decidable equality. Both the arbitrary-precision rationals used
//! by default and machine-word rationals satisfy the bound; floating point
//! does not, because kernel and rank computations test entries against zero.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

/// An exact field of characteristic zero.
pub trait Scalar: Clone + Debug + Display + PartialEq + Num + Signed + FromStr + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    /// True when the value lies in the prime subring (is an integer).
    fn is_integral(&self) -> bool;
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Scalar for Ratio<i128> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}
