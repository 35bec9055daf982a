//! Truncated power series with exact coefficients.
//!
//! The generating series of a regular operad is `f(x) = Σ (−1)ⁿ dim Pₙ xⁿ`.
//! A necessary condition for the operad to be Koszul is that the
//! compositional inverse of `f` again has integer coefficients of
//! alternating sign.

mod known;
mod parse;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Scalar;

pub use known::{known_series, KnownSeries, KNOWN_SERIES};
pub use parse::parse_series;

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("the inner series has a nonzero constant term")]
    ConstantTerm,
    #[error("series is not invertible for composition (needs f(0) = 0 and f'(0) != 0)")]
    NotCompositionallyInvertible,
    #[error("division by a series with zero constant term")]
    ZeroConstantDivisor,
    #[error("column {col}: {msg}")]
    Parse { col: usize, msg: String },
}

/// `a₀ + a₁x + … + a_N x^N`, with every operation truncated at `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> PowerSeries<S> {
    /// Pads with zeros or truncates to exactly `order + 1` coefficients.
    pub fn new(mut coeffs: Vec<S>, order: usize) -> Self {
        coeffs.resize(order + 1, S::zero());
        PowerSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| S::from_i64(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: S, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::new(vec![S::zero(), S::one()], order)
    }

    /// `Σ_{n≥1} (−1)ⁿ dims[n−1] xⁿ`.
    pub fn signed_dimensions(dims: &[u64], order: usize) -> Self {
        let coeffs = std::iter::once(S::zero())
            .chain(dims.iter().enumerate().map(|(i, &d)| {
                let c = S::from_i64(d as i64);
                if i % 2 == 0 {
                    -c
                } else {
                    c
                }
            }))
            .collect();
        Self::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `xⁿ`; zero past the order.
    pub fn coeff(&self, n: usize) -> S {
        self.coeffs.get(n).cloned().unwrap_or_else(S::zero)
    }

    /// `|aₙ|` for `1 ≤ n ≤ N`.
    pub fn dimensions(&self) -> Vec<S> {
        self.coeffs[1..].iter().map(|c| c.abs()).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|i| f(&self.coeffs[i], &other.coeffs[i])).collect(), n)
    }

    pub fn scale(&self, c: &S) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantDivisor);
        }
        let n = self.order();
        let mut b = vec![S::one() / a0.clone()];
        for k in 1..=n {
            let s = (1..=k).fold(S::zero(), |acc, i| acc + self.coeffs[i].clone() * b[k - i].clone());
            b.push(-s / a0.clone());
        }
        Ok(PowerSeries { coeffs: b })
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self * &other.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(S::one(), self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self ∘ g`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self, SeriesError> {
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTerm);
        }
        let n = self.order().min(g.order());
        let mut acc = Self::zero(n);
        for c in self.coeffs[..=n].iter().rev() {
            acc = &acc * g;
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// The `g` with `self ∘ g = x`, solved one degree at a time.
    pub fn comp_inverse(&self) -> Result<Self, SeriesError> {
        let f1 = self.coeff(1);
        if !self.coeffs[0].is_zero() || f1.is_zero() {
            return Err(SeriesError::NotCompositionallyInvertible);
        }
        let n = self.order();
        let mut g = Self::zero(n);
        if n >= 1 {
            g.coeffs[1] = S::one() / f1.clone();
        }
        for k in 2..=n {
            // with gₖ = 0, [xᵏ](f∘g) collects everything but f₁gₖ
            let c = self.truncate(k).compose(&g.truncate(k))?.coeffs[k].clone();
            g.coeffs[k] = -c / f1.clone();
        }
        Ok(g)
    }
}

/// Taylor expansion of `numer / denom` at 0 to order `order`.
pub fn expand_rational<S: Scalar>(numer: &[S], denom: &[S], order: usize) -> Result<PowerSeries<S>, SeriesError> {
    let d = PowerSeries::new(denom.to_vec(), order);
    PowerSeries::new(numer.to_vec(), order).div(&d)
}

/// Whether every `aₙ`, `1 ≤ n ≤ N`, is an integer that is zero or has
/// the sign of `(−1)ⁿ`.
pub fn alternating_integer_check<S: Scalar>(f: &PowerSeries<S>) -> bool {
    f.coeffs
        .iter()
        .enumerate()
        .skip(1)
        .all(|(n, a)| a.is_integral() && (a.is_zero() || (n % 2 == 0) == a.is_positive()))
}

impl<S: Scalar> Add for &PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn add(self, rhs: Self) -> PowerSeries<S> {
        self.zip(rhs, |a, b| a.clone() + b.clone())
    }
}

impl<S: Scalar> Sub for &PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn sub(self, rhs: Self) -> PowerSeries<S> {
        self.zip(rhs, |a, b| a.clone() - b.clone())
    }
}

impl<S: Scalar> Neg for &PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn neg(self) -> PowerSeries<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Mul for &PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn mul(self, rhs: Self) -> PowerSeries<S> {
        let n = self.order().min(rhs.order());
        let mut c = vec![S::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        PowerSeries { coeffs: c }
    }
}

impl<S: Scalar> fmt::Display for PowerSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            let neg = a.is_negative();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let m = a.abs();
            match n {
                0 => write!(f, "{}", m)?,
                _ => {
                    if !m.is_one() {
                        write!(f, "{}*", m)?;
                    }
                    if n == 1 {
                        write!(f, "x")?
                    } else {
                        write!(f, "x^{}", n)?
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = PowerSeries<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn compose_examples() {
        let f = P::from_i64(&[0, 3, -1, 2, 5], 6);
        assert_eq!(f.compose(&P::x(6)).unwrap(), f);
        let sq = P::from_i64(&[0, 0, 1], 6);
        assert_eq!(sq.compose(&P::from_i64(&[0, 1, 1], 6)).unwrap(), P::from_i64(&[0, 0, 1, 2, 1], 6));
        let g = expand_rational(&[q(0), q(-1)], &[q(1), q(1)], 10).unwrap();
        assert_eq!(g.compose(&g).unwrap(), P::x(10));
        assert_eq!(g.compose(&P::constant(q(1), 10)), Err(SeriesError::ConstantTerm));
    }

    #[test]
    fn geometric_series() {
        let g = expand_rational(&[q(1)], &[q(1), q(1)], 6).unwrap();
        assert_eq!(g, P::from_i64(&[1, -1, 1, -1, 1, -1, 1], 6));
        assert!(expand_rational(&[q(1)], &[q(0), q(1)], 6).is_err());
    }

    #[test]
    fn inverse_errors() {
        assert!(P::from_i64(&[1, 1], 5).comp_inverse().is_err());
        assert!(P::from_i64(&[0, 0, 1], 5).comp_inverse().is_err());
    }

    #[test]
    fn alternating() {
        assert!(alternating_integer_check(&P::from_i64(&[0, -1, 2, 0, 14], 5)));
        assert!(!alternating_integer_check(&P::new(vec![q(0), q(-1), Rational::new(1.into(), 2.into())], 5)));
        assert!(!alternating_integer_check(&P::from_i64(&[0, -1, -1], 5)));
    }

    #[test]
    fn display() {
        assert_eq!(P::from_i64(&[0, -1, 3, -4], 3).to_string(), "-x + 3*x^2 - 4*x^3 + O(x^4)");
        assert_eq!(P::zero(2).to_string(), "0 + O(x^3)");
    }
}
