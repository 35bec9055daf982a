use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::scalar::Scalar;

/// A finitely supported linear combination of basis keys.
///
/// Terms are kept in the key order, and no stored coefficient is zero.
#[derive(Clone, PartialEq)]
pub struct LinComb<K: Ord, S> {
    terms: BTreeMap<K, S>,
}

impl<K: Ord, S> Default for LinComb<K, S> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, S: Scalar> LinComb<K, S> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The combination `1·key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, S::one())
    }

    pub fn term(key: K, coef: S) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coef);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, S)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, S> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, S> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coef: S) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coef;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, c: &S, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c.clone() * v.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), c.clone() * v.clone())).collect() }
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<K2, F>(&self, mut f: F) -> LinComb<K2, S>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> LinComb<K2, S>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Relabels keys through `f`; colliding images are summed.
    pub fn map_keys<K2: Ord + Clone, F: FnMut(&K) -> K2>(&self, mut f: F) -> LinComb<K2, S> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter<F: FnMut(&K) -> bool>(&self, mut pred: F) -> Self {
        LinComb { terms: self.terms.iter().filter(|(k, _)| pred(k)).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }
}

/// `c1·u + c2·v` in canonical form.
pub fn lin_combine<K: Ord + Clone, S: Scalar>(c1: &S, u: &LinComb<K, S>, c2: &S, v: &LinComb<K, S>) -> LinComb<K, S> {
    let mut out = u.scale(c1);
    out.add_scaled(c2, v);
    out
}

impl<K: Ord + Clone, S: Scalar> std::ops::Add for &LinComb<K, S> {
    type Output = LinComb<K, S>;
    fn add(self, rhs: Self) -> LinComb<K, S> {
        lin_combine(&S::one(), self, &S::one(), rhs)
    }
}

impl<K: Ord + Clone, S: Scalar> std::ops::Sub for &LinComb<K, S> {
    type Output = LinComb<K, S>;
    fn sub(self, rhs: Self) -> LinComb<K, S> {
        lin_combine(&S::one(), self, &-S::one(), rhs)
    }
}

impl<K: Ord + Clone, S: Scalar> std::ops::Neg for &LinComb<K, S> {
    type Output = LinComb<K, S>;
    fn neg(self) -> LinComb<K, S> {
        self.scale(&-S::one())
    }
}

impl<K: Ord + Clone, S: Scalar> FromIterator<(K, S)> for LinComb<K, S> {
    fn from_iter<I: IntoIterator<Item = (K, S)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<'a, K: Ord, S> IntoIterator for &'a LinComb<K, S> {
    type Item = (&'a K, &'a S);
    type IntoIter = btree_map::Iter<'a, K, S>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + fmt::Debug, S: fmt::Display> fmt::Debug for LinComb<K, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c.to_string()))).finish()
    }
}

/// Writes `terms` as `a + 2*b - 1/3*c`, or `0` when empty.
pub fn write_terms<S: Scalar, T>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (T, S)>,
    mut write_key: impl FnMut(&mut fmt::Formatter<'_>, &T) -> fmt::Result,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        if !mag.is_one() {
            write!(f, "{}*", mag)?;
        }
        write_key(f, &key)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl<K: Ord + Clone + fmt::Display, S: Scalar> fmt::Display for LinComb<K, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter().map(|(k, c)| (k, c.clone())), |f, k| write!(f, "{}", k))
    }
}
