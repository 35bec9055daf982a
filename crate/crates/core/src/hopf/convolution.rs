use std::collections::BTreeMap;

use super::coproduct::{Bialgebra, Coproducts};
use super::Antipode;
use crate::freealg::{basis_up_to, check_op, product, AlgebraError, Element, FreeAlgebra, Op};
use crate::scalar::Scalar;

/// A linear map `A₊ → A₊` given on every basis key of degree
/// `≤ max_degree`. Images are exact elements and may have any degree.
#[derive(Clone)]
pub struct Endomorphism<A: FreeAlgebra, S: Scalar> {
    max_degree: usize,
    generators: usize,
    images: BTreeMap<A::Key, Element<A, S>>,
}

impl<A: FreeAlgebra, S: Scalar> PartialEq for Endomorphism<A, S> {
    fn eq(&self, other: &Self) -> bool {
        self.max_degree == other.max_degree && self.generators == other.generators && self.images == other.images
    }
}

impl<A: FreeAlgebra, S: Scalar> std::fmt::Debug for Endomorphism<A, S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.images.iter().map(|(k, v)| (k, v.to_string()))).finish()
    }
}

impl<A: FreeAlgebra, S: Scalar> Endomorphism<A, S> {
    pub fn from_fn<F>(max_degree: usize, generators: usize, mut f: F) -> Result<Self, AlgebraError>
    where
        F: FnMut(&A::Key) -> Element<A, S>,
    {
        let images = basis_up_to::<A>(max_degree, generators)?
            .into_iter()
            .map(|k| {
                let v = f(&k);
                (k, v)
            })
            .collect();
        Ok(Endomorphism { max_degree, generators, images })
    }

    pub fn identity(max_degree: usize, generators: usize) -> Result<Self, AlgebraError> {
        Self::from_fn(max_degree, generators, |k| Element::<A, S>::basis(k.clone()))
    }

    /// `u ∘ counit`: `1 ↦ 1`, everything else to zero.
    pub fn unit_counit(max_degree: usize, generators: usize) -> Result<Self, AlgebraError> {
        Self::from_fn(max_degree, generators, |k| {
            if A::is_unit(k) {
                Element::<A, S>::basis(k.clone())
            } else {
                Element::<A, S>::zero()
            }
        })
    }

    /// Projection onto the augmentation ideal.
    pub fn augmentation(max_degree: usize, generators: usize) -> Result<Self, AlgebraError> {
        Self::from_fn(max_degree, generators, |k| {
            if A::is_unit(k) {
                Element::<A, S>::zero()
            } else {
                Element::<A, S>::basis(k.clone())
            }
        })
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn image(&self, key: &A::Key) -> Option<&Element<A, S>> {
        self.images.get(key)
    }

    pub fn images(&self) -> impl Iterator<Item = (&A::Key, &Element<A, S>)> {
        self.images.iter()
    }

    /// Image of `x`; `None` if `x` has a term beyond the truncation.
    pub fn apply(&self, x: &Element<A, S>) -> Option<Element<A, S>> {
        let mut out = Element::<A, S>::zero();
        for (k, c) in x {
            out.add_scaled(c, self.images.get(k)?);
        }
        Some(out)
    }

    /// `f∘g` where `g` maps into the truncated domain of `f`.
    pub fn then(&self, f: &Endomorphism<A, S>) -> Option<Self> {
        let images = self.images.iter().map(|(k, v)| Some((k.clone(), f.apply(v)?))).collect::<Option<_>>()?;
        Some(Endomorphism { max_degree: self.max_degree, generators: self.generators, images })
    }
}

impl<A: Bialgebra, S: Scalar> Endomorphism<A, S> {
    /// The antipode, truncated.
    pub fn antipode(max_degree: usize, generators: usize) -> Result<Self, AlgebraError> {
        let mut s = Antipode::<A, S>::new();
        Self::from_fn(max_degree, generators, |k| s.key(k))
    }

    /// `μ̄(f, g) = μ ∘ (f⊗g) ∘ Δ`.
    ///
    /// `Δ` preserves degree, so every tensor leg of an input key lies in the
    /// truncated domain and the result is exact. Fails when `μ` is not an
    /// operation of the family, when the truncations differ, or when some
    /// `1 ∘ 1` product arises that the family leaves undefined.
    pub fn convolution(mu: Op, f: &Self, g: &Self) -> Result<Self, AlgebraError> {
        check_op::<A>(mu)?;
        if f.max_degree != g.max_degree {
            return Err(AlgebraError::TruncationMismatch(f.max_degree, g.max_degree));
        }
        if f.generators != g.generators {
            return Err(AlgebraError::GeneratorMismatch(f.generators, g.generators));
        }
        let mut cx = Coproducts::<A, S>::new();
        let mut images = BTreeMap::new();
        for k in f.images.keys() {
            let mut out = Element::<A, S>::zero();
            for ((a, b), c) in &cx.key(k) {
                let p = product::<A, S>(mu, &f.images[a], &g.images[b])?;
                out.add_scaled(c, &p);
            }
            images.insert(k.clone(), out);
        }
        Ok(Endomorphism { max_degree: f.max_degree, generators: f.generators, images })
    }
}
