//! Bialgebra structure on the free algebras: coproduct, counit, reduced
//! coproduct, coradical filtration, antipode, primitives and convolution.
//!
//! Tensors live in `A₊ ⊗ A₊` as linear combinations of key pairs. The
//! coproduct of each family is the unique unital morphism extending
//! `v ↦ v⊗1 + 1⊗v`; its per-family recursions are in [`Bialgebra`].

mod convolution;
mod coproduct;
mod tensor;

use std::collections::{BTreeMap, HashMap};

use crate::exactlin::{kernel_basis, LinComb, Matrix};
use crate::freealg::{basis, basis_up_to, coordinates, product, AlgebraError, Element};
use crate::scalar::Scalar;

pub use crate::freealg::counit;
pub use convolution::Endomorphism;
pub use coproduct::{Bialgebra, Coproducts};
pub use tensor::{format_tensor, map_tensor, multiply, outer, pure, swap, tensor_product_mixed, Tensor, Tensor3};

/// `Δ(x)`.
pub fn coproduct<A: Bialgebra, S: Scalar>(x: &Element<A, S>) -> Tensor<A, S> {
    Coproducts::<A, S>::new().element(x)
}

/// `Δ̄(x) = Δ(x) − x⊗1 − 1⊗x`, for `x` without unit component.
pub fn reduced_coproduct<A: Bialgebra, S: Scalar>(x: &Element<A, S>) -> Result<Tensor<A, S>, AlgebraError> {
    reduced_with(&mut Coproducts::<A, S>::new(), x)
}

fn reduced_with<A: Bialgebra, S: Scalar>(
    cx: &mut Coproducts<A, S>,
    x: &Element<A, S>,
) -> Result<Tensor<A, S>, AlgebraError> {
    if !counit::<A, S>(x).is_zero() {
        return Err(AlgebraError::UnitComponent);
    }
    Ok(cx.element(x).filter(|(a, b)| !A::is_unit(a) && !A::is_unit(b)))
}

/// `Δ̄⁽ʳ⁾(x) ∈ A₊^{⊗(r+1)}`, iterating `Δ̄` on the last leg; `r = 0` gives
/// `x` itself.
pub fn iterated_reduced_coproduct<A: Bialgebra, S: Scalar>(
    x: &Element<A, S>,
    r: usize,
) -> Result<LinComb<Vec<A::Key>, S>, AlgebraError> {
    let mut cx = Coproducts::<A, S>::new();
    if !counit::<A, S>(x).is_zero() {
        return Err(AlgebraError::UnitComponent);
    }
    let mut cur: LinComb<Vec<A::Key>, S> = x.map_keys(|k| vec![k.clone()]);
    for _ in 0..r {
        cur = iterate_once(&mut cx, &cur);
    }
    Ok(cur)
}

fn iterate_once<A: Bialgebra, S: Scalar>(
    cx: &mut Coproducts<A, S>,
    cur: &LinComb<Vec<A::Key>, S>,
) -> LinComb<Vec<A::Key>, S> {
    cur.map_linear(|keys| {
        let (last, init) = keys.split_last().expect("nonempty");
        let d = reduced_with(cx, &Element::<A, S>::basis(last.clone())).expect("positive degree");
        d.map_keys(|(a, b)| {
            let mut v = init.to_vec();
            v.push(a.clone());
            v.push(b.clone());
            v
        })
    })
}

/// Least `r` with `x ∈ F_r`, where `F₀ = K·1` and `F_r` (`r ≥ 1`) is `K·1`
/// plus the kernel of `Δ̄⁽ʳ⁾` on the augmentation ideal.
pub fn filtration_degree<A: Bialgebra, S: Scalar>(x: &Element<A, S>) -> usize {
    let plus = x.filter(|k| !A::is_unit(k));
    if plus.is_zero() {
        return 0;
    }
    let mut cx = Coproducts::<A, S>::new();
    let mut cur: LinComb<Vec<A::Key>, S> = plus.map_keys(|k| vec![k.clone()]);
    let mut r = 0;
    while !cur.is_zero() {
        cur = iterate_once(&mut cx, &cur);
        r += 1;
    }
    r
}

/// Antipode with a memo table, for repeated evaluation.
pub struct Antipode<A: Bialgebra, S: Scalar> {
    coproducts: Coproducts<A, S>,
    memo: HashMap<A::Key, Element<A, S>>,
}

impl<A: Bialgebra, S: Scalar> Default for Antipode<A, S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<A: Bialgebra, S: Scalar> Antipode<A, S> {
    pub fn new() -> Self {
        Antipode { coproducts: Coproducts::new(), memo: HashMap::new() }
    }

    /// `S(1) = 1`, and `S(x) = −x − Σ S(x₁) * x₂` over `Δ̄(x)`.
    pub fn key(&mut self, key: &A::Key) -> Element<A, S> {
        if A::is_unit(key) {
            return Element::<A, S>::basis(key.clone());
        }
        if let Some(s) = self.memo.get(key) {
            return s.clone();
        }
        let x = Element::<A, S>::basis(key.clone());
        let red = reduced_with(&mut self.coproducts, &x).expect("positive degree");
        let mut out = -&x;
        for ((a, b), c) in &red {
            let sa = self.key(a);
            let p = product::<A, S>(A::STAR, &sa, &Element::<A, S>::basis(b.clone())).expect("star is unital");
            out.add_scaled(&-c.clone(), &p);
        }
        self.memo.insert(key.clone(), out.clone());
        out
    }

    pub fn element(&mut self, x: &Element<A, S>) -> Element<A, S> {
        x.map_linear(|k| self.key(k))
    }
}

/// `S(x)`.
pub fn antipode<A: Bialgebra, S: Scalar>(x: &Element<A, S>) -> Element<A, S> {
    Antipode::<A, S>::new().element(x)
}

/// `(Δ⊗id)Δ(x)` and `(id⊗Δ)Δ(x)`.
pub fn double_coproducts<A: Bialgebra, S: Scalar>(
    cx: &mut Coproducts<A, S>,
    x: &Element<A, S>,
) -> (Tensor3<A, S>, Tensor3<A, S>) {
    let d = cx.element(x);
    let mut left = Tensor3::<A, S>::zero();
    let mut right = Tensor3::<A, S>::zero();
    for ((a, b), c) in &d {
        let da = cx.key(a);
        left.add_scaled(c, &da.map_keys(|(p, q)| (p.clone(), q.clone(), b.clone())));
        let db = cx.key(b);
        right.add_scaled(c, &db.map_keys(|(p, q)| (a.clone(), p.clone(), q.clone())));
    }
    (left, right)
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ` on every basis key of degree `≤ max_degree`.
pub fn coassociativity_check<A: Bialgebra, S: Scalar>(
    max_degree: usize,
    generators: usize,
) -> Result<bool, AlgebraError> {
    let mut cx = Coproducts::<A, S>::new();
    for k in basis_up_to::<A>(max_degree, generators)? {
        let (l, r) = double_coproducts(&mut cx, &Element::<A, S>::basis(k));
        if l != r {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of the primitive elements of degree `n ≥ 1` on `generators`
/// generators: the kernel of `Δ̄` on the degree-`n` component.
///
/// `Δ̄` preserves the multiset of generators, so the kernel is computed
/// block by block; blocks come in increasing content order, each block's
/// basis in reduced echelon form.
pub fn primitive_basis<A: Bialgebra, S: Scalar>(
    n: usize,
    generators: usize,
) -> Result<Vec<Element<A, S>>, AlgebraError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut blocks: BTreeMap<Vec<usize>, Vec<A::Key>> = BTreeMap::new();
    for k in basis::<A>(n, generators)? {
        blocks.entry(A::content(&k, generators)).or_default().push(k);
    }
    let mut cx = Coproducts::<A, S>::new();
    let mut out = Vec::new();
    for keys in blocks.values() {
        let images: Vec<Tensor<A, S>> = keys
            .iter()
            .map(|k| reduced_with(&mut cx, &Element::<A, S>::basis(k.clone())).expect("positive degree"))
            .collect();
        let mut rows: Vec<(A::Key, A::Key)> = images.iter().flat_map(|t| t.keys().cloned()).collect();
        rows.sort();
        rows.dedup();
        let mut m = Matrix::<S>::zeros(rows.len(), keys.len());
        for (j, t) in images.iter().enumerate() {
            for (i, v) in coordinates(&rows, t).expect("rows cover all images").into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        for v in kernel_basis(&m) {
            out.push(keys.iter().cloned().zip(v).collect());
        }
    }
    Ok(out)
}

/// Whether `Δ̄(x) = 0`.
pub fn is_primitive<A: Bialgebra, S: Scalar>(x: &Element<A, S>) -> bool {
    matches!(reduced_coproduct::<A, S>(x), Ok(t) if t.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{Dend, FreeAlgebra, Mag, TwoAs, Zinbiel};
    use crate::Rational;

    fn e<A: FreeAlgebra>(s: &str) -> Element<A, Rational> {
        Element::<A, Rational>::basis(s.parse().unwrap())
    }

    fn t<A: FreeAlgebra>(a: &str, b: &str) -> Tensor<A, Rational> {
        pure::<A, Rational>(&a.parse().unwrap(), &b.parse().unwrap())
    }

    #[test]
    fn dend_small_coproducts() {
        let d = coproduct::<Dend, Rational>(&e::<Dend>("((|,|),|)"));
        let want = &(&t::<Dend>("((|,|),|)", "|") + &t::<Dend>("|", "((|,|),|)")) + &t::<Dend>("(|,|)", "(|,|)");
        assert_eq!(d, want);
        let r = reduced_coproduct::<Dend, Rational>(&e::<Dend>("(|,(|,|))")).unwrap();
        assert_eq!(r, t::<Dend>("(|,|)", "(|,|)"));
        assert!(reduced_coproduct::<Dend, Rational>(&e::<Dend>("|")).is_err());
    }

    #[test]
    fn twoas_dot_square() {
        let d = coproduct::<TwoAs, Rational>(&e::<TwoAs>(".(x,x)"));
        let want = &(&t::<TwoAs>(".(x,x)", "1") + &t::<TwoAs>("1", ".(x,x)")) + &t::<TwoAs>("x", "x");
        assert_eq!(d, want);
    }

    #[test]
    fn zinbiel_deconcatenation() {
        let d = coproduct::<Zinbiel, Rational>(&e::<Zinbiel>("x1x2"));
        let want = &(&t::<Zinbiel>("x1x2", "1") + &t::<Zinbiel>("x1", "x2")) + &t::<Zinbiel>("1", "x1x2");
        assert_eq!(d, want);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode::<Dend, Rational>(&e::<Dend>("(|,|)")), -&e::<Dend>("(|,|)"));
        assert_eq!(antipode::<Dend, Rational>(&e::<Dend>("((|,|),|)")), e::<Dend>("(|,(|,|))"));
        assert_eq!(antipode::<Dend, Rational>(&e::<Dend>("|")), e::<Dend>("|"));
    }

    #[test]
    fn filtration_examples() {
        assert_eq!(filtration_degree::<Dend, Rational>(&e::<Dend>("|")), 0);
        assert_eq!(filtration_degree::<Dend, Rational>(&e::<Dend>("(|,|)")), 1);
        assert_eq!(filtration_degree::<Dend, Rational>(&Element::<Dend, Rational>::zero()), 0);
        let prim = &e::<Dend>("(|,(|,|))") - &e::<Dend>("((|,|),|)");
        assert_eq!(filtration_degree::<Dend, Rational>(&prim), 1);
        assert_eq!(filtration_degree::<Dend, Rational>(&e::<Dend>("((|,|),|)")), 2);
    }

    #[test]
    fn dend_degree_two_primitive() {
        let p = primitive_basis::<Dend, Rational>(2, 1).unwrap();
        assert_eq!(p.len(), 1);
        let want = &e::<Dend>("(|,(|,|))") - &e::<Dend>("((|,|),|)");
        assert!(p[0] == want || p[0] == -&want);
    }

    #[test]
    fn mag_associator_is_primitive() {
        let a = &e::<Mag>("((x1,x2),x3)") - &e::<Mag>("(x1,(x2,x3))");
        assert!(is_primitive::<Mag, Rational>(&a));
        assert!(!is_primitive::<Mag, Rational>(&e::<Mag>("(x1,x2)")));
    }
}
