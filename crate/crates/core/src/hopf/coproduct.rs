use std::collections::HashMap;

use super::tensor::{outer, pure, tensor_product_mixed, Tensor};
use crate::freealg::{star_keys, As, Dend, Element, FreeAlgebra, Mag, Op, Tridend, TwoAs, Zinbiel};
use crate::scalar::Scalar;
use crate::trees::{AltTree, Label, MagmaTree, Pbt, PlanarTree, Word};

/// A free algebra with its coproduct `Δ : A₊ → A₊ ⊗ A₊`, the unique
/// unital morphism extending `v ↦ v⊗1 + 1⊗v` on generators.
pub trait Bialgebra: FreeAlgebra {
    /// `Δ` on one basis key; sub-coproducts go through `cx` so they are
    /// computed once.
    fn coproduct_key<S: Scalar>(key: &Self::Key, cx: &mut Coproducts<Self, S>) -> Tensor<Self, S>;
}

/// Memo table for coproducts of basis keys. Owned by the caller, so
/// independent computations never share state.
pub struct Coproducts<A: FreeAlgebra, S: Scalar> {
    memo: HashMap<A::Key, Tensor<A, S>>,
}

impl<A: Bialgebra, S: Scalar> Default for Coproducts<A, S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<A: Bialgebra, S: Scalar> Coproducts<A, S> {
    pub fn new() -> Self {
        Coproducts { memo: HashMap::new() }
    }

    pub fn key(&mut self, key: &A::Key) -> Tensor<A, S> {
        if let Some(t) = self.memo.get(key) {
            return t.clone();
        }
        let t = A::coproduct_key(key, self);
        self.memo.insert(key.clone(), t.clone());
        t
    }

    pub fn element(&mut self, x: &Element<A, S>) -> Tensor<A, S> {
        x.map_linear(|k| self.key(k))
    }
}

fn primitive<A: FreeAlgebra, S: Scalar>(g: &A::Key) -> Tensor<A, S> {
    &pure::<A, S>(g, &A::unit()) + &pure::<A, S>(&A::unit(), g)
}

// Products inside these recursions never meet 1⊗1 on both sides, since
// only Δ(1) has a 1⊗1 term and it is never a factor.
fn mixed<A: FreeAlgebra, S: Scalar>(op: Op, u: &Tensor<A, S>, v: &Tensor<A, S>) -> Tensor<A, S> {
    tensor_product_mixed::<A, S>(op, u, v).expect("no unit-unit product in a coproduct recursion")
}

impl Bialgebra for Dend {
    /// `Δ(t∨s) = Σ (t₁*s₁) ⊗ (t₂∨s₂) + t∨s ⊗ 1`, `Δ(|) = |⊗|`.
    fn coproduct_key<S: Scalar>(t: &Pbt, cx: &mut Coproducts<Self, S>) -> Tensor<Self, S> {
        let Some((l, r)) = t.decompose() else {
            return pure::<Dend, S>(t, t);
        };
        let dl = cx.key(l);
        let dr = cx.key(r);
        let mut out = pure::<Dend, S>(t, &Pbt::Leaf);
        for ((l1, l2), c) in &dl {
            for ((r1, r2), d) in &dr {
                let right = Element::<Dend, S>::basis(Pbt::graft(l2.clone(), r2.clone()));
                out.add_scaled(&(c.clone() * d.clone()), &outer(&star_keys::<Dend, S>(l1, r1), &right));
            }
        }
        out
    }
}

impl Bialgebra for Tridend {
    /// Morphism recursion through the grafting identities
    /// `∨(|, x) = Y≺x`, `∨(x⁰, x¹) = (x⁰≻Y)≺x¹`, and
    /// `∨(x⁰, …, xᵏ) = ∨(x⁰, …, xᵏ⁻¹)·(Y≺xᵏ)` for `k ≥ 2`.
    fn coproduct_key<S: Scalar>(t: &PlanarTree, cx: &mut Coproducts<Self, S>) -> Tensor<Self, S> {
        let y = PlanarTree::y();
        if t.is_leaf() {
            return pure::<Tridend, S>(t, t);
        }
        if *t == y {
            return primitive::<Tridend, S>(&y);
        }
        let dy = cx.key(&y);
        let ch = t.children();
        let (last, init) = ch.split_last().expect("non-leaf");
        let y_prec_last = mixed::<Tridend, S>(Op::Prec, &dy, &cx.key(last));
        if init.len() == 1 {
            if init[0].is_leaf() {
                y_prec_last
            } else {
                let left = mixed::<Tridend, S>(Op::Succ, &cx.key(&init[0]), &dy);
                mixed::<Tridend, S>(Op::Prec, &left, &cx.key(last))
            }
        } else {
            let head = cx.key(&PlanarTree::Node(init.to_vec()));
            mixed::<Tridend, S>(Op::Dot, &head, &y_prec_last)
        }
    }
}

impl Bialgebra for TwoAs {
    /// `Δ(x*y) = Δx * Δy` and `Δ(x·y) = (x⊗1)·Δy + Δx·(1⊗y) − x⊗y`, with
    /// diagonal products.
    fn coproduct_key<S: Scalar>(t: &AltTree, cx: &mut Coproducts<Self, S>) -> Tensor<Self, S> {
        match t {
            AltTree::Unit => pure::<TwoAs, S>(t, t),
            AltTree::Gen(_) => primitive::<TwoAs, S>(t),
            AltTree::Node(Label::Star, fs) => {
                let mut acc = cx.key(&fs[0]);
                for f in &fs[1..] {
                    acc = mixed::<TwoAs, S>(Op::Star, &acc, &cx.key(f));
                }
                acc
            }
            AltTree::Node(Label::Dot, fs) => {
                let x = &fs[0];
                let y = if fs.len() == 2 { fs[1].clone() } else { AltTree::Node(Label::Dot, fs[1..].to_vec()) };
                let one = AltTree::Unit;
                let mut out = mixed::<TwoAs, S>(Op::Dot, &pure::<TwoAs, S>(x, &one), &cx.key(&y));
                out.add_scaled(&S::one(), &mixed::<TwoAs, S>(Op::Dot, &cx.key(x), &pure::<TwoAs, S>(&one, &y)));
                out.add_term((x.clone(), y), -S::one());
                out
            }
        }
    }
}

impl Bialgebra for Zinbiel {
    /// Deconcatenation.
    fn coproduct_key<S: Scalar>(w: &Word, _cx: &mut Coproducts<Self, S>) -> Tensor<Self, S> {
        let l = w.letters();
        (0..=l.len()).map(|i| ((Word::new(l[..i].to_vec()), Word::new(l[i..].to_vec())), S::one())).collect()
    }
}

impl Bialgebra for As {
    /// Unshuffle: `Δ(w) = Σ w_I ⊗ w_J` over splittings of the positions.
    fn coproduct_key<S: Scalar>(w: &Word, _cx: &mut Coproducts<Self, S>) -> Tensor<Self, S> {
        let l = w.letters();
        let n = l.len();
        let mut out = Tensor::<As, S>::zero();
        for mask in 0u64..(1u64 << n) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, &x) in l.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(x);
                } else {
                    right.push(x);
                }
            }
            out.add_term((Word::new(left), Word::new(right)), S::one());
        }
        out
    }
}

impl Bialgebra for Mag {
    /// `Δ(l·r) = Δl · Δr` with the diagonal product.
    fn coproduct_key<S: Scalar>(t: &MagmaTree, cx: &mut Coproducts<Self, S>) -> Tensor<Self, S> {
        match t {
            MagmaTree::Unit => pure::<Mag, S>(t, t),
            MagmaTree::Gen(_) => primitive::<Mag, S>(t),
            MagmaTree::Node(l, r) => mixed::<Mag, S>(Op::Dot, &cx.key(l), &cx.key(r)),
        }
    }
}
