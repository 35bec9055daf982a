use super::{star_keys, Element, Family, FreeAlgebra, Op, TensorRule, UnitAction};
use crate::exactlin::LinComb;
use crate::scalar::Scalar;
use crate::trees::{enumerate_pbt, Pbt};

/// Free dendriform algebra on one generator, on planar binary trees.
///
/// For `t = tˡ ∨ tʳ` and `s = sˡ ∨ sʳ`:
///
/// ```text
/// t ≺ s = tˡ ∨ (tʳ * s)
/// t ≻ s = (t * sˡ) ∨ sʳ
/// ```
///
/// with `*` evaluated on the augmented algebra inside graft slots. Unit
/// actions: `1 ≺ a = 0`, `1 ≻ a = a`, `a ≺ 1 = a`, `a ≻ 1 = 0`.
pub struct Dend;

impl FreeAlgebra for Dend {
    type Key = Pbt;

    const FAMILY: Family = Family::Dend;
    const OPS: &'static [Op] = &[Op::Prec, Op::Succ, Op::Star];
    const GENERATING_OPS: &'static [Op] = &[Op::Prec, Op::Succ];
    const STAR: Op = Op::Star;
    const TENSOR_RULE: TensorRule = TensorRule::Mixed;
    const MAX_GENERATORS: Option<usize> = Some(1);

    fn unit() -> Pbt {
        Pbt::Leaf
    }

    fn generator(_index: usize) -> Pbt {
        Pbt::y()
    }

    fn degree(key: &Pbt) -> usize {
        key.degree()
    }

    fn content(key: &Pbt, _generators: usize) -> Vec<usize> {
        vec![key.degree()]
    }

    fn enumerate(n: usize, _generators: usize) -> Vec<Pbt> {
        enumerate_pbt(n)
    }

    fn is_unit(key: &Pbt) -> bool {
        key.is_leaf()
    }

    fn unit_action(op: Op) -> UnitAction {
        match op {
            Op::Prec => UnitAction::LEFT_PART,
            Op::Succ => UnitAction::RIGHT_PART,
            Op::Star => UnitAction::UNITAL,
            Op::Dot => UnitAction::NONE,
        }
    }

    fn product_basis<S: Scalar>(op: Op, t: &Pbt, s: &Pbt) -> Element<Self, S> {
        match op {
            Op::Prec => {
                let (tl, tr) = t.decompose().expect("non-unit");
                graft_right_slot(tl, &star_keys::<Dend, S>(tr, s))
            }
            Op::Succ => {
                let (sl, sr) = s.decompose().expect("non-unit");
                graft_left_slot(&star_keys::<Dend, S>(t, sl), sr)
            }
            Op::Star => {
                let mut out = Self::product_basis::<S>(Op::Prec, t, s);
                out.add_scaled(&S::one(), &Self::product_basis::<S>(Op::Succ, t, s));
                out
            }
            Op::Dot => unreachable!("checked by caller"),
        }
    }
}

/// `left ∨ x`, extended linearly in `x`.
fn graft_right_slot<S: Scalar>(left: &Pbt, x: &LinComb<Pbt, S>) -> LinComb<Pbt, S> {
    x.map_keys(|r| Pbt::graft(left.clone(), r.clone()))
}

/// `x ∨ right`, extended linearly in `x`.
fn graft_left_slot<S: Scalar>(x: &LinComb<Pbt, S>, right: &Pbt) -> LinComb<Pbt, S> {
    x.map_keys(|l| Pbt::graft(l.clone(), right.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{product, product_keys, AlgebraError};
    use crate::Rational;

    type E = Element<Dend, Rational>;

    fn t(s: &str) -> Pbt {
        s.parse().unwrap()
    }

    fn e(s: &str) -> E {
        E::basis(t(s))
    }

    fn mul(op: Op, a: &E, b: &E) -> E {
        product::<Dend, Rational>(op, a, b).unwrap()
    }

    #[test]
    fn unit_actions() {
        let y = e("(|,|)");
        let one = e("|");
        assert!(mul(Op::Prec, &one, &y).is_zero());
        assert_eq!(mul(Op::Prec, &y, &one), y);
        assert_eq!(mul(Op::Succ, &one, &y), y);
        assert!(mul(Op::Succ, &y, &one).is_zero());
        assert_eq!(mul(Op::Star, &one, &one), one);
    }

    #[test]
    fn undefined_unit_products_are_errors() {
        let one = e("|");
        assert_eq!(product::<Dend, Rational>(Op::Prec, &one, &one), Err(AlgebraError::UndefinedUnitProduct(Op::Prec)));
        let mixed = &one + &e("(|,|)");
        assert!(product::<Dend, Rational>(Op::Succ, &mixed, &one).is_err());
    }

    #[test]
    fn degree_two_products() {
        let y = e("(|,|)");
        assert_eq!(mul(Op::Prec, &y, &y), e("(|,(|,|))"));
        assert_eq!(mul(Op::Succ, &y, &y), e("((|,|),|)"));
        assert_eq!(mul(Op::Star, &y, &y), &e("(|,(|,|))") + &e("((|,|),|)"));
    }

    #[test]
    fn middle_relation_instance() {
        let y = e("(|,|)");
        let lhs = mul(Op::Prec, &mul(Op::Succ, &y, &y), &y);
        let rhs = mul(Op::Succ, &y, &mul(Op::Prec, &y, &y));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, e("((|,|),(|,|))"));
    }

    #[test]
    fn grafting_identity() {
        // t ∨ s = (t ≻ Y) ≺ s
        for n in 0..=4 {
            for tree in enumerate_pbt(n) {
                if let Some((l, r)) = tree.decompose() {
                    let ly = mul(Op::Succ, &E::basis(l.clone()), &e("(|,|)"));
                    let got = mul(Op::Prec, &ly, &E::basis(r.clone()));
                    assert_eq!(got, E::basis(tree.clone()));
                }
            }
        }
    }

    #[test]
    fn unsupported_op() {
        let y = t("(|,|)");
        assert!(matches!(product_keys::<Dend, Rational>(Op::Dot, &y, &y), Err(AlgebraError::UnsupportedOp { .. })));
    }
}
