use super::{Element, Family, FreeAlgebra, Op, TensorRule, UnitAction};
use crate::scalar::Scalar;
use crate::trees::{enumerate_alt, AltTree, Label};

/// Free algebra with two associative operations `*` and `·` and no other
/// relation, on alternating labeled trees. The unit is two-sided for both.
pub struct TwoAs;

pub(crate) fn label_of(op: Op) -> Label {
    match op {
        Op::Star => Label::Star,
        Op::Dot => Label::Dot,
        _ => unreachable!("checked by caller"),
    }
}

impl FreeAlgebra for TwoAs {
    type Key = AltTree;

    const FAMILY: Family = Family::TwoAs;
    const OPS: &'static [Op] = &[Op::Star, Op::Dot];
    const GENERATING_OPS: &'static [Op] = &[Op::Star, Op::Dot];
    const STAR: Op = Op::Star;
    const TENSOR_RULE: TensorRule = TensorRule::Diagonal;

    fn unit() -> AltTree {
        AltTree::Unit
    }

    fn generator(index: usize) -> AltTree {
        AltTree::Gen(index)
    }

    fn degree(key: &AltTree) -> usize {
        key.degree()
    }

    fn content(key: &AltTree, generators: usize) -> Vec<usize> {
        key.content(generators)
    }

    fn enumerate(n: usize, generators: usize) -> Vec<AltTree> {
        enumerate_alt(n, generators)
    }

    fn is_unit(key: &AltTree) -> bool {
        key.is_unit()
    }

    fn unit_action(_op: Op) -> UnitAction {
        UnitAction::UNITAL
    }

    fn product_basis<S: Scalar>(op: Op, a: &AltTree, b: &AltTree) -> Element<Self, S> {
        Element::<Self, S>::basis(AltTree::join(label_of(op), a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{basis, product};
    use crate::Rational;

    type E = Element<TwoAs, Rational>;

    fn e(s: &str) -> E {
        E::basis(s.parse().unwrap())
    }

    fn mul(op: Op, a: &E, b: &E) -> E {
        product::<TwoAs, Rational>(op, a, b).unwrap()
    }

    #[test]
    fn normal_form_products() {
        let x = e("x");
        let xx = mul(Op::Star, &x, &x);
        assert_eq!(xx, e("*(x,x)"));
        assert_eq!(mul(Op::Star, &xx, &x), e("*(x,x,x)"));
        assert_eq!(mul(Op::Dot, &xx, &x), e(".(*(x,x),x)"));
    }

    #[test]
    fn unit_is_two_sided_for_both() {
        let x = e("x2");
        let one = e("1");
        for op in [Op::Star, Op::Dot] {
            assert_eq!(mul(op, &one, &x), x);
            assert_eq!(mul(op, &x, &one), x);
            assert_eq!(mul(op, &one, &one), one);
        }
    }

    #[test]
    fn degree_three_dimension() {
        assert_eq!(basis::<TwoAs>(3, 1).unwrap().len(), 6);
    }
}
