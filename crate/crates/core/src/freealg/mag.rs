use super::{Element, Family, FreeAlgebra, Op, TensorRule, UnitAction};
use crate::scalar::Scalar;
use crate::trees::{enumerate_magma, MagmaTree};

/// Free magmatic algebra: one binary operation `·` without relations, on
/// leaf-labeled planar binary trees. The unit is two-sided neutral.
pub struct Mag;

impl FreeAlgebra for Mag {
    type Key = MagmaTree;

    const FAMILY: Family = Family::Mag;
    const OPS: &'static [Op] = &[Op::Dot];
    const GENERATING_OPS: &'static [Op] = &[Op::Dot];
    const STAR: Op = Op::Dot;
    const TENSOR_RULE: TensorRule = TensorRule::Diagonal;

    fn unit() -> MagmaTree {
        MagmaTree::Unit
    }

    fn generator(index: usize) -> MagmaTree {
        MagmaTree::Gen(index)
    }

    fn degree(key: &MagmaTree) -> usize {
        key.degree()
    }

    fn content(key: &MagmaTree, generators: usize) -> Vec<usize> {
        key.content(generators)
    }

    fn enumerate(n: usize, generators: usize) -> Vec<MagmaTree> {
        enumerate_magma(n, generators)
    }

    fn is_unit(key: &MagmaTree) -> bool {
        key.is_unit()
    }

    fn unit_action(_op: Op) -> UnitAction {
        UnitAction::UNITAL
    }

    fn product_basis<S: Scalar>(_op: Op, a: &MagmaTree, b: &MagmaTree) -> Element<Self, S> {
        Element::<Self, S>::basis(MagmaTree::node(a.clone(), b.clone()))
    }
}
