use super::{star_keys, Element, Family, FreeAlgebra, Op, TensorRule, UnitAction};
use crate::exactlin::LinComb;
use crate::scalar::Scalar;
use crate::trees::{enumerate_planar, PlanarTree};

/// Free dendriform trialgebra on one generator, on planar trees.
///
/// For `t = ∨(t⁰, …, tⁿ)` and `s = ∨(s⁰, …, sᵐ)`:
///
/// ```text
/// t ≺ s = ∨(t⁰, …, tⁿ⁻¹, tⁿ * s)
/// t ≻ s = ∨(t * s⁰, s¹, …, sᵐ)
/// t · s = ∨(t⁰, …, tⁿ⁻¹, tⁿ * s⁰, s¹, …, sᵐ)
/// ```
///
/// where slot products use `*` on the augmented algebra, so `1*1 = 1`.
pub struct Tridend;

impl FreeAlgebra for Tridend {
    type Key = PlanarTree;

    const FAMILY: Family = Family::Tridend;
    const OPS: &'static [Op] = &[Op::Prec, Op::Succ, Op::Dot, Op::Star];
    const GENERATING_OPS: &'static [Op] = &[Op::Prec, Op::Succ, Op::Dot];
    const STAR: Op = Op::Star;
    const TENSOR_RULE: TensorRule = TensorRule::Mixed;
    const MAX_GENERATORS: Option<usize> = Some(1);

    fn unit() -> PlanarTree {
        PlanarTree::Leaf
    }

    fn generator(_index: usize) -> PlanarTree {
        PlanarTree::y()
    }

    fn degree(key: &PlanarTree) -> usize {
        key.degree()
    }

    fn content(key: &PlanarTree, _generators: usize) -> Vec<usize> {
        vec![key.degree()]
    }

    fn enumerate(n: usize, _generators: usize) -> Vec<PlanarTree> {
        enumerate_planar(n)
    }

    fn is_unit(key: &PlanarTree) -> bool {
        key.is_leaf()
    }

    fn unit_action(op: Op) -> UnitAction {
        match op {
            Op::Prec => UnitAction::LEFT_PART,
            Op::Succ => UnitAction::RIGHT_PART,
            Op::Dot => UnitAction::NONE,
            Op::Star => UnitAction::UNITAL,
        }
    }

    fn product_basis<S: Scalar>(op: Op, t: &PlanarTree, s: &PlanarTree) -> Element<Self, S> {
        let tc = t.children();
        let sc = s.children();
        match op {
            Op::Prec => {
                let (last, init) = tc.split_last().expect("non-unit");
                graft_with_slot(init, &star_keys::<Tridend, S>(last, s), &[])
            }
            Op::Succ => {
                let (first, rest) = sc.split_first().expect("non-unit");
                graft_with_slot(&[], &star_keys::<Tridend, S>(t, first), rest)
            }
            Op::Dot => {
                let (last, init) = tc.split_last().expect("non-unit");
                let (first, rest) = sc.split_first().expect("non-unit");
                graft_with_slot(init, &star_keys::<Tridend, S>(last, first), rest)
            }
            Op::Star => {
                let mut out = Self::product_basis::<S>(Op::Prec, t, s);
                out.add_scaled(&S::one(), &Self::product_basis::<S>(Op::Succ, t, s));
                out.add_scaled(&S::one(), &Self::product_basis::<S>(Op::Dot, t, s));
                out
            }
        }
    }
}

/// `∨(before…, x, after…)`, extended linearly in the middle slot.
fn graft_with_slot<S: Scalar>(
    before: &[PlanarTree],
    x: &LinComb<PlanarTree, S>,
    after: &[PlanarTree],
) -> LinComb<PlanarTree, S> {
    x.map_keys(|mid| {
        let mut ch = Vec::with_capacity(before.len() + after.len() + 1);
        ch.extend_from_slice(before);
        ch.push(mid.clone());
        ch.extend_from_slice(after);
        PlanarTree::Node(ch)
    })
}
