use super::{Element, Family, FreeAlgebra, Op, TensorRule, UnitAction};
use crate::scalar::Scalar;
use crate::trees::{enumerate_words, Word};

/// Free associative algebra: words under concatenation, empty word as unit.
pub struct As;

impl FreeAlgebra for As {
    type Key = Word;

    const FAMILY: Family = Family::As;
    const OPS: &'static [Op] = &[Op::Star];
    const GENERATING_OPS: &'static [Op] = &[Op::Star];
    const STAR: Op = Op::Star;
    const TENSOR_RULE: TensorRule = TensorRule::Diagonal;

    fn unit() -> Word {
        Word::empty()
    }

    fn generator(index: usize) -> Word {
        Word::letter(index)
    }

    fn degree(key: &Word) -> usize {
        key.degree()
    }

    fn content(key: &Word, generators: usize) -> Vec<usize> {
        key.content(generators)
    }

    fn enumerate(n: usize, generators: usize) -> Vec<Word> {
        enumerate_words(n, generators)
    }

    fn is_unit(key: &Word) -> bool {
        key.is_empty()
    }

    fn unit_action(_op: Op) -> UnitAction {
        UnitAction::UNITAL
    }

    fn product_basis<S: Scalar>(_op: Op, u: &Word, v: &Word) -> Element<Self, S> {
        Element::<Self, S>::basis(u.concat(v))
    }
}
