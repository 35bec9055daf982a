use super::{Element, Family, FreeAlgebra, Op, TensorRule, UnitAction};
use crate::exactlin::LinComb;
use crate::scalar::Scalar;
use crate::trees::{enumerate_words, Word};

/// Free Zinbiel algebra: words with the half-shuffle
/// `u ≻ v'ℓ = (u ⧢ v')ℓ`. Its symmetrization `*` is the shuffle product.
/// Unit actions: `1 ≻ v = v`, `v ≻ 1 = 0`.
pub struct Zinbiel;

impl FreeAlgebra for Zinbiel {
    type Key = Word;

    const FAMILY: Family = Family::Zinbiel;
    const OPS: &'static [Op] = &[Op::Succ, Op::Star];
    const GENERATING_OPS: &'static [Op] = &[Op::Succ];
    const STAR: Op = Op::Star;
    const TENSOR_RULE: TensorRule = TensorRule::Mixed;

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

    fn unit_action(op: Op) -> UnitAction {
        match op {
            Op::Succ => UnitAction::RIGHT_PART,
            Op::Star => UnitAction::UNITAL,
            _ => UnitAction::NONE,
        }
    }

    fn product_basis<S: Scalar>(op: Op, u: &Word, v: &Word) -> Element<Self, S> {
        match op {
            Op::Succ => {
                let (init, last) = v.split_last().expect("non-unit");
                shuffle::<S>(u, &init).map_keys(|w| w.concat(&Word::letter(last)))
            }
            Op::Star => shuffle(u, v),
            _ => unreachable!("checked by caller"),
        }
    }
}

/// Shuffle product of two words, with multiplicities.
pub fn shuffle<S: Scalar>(u: &Word, v: &Word) -> LinComb<Word, S> {
    let (Some((ui, ul)), Some((vi, vl))) = (u.split_last(), v.split_last()) else {
        return LinComb::basis(u.concat(v));
    };
    let mut out = shuffle::<S>(&ui, v).map_keys(|w| w.concat(&Word::letter(ul)));
    out.add_scaled(&S::one(), &shuffle::<S>(u, &vi).map_keys(|w| w.concat(&Word::letter(vl))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::product;
    use crate::Rational;

    type E = Element<Zinbiel, Rational>;

    fn e(s: &str) -> E {
        E::basis(s.parse().unwrap())
    }

    fn mul(op: Op, a: &E, b: &E) -> E {
        product::<Zinbiel, Rational>(op, a, b).unwrap()
    }

    #[test]
    fn letters() {
        assert_eq!(mul(Op::Succ, &e("x1"), &e("x2")), e("x1x2"));
        assert_eq!(mul(Op::Star, &e("x1"), &e("x2")), &e("x1x2") + &e("x2x1"));
    }

    #[test]
    fn unit_actions() {
        let v = e("x1x2");
        let one = e("1");
        assert_eq!(mul(Op::Succ, &one, &v), v);
        assert!(mul(Op::Succ, &v, &one).is_zero());
        assert!(product::<Zinbiel, Rational>(Op::Succ, &one, &one).is_err());
        assert!(product::<Zinbiel, Rational>(Op::Prec, &v, &v).is_err());
    }

    #[test]
    fn shuffle_counts() {
        let s = shuffle::<Rational>(&"x1x1".parse().unwrap(), &"x1".parse().unwrap());
        assert_eq!(s, E::term("x1x1x1".parse().unwrap(), Rational::from_integer(3.into())));
        let s = shuffle::<Rational>(&"x1x2".parse().unwrap(), &"x3x4".parse().unwrap());
        assert_eq!(s.len(), 6);
    }

    #[test]
    fn left_comb_identification() {
        // x₁x₂x₃ = (x₁ ≻ x₂) ≻ x₃
        let w = mul(Op::Succ, &mul(Op::Succ, &e("x1"), &e("x2")), &e("x3"));
        assert_eq!(w, e("x1x2x3"));
        // x₁ ≻ (x₂ ≻ x₃) = x₁ ≻ x₂x₃ = (x₁ ⧢ x₂)x₃
        let w = mul(Op::Succ, &e("x1"), &mul(Op::Succ, &e("x2"), &e("x3")));
        assert_eq!(w, &e("x1x2x3") + &e("x2x1x3"));
    }
}
