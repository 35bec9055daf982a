use std::fmt::{self, Write as _};

use crate::exactlin::{write_terms, LinComb};
use crate::freealg::{check_op, product_keys, star_keys, AlgebraError, Element, FreeAlgebra, Op, TensorRule};
use crate::scalar::Scalar;

/// Element of `A₊ ⊗ A₊`.
pub type Tensor<A, S> = LinComb<(<A as FreeAlgebra>::Key, <A as FreeAlgebra>::Key), S>;

/// Element of `A₊ ⊗ A₊ ⊗ A₊`.
pub type Tensor3<A, S> = LinComb<(<A as FreeAlgebra>::Key, <A as FreeAlgebra>::Key, <A as FreeAlgebra>::Key), S>;

/// `x ⊗ y`, extended bilinearly.
pub fn outer<K1, K2, S>(x: &LinComb<K1, S>, y: &LinComb<K2, S>) -> LinComb<(K1, K2), S>
where
    K1: Ord + Clone,
    K2: Ord + Clone,
    S: Scalar,
{
    let mut out = LinComb::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_term((a.clone(), b.clone()), ca.clone() * cb.clone());
        }
    }
    out
}

/// `a ⊗ b` for two basis keys.
pub fn pure<A: FreeAlgebra, S: Scalar>(a: &A::Key, b: &A::Key) -> Tensor<A, S> {
    Tensor::<A, S>::basis((a.clone(), b.clone()))
}

/// The flip `τ(a ⊗ b) = b ⊗ a`.
pub fn swap<A: FreeAlgebra, S: Scalar>(t: &Tensor<A, S>) -> Tensor<A, S> {
    t.map_keys(|(a, b)| (b.clone(), a.clone()))
}

/// Product of two tensors in `A₊ ⊗ A₊` following the family's tensor rule.
///
/// Mixed rule on pure tensors: `(a⊗b) ∘ (a'⊗b') = (a*a')⊗(b∘b')` when `b` or
/// `b'` has positive degree, and `(a∘a')⊗1` when both are the unit.
/// Diagonal rule: `(a∘a')⊗(b∘b')`.
pub fn tensor_product_mixed<A: FreeAlgebra, S: Scalar>(
    op: Op,
    u: &Tensor<A, S>,
    v: &Tensor<A, S>,
) -> Result<Tensor<A, S>, AlgebraError> {
    check_op::<A>(op)?;
    let mut out = Tensor::<A, S>::zero();
    for ((a, b), cu) in u {
        for ((a2, b2), cv) in v {
            let c = cu.clone() * cv.clone();
            let t = match A::TENSOR_RULE {
                TensorRule::Diagonal => outer(&product_keys::<A, S>(op, a, a2)?, &product_keys::<A, S>(op, b, b2)?),
                TensorRule::Mixed if A::is_unit(b) && A::is_unit(b2) => {
                    outer(&product_keys::<A, S>(op, a, a2)?, &Element::<A, S>::basis(A::unit()))
                }
                TensorRule::Mixed => outer(&star_keys::<A, S>(a, a2), &product_keys::<A, S>(op, b, b2)?),
            };
            out.add_scaled(&c, &t);
        }
    }
    Ok(out)
}

/// `μ(t)`: multiplies the two legs of every term with `op`.
pub fn multiply<A: FreeAlgebra, S: Scalar>(op: Op, t: &Tensor<A, S>) -> Result<Element<A, S>, AlgebraError> {
    let mut out = Element::<A, S>::zero();
    for ((a, b), c) in t {
        out.add_scaled(c, &product_keys::<A, S>(op, a, b)?);
    }
    Ok(out)
}

/// `(f ⊗ g)(t)` for linear maps given on basis keys.
pub fn map_tensor<A, S, F, G>(t: &Tensor<A, S>, mut f: F, mut g: G) -> Tensor<A, S>
where
    A: FreeAlgebra,
    S: Scalar,
    F: FnMut(&A::Key) -> Element<A, S>,
    G: FnMut(&A::Key) -> Element<A, S>,
{
    let mut out = Tensor::<A, S>::zero();
    for ((a, b), c) in t {
        out.add_scaled(c, &outer(&f(a), &g(b)));
    }
    out
}

/// Renders a tensor with `x⊗1` terms first, then `1⊗x` terms, then the
/// rest, each group in key order. With `ascii`, `⊗` is written `(x)`.
pub fn format_tensor<A: FreeAlgebra, S: Scalar>(t: &Tensor<A, S>, ascii: bool) -> String {
    struct Show<'a, A: FreeAlgebra, S: Scalar>(&'a Tensor<A, S>, &'static str);

    impl<A: FreeAlgebra, S: Scalar> fmt::Display for Show<'_, A, S> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let group = |(a, b): &(A::Key, A::Key)| match (A::is_unit(a), A::is_unit(b)) {
                (false, true) => 0,
                (true, false) => 1,
                _ => 2,
            };
            let mut terms: Vec<_> = self.0.iter().collect();
            terms.sort_by_key(|(k, _)| group(k));
            write_terms(f, terms.into_iter().map(|(k, c)| (k, c.clone())), |f, (a, b)| {
                write!(f, "{}{}{}", a, self.1, b)
            })
        }
    }

    let mut s = String::new();
    let _ = write!(s, "{}", Show::<A, S>(t, if ascii { "(x)" } else { "⊗" }));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{Dend, TwoAs};
    use crate::trees::Pbt;
    use crate::Rational;

    type T = Tensor<Dend, Rational>;

    fn p(s: &str) -> Pbt {
        s.parse().unwrap()
    }

    fn t(a: &str, b: &str) -> T {
        pure::<Dend, Rational>(&p(a), &p(b))
    }

    fn mixed(op: Op, u: &T, v: &T) -> T {
        tensor_product_mixed::<Dend, Rational>(op, u, v).unwrap()
    }

    #[test]
    fn unit_line_rule() {
        let r = mixed(Op::Prec, &t("(|,|)", "|"), &t("(|,|)", "|"));
        assert_eq!(r, t("(|,(|,|))", "|"));
    }

    #[test]
    fn first_rule_uses_star_on_the_left_leg() {
        assert!(mixed(Op::Prec, &t("(|,|)", "|"), &t("|", "(|,|)")).is_zero());
        assert!(mixed(Op::Succ, &t("|", "(|,|)"), &t("(|,|)", "|")).is_zero());
        assert_eq!(mixed(Op::Succ, &t("(|,|)", "|"), &t("|", "(|,|)")), t("(|,|)", "(|,|)"));
    }

    #[test]
    fn unit_unit_is_an_error_when_undefined() {
        let one = t("|", "|");
        assert!(tensor_product_mixed::<Dend, Rational>(Op::Prec, &one, &one).is_err());
        let one = pure::<TwoAs, Rational>(&"1".parse().unwrap(), &"1".parse().unwrap());
        assert_eq!(tensor_product_mixed::<TwoAs, Rational>(Op::Dot, &one, &one).unwrap(), one);
    }

    #[test]
    fn display_puts_unit_lines_first() {
        let x = &(&t("|", "((|,|),|)") + &t("(|,|)", "(|,|)")) + &t("((|,|),|)", "|");
        assert_eq!(format_tensor::<Dend, Rational>(&x, false), "((|,|),|)⊗| + |⊗((|,|),|) + (|,|)⊗(|,|)");
        assert_eq!(format_tensor::<Dend, Rational>(&t("|", "|"), true), "|(x)|");
        assert_eq!(format_tensor::<Dend, Rational>(&T::zero(), true), "0");
    }
}
