//! Graded products of the concrete free algebras.
//!
//! Each family is a zero-sized type implementing [`FreeAlgebra`]; its
//! elements are linear combinations of the family's basis keys, with the
//! unit of the augmented algebra represented as a degree-zero key. Products
//! are extended bilinearly; products involving the unit go through the
//! family's [`UnitAction`], and `1 ∘ 1` is an error wherever the family
//! leaves it undefined.

mod assoc;
mod dend;
mod mag;
mod tridend;
mod twoas;
mod zinbiel;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use thiserror::Error;

use crate::exactlin::{span_rank, LinComb};
use crate::scalar::Scalar;
use crate::trees::ParseError;

pub use assoc::As;
pub use dend::Dend;
pub use mag::Mag;
pub use tridend::Tridend;
pub use twoas::TwoAs;
pub use zinbiel::Zinbiel;

/// Element of a free algebra: a linear combination of its basis keys.
pub type Element<A, S> = LinComb<<A as FreeAlgebra>::Key, S>;

/// The implemented free-algebra families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Dend,
    Tridend,
    TwoAs,
    Zinbiel,
    As,
    Mag,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Dend, Family::Tridend, Family::TwoAs, Family::Zinbiel, Family::As, Family::Mag];

    pub fn name(self) -> &'static str {
        match self {
            Family::Dend => "dend",
            Family::Tridend => "tridend",
            Family::TwoAs => "2as",
            Family::Zinbiel => "zinbiel",
            Family::As => "as",
            Family::Mag => "mag",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| AlgebraError::UnknownFamily(s.to_string()))
    }
}

/// Binary operation symbols shared by all families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// left, `≺`
    Prec,
    /// right, `≻`
    Succ,
    /// middle, `·`
    Dot,
    /// the associative operation `*`
    Star,
}

impl Op {
    pub fn symbol(self) -> &'static str {
        match self {
            Op::Prec => "<",
            Op::Succ => ">",
            Op::Dot => ".",
            Op::Star => "*",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Op {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "<" | "prec" | "≺" | "left" => Ok(Op::Prec),
            ">" | "succ" | "≻" | "right" => Ok(Op::Succ),
            "." | "dot" | "·" | "middle" => Ok(Op::Dot),
            "*" | "star" | "concat" => Ok(Op::Star),
            other => Err(AlgebraError::UnknownOp(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("1 {0} 1 is undefined")]
    UndefinedUnitProduct(Op),
    #[error("operation '{op}' does not belong to family {family}")]
    UnsupportedOp { family: Family, op: Op },
    #[error("family {family} is implemented on {max} generator(s) only, {requested} requested")]
    UnsupportedGenerators { family: Family, max: usize, requested: usize },
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("unknown operation '{0}'")]
    UnknownOp(String),
    #[error("element has a nonzero unit component")]
    UnitComponent,
    #[error("endomorphisms truncated at different degrees ({0} and {1})")]
    TruncationMismatch(usize, usize),
    #[error("endomorphisms on different generator counts ({0} and {1})")]
    GeneratorMismatch(usize, usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Action of the unit on one operation: `a ∘ 1 = right·a`, `1 ∘ a = left·a`,
/// and `1 ∘ 1 = both·1` when defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitAction {
    /// coefficient of `a` in `a ∘ 1`
    pub right: i64,
    /// coefficient of `a` in `1 ∘ a`
    pub left: i64,
    pub both: Option<i64>,
}

impl UnitAction {
    pub(crate) const UNITAL: UnitAction = UnitAction { right: 1, left: 1, both: Some(1) };
    pub(crate) const LEFT_PART: UnitAction = UnitAction { right: 1, left: 0, both: None };
    pub(crate) const RIGHT_PART: UnitAction = UnitAction { right: 0, left: 1, both: None };
    pub(crate) const NONE: UnitAction = UnitAction { right: 0, left: 0, both: None };
}

/// How operations act on `A₊ ⊗ A₊`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorRule {
    /// `(a⊗b)∘(a'⊗b') = (a*a')⊗(b∘b')` unless `b = b' = 1`, in which case
    /// `(a∘a')⊗1`.
    Mixed,
    /// `(a⊗b)∘(a'⊗b') = (a∘a')⊗(b∘b')`.
    Diagonal,
}

/// A free algebra on a canonical basis.
pub trait FreeAlgebra: Sized + Send + Sync + 'static {
    type Key: Clone + Ord + Hash + fmt::Debug + fmt::Display + FromStr<Err = ParseError> + Send + Sync + 'static;

    const FAMILY: Family;

    /// Every operation of the family, `*` included when present.
    const OPS: &'static [Op];

    /// Operations whose iterated products span the free algebra.
    const GENERATING_OPS: &'static [Op];

    /// The associative multiplication used by the bialgebra structure.
    const STAR: Op;

    const TENSOR_RULE: TensorRule;

    /// Largest supported generator count, if bounded.
    const MAX_GENERATORS: Option<usize> = None;

    fn unit() -> Self::Key;

    fn generator(index: usize) -> Self::Key;

    fn degree(key: &Self::Key) -> usize;

    /// Generator multiplicities of a basis key.
    fn content(key: &Self::Key, generators: usize) -> Vec<usize>;

    /// All basis keys of degree `n`, in canonical order. Callers go through
    /// [`basis`], which validates the generator count.
    fn enumerate(n: usize, generators: usize) -> Vec<Self::Key>;

    fn unit_action(op: Op) -> UnitAction;

    /// Product of two non-unit basis keys.
    fn product_basis<S: Scalar>(op: Op, a: &Self::Key, b: &Self::Key) -> Element<Self, S>;

    fn is_unit(key: &Self::Key) -> bool {
        Self::degree(key) == 0
    }

    fn supports(op: Op) -> bool {
        Self::OPS.contains(&op)
    }
}

/// Basis of the degree-`n` component over `generators` generators.
pub fn basis<A: FreeAlgebra>(n: usize, generators: usize) -> Result<Vec<A::Key>, AlgebraError> {
    check_generators::<A>(generators)?;
    Ok(A::enumerate(n, generators))
}

/// Basis of all components of degree `≤ max_degree`, unit first.
pub fn basis_up_to<A: FreeAlgebra>(max_degree: usize, generators: usize) -> Result<Vec<A::Key>, AlgebraError> {
    check_generators::<A>(generators)?;
    Ok((0..=max_degree).flat_map(|n| A::enumerate(n, generators)).collect())
}

pub(crate) fn check_generators<A: FreeAlgebra>(generators: usize) -> Result<(), AlgebraError> {
    match A::MAX_GENERATORS {
        Some(max) if generators > max => {
            Err(AlgebraError::UnsupportedGenerators { family: A::FAMILY, max, requested: generators })
        }
        _ => Ok(()),
    }
}

pub(crate) fn check_op<A: FreeAlgebra>(op: Op) -> Result<(), AlgebraError> {
    if A::supports(op) {
        Ok(())
    } else {
        Err(AlgebraError::UnsupportedOp { family: A::FAMILY, op })
    }
}

/// Bilinear product `x ∘ y` on the augmented algebra.
pub fn product<A: FreeAlgebra, S: Scalar>(
    op: Op,
    x: &Element<A, S>,
    y: &Element<A, S>,
) -> Result<Element<A, S>, AlgebraError> {
    check_op::<A>(op)?;
    let action = A::unit_action(op);
    let mut out = Element::<A, S>::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            let c = ca.clone() * cb.clone();
            match (A::is_unit(a), A::is_unit(b)) {
                (true, true) => match action.both {
                    Some(v) => out.add_term(A::unit(), c * S::from_i64(v)),
                    None => return Err(AlgebraError::UndefinedUnitProduct(op)),
                },
                (true, false) => out.add_term(b.clone(), c * S::from_i64(action.left)),
                (false, true) => out.add_term(a.clone(), c * S::from_i64(action.right)),
                (false, false) => out.add_scaled(&c, &A::product_basis::<S>(op, a, b)),
            }
        }
    }
    Ok(out)
}

/// Product of two basis keys.
pub fn product_keys<A: FreeAlgebra, S: Scalar>(op: Op, a: &A::Key, b: &A::Key) -> Result<Element<A, S>, AlgebraError> {
    product::<A, S>(op, &Element::<A, S>::basis(a.clone()), &Element::<A, S>::basis(b.clone()))
}

/// `*` on basis keys of the augmented algebra, where the unit is two-sided
/// neutral (so `1*1 = 1`).
pub(crate) fn star_keys<A: FreeAlgebra, S: Scalar>(a: &A::Key, b: &A::Key) -> Element<A, S> {
    if A::is_unit(a) {
        Element::<A, S>::basis(b.clone())
    } else if A::is_unit(b) {
        Element::<A, S>::basis(a.clone())
    } else {
        A::product_basis::<S>(A::STAR, a, b)
    }
}

/// The counit: coefficient of the unit key.
pub fn counit<A: FreeAlgebra, S: Scalar>(x: &Element<A, S>) -> S {
    x.coeff(&A::unit())
}

/// Parses a basis key in the family's notation.
pub fn parse_key<A: FreeAlgebra>(text: &str) -> Result<A::Key, ParseError> {
    text.parse()
}

/// Coordinates of `x` in the ordered `basis`; `None` if `x` has a term
/// outside it.
pub fn coordinates<K: Ord + Clone, S: Scalar>(basis: &[K], x: &LinComb<K, S>) -> Option<Vec<S>> {
    let mut v = vec![S::zero(); basis.len()];
    for (k, c) in x {
        let i = basis.binary_search(k).ok()?;
        v[i] = c.clone();
    }
    Some(v)
}

/// Dimension of the span of all products `a ∘ b` with `∘` a generating
/// operation, `a` and `b` basis keys of positive degrees summing to `n`
/// (for `n = 1`, the generators themselves).
pub fn product_span_dim<A: FreeAlgebra, S: Scalar>(n: usize, generators: usize) -> Result<usize, AlgebraError> {
    let target = basis::<A>(n, generators)?;
    if n <= 1 {
        return Ok(target.len());
    }
    let mut vectors = Vec::new();
    for i in 1..n {
        let left = basis::<A>(i, generators)?;
        let right = basis::<A>(n - i, generators)?;
        for &op in A::GENERATING_OPS {
            for a in &left {
                for b in &right {
                    let p = product_keys::<A, S>(op, a, b)?;
                    vectors.push(coordinates(&target, &p).expect("product stays in degree"));
                }
            }
        }
    }
    Ok(span_rank(target.len(), &vectors))
}
