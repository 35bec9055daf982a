use std::fmt;

use super::{render_vector, Monomial, Presentation, PresentationError};
use crate::exactlin::{in_span, kernel_basis, Matrix};
use crate::scalar::Scalar;

/// A variable of an arity-3 monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }
}

/// Right-hand tensor leg of an argument in a coherence pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Leg {
    Unit,
    Generic,
}

const A_NAMES: [&str; 3] = ["a", "a'", "a''"];
const B_NAMES: [&str; 3] = ["b", "b'", "b''"];

/// Where a relation was tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pattern {
    /// One variable replaced by the unit.
    Substitution(Var),
    /// Arguments `a⊗b, a'⊗b', a''⊗b''` with each `b` unit or generic.
    Legs([Leg; 3]),
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Substitution(v) => write!(f, "{}=1", v.name()),
            Pattern::Legs(legs) => {
                let parts: Vec<&str> =
                    legs.iter().zip(B_NAMES).map(|(l, n)| if *l == Leg::Unit { "1" } else { n }).collect();
                write!(f, "(b, b', b'') = ({})", parts.join(", "))
            }
        }
    }
}

/// A failed case: the relation (0-based index), where it failed, and the
/// nonzero residual with a readable rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<S: Scalar> {
    pub relation: usize,
    pub pattern: Pattern,
    pub residual: Vec<S>,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport<S: Scalar> {
    pub witnesses: Vec<Witness<S>>,
}

impl<S: Scalar> CheckReport<S> {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Image of a monomial under `var = 1`: index of the surviving binary
/// monomial and its coefficient.
fn substitute<S: Scalar>(var: Var, m: Monomial, alpha: &[S], beta: &[S]) -> (usize, S) {
    match (var, m) {
        (Var::X, Monomial::L(i, j)) | (Var::X, Monomial::R(i, j)) => (j, beta[i].clone()),
        (Var::Y, Monomial::L(i, j)) => (j, alpha[i].clone()),
        (Var::Y, Monomial::R(i, j)) => (i, beta[j].clone()),
        (Var::Z, Monomial::L(i, j)) | (Var::Z, Monomial::R(i, j)) => (i, alpha[j].clone()),
    }
}

/// The `3k × 2k²` matrix stacking the `x=1`, `y=1`, `z=1` substitutions.
pub fn substitution_matrix<S: Scalar>(k: usize, alpha: &[S], beta: &[S]) -> Matrix<S> {
    let mut m = Matrix::<S>::zeros(3 * k, 2 * k * k);
    for (block, var) in Var::ALL.into_iter().enumerate() {
        for mono in Monomial::all(k) {
            let (row, c) = substitute(var, mono, alpha, beta);
            m[(block * k + row, mono.index(k))] = m[(block * k + row, mono.index(k))].clone() + c;
        }
    }
    m
}

/// Every relation survives each single unit substitution.
pub fn check_compatibility<S: Scalar>(p: &Presentation<S>) -> CheckReport<S> {
    let k = p.k();
    let mut witnesses = Vec::new();
    for (n, r) in p.relations().iter().enumerate() {
        for var in Var::ALL {
            let mut residual = vec![S::zero(); k];
            for (idx, c) in r.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (row, s) = substitute(var, Monomial::from_index(idx, k), p.alpha(), p.beta());
                residual[row] = residual[row].clone() + c.clone() * s;
            }
            if residual.iter().any(|c| !c.is_zero()) {
                let (u, v) = match var {
                    Var::X => ("y", "z"),
                    Var::Y => ("x", "z"),
                    Var::Z => ("x", "y"),
                };
                let description = render_vector(&residual, |i| format!("{}{}{}", u, p.ops()[i], v));
                witnesses.push(Witness { relation: n, pattern: Pattern::Substitution(var), residual, description });
            }
        }
    }
    CheckReport { witnesses }
}

/// Basis of all relations compatible with the unit action: the kernel of
/// the substitution matrix, in reduced echelon form.
pub fn compatible_space<S: Scalar>(k: usize, alpha: &[S], beta: &[S]) -> Vec<Vec<S>> {
    kernel_basis(&substitution_matrix(k, alpha, beta))
}

/// `(x*y)*z − x*(y*z)` expanded into the monomial space.
pub fn star_associator<S: Scalar>(k: usize, sigma: &[S]) -> Vec<S> {
    let mut v = vec![S::zero(); 2 * k * k];
    for i in 0..k {
        for j in 0..k {
            let c = sigma[i].clone() * sigma[j].clone();
            v[Monomial::L(i, j).index(k)] = c.clone();
            v[Monomial::R(i, j).index(k)] = -c;
        }
    }
    v
}

/// Whether associativity of the star lies in the span of the relations.
pub fn star_is_associative<S: Scalar>(p: &Presentation<S>) -> Result<bool, PresentationError> {
    let sigma = p.star().ok_or(PresentationError::MissingStar)?;
    let k = p.k();
    Ok(in_span(2 * k * k, p.relations(), &star_associator(k, sigma)))
}

#[derive(Clone)]
enum AExpr<S> {
    Var,
    Op(Vec<S>, Box<AExpr<S>>, Box<AExpr<S>>),
}

#[derive(Clone)]
enum BExpr {
    One,
    Var,
    Op(usize, Box<BExpr>, Box<BExpr>),
}

/// `c · (A-leg) ⊗ (B-leg)`.
#[derive(Clone)]
struct Pure<S> {
    c: S,
    a: AExpr<S>,
    b: BExpr,
}

struct Rules<'a, S> {
    k: usize,
    alpha: &'a [S],
    beta: &'a [S],
    sigma: &'a [S],
}

impl<S: Scalar> Rules<'_, S> {
    fn unit_vec(&self, i: usize) -> Vec<S> {
        (0..self.k).map(|t| if t == i { S::one() } else { S::zero() }).collect()
    }

    /// `(a⊗b) ∘ᵢ (a'⊗b')` under the mixed rule.
    fn mul(&self, i: usize, u: &Pure<S>, v: &Pure<S>) -> Pure<S> {
        let c = u.c.clone() * v.c.clone();
        let pair = |a: &AExpr<S>, b: &AExpr<S>, op: Vec<S>| AExpr::Op(op, Box::new(a.clone()), Box::new(b.clone()));
        match (&u.b, &v.b) {
            (BExpr::One, BExpr::One) => Pure { c, a: pair(&u.a, &v.a, self.unit_vec(i)), b: BExpr::One },
            (BExpr::One, b) => {
                Pure { c: c * self.beta[i].clone(), a: pair(&u.a, &v.a, self.sigma.to_vec()), b: b.clone() }
            }
            (b, BExpr::One) => {
                Pure { c: c * self.alpha[i].clone(), a: pair(&u.a, &v.a, self.sigma.to_vec()), b: b.clone() }
            }
            (b, b2) => Pure {
                c,
                a: pair(&u.a, &v.a, self.sigma.to_vec()),
                b: BExpr::Op(i, Box::new(b.clone()), Box::new(b2.clone())),
            },
        }
    }

    fn linear_a(&self, a: &AExpr<S>) -> Vec<S> {
        let k = self.k;
        let mut v = vec![S::zero(); 2 * k * k];
        match a {
            AExpr::Op(o2, l, r) => match (&**l, &**r) {
                (AExpr::Op(o1, _, _), AExpr::Var) => {
                    for i in 0..k {
                        for j in 0..k {
                            v[Monomial::L(i, j).index(k)] = o1[i].clone() * o2[j].clone();
                        }
                    }
                }
                (AExpr::Var, AExpr::Op(o1, _, _)) => {
                    for i in 0..k {
                        for j in 0..k {
                            v[Monomial::R(i, j).index(k)] = o2[i].clone() * o1[j].clone();
                        }
                    }
                }
                _ => unreachable!("arity-3 expression"),
            },
            AExpr::Var => unreachable!("arity-3 expression"),
        }
        v
    }

    /// Coordinate of a B-leg in the space of its arity.
    fn index_b(&self, b: &BExpr) -> usize {
        let k = self.k;
        match b {
            BExpr::One | BExpr::Var => 0,
            BExpr::Op(i, l, r) => match (&**l, &**r) {
                (BExpr::Var, BExpr::Var) => *i,
                (BExpr::Op(i1, _, _), BExpr::Var) => Monomial::L(*i1, *i).index(k),
                (BExpr::Var, BExpr::Op(j, _, _)) => Monomial::R(*i, *j).index(k),
                _ => unreachable!("units never sit under a generic product"),
            },
        }
    }

    fn eval(&self, m: Monomial, legs: [Leg; 3]) -> Pure<S> {
        let e: Vec<Pure<S>> = legs
            .iter()
            .map(|l| Pure { c: S::one(), a: AExpr::Var, b: if *l == Leg::Unit { BExpr::One } else { BExpr::Var } })
            .collect();
        match m {
            Monomial::L(i, j) => self.mul(j, &self.mul(i, &e[0], &e[1]), &e[2]),
            Monomial::R(i, j) => self.mul(i, &e[0], &self.mul(j, &e[1], &e[2])),
        }
    }
}

fn all_patterns() -> Vec<[Leg; 3]> {
    let legs = [Leg::Unit, Leg::Generic];
    let mut out = Vec::new();
    for a in legs {
        for b in legs {
            for c in legs {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn rows_matrix<S: Scalar>(cols: usize, rows: &[Vec<S>]) -> Matrix<S> {
    Matrix::from_rows(cols, rows.to_vec())
}

/// Whether the mixed tensor rule makes `A₊ ⊗ B₊` an algebra of the same
/// presentation, decided on every relation and every unit/generic pattern
/// of the right legs.
///
/// Both sides of a relation are evaluated on `a⊗b, a'⊗b', a''⊗b''` as a
/// matrix in (A-monomials) × (B-monomials). Equality holds when that
/// matrix vanishes modulo the relations and star associativity on each
/// arity-3 leg, tested against a basis of the annihilator of that span.
pub fn check_coherence<S: Scalar>(p: &Presentation<S>) -> Result<CheckReport<S>, PresentationError> {
    let sigma = p.star().ok_or(PresentationError::MissingStar)?;
    let k = p.k();
    let n3 = 2 * k * k;
    let rules = Rules { k, alpha: p.alpha(), beta: p.beta(), sigma };
    let mut span = p.relations().to_vec();
    span.push(star_associator(k, sigma));
    let ann3 = kernel_basis(&rows_matrix(n3, &span));

    let mut witnesses = Vec::new();
    for (n, r) in p.relations().iter().enumerate() {
        for legs in all_patterns() {
            let generic: Vec<usize> = (0..3).filter(|&t| legs[t] == Leg::Generic).collect();
            let dim_b = match generic.len() {
                0 | 1 => 1,
                2 => k,
                _ => n3,
            };
            let mut m = Matrix::<S>::zeros(n3, dim_b);
            for (idx, rc) in r.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let pure = rules.eval(Monomial::from_index(idx, k), legs);
                if pure.c.is_zero() {
                    continue;
                }
                let col = rules.index_b(&pure.b);
                for (row, av) in rules.linear_a(&pure.a).into_iter().enumerate() {
                    if !av.is_zero() {
                        m[(row, col)] = m[(row, col)].clone() + rc.clone() * pure.c.clone() * av;
                    }
                }
            }
            let ann_b: Vec<Vec<S>> = if generic.len() == 3 {
                ann3.clone()
            } else {
                (0..dim_b).map(|i| (0..dim_b).map(|t| if t == i { S::one() } else { S::zero() }).collect()).collect()
            };
            let survives = ann3.iter().any(|phi| {
                let row: Vec<S> = (0..dim_b)
                    .map(|c| (0..n3).fold(S::zero(), |acc, i| acc + phi[i].clone() * m[(i, c)].clone()))
                    .collect();
                ann_b.iter().any(|psi| {
                    !row.iter().zip(psi).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()).is_zero()
                })
            });
            if survives {
                let residual: Vec<S> = (0..n3).flat_map(|i| m.row(i).to_vec()).collect();
                let names: Vec<&str> = generic.iter().map(|&t| B_NAMES[t]).collect();
                let b_name = |c: usize| match names.len() {
                    0 => "1".to_string(),
                    1 => names[0].to_string(),
                    2 => format!("{}{}{}", names[0], p.ops()[c], names[1]),
                    _ => Monomial::from_index(c, k).render([names[0], names[1], names[2]], p.ops()),
                };
                let description = render_vector(&residual, |idx| {
                    let (row, col) = (idx / dim_b, idx % dim_b);
                    format!("{}⊗{}", render_a(Monomial::from_index(row, k), p.ops()), b_name(col))
                });
                witnesses.push(Witness { relation: n, pattern: Pattern::Legs(legs), residual, description });
            }
        }
    }
    Ok(CheckReport { witnesses })
}

fn render_a(m: Monomial, ops: &[String]) -> String {
    m.render(A_NAMES, ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rank;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn dagger() -> (Vec<Rational>, Vec<Rational>) {
        (vec![q(1), q(0)], vec![q(0), q(1)])
    }

    #[test]
    fn substitution_matrix_shape_and_rank() {
        let (a, b) = dagger();
        let m = substitution_matrix(2, &a, &b);
        assert_eq!((m.rows(), m.cols()), (6, 8));
        assert_eq!(rank(&m), 5);
    }

    #[test]
    fn one_operation_spaces() {
        assert!(compatible_space(1, &[q(0)], &[q(1)]).is_empty());
        let s = compatible_space(1, &[q(1)], &[q(1)]);
        assert_eq!(s, vec![vec![q(1), q(-1)]]);
    }

    #[test]
    fn left_associativity_fails_under_dagger() {
        let (a, b) = dagger();
        let mut r = vec![q(0); 8];
        r[Monomial::L(0, 0).index(2)] = q(1);
        r[Monomial::R(0, 0).index(2)] = q(-1);
        let p = Presentation::new(vec!["<".into(), ">".into()], a, b, Some(vec![q(1), q(1)]), vec![r]).unwrap();
        let rep = check_compatibility(&p);
        assert!(!rep.passed());
        let w = &rep.witnesses[0];
        assert_eq!(w.pattern, Pattern::Substitution(Var::Y));
        assert_eq!(w.residual, vec![q(1), q(0)]);
        assert_eq!(w.description, "x<z");
    }

    #[test]
    fn magmatic_star_is_not_associative() {
        let p = Presentation::new(vec![".".into()], vec![q(1)], vec![q(1)], Some(vec![q(1)]), vec![]).unwrap();
        assert!(!star_is_associative(&p).unwrap());
        let none = Presentation::new(vec![".".into()], vec![q(1)], vec![q(1)], None, vec![]).unwrap();
        assert_eq!(star_is_associative(&none), Err(PresentationError::MissingStar));
    }
}
