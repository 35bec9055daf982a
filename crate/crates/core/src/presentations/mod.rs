//! Binary quadratic regular presentations with a unit action, and the
//! linear-algebra decision procedures on them.
//!
//! With `k` operations `∘₀ … ∘ₖ₋₁`, a relation is a vector in the
//! `2k²`-dimensional space of arity-3 monomials, ordered
//!
//! ```text
//! L(i,j) = (x∘ᵢy)∘ⱼz   at index i·k + j
//! R(i,j) = x∘ᵢ(y∘ⱼz)   at index k² + i·k + j
//! ```
//!
//! The unit action is `a∘1 = α(∘)a`, `1∘a = β(∘)a`. An optional star
//! `* = Σ σᵢ∘ᵢ` is the associative operation the relations are meant to
//! split.

mod builtins;
mod check;
mod format;

use thiserror::Error;

use crate::scalar::Scalar;

pub use builtins::{builtin, BUILTIN_NAMES};
pub use check::{
    check_coherence, check_compatibility, compatible_space, star_associator, star_is_associative, substitution_matrix,
    CheckReport, Leg, Pattern, Var, Witness,
};
pub use format::{emit, parse_presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown built-in presentation '{0}'")]
    UnknownBuiltin(String),
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("the presentation declares no star operation")]
    MissingStar,
}

/// An arity-3 monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Monomial {
    /// `(x∘ᵢy)∘ⱼz`
    L(usize, usize),
    /// `x∘ᵢ(y∘ⱼz)`
    R(usize, usize),
}

impl Monomial {
    pub fn index(self, k: usize) -> usize {
        match self {
            Monomial::L(i, j) => i * k + j,
            Monomial::R(i, j) => k * k + i * k + j,
        }
    }

    pub fn from_index(idx: usize, k: usize) -> Monomial {
        if idx < k * k {
            Monomial::L(idx / k, idx % k)
        } else {
            let r = idx - k * k;
            Monomial::R(r / k, r % k)
        }
    }

    /// All `2k²` monomials in index order.
    pub fn all(k: usize) -> impl Iterator<Item = Monomial> {
        (0..2 * k * k).map(move |i| Monomial::from_index(i, k))
    }

    /// Renders with the given variable names and operation symbols.
    pub fn render(self, vars: [&str; 3], ops: &[String]) -> String {
        let [x, y, z] = vars;
        match self {
            Monomial::L(i, j) => format!("({}{}{}){}{}", x, ops[i], y, ops[j], z),
            Monomial::R(i, j) => format!("{}{}({}{}{})", x, ops[i], y, ops[j], z),
        }
    }
}

/// A binary quadratic regular presentation with unit action.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation<S: Scalar> {
    ops: Vec<String>,
    alpha: Vec<S>,
    beta: Vec<S>,
    star: Option<Vec<S>>,
    relations: Vec<Vec<S>>,
}

impl<S: Scalar> Presentation<S> {
    /// Validates and builds a presentation: at least one operation, vectors
    /// of the right lengths, nonzero relations, and a star that is unital
    /// for the given action (`Σσᵢαᵢ = 1 = Σσᵢβᵢ`).
    pub fn new(
        ops: Vec<String>,
        alpha: Vec<S>,
        beta: Vec<S>,
        star: Option<Vec<S>>,
        relations: Vec<Vec<S>>,
    ) -> Result<Self, PresentationError> {
        let k = ops.len();
        let invalid = |m: String| Err(PresentationError::Invalid(m));
        if k == 0 {
            return invalid("no operations".into());
        }
        for (i, a) in ops.iter().enumerate() {
            if ops[..i].contains(a) {
                return invalid(format!("operation '{}' declared twice", a));
            }
        }
        if alpha.len() != k || beta.len() != k {
            return invalid("unit action must give one value per operation".into());
        }
        if let Some(s) = &star {
            if s.len() != k {
                return invalid("star must give one coefficient per operation".into());
            }
            let dot = |v: &[S]| v.iter().zip(s).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
            if !dot(&alpha).is_one() || !dot(&beta).is_one() {
                return invalid("the star is not unital for this unit action".into());
            }
        }
        for (n, r) in relations.iter().enumerate() {
            if r.len() != 2 * k * k {
                return invalid(format!("relation {} has length {}, expected {}", n + 1, r.len(), 2 * k * k));
            }
            if r.iter().all(|c| c.is_zero()) {
                return invalid(format!("relation {} is zero", n + 1));
            }
        }
        Ok(Presentation { ops, alpha, beta, star, relations })
    }

    /// Number of operations.
    pub fn k(&self) -> usize {
        self.ops.len()
    }

    pub fn ops(&self) -> &[String] {
        &self.ops
    }

    pub fn alpha(&self) -> &[S] {
        &self.alpha
    }

    pub fn beta(&self) -> &[S] {
        &self.beta
    }

    pub fn star(&self) -> Option<&[S]> {
        self.star.as_deref()
    }

    pub fn relations(&self) -> &[Vec<S>] {
        &self.relations
    }

    /// Same presentation with a replaced relation list.
    pub fn with_relations(&self, relations: Vec<Vec<S>>) -> Result<Self, PresentationError> {
        Presentation::new(self.ops.clone(), self.alpha.clone(), self.beta.clone(), self.star.clone(), relations)
    }

    /// Renders a relation vector as `c·monomial` terms in `x, y, z`.
    pub fn render_relation(&self, r: &[S]) -> String {
        render_vector(r, |i| Monomial::from_index(i, self.ops.len()).render(["x", "y", "z"], &self.ops))
    }
}

/// `c₀*m₀ + c₁*m₁ …` with `name(i)` naming coordinate `i`; `0` if empty.
pub(crate) fn render_vector<S: Scalar>(v: &[S], mut name: impl FnMut(usize) -> String) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let m = c.abs();
        if !m.is_one() {
            out.push_str(&format!("{}*", m));
        }
        out.push_str(&name(i));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
