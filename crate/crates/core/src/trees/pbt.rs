use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::parse::{Cursor, ParseError};

/// Planar binary tree. The leaf `|` has degree zero and plays the role of
/// the unit; `Y = (|,|)` is the generator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Pbt {
    Leaf,
    Node(Box<Pbt>, Box<Pbt>),
}

impl Pbt {
    /// The one-vertex tree `(|,|)`.
    pub fn y() -> Pbt {
        Pbt::graft(Pbt::Leaf, Pbt::Leaf)
    }

    /// `left ∨ right`: joins the two roots under a new vertex.
    pub fn graft(left: Pbt, right: Pbt) -> Pbt {
        Pbt::Node(Box::new(left), Box::new(right))
    }

    /// Number of internal vertices.
    pub fn degree(&self) -> usize {
        match self {
            Pbt::Leaf => 0,
            Pbt::Node(l, r) => l.degree() + r.degree() + 1,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Pbt::Leaf)
    }

    /// Unique decomposition `t = l ∨ r`; `None` for the leaf.
    pub fn decompose(&self) -> Option<(&Pbt, &Pbt)> {
        match self {
            Pbt::Leaf => None,
            Pbt::Node(l, r) => Some((l, r)),
        }
    }

    fn parse_inner(c: &mut Cursor<'_>) -> Result<Pbt, ParseError> {
        match c.peek() {
            Some('|') => {
                c.bump();
                Ok(Pbt::Leaf)
            }
            Some('(') => {
                c.bump();
                let l = Pbt::parse_inner(c)?;
                c.expect(',')?;
                let r = Pbt::parse_inner(c)?;
                c.expect(')')?;
                Ok(Pbt::graft(l, r))
            }
            Some(ch) => c.error(format!("expected '|' or '(', found '{ch}'")),
            None => c.error("unexpected end of input"),
        }
    }
}

/// All planar binary trees with `n` internal vertices, in canonical order.
pub fn enumerate_pbt(n: usize) -> Vec<Pbt> {
    let mut table: Vec<Vec<Pbt>> = vec![vec![Pbt::Leaf]];
    for d in 1..=n {
        let mut level = Vec::new();
        for i in 0..d {
            for l in &table[i] {
                for r in &table[d - 1 - i] {
                    level.push(Pbt::graft(l.clone(), r.clone()));
                }
            }
        }
        level.sort();
        table.push(level);
    }
    table.swap_remove(n)
}

impl Ord for Pbt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| match (self, other) {
            (Pbt::Leaf, Pbt::Leaf) => Ordering::Equal,
            (Pbt::Node(a, b), Pbt::Node(c, d)) => a.cmp(c).then_with(|| b.cmp(d)),
            // equal degree rules out a leaf against a node
            (Pbt::Leaf, _) => Ordering::Less,
            (_, Pbt::Leaf) => Ordering::Greater,
        })
    }
}

impl PartialOrd for Pbt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Pbt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pbt::Leaf => f.write_str("|"),
            Pbt::Node(l, r) => write!(f, "({},{})", l, r),
        }
    }
}

impl fmt::Debug for Pbt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Pbt {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        let t = Pbt::parse_inner(&mut c)?;
        c.finish()?;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan(n: usize) -> usize {
        let mut c = vec![1usize];
        for m in 0..n {
            c.push((0..=m).map(|i| c[i] * c[m - i]).sum());
        }
        c[n]
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_pbt(0), vec![Pbt::Leaf]);
        assert_eq!(enumerate_pbt(3).len(), 5);
        assert_eq!(enumerate_pbt(5).len(), 42);
    }

    #[test]
    fn counts_follow_catalan_recurrence() {
        for n in 0..=8 {
            assert_eq!(enumerate_pbt(n).len(), catalan(n), "degree {n}");
        }
    }

    #[test]
    fn graft_basics() {
        assert_eq!(Pbt::graft(Pbt::Leaf, Pbt::Leaf), Pbt::y());
        let t = Pbt::graft(Pbt::y(), Pbt::Leaf);
        assert_eq!(t.to_string(), "((|,|),|)");
        assert_eq!(t.degree(), 2);
        assert_eq!(t.decompose(), Some((&Pbt::y(), &Pbt::Leaf)));
    }

    #[test]
    fn grafting_is_a_bijection_onto_degree_four() {
        let mut grafted = Vec::new();
        for i in 0..4 {
            for t in enumerate_pbt(i) {
                for s in enumerate_pbt(3 - i) {
                    grafted.push(Pbt::graft(t.clone(), s));
                }
            }
        }
        grafted.sort();
        assert_eq!(grafted, enumerate_pbt(4));
    }

    #[test]
    fn parse_examples() {
        assert_eq!("(|,|)".parse::<Pbt>().unwrap(), Pbt::y());
        assert_eq!(" ( (| , |) ,|)".parse::<Pbt>().unwrap(), Pbt::graft(Pbt::y(), Pbt::Leaf));
        let err = "(|,|".parse::<Pbt>().unwrap_err();
        assert_eq!(err.pos, 4);
        assert!("(|,|,|)".parse::<Pbt>().is_err());
        assert!("(|,|))".parse::<Pbt>().is_err());
    }

    #[test]
    fn round_trip_up_to_degree_six() {
        for n in 0..=6 {
            for t in enumerate_pbt(n) {
                assert_eq!(t.to_string().parse::<Pbt>().unwrap(), t);
            }
        }
    }

    #[test]
    fn order_is_degree_first() {
        let a: Pbt = "(|,(|,|))".parse().unwrap();
        let b: Pbt = "((|,|),|)".parse().unwrap();
        assert!(Pbt::Leaf < Pbt::y());
        assert!(Pbt::y() < a);
        assert!(a < b);
    }
}
