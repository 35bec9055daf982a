use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::parse::{write_generator, Cursor, ParseError};
use super::pbt::{enumerate_pbt, Pbt};

/// Planar binary tree with generator-labeled leaves: the basis of the free
/// magma, plus an adjoined unit. `Unit` never occurs below a `Node`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MagmaTree {
    Unit,
    Gen(usize),
    Node(Box<MagmaTree>, Box<MagmaTree>),
}

impl MagmaTree {
    pub fn node(l: MagmaTree, r: MagmaTree) -> MagmaTree {
        debug_assert!(!l.is_unit() && !r.is_unit());
        MagmaTree::Node(Box::new(l), Box::new(r))
    }

    /// Number of labeled leaves.
    pub fn degree(&self) -> usize {
        match self {
            MagmaTree::Unit => 0,
            MagmaTree::Gen(_) => 1,
            MagmaTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, MagmaTree::Unit)
    }

    pub fn content(&self, generators: usize) -> Vec<usize> {
        let mut out = vec![0; generators];
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                MagmaTree::Unit => {}
                MagmaTree::Gen(i) => {
                    if *i >= out.len() {
                        out.resize(i + 1, 0);
                    }
                    out[*i] += 1;
                }
                MagmaTree::Node(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
            }
        }
        out
    }

    /// Labels the leaves of `shape` left to right with `labels`.
    fn label(shape: &Pbt, labels: &mut impl Iterator<Item = usize>) -> MagmaTree {
        match shape {
            Pbt::Leaf => MagmaTree::Gen(labels.next().expect("enough labels")),
            Pbt::Node(l, r) => {
                let l = MagmaTree::label(l, labels);
                let r = MagmaTree::label(r, labels);
                MagmaTree::node(l, r)
            }
        }
    }

    fn parse_inner(c: &mut Cursor<'_>) -> Result<MagmaTree, ParseError> {
        match c.peek() {
            Some('x') => Ok(MagmaTree::Gen(c.generator()?)),
            Some('(') => {
                c.bump();
                let l = MagmaTree::parse_inner(c)?;
                c.expect(',')?;
                let r = MagmaTree::parse_inner(c)?;
                c.expect(')')?;
                Ok(MagmaTree::node(l, r))
            }
            Some(ch) => c.error(format!("expected 'x' or '(', found '{ch}'")),
            None => c.error("unexpected end of input"),
        }
    }
}

/// All labeled trees with `n` leaves over `generators` labels.
pub fn enumerate_magma(n: usize, generators: usize) -> Vec<MagmaTree> {
    if n == 0 {
        return vec![MagmaTree::Unit];
    }
    let mut out = Vec::new();
    let words = super::word::enumerate_words(n, generators);
    for shape in enumerate_pbt(n - 1) {
        for w in &words {
            out.push(MagmaTree::label(&shape, &mut w.letters().iter().copied()));
        }
    }
    out.sort();
    out
}

fn rank(t: &MagmaTree) -> u8 {
    match t {
        MagmaTree::Unit => 0,
        MagmaTree::Gen(_) => 1,
        MagmaTree::Node(..) => 2,
    }
}

impl Ord for MagmaTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| match (self, other) {
            (MagmaTree::Gen(a), MagmaTree::Gen(b)) => a.cmp(b),
            (MagmaTree::Node(a, b), MagmaTree::Node(c, d)) => a.cmp(c).then_with(|| b.cmp(d)),
            _ => rank(self).cmp(&rank(other)),
        })
    }
}

impl PartialOrd for MagmaTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MagmaTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MagmaTree::Unit => f.write_str("1"),
            MagmaTree::Gen(i) => write_generator(f, *i),
            MagmaTree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl fmt::Debug for MagmaTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MagmaTree {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        if c.peek() == Some('1') {
            c.bump();
            c.finish()?;
            return Ok(MagmaTree::Unit);
        }
        let t = MagmaTree::parse_inner(&mut c)?;
        c.finish()?;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_generator_counts_are_shifted_catalan() {
        let dims: Vec<usize> = (1..=5).map(|n| enumerate_magma(n, 1).len()).collect();
        assert_eq!(dims, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_magma(3, 3).len(), 2 * 27);
        assert_eq!(enumerate_magma(1, 4).len(), 4);
    }

    #[test]
    fn parse_and_content() {
        let t: MagmaTree = "((x1,x2),x1)".parse().unwrap();
        assert_eq!(t.degree(), 3);
        assert_eq!(t.content(2), vec![2, 1]);
        assert_eq!("1".parse::<MagmaTree>().unwrap(), MagmaTree::Unit);
        assert!("(x1,1)".parse::<MagmaTree>().is_err());
    }

    #[test]
    fn round_trip() {
        for n in 0..=5 {
            for t in enumerate_magma(n, 2) {
                assert_eq!(t.to_string().parse::<MagmaTree>().unwrap(), t);
            }
        }
    }
}
