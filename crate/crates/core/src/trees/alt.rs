use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::parse::{write_generator, Cursor, ParseError};

/// Label of an internal vertex of an [`AltTree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// `*`
    Star,
    /// `·`, written `.`
    Dot,
}

impl Label {
    pub fn other(self) -> Label {
        match self {
            Label::Star => Label::Dot,
            Label::Dot => Label::Star,
        }
    }

    fn symbol(self) -> char {
        match self {
            Label::Star => '*',
            Label::Dot => '.',
        }
    }
}

/// Normal form for two associative operations without cross relations:
/// planar trees with labeled internal vertices where no child repeats its
/// parent's label, leaves labeled by generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum AltTree {
    Unit,
    Gen(usize),
    Node(Label, Vec<AltTree>),
}

impl AltTree {
    /// Number of generator leaves.
    pub fn degree(&self) -> usize {
        match self {
            AltTree::Unit => 0,
            AltTree::Gen(_) => 1,
            AltTree::Node(_, ch) => ch.iter().map(AltTree::degree).sum(),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, AltTree::Unit)
    }

    pub fn label(&self) -> Option<Label> {
        match self {
            AltTree::Node(l, _) => Some(*l),
            _ => None,
        }
    }

    /// The factors of `self` with respect to `label`: the children when the
    /// root carries that label, otherwise `self` alone.
    pub fn factors(&self, label: Label) -> Vec<AltTree> {
        match self {
            AltTree::Node(l, ch) if *l == label => ch.clone(),
            _ => vec![self.clone()],
        }
    }

    /// Multiplies two non-unit normal forms, flattening same-label nesting.
    pub fn join(label: Label, a: &AltTree, b: &AltTree) -> AltTree {
        debug_assert!(!a.is_unit() && !b.is_unit());
        let mut ch = a.factors(label);
        ch.extend(b.factors(label));
        AltTree::Node(label, ch)
    }

    /// Multiset of generator indices, as counts per index.
    pub fn content(&self, generators: usize) -> Vec<usize> {
        let mut out = vec![0; generators];
        self.add_content(&mut out);
        out
    }

    fn add_content(&self, out: &mut Vec<usize>) {
        match self {
            AltTree::Unit => {}
            AltTree::Gen(i) => {
                if *i >= out.len() {
                    out.resize(i + 1, 0);
                }
                out[*i] += 1;
            }
            AltTree::Node(_, ch) => ch.iter().for_each(|c| c.add_content(out)),
        }
    }

    fn parse_inner(c: &mut Cursor<'_>) -> Result<AltTree, ParseError> {
        match c.peek() {
            Some('x') => Ok(AltTree::Gen(c.generator()?)),
            Some(sym @ ('*' | '.')) => {
                c.bump();
                let label = if sym == '*' { Label::Star } else { Label::Dot };
                c.expect('(')?;
                let mut parts = vec![AltTree::parse_inner(c)?];
                while c.peek() == Some(',') {
                    c.bump();
                    parts.push(AltTree::parse_inner(c)?);
                }
                if parts.len() < 2 {
                    return c.error("a labeled vertex needs at least two children");
                }
                c.expect(')')?;
                // nested same-label vertices are flattened into normal form
                let mut acc = parts[0].clone();
                for p in &parts[1..] {
                    acc = AltTree::join(label, &acc, p);
                }
                Ok(acc)
            }
            Some(ch) => c.error(format!("expected 'x', '*(' or '.(', found '{ch}'")),
            None => c.error("unexpected end of input"),
        }
    }
}

/// All normal forms of degree `n` on `generators` generators.
pub fn enumerate_alt(n: usize, generators: usize) -> Vec<AltTree> {
    if n == 0 {
        return vec![AltTree::Unit];
    }
    let mut all: Vec<Vec<AltTree>> = vec![Vec::new(); n + 1];
    all[1] = (0..generators).map(AltTree::Gen).collect();
    for d in 2..=n {
        let mut level = Vec::new();
        for label in [Label::Star, Label::Dot] {
            let mut prefix = Vec::new();
            children(&all, label, d, d, &mut prefix, &mut level);
        }
        level.sort();
        all[d] = level;
    }
    all.swap_remove(n)
}

fn children(
    all: &[Vec<AltTree>],
    label: Label,
    total: usize,
    budget: usize,
    prefix: &mut Vec<AltTree>,
    out: &mut Vec<AltTree>,
) {
    if budget == 0 {
        if prefix.len() >= 2 {
            out.push(AltTree::Node(label, prefix.clone()));
        }
        return;
    }
    for d in 1..=budget {
        // a single child carrying the whole degree would not be a vertex
        if d == total {
            continue;
        }
        for t in &all[d] {
            if t.label() == Some(label) {
                continue;
            }
            prefix.push(t.clone());
            children(all, label, total, budget - d, prefix, out);
            prefix.pop();
        }
    }
}

fn rank(t: &AltTree) -> u8 {
    match t {
        AltTree::Unit => 0,
        AltTree::Gen(_) => 1,
        AltTree::Node(..) => 2,
    }
}

impl Ord for AltTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| match (self, other) {
            (AltTree::Gen(a), AltTree::Gen(b)) => a.cmp(b),
            (AltTree::Node(la, a), AltTree::Node(lb, b)) => la.cmp(lb).then_with(|| a.cmp(b)),
            _ => rank(self).cmp(&rank(other)),
        })
    }
}

impl PartialOrd for AltTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AltTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AltTree::Unit => f.write_str("1"),
            AltTree::Gen(i) => write_generator(f, *i),
            AltTree::Node(label, ch) => {
                write!(f, "{}(", label.symbol())?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for AltTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for AltTree {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        if c.peek() == Some('1') {
            c.bump();
            c.finish()?;
            return Ok(AltTree::Unit);
        }
        let t = AltTree::parse_inner(&mut c)?;
        c.finish()?;
        Ok(t)
    }
}
