use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::parse::{Cursor, ParseError};

/// Planar tree whose internal vertices all have at least two children.
/// Degree is the number of leaves minus one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum PlanarTree {
    Leaf,
    Node(Vec<PlanarTree>),
}

/// Grafting a list of fewer than two trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("a planar-tree vertex needs at least two children, got {0}")]
pub struct ArityError(pub usize);

impl PlanarTree {
    pub fn y() -> PlanarTree {
        PlanarTree::Node(vec![PlanarTree::Leaf, PlanarTree::Leaf])
    }

    /// The corolla with `k` leaves (`k ≥ 2`).
    pub fn corolla(k: usize) -> PlanarTree {
        assert!(k >= 2);
        PlanarTree::Node(vec![PlanarTree::Leaf; k])
    }

    pub fn degree(&self) -> usize {
        match self {
            PlanarTree::Leaf => 0,
            PlanarTree::Node(ch) => ch.iter().map(PlanarTree::degree).sum::<usize>() + ch.len() - 1,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, PlanarTree::Leaf)
    }

    pub fn children(&self) -> &[PlanarTree] {
        match self {
            PlanarTree::Leaf => &[],
            PlanarTree::Node(ch) => ch,
        }
    }

    fn parse_inner(c: &mut Cursor<'_>) -> Result<PlanarTree, ParseError> {
        match c.peek() {
            Some('|') => {
                c.bump();
                Ok(PlanarTree::Leaf)
            }
            Some('(') => {
                c.bump();
                let mut ch = vec![PlanarTree::parse_inner(c)?];
                while c.peek() == Some(',') {
                    c.bump();
                    ch.push(PlanarTree::parse_inner(c)?);
                }
                if ch.len() < 2 {
                    return c.error("a vertex needs at least two children");
                }
                c.expect(')')?;
                Ok(PlanarTree::Node(ch))
            }
            Some(ch) => c.error(format!("expected '|' or '(', found '{ch}'")),
            None => c.error("unexpected end of input"),
        }
    }
}

/// `∨(t⁰, …, tᵏ)`: attaches the given trees below a new root.
pub fn graft_planar(parts: Vec<PlanarTree>) -> Result<PlanarTree, ArityError> {
    if parts.len() < 2 {
        return Err(ArityError(parts.len()));
    }
    Ok(PlanarTree::Node(parts))
}

/// All planar trees with `n + 1` leaves, in canonical order.
pub fn enumerate_planar(n: usize) -> Vec<PlanarTree> {
    let mut table: Vec<Vec<PlanarTree>> = vec![vec![PlanarTree::Leaf]];
    for d in 1..=n {
        let mut level = Vec::new();
        for k in 2..=d + 1 {
            // k children whose degrees sum to d - (k - 1)
            let rest = d + 1 - k;
            let mut prefix = Vec::with_capacity(k);
            fill_children(&table, k, rest, &mut prefix, &mut level);
        }
        level.sort();
        table.push(level);
    }
    table.swap_remove(n)
}

fn fill_children(
    table: &[Vec<PlanarTree>],
    remaining: usize,
    budget: usize,
    prefix: &mut Vec<PlanarTree>,
    out: &mut Vec<PlanarTree>,
) {
    if remaining == 1 {
        for t in &table[budget] {
            let mut ch = prefix.clone();
            ch.push(t.clone());
            out.push(PlanarTree::Node(ch));
        }
        return;
    }
    for d in 0..=budget {
        for t in &table[d] {
            prefix.push(t.clone());
            fill_children(table, remaining - 1, budget - d, prefix, out);
            prefix.pop();
        }
    }
}

impl Ord for PlanarTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| match (self, other) {
            (PlanarTree::Leaf, PlanarTree::Leaf) => Ordering::Equal,
            (PlanarTree::Leaf, _) => Ordering::Less,
            (_, PlanarTree::Leaf) => Ordering::Greater,
            (PlanarTree::Node(a), PlanarTree::Node(b)) => a.cmp(b),
        })
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf => f.write_str("|"),
            PlanarTree::Node(ch) => {
                f.write_str("(")?;
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

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PlanarTree {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        let t = PlanarTree::parse_inner(&mut c)?;
        c.finish()?;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts planar trees with all arities ≥ 2 directly, by the number of
    /// leaves, without building them.
    fn count_by_leaves(max_leaves: usize) -> Vec<u64> {
        // f[l] = trees with l leaves; g[k][l] = ordered forests of k trees, l leaves
        let mut f = vec![0u64; max_leaves + 1];
        f[1] = 1;
        for l in 2..=max_leaves {
            // forests of ≥ 2 trees with l leaves
            let mut forests = vec![vec![0u64; l + 1]; l + 1];
            forests[0][0] = 1;
            for k in 1..=l {
                for tot in 0..=l {
                    let mut s = 0;
                    for first in 1..=tot {
                        if first < l {
                            s += f[first] * forests[k - 1][tot - first];
                        }
                    }
                    forests[k][tot] = s;
                }
            }
            f[l] = (2..=l).map(|k| forests[k][l]).sum();
        }
        f
    }

    #[test]
    fn super_catalan_counts() {
        assert_eq!(enumerate_planar(1), vec![PlanarTree::y()]);
        assert_eq!(enumerate_planar(3).len(), 11);
        assert_eq!(enumerate_planar(4).len(), 45);
    }

    #[test]
    fn counts_match_direct_recursion() {
        let direct = count_by_leaves(9);
        for n in 0..=8 {
            assert_eq!(enumerate_planar(n).len() as u64, direct[n + 1], "degree {n}");
        }
    }

    #[test]
    fn graft_planar_examples() {
        assert_eq!(graft_planar(vec![PlanarTree::Leaf, PlanarTree::Leaf]).unwrap(), PlanarTree::y());
        let c3 = graft_planar(vec![PlanarTree::Leaf; 3]).unwrap();
        assert_eq!(c3, PlanarTree::corolla(3));
        let t = graft_planar(vec![PlanarTree::y(), PlanarTree::Leaf]).unwrap();
        assert_eq!(t.degree(), 2);
        assert_eq!(t.to_string(), "((|,|),|)");
        assert_eq!(graft_planar(vec![PlanarTree::Leaf]), Err(ArityError(1)));
    }

    #[test]
    fn round_trip_up_to_degree_six() {
        for n in 0..=6 {
            for t in enumerate_planar(n) {
                assert_eq!(t.to_string().parse::<PlanarTree>().unwrap(), t);
            }
        }
        assert!("(|)".parse::<PlanarTree>().is_err());
    }
}
