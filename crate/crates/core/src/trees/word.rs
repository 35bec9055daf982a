use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::parse::{write_generator, Cursor, ParseError};

/// Word over generator indices; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Word {
        Word(vec![i])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Splits off the last letter.
    pub fn split_last(&self) -> Option<(Word, usize)> {
        let (&last, init) = self.0.split_last()?;
        Some((Word(init.to_vec()), last))
    }

    pub fn content(&self, generators: usize) -> Vec<usize> {
        let mut out = vec![0; generators];
        for &i in &self.0 {
            if i >= out.len() {
                out.resize(i + 1, 0);
            }
            out[i] += 1;
        }
        out
    }
}

/// All words of length `n` over `generators` letters, in canonical order.
pub fn enumerate_words(n: usize, generators: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..generators).map(move |g| {
                    let mut v = w.0.clone();
                    v.push(g);
                    Word(v)
                })
            })
            .collect();
    }
    out
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &i in &self.0 {
            write_generator(f, i)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Cursor::new(s);
        if c.peek() == Some('1') {
            c.bump();
            c.finish()?;
            return Ok(Word::empty());
        }
        if c.at_end() {
            return c.error("empty word must be written '1'");
        }
        let mut letters = Vec::new();
        while !c.at_end() {
            letters.push(c.generator()?);
        }
        Ok(Word(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        let w: Word = "x1 x2x1".parse().unwrap();
        assert_eq!(w.letters(), &[0, 1, 0]);
        assert_eq!(w.to_string(), "x1x2x1");
        assert_eq!("1".parse::<Word>().unwrap(), Word::empty());
        assert_eq!(Word::empty().to_string(), "1");
        assert!("x1y".parse::<Word>().is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let ws = enumerate_words(3, 2);
        assert_eq!(ws.len(), 8);
        let mut sorted = ws.clone();
        sorted.sort();
        assert_eq!(ws, sorted);
        for w in ws {
            assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
        }
    }
}
