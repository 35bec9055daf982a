use thiserror::Error;

/// Malformed tree or word notation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {msg}", .pos + 1)]
pub struct ParseError {
    /// Zero-based character offset into the input.
    pub pos: usize,
    pub msg: String,
}

/// Character cursor that skips insignificant whitespace.
pub(crate) struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { chars: src.chars().enumerate().collect(), idx: 0, _src: src }
    }

    fn skip_ws(&mut self) {
        while self.idx < self.chars.len() && self.chars[self.idx].1.is_whitespace() {
            self.idx += 1;
        }
    }

    pub(crate) fn pos(&mut self) -> usize {
        self.skip_ws();
        self.chars.get(self.idx).map_or(self.chars.len(), |c| c.0)
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.idx).map(|c| c.1)
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.idx += 1;
        }
        c
    }

    pub(crate) fn error<T>(&mut self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), msg: msg.into() })
    }

    pub(crate) fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.idx += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected trailing '{c}'")),
        }
    }

    /// Parses a generator token `x`, `x1`, `x2`, ...; the index is one-based in
    /// the notation and zero-based in the result. Digits must follow `x`
    /// without whitespace.
    pub(crate) fn generator(&mut self) -> Result<usize, ParseError> {
        self.expect('x')?;
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.get(self.idx) {
            if c.is_ascii_digit() {
                digits.push(c);
                self.idx += 1;
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Ok(0);
        }
        match digits.parse::<usize>() {
            Ok(0) => self.error("generator indices start at 1"),
            Ok(i) => Ok(i - 1),
            Err(_) => self.error("generator index out of range"),
        }
    }
}

pub(crate) fn write_generator(f: &mut std::fmt::Formatter<'_>, index: usize) -> std::fmt::Result {
    write!(f, "x{}", index + 1)
}
