//! Series input: a coefficient list `[a0, a1, …]` or a rational expression
//! in `x` built from integers, `+ - * / ^` and parentheses. Juxtaposition
//! multiplies, so `2x(1+x)` is accepted.

use super::{PowerSeries, SeriesError};
use crate::scalar::Scalar;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    order: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SeriesError> {
        Err(SeriesError::Parse { col: self.src[..self.pos].chars().count() + 1, msg: msg.into() })
    }

    fn peek(&mut self) -> Option<char> {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<&'a str> {
        self.peek();
        let rest = &self.src[self.pos..];
        let n = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if n == 0 {
            return None;
        }
        self.pos += n;
        Some(&rest[..n])
    }

    fn scalar<S: Scalar>(&mut self, text: &str) -> Result<S, SeriesError> {
        text.parse::<S>().or_else(|_| self.err(format!("invalid number '{}'", text)))
    }

    fn expr<S: Scalar>(&mut self) -> Result<PowerSeries<S>, SeriesError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<S: Scalar>(&mut self) -> Result<PowerSeries<S>, SeriesError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.div(&d).or_else(|e| {
                    self.pos = at;
                    self.err(e.to_string())
                })?;
            } else if matches!(self.peek(), Some('x' | '(' | '0'..='9')) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<S: Scalar>(&mut self) -> Result<PowerSeries<S>, SeriesError> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power<S: Scalar>(&mut self) -> Result<PowerSeries<S>, SeriesError> {
        let base = self.primary()?;
        if self.eat('^') {
            let Some(e) = self.integer() else { return self.err("expected an exponent") };
            let Ok(e) = e.parse::<u32>() else { return self.err("exponent too large") };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary<S: Scalar>(&mut self) -> Result<PowerSeries<S>, SeriesError> {
        if self.eat('(') {
            let e = self.expr()?;
            if !self.eat(')') {
                return self.err("expected ')'");
            }
            Ok(e)
        } else if self.eat('x') {
            Ok(PowerSeries::x(self.order))
        } else if let Some(n) = self.integer() {
            Ok(PowerSeries::constant(self.scalar(n)?, self.order))
        } else {
            self.err("expected a number, 'x' or '('")
        }
    }

    fn list<S: Scalar>(&mut self) -> Result<PowerSeries<S>, SeriesError> {
        let mut coeffs = Vec::new();
        if self.eat(']') {
            return Ok(PowerSeries::new(coeffs, self.order));
        }
        loop {
            self.peek();
            let start = self.pos;
            let rest = &self.src[self.pos..];
            let n = rest.find([',', ']']).unwrap_or(rest.len());
            self.pos += n;
            let text = rest[..n].trim();
            coeffs.push(text.parse::<S>().or_else(|_| {
                self.pos = start;
                self.err(format!("invalid coefficient '{}'", text))
            })?);
            if self.eat(']') {
                return Ok(PowerSeries::new(coeffs, self.order));
            }
            if !self.eat(',') {
                return self.err("expected ',' or ']'");
            }
        }
    }
}

/// Parses a series specification, truncated at `order`.
pub fn parse_series<S: Scalar>(text: &str, order: usize) -> Result<PowerSeries<S>, SeriesError> {
    let mut p = Parser { src: text, pos: 0, order };
    let s = if p.eat('[') { p.list()? } else { p.expr()? };
    if p.peek().is_some() {
        return p.err("unexpected input");
    }
    Ok(s)
}
