//! Line-based text format:
//!
//! ```text
//! # comment
//! ops: < >
//! unit: < 1 0
//! unit: > 0 1
//! star: 1*< + 1*>
//! rel: (x<y)<z = x<(y<z) + x<(y>z)
//! ```
//!
//! `unit: op α β` sets `a∘1 = αa` and `1∘a = βa`; operations without a
//! `unit:` line act by zero. A relation side is `0` or a signed sum of
//! terms `[c[*]](x∘y)∘z` and `[c[*]]x∘(y∘z)`.

use std::fmt::Write as _;

use super::{Monomial, Presentation, PresentationError};
use crate::scalar::Scalar;

const FORBIDDEN: &[char] = &['(', ')', '=', '#', '+', '-', ',', 'x', 'y', 'z', ':'];

struct Line<'a> {
    no: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Line<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PresentationError> {
        self.err_at(self.pos, msg)
    }

    fn err_at<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, PresentationError> {
        Err(PresentationError::Parse { line: self.no, col: self.text[..pos].chars().count() + 1, msg: msg.into() })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &str) -> Result<(), PresentationError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected {}", what))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let r = self.rest();
        let n = r.find(char::is_whitespace).unwrap_or(r.len());
        self.pos += n;
        &r[..n]
    }

    fn scalar<S: Scalar>(&mut self) -> Result<S, PresentationError> {
        self.skip_ws();
        let start = self.pos;
        let w = self.word();
        w.parse::<S>().or_else(|_| self.err_at(start, format!("invalid number '{}'", w)))
    }

    /// Optional unsigned rational `p` or `p/q`.
    fn coefficient<S: Scalar>(&mut self) -> Result<Option<S>, PresentationError> {
        self.skip_ws();
        let r = self.rest();
        let digits = |s: &str| s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
        let mut n = digits(r);
        if n == 0 {
            return Ok(None);
        }
        if r[n..].starts_with('/') {
            let d = digits(&r[n + 1..]);
            if d == 0 {
                return self.err_at(self.pos + n + 1, "expected denominator");
            }
            n += 1 + d;
        }
        let start = self.pos;
        self.pos += n;
        match r[..n].parse::<S>() {
            Ok(c) if !c.is_zero() || r[n..].trim_start().is_empty() => Ok(Some(c)),
            Ok(_) => self.err_at(start, "zero coefficient"),
            Err(_) => self.err_at(start, "invalid number"),
        }
    }

    /// Longest declared operation name at the cursor.
    fn op(&mut self, ops: &[String]) -> Result<usize, PresentationError> {
        self.skip_ws();
        let r = self.rest();
        let best =
            ops.iter().enumerate().filter(|(_, name)| r.starts_with(name.as_str())).max_by_key(|(_, name)| name.len());
        match best {
            Some((i, name)) => {
                self.pos += name.len();
                Ok(i)
            }
            None => self.err("expected an operation"),
        }
    }

    fn var(&mut self, want: char) -> Result<(), PresentationError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some('x' | 'y' | 'z') => self.err("variables must appear in the order x, y, z"),
            _ => self.err(format!("expected '{}'", want)),
        }
    }

    /// `(x∘y)∘z` or `x∘(y∘z)`.
    fn monomial(&mut self, ops: &[String]) -> Result<Monomial, PresentationError> {
        if self.eat('(') {
            self.var('x')?;
            let i = self.op(ops)?;
            self.var('y')?;
            self.expect(')', "')'")?;
            let j = self.op(ops)?;
            self.var('z')?;
            Ok(Monomial::L(i, j))
        } else {
            self.var('x')?;
            let i = self.op(ops)?;
            self.expect('(', "'('")?;
            self.var('y')?;
            let j = self.op(ops)?;
            self.var('z')?;
            self.expect(')', "')'")?;
            Ok(Monomial::R(i, j))
        }
    }

    /// Signed sum of terms up to `stop` (or the end), added into `out`
    /// with the given overall sign.
    fn side<S: Scalar>(
        &mut self,
        ops: &[String],
        stop: Option<char>,
        sign: S,
        out: &mut [S],
    ) -> Result<(), PresentationError> {
        let k = ops.len();
        let done = |l: &mut Self| l.at_end() || (stop.is_some() && l.peek() == stop);
        if self.peek() == Some('0') {
            let save = self.pos;
            self.pos += 1;
            if done(self) {
                return Ok(());
            }
            self.pos = save;
        }
        let mut first = true;
        loop {
            let mut s = sign.clone();
            if self.eat('-') {
                s = -s;
            } else if !self.eat('+') && !first {
                return self.err("expected '+', '-' or end of side");
            }
            let c = self.coefficient::<S>()?.unwrap_or_else(S::one);
            if self.peek() == Some('*') {
                self.pos += 1;
            }
            let m = self.monomial(ops)?;
            let idx = m.index(k);
            out[idx] = out[idx].clone() + s * c;
            first = false;
            if done(self) {
                return Ok(());
            }
        }
    }
}

fn check_op_name(line: &Line<'_>, start: usize, name: &str) -> Result<(), PresentationError> {
    if let Some(c) = name.chars().find(|c| FORBIDDEN.contains(c) || c.is_ascii_digit()) {
        return line.err_at(start, format!("operation name '{}' may not contain '{}'", name, c));
    }
    Ok(())
}

/// Parses a presentation file. Errors carry 1-based line and column.
pub fn parse_presentation<S: Scalar>(text: &str) -> Result<Presentation<S>, PresentationError> {
    let mut ops: Option<Vec<String>> = None;
    let mut alpha: Vec<Option<S>> = Vec::new();
    let mut beta: Vec<S> = Vec::new();
    let mut star: Option<Vec<S>> = None;
    let mut rels: Vec<Vec<S>> = Vec::new();
    let mut last = 0;

    for (n, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut line = Line { no: n + 1, text: body, pos: 0 };
        last = n + 1;
        if line.at_end() {
            continue;
        }
        let Some(colon) = body.find(':') else {
            return line.err("expected 'keyword:'");
        };
        let key = body[..colon].trim();
        line.pos = colon + 1;
        if key != "ops" && ops.is_none() {
            return line.err_at(0, "'ops:' must come first");
        }
        match key {
            "ops" => {
                if ops.is_some() {
                    return line.err_at(0, "duplicate 'ops:' line");
                }
                let mut names = Vec::new();
                while !line.at_end() {
                    let start = line.pos;
                    let w = line.word();
                    check_op_name(&line, start, w)?;
                    if names.iter().any(|x: &String| x == w) {
                        return line.err_at(start, format!("operation '{}' declared twice", w));
                    }
                    names.push(w.to_string());
                }
                if names.is_empty() {
                    return line.err("no operations declared");
                }
                alpha = vec![None; names.len()];
                beta = vec![S::zero(); names.len()];
                ops = Some(names);
            }
            "unit" => {
                let names = ops.as_ref().expect("checked");
                line.skip_ws();
                let start = line.pos;
                let w = line.word();
                let Some(i) = names.iter().position(|x| x == w) else {
                    return line.err_at(start, format!("unknown operation '{}'", w));
                };
                if alpha[i].is_some() {
                    return line.err_at(start, format!("duplicate unit action for '{}'", w));
                }
                alpha[i] = Some(line.scalar()?);
                beta[i] = line.scalar()?;
                if !line.at_end() {
                    return line.err("unexpected text after unit action");
                }
            }
            "star" => {
                let names = ops.as_ref().expect("checked");
                if star.is_some() {
                    return line.err_at(0, "duplicate 'star:' line");
                }
                let mut sigma = vec![S::zero(); names.len()];
                let mut first = true;
                while first || !line.at_end() {
                    let neg = if line.eat('-') {
                        true
                    } else {
                        if !line.eat('+') && !first {
                            return line.err("expected '+' or '-'");
                        }
                        false
                    };
                    let c = line.coefficient::<S>()?;
                    if c.is_some() && line.peek() == Some('*') {
                        let save = line.pos;
                        line.pos += 1;
                        if line.op(names).is_err() {
                            line.pos = save;
                        } else {
                            line.pos = save + 1;
                        }
                    }
                    let i = line.op(names)?;
                    let c = c.unwrap_or_else(S::one);
                    sigma[i] = sigma[i].clone() + if neg { -c } else { c };
                    first = false;
                }
                star = Some(sigma);
            }
            "rel" => {
                let names = ops.as_ref().expect("checked");
                let k = names.len();
                let mut v = vec![S::zero(); 2 * k * k];
                line.side(names, Some('='), S::one(), &mut v)?;
                line.expect('=', "'='")?;
                line.side(names, None, -S::one(), &mut v)?;
                if v.iter().all(|c| c.is_zero()) {
                    return line.err_at(0, "relation is zero");
                }
                rels.push(v);
            }
            other => return line.err_at(0, format!("unknown keyword '{}'", other)),
        }
    }
    let Some(ops) = ops else {
        return Err(PresentationError::Parse { line: last.max(1), col: 1, msg: "missing 'ops:' line".into() });
    };
    let alpha = alpha.into_iter().map(|a| a.unwrap_or_else(S::zero)).collect();
    Presentation::new(ops, alpha, beta, star, rels)
}

fn signed_terms<S: Scalar>(out: &mut String, terms: &[(S, String)]) {
    for (n, (c, body)) in terms.iter().enumerate() {
        if n > 0 {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        } else if c.is_negative() {
            out.push('-');
        }
        let _ = write!(out, "{}*{}", c.abs(), body);
    }
}

fn side_text<S: Scalar>(terms: &[(S, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(c, m)| if c.is_one() { m.clone() } else { format!("{}*{}", c, m) })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Writes a presentation in the text format: positive relation terms on
/// the left of `=`, negated negative terms on the right.
pub fn emit<S: Scalar>(p: &Presentation<S>) -> String {
    let k = p.k();
    let mut out = String::new();
    let _ = writeln!(out, "ops: {}", p.ops().join(" "));
    for (i, name) in p.ops().iter().enumerate() {
        if !p.alpha()[i].is_zero() || !p.beta()[i].is_zero() {
            let _ = writeln!(out, "unit: {} {} {}", name, p.alpha()[i], p.beta()[i]);
        }
    }
    if let Some(sigma) = p.star() {
        let terms: Vec<(S, String)> =
            sigma.iter().zip(p.ops()).filter(|(c, _)| !c.is_zero()).map(|(c, o)| (c.clone(), o.clone())).collect();
        out.push_str("star: ");
        signed_terms(&mut out, &terms);
        out.push('\n');
    }
    for r in p.relations() {
        let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
        for (idx, c) in r.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let m = Monomial::from_index(idx, k).render(["x", "y", "z"], p.ops());
            if c.is_positive() {
                lhs.push((c.clone(), m));
            } else {
                rhs.push((-c.clone(), m));
            }
        }
        let _ = writeln!(out, "rel: {} = {}", side_text(&lhs), side_text(&rhs));
    }
    out
}
