//! Text input for polynomials.
//!
//! Grammar: sums and differences of products; `*` may be omitted between
//! factors, `^` takes a non-negative integer exponent, and `/` divides by a
//! nonzero constant. A run of letters such as `xyz` is split into declared
//! variable names, longest name first.

use num::bigint::BigInt;
use thiserror::Error;

use super::field::Field;
use super::polynomial::Polynomial;
use super::ring::PolyRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `pos` is a 1-based character column.
    #[error("syntax error at column {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at column {pos}")]
    UnknownVariable { pos: usize, name: String },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::UnknownVariable { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, message: message.into() }
}

fn tokenize(vars: &[String], text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, pos));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().expect("digit run")), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            split_identifier(vars, &word, pos, &mut out)?;
        } else {
            return Err(syntax(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn split_identifier(vars: &[String], word: &str, pos: usize, out: &mut Vec<(Tok, usize)>) -> Result<(), ParseError> {
    let mut rest = word;
    let mut offset = 0;
    while !rest.is_empty() {
        let best = vars
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(v.as_str()))
            .max_by_key(|(_, v)| v.len());
        match best {
            Some((idx, v)) => {
                out.push((Tok::Var(idx), pos + offset));
                offset += v.len();
                rest = &rest[v.len()..];
            }
            None => return Err(ParseError::UnknownVariable { pos, name: word.to_string() }),
        }
    }
    Ok(())
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn expr(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = acc.add(self.ring, &self.term()?);
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = acc.sub(self.ring, &self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = acc.mul(self.ring, &self.power()?);
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let pos = self.pos();
                    let d = self.power()?;
                    if d.is_zero() || !d.is_constant() {
                        return Err(syntax(pos, "divisor must be a nonzero constant"));
                    }
                    let inv = self.ring.field().inv(&d.terms()[0].1);
                    acc = acc.scale(self.ring, &inv);
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::LParen) => {
                    acc = acc.mul(self.ring, &self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                let e: u32 = n.try_into().ok().filter(|&e| e <= u16::MAX as u32).ok_or_else(|| syntax(pos, "exponent too large"))?;
                Ok(base.pow(self.ring, e))
            }
            _ => Err(syntax(pos, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>, ParseError> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(syntax(pos, "unexpected end of input"));
        };
        self.at += 1;
        match tok {
            Tok::Num(n) => Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(&n))),
            Tok::Var(i) => Ok(Polynomial::var(self.ring, i)),
            Tok::Minus => Ok(self.power()?.neg(self.ring)),
            Tok::Plus => self.power(),
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(syntax(self.pos(), "expected `)`"));
                }
                self.at += 1;
                Ok(inner)
            }
            _ => Err(syntax(pos, "expected a number, variable, or `(`")),
        }
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_poly<F: Field>(ring: &PolyRing<F>, text: &str) -> Result<Polynomial<F>, ParseError> {
    let toks = tokenize(ring.vars(), text)?;
    let end = text.chars().count() + 1;
    if toks.is_empty() {
        return Err(syntax(end, "empty polynomial"));
    }
    let mut p = Parser { ring, toks, at: 0, end };
    let out = p.expr()?;
    if p.at < p.toks.len() {
        return Err(syntax(p.pos(), "unexpected token"));
    }
    Ok(out)
}
