//! Plain-text ideal files.
//!
//! ```text
//! vars: x y z
//! char: 32003        # optional; 0 selects the rationals
//! order: grevlex     # optional; grevlex or lex
//! x^2 + y*z
//! y^3
//! ```
//!
//! Header lines come before the first polynomial; `#` starts a comment.

use serde::Serialize;
use thiserror::Error;

use super::field::Field;
use super::monomial::MonomialOrder;
use super::parse::{parse_poly, ParseError};
use super::polynomial::Polynomial;
use super::ring::{PolyRing, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealFileError {
    #[error("line {line}: missing `vars:` header before the first polynomial")]
    MissingVars { line: usize },
    #[error("line {line}, column {col}: {message}")]
    Header { line: usize, col: usize, message: String },
    #[error("line {line}, column {col}: {source}")]
    Poly { line: usize, col: usize, source: ParseError },
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub characteristic: Option<u64>,
    pub order: MonomialOrder,
    /// `(line, column offset, text)` of each polynomial line, comments
    /// removed.
    lines: Vec<(usize, usize, String)>,
}

fn header_err(line: usize, col: usize, message: impl Into<String>) -> IdealFileError {
    IdealFileError::Header { line, col, message: message.into() }
}

/// Splits an ideal file into header and polynomial lines.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile, IdealFileError> {
    let mut vars: Option<Vec<String>> = None;
    let mut characteristic = None;
    let mut order = MonomialOrder::Grevlex;
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let offset = body.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        if let Some((key, value)) = trimmed.split_once(':') {
            let key = key.trim();
            let colon = trimmed.find(':').unwrap();
            let col = offset + colon + 2 + (value.len() - value.trim_start().len());
            if !lines.is_empty() {
                return Err(header_err(line, offset + 1, format!("header `{key}` after the first polynomial")));
            }
            match key {
                "vars" => {
                    vars = Some(value.split_whitespace().map(str::to_string).collect());
                }
                "char" => {
                    let v = value.trim();
                    characteristic =
                        Some(v.parse::<u64>().map_err(|_| header_err(line, col, format!("invalid characteristic `{v}`")))?);
                }
                "order" => {
                    order = match value.trim() {
                        "grevlex" => MonomialOrder::Grevlex,
                        "lex" => MonomialOrder::Lex,
                        other => return Err(header_err(line, col, format!("unknown order `{other}`"))),
                    };
                }
                other => return Err(header_err(line, offset + 1, format!("unknown header `{other}`"))),
            }
            continue;
        }
        if vars.is_none() {
            return Err(IdealFileError::MissingVars { line });
        }
        lines.push((line, offset, trimmed.to_string()));
    }
    let vars = vars.ok_or(IdealFileError::MissingVars { line: text.lines().count().max(1) })?;
    Ok(IdealFile { vars, characteristic, order, lines })
}

impl IdealFile {
    pub fn ring<F: Field>(&self, field: F) -> Result<PolyRing<F>, IdealFileError> {
        Ok(PolyRing::new(field, &self.vars, self.order)?)
    }

    pub fn polynomials<F: Field>(&self, ring: &PolyRing<F>) -> Result<Vec<Polynomial<F>>, IdealFileError> {
        self.lines
            .iter()
            .map(|(line, offset, text)| {
                parse_poly(ring, text).map_err(|source| IdealFileError::Poly { line: *line, col: offset + source.pos(), source })
            })
            .collect()
    }

    /// Whether two files declare the same variables and order.
    pub fn same_ring_as(&self, other: &IdealFile) -> bool {
        self.vars == other.vars && self.order == other.order
    }
}

/// Text in the ideal file format.
pub fn format_ideal_file<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> String {
    let mut s = format!("vars: {}\nchar: {}\norder: {}\n", ring.vars().join(" "), ring.field().characteristic(), ring.order().name());
    for g in gens {
        s.push_str(&g.to_text(ring));
        s.push('\n');
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub exp: Vec<u16>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolynomialJson {
    pub degree: Option<u32>,
    pub text: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub char: u64,
    pub order: String,
    pub generators: Vec<PolynomialJson>,
}

pub fn polynomial_json<F: Field>(ring: &PolyRing<F>, p: &Polynomial<F>) -> PolynomialJson {
    PolynomialJson {
        degree: p.degree(),
        text: p.to_text(ring),
        terms: p
            .terms()
            .iter()
            .map(|(m, c)| TermJson { exp: m.exponents().to_vec(), coeff: ring.field().format(c) })
            .collect(),
    }
}

pub fn ideal_json<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> IdealJson {
    IdealJson {
        vars: ring.vars().to_vec(),
        char: ring.field().characteristic(),
        order: ring.order().name().to_string(),
        generators: gens.iter().map(|g| polynomial_json(ring, g)).collect(),
    }
}
