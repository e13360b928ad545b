use std::fmt;
use std::io::Write;

use acimult::degrees::Degree;
use acimult::poly::{FieldError, PrimeField};

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl fmt::Display) -> Self {
        Self { code: EXIT_INVALID, message: message.to_string() }
    }

    pub fn mismatch(message: impl fmt::Display) -> Self {
        Self { code: EXIT_MISMATCH, message: message.to_string() }
    }

    pub fn budget(message: impl fmt::Display) -> Self {
        Self { code: EXIT_BUDGET, message: message.to_string() }
    }
}

pub type CliResult = Result<u8, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Parses a comma-separated integer list. Unsorted input is sorted with a
/// warning on stderr.
pub fn degree_list(flag: &str, text: &str) -> Result<Vec<Degree>, CliError> {
    let mut v = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let x: Degree = part.parse().map_err(|_| CliError::invalid(format!("{flag}: `{part}` is not an integer")))?;
        v.push(x);
    }
    if v.windows(2).any(|w| w[0] > w[1]) {
        v.sort_unstable();
        let sorted: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        eprintln!("warning: {flag} was not ascending; using {}", sorted.join(","));
    }
    Ok(v)
}

/// Parses a comma-separated list of positive counts.
pub fn count_list(flag: &str, text: &str) -> Result<Vec<usize>, CliError> {
    let mut v = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        match part.parse::<usize>() {
            Ok(x) if x > 0 => v.push(x),
            _ => return Err(CliError::invalid(format!("{flag}: `{part}` is not a positive integer"))),
        }
    }
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// Coefficient field selected by a characteristic: 0 is the rationals.
pub enum FieldChoice {
    Prime(PrimeField),
    Rational,
}

pub fn field_choice(characteristic: u64) -> Result<FieldChoice, CliError> {
    if characteristic == 0 {
        return Ok(FieldChoice::Rational);
    }
    PrimeField::new(characteristic).map(FieldChoice::Prime).map_err(|e: FieldError| CliError::invalid(e))
}

/// Pretty-prints JSON to stdout. A closed pipe (e.g. `| head`) is not an error.
pub fn print_json<T: serde::Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("serializable report");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}
