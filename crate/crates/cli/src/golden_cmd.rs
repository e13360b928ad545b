use acimult::golden::{self, GoldenError, GoldenReport};
use acimult::poly::{GroebnerError, HilbertError, IdealError, PrimeField, Rationals, DEFAULT_PRIME};
use serde::Serialize;

use crate::common::{field_choice, print_json, CliError, CliResult, FieldChoice, Format, EXIT_MISMATCH, EXIT_OK};

#[derive(clap::Args, Debug)]
pub struct GoldenArgs {
    /// Field characteristic; 0 selects the rationals.
    #[arg(long = "char", default_value_t = DEFAULT_PRIME as u64)]
    pub characteristic: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Serialize)]
struct Entry<'a> {
    quantity: &'a str,
    expected: &'a str,
    got: &'a str,
    ok: bool,
}

fn is_budget(e: &GoldenError) -> bool {
    matches!(
        e,
        GoldenError::Groebner(GroebnerError::ComputationBudgetExceeded { .. })
            | GoldenError::Ideal(IdealError::Groebner(_))
            | GoldenError::Hilbert(HilbertError::Groebner(_))
    )
}

pub fn run(args: &GoldenArgs) -> CliResult {
    let field = field_choice(args.characteristic)?;
    let result = match field {
        FieldChoice::Prime(p) => golden::symbolic::<PrimeField>(p),
        FieldChoice::Rational => golden::symbolic(Rationals),
    };
    let report: GoldenReport = match result {
        Ok(r) => r,
        Err(e) if is_budget(&e) => return Err(CliError::budget(e)),
        Err(e) => {
            return Err(CliError::mismatch(format!(
                "pipeline failed over characteristic {}: {e} (a small prime can degenerate this example)",
                args.characteristic
            )))
        }
    };
    match args.format {
        Format::Json => {
            let entries: Vec<Entry> = report
                .entries
                .iter()
                .map(|e| Entry { quantity: &e.quantity, expected: &e.expected, got: &e.got, ok: e.ok() })
                .collect();
            print_json(&entries);
        }
        Format::Text => print!("{report}"),
    }
    match report.first_mismatch() {
        None => Ok(EXIT_OK),
        Some(m) => {
            eprintln!(
                "mismatch: {} expected {}, got {} (characteristic {})",
                m.quantity, m.expected, m.got, args.characteristic
            );
            Ok(EXIT_MISMATCH)
        }
    }
}
