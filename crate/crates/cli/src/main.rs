//! Command-line front end: degree checks, sweeps, symbolic ideal
//! operations, the golden worked instance and random skew-matrix instances.

mod check;
mod common;
mod golden_cmd;
mod ideal_cmd;
mod instance_cmd;
mod sweep_cmd;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use common::EXIT_INVALID;

#[derive(Parser, Debug)]
#[command(name = "acimult", version, about = "Multiplicity bounds for codimension three almost complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one linkage datum and check the multiplicity bounds.
    Check(check::CheckArgs),
    /// Enumerate degree data and tally bound checks.
    Sweep(sweep_cmd::SweepArgs),
    /// Gröbner basis, colon, multiplicity or membership for ideal files.
    Ideal(ideal_cmd::IdealArgs),
    /// Recompute the worked instance in x, y, z symbolically.
    Golden(golden_cmd::GoldenArgs),
    /// Build and verify a random instance from a skew matrix of weights r.
    PfaffianInstance(instance_cmd::InstanceArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Check(a) => check::run(a),
        Command::Sweep(a) => sweep_cmd::run(a),
        Command::Ideal(a) => ideal_cmd::run(a),
        Command::Golden(a) => golden_cmd::run(a),
        Command::PfaffianInstance(a) => instance_cmd::run(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
