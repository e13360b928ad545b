use std::fs;
use std::path::PathBuf;

use acimult::degrees::Degree;
use acimult::sweep::{sweep, SweepError, SweepPlan, VIOLATION_CSV_HEADER};

use crate::common::{count_list, print_json, CliError, CliResult, Format, EXIT_MISMATCH, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Aci,
    CaseIv,
    LinkedCi,
}

#[derive(clap::Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// Largest e3 (aci) or largest degree (linked-ci).
    #[arg(long = "max-e", default_value_t = 10)]
    pub max_e: Degree,
    /// Generator counts of the Gorenstein ideal, comma separated odd numbers.
    #[arg(long, default_value = "5,7")]
    pub gens: String,
    /// Largest Gorenstein generator degree (aci).
    #[arg(long = "max-d", default_value_t = 10)]
    pub max_d: Degree,
    /// Largest weight sum (case-iv).
    #[arg(long = "max-rsum", default_value_t = 12)]
    pub max_rsum: Degree,
    /// Codimensions of the linked complete intersections, comma separated.
    #[arg(long = "n", default_value = "1,2,3,4")]
    pub n: String,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Directory for report.json and violations.csv.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn positive(flag: &str, v: Degree) -> Result<Degree, CliError> {
    if v > 0 {
        Ok(v)
    } else {
        Err(CliError::invalid(format!("{flag} must be positive")))
    }
}

fn odd_counts(text: &str) -> Result<Vec<usize>, CliError> {
    let v = count_list("--gens", text)?;
    if let Some(bad) = v.iter().find(|&&n| n < 3 || n % 2 == 0) {
        return Err(CliError::invalid(format!("--gens: {bad} is not an odd number >= 3")));
    }
    Ok(v)
}

pub fn plan(args: &SweepArgs) -> Result<SweepPlan, CliError> {
    Ok(match args.mode {
        Mode::Aci => SweepPlan::Aci {
            max_e3: positive("--max-e", args.max_e)?,
            gen_counts: odd_counts(&args.gens)?,
            max_dn: positive("--max-d", args.max_d)?,
        },
        Mode::CaseIv => SweepPlan::CaseIv { max_rsum: positive("--max-rsum", args.max_rsum)?, gen_counts: odd_counts(&args.gens)? },
        Mode::LinkedCi => {
            SweepPlan::LinkedCi { n_values: count_list("--n", &args.n)?, max_degree: positive("--max-e", args.max_e)? }
        }
    })
}

pub fn run(args: &SweepArgs) -> CliResult {
    let plan = plan(args)?;
    let jobs = match args.jobs {
        Some(0) => return Err(CliError::invalid("--jobs must be positive")),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let report = sweep(&plan, jobs).map_err(|e| match e {
        SweepError::Pool(_) => CliError::invalid(e),
        _ => CliError::mismatch(e),
    })?;
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).map_err(|e| CliError::invalid(format!("{}: {e}", dir.display())))?;
        let json = serde_json::to_string_pretty(&report).expect("serializable report");
        fs::write(dir.join("report.json"), json + "\n").map_err(|e| CliError::invalid(format!("report.json: {e}")))?;
        let mut w = csv::Writer::from_path(dir.join("violations.csv"))
            .map_err(|e| CliError::invalid(format!("violations.csv: {e}")))?;
        w.write_record(VIOLATION_CSV_HEADER).map_err(CliError::invalid)?;
        for v in &report.violations {
            w.write_record(v.csv_row()).map_err(CliError::invalid)?;
        }
        w.flush().map_err(CliError::invalid)?;
    }
    match args.format {
        Format::Json => print_json(&report),
        Format::Text => print!("{}", report.summary()),
    }
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_MISMATCH })
}
