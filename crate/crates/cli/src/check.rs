use acimult::bounds::{aci_predicates, check_bounds, mult_aci, mult_ci, mult_gorenstein, BoundCheck};
use acimult::degrees::{classify_case, validate_aci, validate_gorenstein, Degree};
use acimult::resolution::{minimalize_aci_betti, multiplicity_from_betti, BettiJson, ShiftVectors};
use serde::Serialize;

use crate::common::{degree_list, print_json, CliError, CliResult, Format, EXIT_MISMATCH, EXIT_OK};

#[derive(clap::Args, Debug)]
pub struct CheckArgs {
    /// Degrees of the regular sequence, comma separated (e.g. 7,8,9).
    #[arg(long = "e")]
    pub e: String,
    /// Degrees of the Gorenstein generators, comma separated.
    #[arg(long = "d")]
    pub d: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Serialize)]
struct CheckReport {
    e: Vec<Degree>,
    d: Vec<Degree>,
    c: Degree,
    e4: Degree,
    case: String,
    matched: Vec<usize>,
    betti: BettiJson,
    shifts: ShiftVectors,
    mult_k: i128,
    mult_j: i128,
    /// Closed form; absent when not a positive integer.
    mult_i: Option<i128>,
    mult_i_from_betti: i128,
    bounds: BoundCheck,
    predicates: Vec<(String, bool)>,
}

pub fn run(args: &CheckArgs) -> CliResult {
    let e = degree_list("--e", &args.e)?;
    let d = degree_list("--d", &args.d)?;
    let g = validate_gorenstein(&d).map_err(CliError::invalid)?;
    let a = validate_aci(&e, &g).map_err(CliError::invalid)?;
    let case = classify_case(&a);
    let table = minimalize_aci_betti(&a);
    let shifts = table.shift_vectors().map_err(CliError::mismatch)?;
    let from_betti = multiplicity_from_betti(&table).map_err(CliError::mismatch)?;
    let closed = mult_aci(&a).ok();
    let check = check_bounds(from_betti, &shifts, 3);
    let predicates = aci_predicates(&a, &check).named().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    let report = CheckReport {
        e: a.e().to_vec(),
        d: a.d().to_vec(),
        c: a.c(),
        e4: a.e4(),
        case: case.variant.name().to_string(),
        matched: case.matched.clone(),
        betti: table.to_json(),
        shifts: shifts.clone(),
        mult_k: mult_ci(a.e()),
        mult_j: mult_gorenstein(a.gorenstein()).map_err(CliError::mismatch)?,
        mult_i: closed,
        mult_i_from_betti: from_betti,
        bounds: check,
        predicates,
    };
    match args.format {
        Format::Json => print_json(&report),
        Format::Text => print_text(&report, &table.to_text(), case.variant.is_prefix()),
    }
    Ok(if check.upper_ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn list(v: &[Degree]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn print_text(r: &CheckReport, table: &str, prefix: bool) {
    println!("e = {}  d = {}", list(&r.e), list(&r.d));
    println!("c = {}  e4 = {}", r.c, r.e4);
    let matched: Vec<String> = r.matched.iter().map(|i| i.to_string()).collect();
    println!("case {} (matched indices: {})", r.case, if matched.is_empty() { "none".into() } else { matched.join(",") });
    if !prefix {
        println!("note: the matched indices are not a prefix; this case is outside the proven upper bound");
    }
    println!("minimal Betti table:");
    print!("{table}");
    println!("minimal shifts m = {}", list(&r.shifts.min));
    println!("maximal shifts M = {}", list(&r.shifts.max));
    println!("e(R/K) = {}", r.mult_k);
    println!("e(R/J) = {}", r.mult_j);
    match r.mult_i {
        Some(m) => println!("e(R/I) = {m} (closed form), {} (Betti table)", r.mult_i_from_betti),
        None => println!("e(R/I) = {} (Betti table); closed form is not a positive integer", r.mult_i_from_betti),
    }
    let b = &r.bounds;
    let rel = |ok: bool| if ok { "<=" } else { ">" };
    println!(
        "{} {} {} {} {}  (m1 m2 m3, 3! e, M1 M2 M3)",
        b.lower_prod,
        rel(b.lower_ok),
        b.scaled_e,
        if b.upper_ok { "<=" } else { ">" },
        b.upper_prod
    );
    println!("lower bound: {}", if b.lower_ok { "holds" } else { "fails" });
    println!("upper bound: {}", if b.upper_ok { "holds" } else { "VIOLATED" });
    for (name, v) in &r.predicates {
        println!("{name}: {v}");
    }
}
