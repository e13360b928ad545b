use acimult::degrees::{Degree, PfaffianDegreeData};
use acimult::instance::{generate_aci_instance, AciInstance, InstanceError};
use acimult::poly::{ideal_json, Field, GroebnerError, HilbertError, IdealError, MonomialOrder, PolyRing, Rationals, DEFAULT_PRIME};
use serde::Serialize;

use crate::common::{degree_list, field_choice, print_json, CliError, CliResult, FieldChoice, Format, EXIT_MISMATCH, EXIT_OK};

#[derive(clap::Args, Debug)]
pub struct InstanceArgs {
    /// Matrix weights r_1, ..., r_n (n odd), comma separated.
    #[arg(long = "r", allow_hyphen_values = true)]
    pub r: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Field characteristic; 0 selects the rationals.
    #[arg(long = "char", default_value_t = DEFAULT_PRIME as u64)]
    pub characteristic: u64,
    /// Seeds tried before giving up.
    #[arg(long, default_value_t = 20)]
    pub retries: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Serialize)]
struct InstanceJson {
    r: Vec<Degree>,
    seed: u64,
    matrix: Vec<Vec<String>>,
    j: acimult::poly::IdealJson,
    k: acimult::poly::IdealJson,
    i: acimult::poly::IdealJson,
    codim_mult_k: (usize, i128),
    codim_mult_j: (usize, i128),
    codim_mult_i: (usize, i128),
    expected_mult_k: i128,
    expected_mult_j: i128,
    expected_mult_i: i128,
    i_degrees: Vec<Degree>,
    expected_i_degrees: Vec<Degree>,
    double_link: bool,
    six_e: i128,
    upper_product: i128,
    delta: i128,
    verified: bool,
}

fn instance_err(e: InstanceError) -> CliError {
    match e {
        InstanceError::RetriesExhausted { .. }
        | InstanceError::Groebner(GroebnerError::ComputationBudgetExceeded { .. })
        | InstanceError::Ideal(IdealError::Groebner(_))
        | InstanceError::Hilbert(HilbertError::Groebner(_)) => CliError::budget(e),
        InstanceError::Degree(_) | InstanceError::TooFewVariables(_) => CliError::invalid(e),
        other => CliError::mismatch(other),
    }
}

pub fn run(args: &InstanceArgs) -> CliResult {
    let r = degree_list("--r", &args.r)?;
    let p = PfaffianDegreeData::new(&r).map_err(CliError::invalid)?;
    if args.retries == 0 {
        return Err(CliError::invalid("--retries must be positive"));
    }
    match field_choice(args.characteristic)? {
        FieldChoice::Prime(f) => run_in(f, &p, args),
        FieldChoice::Rational => run_in(Rationals, &p, args),
    }
}

fn run_in<F: Field>(field: F, p: &PfaffianDegreeData, args: &InstanceArgs) -> CliResult {
    let ring = PolyRing::new(field, &["x", "y", "z"], MonomialOrder::Grevlex).map_err(CliError::invalid)?;
    let inst = generate_aci_instance(p, args.seed, &ring, args.retries).map_err(instance_err)?;
    let ok = inst.checks.all_hold();
    match args.format {
        Format::Json => print_json(&to_json(&ring, &inst, ok)),
        Format::Text => print_text(&ring, &inst, ok),
    }
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn to_json<F: Field>(ring: &PolyRing<F>, inst: &AciInstance<F>, verified: bool) -> InstanceJson {
    let n = inst.matrix.size();
    let c = &inst.checks;
    InstanceJson {
        r: inst.weights.r().to_vec(),
        seed: inst.seed,
        matrix: (0..n).map(|i| (0..n).map(|j| inst.matrix.get(i, j).to_text(ring)).collect()).collect(),
        j: ideal_json(ring, inst.j.gens()),
        k: ideal_json(ring, inst.k.gens()),
        i: ideal_json(ring, inst.i.gens()),
        codim_mult_k: c.k,
        codim_mult_j: c.j,
        codim_mult_i: c.i,
        expected_mult_k: c.expected_mult_k,
        expected_mult_j: c.expected_mult_j,
        expected_mult_i: c.expected_mult_i,
        i_degrees: c.i_degrees.clone(),
        expected_i_degrees: c.expected_i_degrees.clone(),
        double_link: c.double_link,
        six_e: inst.delta.six_e,
        upper_product: inst.delta.upper_prod,
        delta: inst.delta.delta,
        verified,
    }
}

fn print_text<F: Field>(ring: &PolyRing<F>, inst: &AciInstance<F>, ok: bool) {
    let c = &inst.checks;
    let r: Vec<String> = inst.weights.r().iter().map(|x| x.to_string()).collect();
    println!("weights r = ({}), seed {}", r.join(","), inst.seed);
    println!("skew matrix:");
    print!("{}", inst.matrix.to_text(ring));
    println!("J (maximal pfaffians):");
    print!("{}", inst.j.to_text(ring));
    println!("K:");
    print!("{}", inst.k.to_text(ring));
    println!("I = K : J (minimal generators):");
    print!("{}", inst.i.to_text(ring));
    println!("(codim, e) of R/K = {:?}, expected e {}", c.k, c.expected_mult_k);
    println!("(codim, e) of R/J = {:?}, expected e {}", c.j, c.expected_mult_j);
    println!("(codim, e) of R/I = {:?}, expected e {}", c.i, c.expected_mult_i);
    println!("e(R/I) = e(R/K) - e(R/J): {}", c.i.1 == c.k.1 - c.j.1);
    println!("generator degrees of I = {:?}, predicted {:?}", c.i_degrees, c.expected_i_degrees);
    println!("K : I = J: {}", c.double_link);
    println!("6e = {}, M1 M2 M3 = {}, delta = {}", inst.delta.six_e, inst.delta.upper_prod, inst.delta.delta);
    println!("{}", if ok { "verified" } else { "VERIFICATION FAILED" });
}
