use std::fs;
use std::path::PathBuf;

use acimult::poly::{
    buchberger, codim_and_multiplicity, colon_ideal, format_ideal_file, ideal_json, ideal_member, minimalize_generators,
    parse_ideal_file, parse_poly, Budget, Field, GroebnerError, HilbertError, Ideal, IdealError, IdealFile, PolyRing,
    Rationals, DEFAULT_PRIME,
};
use serde::Serialize;

use crate::common::{field_choice, print_json, CliError, CliResult, FieldChoice, Format, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum IdealOp {
    /// Reduced Gröbner basis of one ideal.
    Gb,
    /// K : I for two files K and I, with minimal generators.
    Colon,
    /// Codimension and multiplicity of R/I.
    Mult,
    /// Membership of --poly in one ideal.
    Member,
}

#[derive(clap::Args, Debug)]
pub struct IdealArgs {
    #[arg(value_enum)]
    pub op: IdealOp,
    /// Ideal files; `colon` takes K then I.
    #[arg(short = 'f', long = "file", required = true)]
    pub files: Vec<PathBuf>,
    /// Polynomial for `member`.
    #[arg(long)]
    pub poly: Option<String>,
    /// Field characteristic, overriding the files; 0 selects the rationals.
    #[arg(long = "char")]
    pub characteristic: Option<u64>,
    /// Maximum S-pairs per Gröbner basis computation.
    #[arg(long = "max-pairs")]
    pub max_pairs: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn load(files: &[PathBuf]) -> Result<Vec<IdealFile>, CliError> {
    files
        .iter()
        .map(|p| {
            let text = fs::read_to_string(p).map_err(|e| CliError::invalid(format!("{}: {e}", p.display())))?;
            parse_ideal_file(&text).map_err(|e| CliError::invalid(format!("{}: {e}", p.display())))
        })
        .collect()
}

fn groebner_err(e: GroebnerError) -> CliError {
    CliError::budget(e)
}

fn ideal_err(e: IdealError) -> CliError {
    match e {
        IdealError::Groebner(g) => groebner_err(g),
        other => CliError::invalid(other),
    }
}

fn hilbert_err(e: HilbertError) -> CliError {
    match e {
        HilbertError::Groebner(g) => groebner_err(g),
        other => CliError::invalid(other),
    }
}

pub fn run(args: &IdealArgs) -> CliResult {
    let files = load(&args.files)?;
    let expected = match args.op {
        IdealOp::Colon => 2,
        _ => 1,
    };
    if files.len() != expected {
        return Err(CliError::invalid(format!("{:?} takes {expected} file(s), got {}", args.op, files.len())));
    }
    if files.iter().any(|f| !f.same_ring_as(&files[0])) {
        return Err(CliError::invalid("ideal files declare different variables or orders"));
    }
    let characteristic = match args.characteristic {
        Some(c) => c,
        None => {
            let chars: Vec<u64> = files.iter().filter_map(|f| f.characteristic).collect();
            if chars.windows(2).any(|w| w[0] != w[1]) {
                return Err(CliError::invalid("ideal files declare different characteristics"));
            }
            chars.first().copied().unwrap_or(DEFAULT_PRIME as u64)
        }
    };
    let budget = Budget { max_pairs: args.max_pairs };
    match field_choice(characteristic)? {
        FieldChoice::Prime(p) => run_in(p, &files, args, budget),
        FieldChoice::Rational => run_in(Rationals, &files, args, budget),
    }
}

#[derive(Serialize)]
struct MultJson {
    codim: usize,
    multiplicity: i128,
}

#[derive(Serialize)]
struct MemberJson {
    poly: String,
    member: bool,
}

#[derive(Serialize)]
struct ColonJson {
    degrees: Vec<u32>,
    ideal: acimult::poly::IdealJson,
}

fn run_in<F: Field>(field: F, files: &[IdealFile], args: &IdealArgs, budget: Budget) -> CliResult {
    let ring = files[0].ring(field).map_err(CliError::invalid)?.with_budget(budget);
    let ideals: Vec<Ideal<F>> = files
        .iter()
        .zip(&args.files)
        .map(|(f, path)| {
            f.polynomials(&ring).map(Ideal::new).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
        })
        .collect::<Result<_, _>>()?;
    match args.op {
        IdealOp::Gb => {
            let gb = buchberger(&ring, ideals[0].gens()).map_err(groebner_err)?;
            emit_ideal(&ring, &gb, None, args.format);
        }
        IdealOp::Colon => {
            let c = colon_ideal(&ring, &ideals[0], &ideals[1]).map_err(ideal_err)?;
            let (gens, degrees) = if c.is_homogeneous() {
                minimalize_generators(&ring, &c).map_err(ideal_err)?
            } else {
                let d = c.gens().iter().map(|g| g.degree().unwrap_or(0)).collect();
                (c.gens().to_vec(), d)
            };
            emit_ideal(&ring, &gens, Some(degrees), args.format);
        }
        IdealOp::Mult => {
            let (codim, multiplicity) = codim_and_multiplicity(&ring, &ideals[0]).map_err(hilbert_err)?;
            match args.format {
                Format::Json => print_json(&MultJson { codim, multiplicity }),
                Format::Text => println!("codim {codim}\nmultiplicity {multiplicity}"),
            }
        }
        IdealOp::Member => {
            let text = args.poly.as_deref().ok_or_else(|| CliError::invalid("member needs --poly"))?;
            let f = parse_poly(&ring, text).map_err(|e| CliError::invalid(format!("--poly: {e}")))?;
            let member = ideal_member(&ring, &ideals[0], &f).map_err(groebner_err)?;
            match args.format {
                Format::Json => print_json(&MemberJson { poly: f.to_text(&ring), member }),
                Format::Text => println!("{member}"),
            }
        }
    }
    Ok(EXIT_OK)
}

fn emit_ideal<F: Field>(ring: &PolyRing<F>, gens: &[acimult::poly::Polynomial<F>], degrees: Option<Vec<u32>>, format: Format) {
    match (format, degrees) {
        (Format::Json, Some(degrees)) => print_json(&ColonJson { degrees, ideal: ideal_json(ring, gens) }),
        (Format::Json, None) => print_json(&ideal_json(ring, gens)),
        (Format::Text, degrees) => {
            if let Some(d) = degrees {
                let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                println!("# {} generators, degrees {}", gens.len(), d.join(","));
            }
            print!("{}", format_ideal_file(ring, gens));
        }
    }
}
