//! A worked almost complete intersection in three variables, with every
//! derived number checked against embedded expected values.
//!
//! `I = (x^7, y^8 + z^8, x^3y^6 + x^5z^4 + yz^8, y^3z^3)`, linked through
//! the regular sequence formed by its first three generators to a
//! Gorenstein ideal `J` with seven generators.

use std::fmt;

use thiserror::Error;

use crate::bounds::{check_bounds, mult_aci, mult_ci, mult_gorenstein, BoundsError};
use crate::degrees::{classify_case, join, validate_aci, validate_gorenstein, AciDegreeData, CaseVariant, Degree, DegreeError};
use crate::poly::{
    codim_and_multiplicity, colon_ideal, ideal_member, ideals_equal, is_regular_sequence, minimalize_generators, parse_poly,
    Field, GroebnerError, HilbertError, Ideal, IdealError, MonomialOrder, ParseError, PolyRing, RingError,
};
use crate::resolution::{minimalize_aci_betti, ResolutionError};

pub const VARIABLES: [&str; 3] = ["x", "y", "z"];

/// Generators of `I`; the first three form the regular sequence `K`.
pub const I_GENERATORS: [&str; 4] = ["x^7", "y^8+z^8", "x^3y^6+x^5z^4+yz^8", "y^3z^3"];

/// Generators of `J = K : I`.
pub const J_GENERATORS: [&str; 7] = [
    "x^3y^3z-y^6z+x^2z^5",
    "x^6z+xyz^5",
    "x^7",
    "x^5y^2z-x^3z^5+y^3z^5",
    "y^8+z^8",
    "x^5y^3-x^2y^6",
    "x^3y^6+x^5z^4+yz^8",
];

/// A sign variant of the last generator of `J` that does not lie in `J`.
pub const J_SIGN_VARIANT: &str = "x^3y^6+x^5z^4-yz^8";

pub const E: [Degree; 3] = [7, 8, 9];
pub const D: [Degree; 7] = [7, 7, 7, 8, 8, 8, 9];
pub const C: Degree = 18;
pub const E4: Degree = 6;
pub const CASE: CaseVariant = CaseVariant::II;
pub const MIN_SHIFTS: [Degree; 3] = [6, 13, 15];
pub const MAX_SHIFTS: [Degree; 3] = [9, 16, 17];
pub const MULT_K: i128 = 504;
pub const MULT_J: i128 = 234;
pub const MULT_I: i128 = 270;
pub const LOWER_PRODUCT: i128 = 1170;
pub const SCALED_MULT_I: i128 = 1620;
pub const UPPER_PRODUCT: i128 = 2448;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoldenError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenEntry {
    pub quantity: String,
    pub expected: String,
    pub got: String,
}

impl GoldenEntry {
    pub fn ok(&self) -> bool {
        self.expected == self.got
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldenReport {
    pub entries: Vec<GoldenEntry>,
}

impl GoldenReport {
    fn push(&mut self, quantity: &str, expected: impl ToString, got: impl ToString) {
        self.entries.push(GoldenEntry { quantity: quantity.to_string(), expected: expected.to_string(), got: got.to_string() });
    }

    pub fn is_ok(&self) -> bool {
        self.entries.iter().all(GoldenEntry::ok)
    }

    pub fn first_mismatch(&self) -> Option<&GoldenEntry> {
        self.entries.iter().find(|e| !e.ok())
    }

    fn extend(&mut self, other: GoldenReport) {
        self.entries.extend(other.entries);
    }
}

impl fmt::Display for GoldenReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let mark = if e.ok() { "ok" } else { "MISMATCH" };
            if e.ok() {
                writeln!(f, "{:<28} {:<24} {mark}", e.quantity, e.got)?;
            } else {
                writeln!(f, "{:<28} {:<24} {mark} (expected {})", e.quantity, e.got, e.expected)?;
            }
        }
        Ok(())
    }
}

fn vec_text(v: &[Degree]) -> String {
    format!("({})", join(v))
}

/// Checks everything derivable from degree data `e`, `d` alone.
pub fn degree_level(e: &[Degree], d: &[Degree]) -> Result<GoldenReport, GoldenError> {
    let g = validate_gorenstein(d)?;
    let a = validate_aci(e, &g)?;
    let mut r = GoldenReport::default();
    r.push("c", C, a.c());
    r.push("e4", E4, a.e4());
    r.push("case", CASE, classify_case(&a).variant);
    r.extend(numeric_checks(&a)?);
    Ok(r)
}

fn numeric_checks(a: &AciDegreeData) -> Result<GoldenReport, GoldenError> {
    let mut r = GoldenReport::default();
    let shifts = minimalize_aci_betti(a).shift_vectors()?;
    r.push("minimal shifts m", vec_text(&MIN_SHIFTS), vec_text(&shifts.min));
    r.push("maximal shifts M", vec_text(&MAX_SHIFTS), vec_text(&shifts.max));
    let mk = mult_ci(a.e());
    let mj = mult_gorenstein(a.gorenstein())?;
    let mi = mult_aci(a)?;
    r.push("e(R/K) closed form", MULT_K, mk);
    r.push("e(R/J) closed form", MULT_J, mj);
    r.push("e(R/I) closed form", MULT_I, mi);
    r.push("e(R/I) from Betti table", MULT_I, crate::resolution::multiplicity_from_betti(&minimalize_aci_betti(a))?);
    let check = check_bounds(mi, &shifts, 3);
    r.push("m1*m2*m3", LOWER_PRODUCT, check.lower_prod);
    r.push("6*e(R/I)", SCALED_MULT_I, check.scaled_e);
    r.push("M1*M2*M3", UPPER_PRODUCT, check.upper_prod);
    r.push("lower bound holds", true, check.lower_ok);
    r.push("upper bound holds", true, check.upper_ok);
    Ok(r)
}

/// Runs the full symbolic pipeline over `field`: regular-sequence check,
/// colon, minimal generators, multiplicities from Hilbert series, equality
/// with the embedded `J`, the double link, and the degree-level numbers
/// read off the computed ideals.
pub fn symbolic<F: Field>(field: F) -> Result<GoldenReport, GoldenError> {
    let ring = PolyRing::new(field, &VARIABLES, MonomialOrder::Grevlex)?;
    let i_gens = I_GENERATORS.iter().map(|t| parse_poly(&ring, t)).collect::<Result<Vec<_>, _>>()?;
    let listed_j = Ideal::new(J_GENERATORS.iter().map(|t| parse_poly(&ring, t)).collect::<Result<Vec<_>, _>>()?);
    let k = Ideal::new(i_gens[..3].to_vec());
    let i = Ideal::new(i_gens.clone());
    let mut r = GoldenReport::default();

    r.push("K regular sequence", true, is_regular_sequence(&ring, k.gens())?);
    let j = colon_ideal(&ring, &k, &i)?;
    let (j_min, j_degrees) = minimalize_generators(&ring, &j)?;
    let j_degrees: Vec<Degree> = j_degrees.iter().map(|&d| d as Degree).collect();
    r.push("minimal generators of J", D.len(), j_min.len());
    r.push("degrees of J", vec_text(&D), vec_text(&j_degrees));
    r.push("J equals listed generators", true, ideals_equal(&ring, &j, &listed_j)?);
    let variant = parse_poly(&ring, J_SIGN_VARIANT)?;
    r.push("sign variant outside J", true, !ideal_member(&ring, &j, &variant)?);

    let hk = codim_and_multiplicity(&ring, &k)?;
    let hj = codim_and_multiplicity(&ring, &j)?;
    let hi = codim_and_multiplicity(&ring, &i)?;
    r.push("(codim, e) of R/K", format!("{:?}", (3, MULT_K)), format!("{hk:?}"));
    r.push("(codim, e) of R/J", format!("{:?}", (3, MULT_J)), format!("{hj:?}"));
    r.push("(codim, e) of R/I", format!("{:?}", (3, MULT_I)), format!("{hi:?}"));

    let back = colon_ideal(&ring, &k, &j)?;
    r.push("K : J equals I", true, ideals_equal(&ring, &back, &i)?);

    let mut e_degrees: Vec<Degree> = k.gens().iter().map(|g| g.degree().unwrap_or(0) as Degree).collect();
    e_degrees.sort_unstable();
    r.push("degrees of K", vec_text(&E), vec_text(&e_degrees));
    r.extend(degree_level(&e_degrees, &j_degrees)?);
    Ok(r)
}
