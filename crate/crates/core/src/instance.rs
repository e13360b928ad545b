//! Concrete almost complete intersections built from random homogeneous
//! skew-symmetric matrices.
//!
//! The maximal pfaffians of a generic `n x n` skew matrix with degree
//! matrix `r_i + r_j` generate a codimension three Gorenstein ideal `J`.
//! Its three lowest-degree pfaffians form a regular sequence `K`, and
//! `I = K : J` is an almost complete intersection in which all three
//! generator degrees of `K` cancel.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds::{case_iv_delta, mult_aci, mult_ci, mult_gorenstein, BoundsError, CaseIvDelta};
use crate::degrees::{pfaffian_to_aci, Degree, DegreeError, PfaffianDegreeData};
use crate::poly::{
    codim_and_multiplicity, colon_ideal, ideals_equal, is_regular_sequence, maximal_pfaffians, minimalize_generators,
    Field, GroebnerError, HilbertError, Ideal, IdealError, PfaffianError, PolyRing, SkewMatrix,
};
use crate::resolution::{case_iv_betti, multiplicity_from_betti, ResolutionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error("instances need at least 3 variables, ring has {0}")]
    TooFewVariables(usize),
    /// The sampled matrix is not generic enough; try another seed.
    #[error("retry: {0}")]
    Retry(String),
    #[error("no generic instance after {attempts} attempts (last: {last})")]
    RetriesExhausted { attempts: u32, last: String },
    #[error(transparent)]
    Pfaffian(#[from] PfaffianError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

/// Symbolic results next to the values the degree data predicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceChecks {
    /// `(codim, e)` of `R/K`, `R/J`, `R/I` from Hilbert series.
    pub k: (usize, i128),
    pub j: (usize, i128),
    pub i: (usize, i128),
    pub expected_mult_k: i128,
    pub expected_mult_j: i128,
    pub expected_mult_i: i128,
    /// Minimal generator degrees of `I`, ascending.
    pub i_degrees: Vec<Degree>,
    /// First-step degrees of the predicted Betti table, ascending.
    pub expected_i_degrees: Vec<Degree>,
    /// `e(R/I)` from the predicted Betti table.
    pub betti_mult_i: i128,
    /// `K : I = J`.
    pub double_link: bool,
}

impl InstanceChecks {
    /// Every symbolic value agrees with its prediction.
    pub fn all_hold(&self) -> bool {
        self.k == (3, self.expected_mult_k)
            && self.j == (3, self.expected_mult_j)
            && self.i == (3, self.expected_mult_i)
            && self.i.1 == self.k.1 - self.j.1
            && self.i_degrees == self.expected_i_degrees
            && self.betti_mult_i == self.i.1
            && self.double_link
    }
}

pub struct AciInstance<F: Field> {
    pub weights: PfaffianDegreeData,
    pub seed: u64,
    pub matrix: SkewMatrix<F>,
    pub k: Ideal<F>,
    pub j: Ideal<F>,
    pub i: Ideal<F>,
    pub checks: InstanceChecks,
    pub delta: CaseIvDelta,
}

fn retry(msg: impl Into<String>) -> InstanceError {
    InstanceError::Retry(msg.into())
}

/// One attempt with the given seed. Genericity failures (wrong codimension
/// or generator degrees of `J`, non-regular `K`) return
/// [`InstanceError::Retry`].
pub fn try_generate_aci_instance<F: Field>(
    p: &PfaffianDegreeData,
    seed: u64,
    ring: &PolyRing<F>,
) -> Result<AciInstance<F>, InstanceError> {
    if ring.nvars() < 3 {
        return Err(InstanceError::TooFewVariables(ring.nvars()));
    }
    let aci = pfaffian_to_aci(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrix = SkewMatrix::random_homogeneous(ring, p.r(), &mut rng);
    let pfs = maximal_pfaffians(ring, &matrix)?;
    if pfs.iter().any(|f| f.is_zero()) {
        return Err(retry("a maximal pfaffian vanishes"));
    }
    let j = Ideal::new(pfs.clone());
    let jm = match codim_and_multiplicity(ring, &j) {
        Ok(v) => v,
        Err(HilbertError::UnitIdeal) => return Err(retry("pfaffians generate the unit ideal")),
        Err(e) => return Err(e.into()),
    };
    if jm.0 != 3 {
        return Err(retry(format!("pfaffian ideal has codimension {}", jm.0)));
    }
    let (_, jd) = minimalize_generators(ring, &j)?;
    let jd: Vec<Degree> = jd.iter().map(|&d| d as Degree).collect();
    if jd != p.d() {
        return Err(retry(format!("pfaffian ideal has generator degrees {jd:?}")));
    }
    let k = Ideal::new(pfs[..3].to_vec());
    if !is_regular_sequence(ring, k.gens())? {
        return Err(retry("lowest three pfaffians are not a regular sequence"));
    }
    let i = colon_ideal(ring, &k, &j)?;
    let (i_min, i_deg) = minimalize_generators(ring, &i)?;
    let i = Ideal::new(i_min);
    let back = colon_ideal(ring, &k, &i)?;
    let double_link = ideals_equal(ring, &back, &j)?;
    let km = codim_and_multiplicity(ring, &k)?;
    let im = codim_and_multiplicity(ring, &i)?;
    let table = case_iv_betti(p);
    let checks = InstanceChecks {
        k: km,
        j: jm,
        i: im,
        expected_mult_k: mult_ci(aci.e()),
        expected_mult_j: mult_gorenstein(aci.gorenstein())?,
        expected_mult_i: mult_aci(&aci)?,
        i_degrees: i_deg.iter().map(|&d| d as Degree).collect(),
        expected_i_degrees: table.degrees_at(1),
        betti_mult_i: multiplicity_from_betti(&table)?,
        double_link,
    };
    let delta = case_iv_delta(p)?;
    Ok(AciInstance { weights: p.clone(), seed, matrix, k, j, i, checks, delta })
}

/// Tries seeds `seed, seed + 1, ...` until an attempt succeeds or
/// `max_attempts` attempts have returned [`InstanceError::Retry`].
pub fn generate_aci_instance<F: Field>(
    p: &PfaffianDegreeData,
    seed: u64,
    ring: &PolyRing<F>,
    max_attempts: u32,
) -> Result<AciInstance<F>, InstanceError> {
    let mut last = String::from("no attempts made");
    for attempt in 0..max_attempts {
        match try_generate_aci_instance(p, seed.wrapping_add(attempt as u64), ring) {
            Err(InstanceError::Retry(msg)) => last = msg,
            other => return other,
        }
    }
    Err(InstanceError::RetriesExhausted { attempts: max_attempts, last })
}
