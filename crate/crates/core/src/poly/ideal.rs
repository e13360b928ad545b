//! Ideals and the operations linkage needs: membership, intersection,
//! colon, minimal generators.

use std::sync::OnceLock;

use thiserror::Error;

use super::field::Field;
use super::groebner::{buchberger, normal_form, GroebnerError};
use super::hilbert::{codim_and_multiplicity, HilbertError};
use super::polynomial::Polynomial;
use super::ring::PolyRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("generator {index} is not homogeneous")]
    NonHomogeneous { index: usize },
    #[error("operation needs a nonzero ideal")]
    ZeroIdeal,
    #[error("sequence of {len} elements is longer than the number of variables")]
    TooManyElements { len: usize },
}

/// Generators with a lazily computed reduced Gröbner basis. The cache is
/// tied to the ring passed on first use; always pass the same ring.
pub struct Ideal<F: Field> {
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<Vec<Polynomial<F>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Self { gens: self.gens.clone(), gb }
    }
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Ideal").field("gens", &self.gens).finish()
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(gens: Vec<Polynomial<F>>) -> Self {
        Self { gens: gens.into_iter().filter(|g| !g.is_zero()).collect(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &PolyRing<F>) -> Self {
        Self::new(vec![Polynomial::constant(ring, ring.field().one())])
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner_basis(&self, ring: &PolyRing<F>) -> Result<&[Polynomial<F>], GroebnerError> {
        if let Some(b) = self.gb.get() {
            return Ok(b);
        }
        let b = buchberger(ring, &self.gens)?;
        Ok(self.gb.get_or_init(|| b))
    }

    pub fn is_unit(&self, ring: &PolyRing<F>) -> Result<bool, GroebnerError> {
        Ok(self.groebner_basis(ring)?.iter().any(|g| g.is_constant()))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Generators formatted one per line.
    pub fn to_text(&self, ring: &PolyRing<F>) -> String {
        self.gens.iter().map(|g| g.to_text(ring) + "\n").collect()
    }
}

/// Whether `f` lies in `ideal`.
pub fn ideal_member<F: Field>(ring: &PolyRing<F>, ideal: &Ideal<F>, f: &Polynomial<F>) -> Result<bool, GroebnerError> {
    Ok(normal_form(ring, f, ideal.groebner_basis(ring)?).is_zero())
}

/// Whether every generator of `b` lies in `a`.
pub fn contains<F: Field>(ring: &PolyRing<F>, a: &Ideal<F>, b: &Ideal<F>) -> Result<bool, GroebnerError> {
    let gb = a.groebner_basis(ring)?;
    Ok(b.gens().iter().all(|g| normal_form(ring, g, gb).is_zero()))
}

/// Equality by mutual containment.
pub fn ideals_equal<F: Field>(ring: &PolyRing<F>, a: &Ideal<F>, b: &Ideal<F>) -> Result<bool, GroebnerError> {
    Ok(contains(ring, a, b)? && contains(ring, b, a)?)
}

/// `A ∩ B` as the auxiliary-variable-free part of a Gröbner basis of
/// `t A + (1 - t) B` under an order eliminating `t`.
pub fn intersect<F: Field>(ring: &PolyRing<F>, a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::new(Vec::new()));
    }
    let er = ring.elimination_ring();
    let t = Polynomial::var(&er, 0);
    let mut gens = Vec::with_capacity(a.gens().len() + 2 * b.gens().len());
    for g in a.gens() {
        gens.push(g.pad_into(&er, 1).mul(&er, &t));
    }
    for g in b.gens() {
        let g = g.pad_into(&er, 1);
        gens.push(g.sub(&er, &g.mul(&er, &t)));
    }
    let gb = buchberger(&er, &gens)?;
    Ok(Ideal::new(gb.iter().filter_map(|g| g.strip_into(ring, 1)).collect()))
}

/// `K : f`; the unit ideal when `f ∈ K`.
pub fn colon_by_poly<F: Field>(ring: &PolyRing<F>, k: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>, IdealError> {
    if k.is_zero() || f.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    if ideal_member(ring, k, f)? {
        return Ok(Ideal::unit(ring));
    }
    let meet = intersect(ring, k, &Ideal::new(vec![f.clone()]))?;
    let gens = meet
        .gens()
        .iter()
        .map(|g| g.div_exact(ring, f).expect("elements of K ∩ (f) are multiples of f"))
        .collect();
    Ok(Ideal::new(gens))
}

/// `K : I`, the intersection of `K : f` over the generators `f` of `I`.
/// Generators of `I` already in `K` contribute the unit ideal and are
/// skipped; if all are skipped the result is the unit ideal.
pub fn colon_ideal<F: Field>(ring: &PolyRing<F>, k: &Ideal<F>, i: &Ideal<F>) -> Result<Ideal<F>, IdealError> {
    if k.is_zero() || i.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    let mut acc: Option<Ideal<F>> = None;
    for f in i.gens() {
        if ideal_member(ring, k, f)? {
            continue;
        }
        let c = colon_by_poly(ring, k, f)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(ring, &prev, &c)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ring)))
}

/// Minimal homogeneous generators: scanning in increasing degree, a
/// generator is kept unless it lies in the ideal of those already kept.
/// Returns the kept generators and their degrees, both in increasing degree.
pub fn minimalize_generators<F: Field>(
    ring: &PolyRing<F>,
    ideal: &Ideal<F>,
) -> Result<(Vec<Polynomial<F>>, Vec<u32>), IdealError> {
    if let Some(index) = ideal.gens().iter().position(|g| !g.is_homogeneous()) {
        return Err(IdealError::NonHomogeneous { index });
    }
    let mut order: Vec<&Polynomial<F>> = ideal.gens().iter().collect();
    order.sort_by_key(|g| g.degree().unwrap_or(0));
    let mut kept: Vec<Polynomial<F>> = Vec::new();
    let mut kept_gb: Vec<Polynomial<F>> = Vec::new();
    for g in order {
        if !kept.is_empty() && normal_form(ring, g, &kept_gb).is_zero() {
            continue;
        }
        kept.push(g.clone());
        kept_gb = buchberger(ring, &kept)?;
    }
    let degrees = kept.iter().map(|g| g.degree().unwrap_or(0)).collect();
    Ok((kept, degrees))
}

/// Whether homogeneous `fs` form a regular sequence, tested as
/// `codim (f_1, ..., f_k) = k`.
pub fn is_regular_sequence<F: Field>(ring: &PolyRing<F>, fs: &[Polynomial<F>]) -> Result<bool, IdealError> {
    if let Some(index) = fs.iter().position(|g| !g.is_homogeneous()) {
        return Err(IdealError::NonHomogeneous { index });
    }
    if fs.len() > ring.nvars() {
        return Err(IdealError::TooManyElements { len: fs.len() });
    }
    if fs.iter().any(|f| f.is_zero()) {
        return Ok(false);
    }
    if fs.is_empty() {
        return Ok(true);
    }
    match codim_and_multiplicity(ring, &Ideal::new(fs.to_vec())) {
        Ok((h, _)) => Ok(h == fs.len()),
        Err(HilbertError::UnitIdeal) => Ok(false),
        Err(HilbertError::ZeroIdeal) => Ok(false),
        Err(HilbertError::Groebner(e)) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::PrimeField;
    use crate::poly::monomial::MonomialOrder;
    use crate::poly::parse::parse_poly;

    fn ring(vars: &[&str]) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::default(), vars, MonomialOrder::Grevlex).unwrap()
    }

    fn ideal(r: &PolyRing<PrimeField>, texts: &[&str]) -> Ideal<PrimeField> {
        Ideal::new(texts.iter().map(|t| parse_poly(r, t).unwrap()).collect())
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y", "z"]);
        let k = ideal(&r, &["x^2", "y^2", "z^2"]);
        assert!(ideal_member(&r, &k, &parse_poly(&r, "x^2*y*z").unwrap()).unwrap());
        assert!(!ideal_member(&r, &k, &parse_poly(&r, "x*y*z").unwrap()).unwrap());
    }

    #[test]
    fn colon_one_variable() {
        let r = ring(&["x"]);
        let c = colon_ideal(&r, &ideal(&r, &["x^2"]), &ideal(&r, &["x"])).unwrap();
        assert!(ideals_equal(&r, &c, &ideal(&r, &["x"])).unwrap());
    }

    #[test]
    fn colon_of_squares_by_maximal_ideal() {
        let r = ring(&["x", "y", "z"]);
        let k = ideal(&r, &["x^2", "y^2", "z^2"]);
        let c = colon_ideal(&r, &k, &ideal(&r, &["x", "y", "z"])).unwrap();
        assert!(ideals_equal(&r, &c, &ideal(&r, &["x^2", "y^2", "z^2", "x*y*z"])).unwrap());
        assert_eq!(codim_and_multiplicity(&r, &c).unwrap(), (3, 7));
    }

    #[test]
    fn colon_by_member_is_unit() {
        let r = ring(&["x", "y"]);
        let c = colon_ideal(&r, &ideal(&r, &["x^2", "y"]), &ideal(&r, &["x^2*y"])).unwrap();
        assert!(c.is_unit(&r).unwrap());
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let r = ring(&["x", "y"]);
        let m = intersect(&r, &ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
        assert!(ideals_equal(&r, &m, &ideal(&r, &["x*y"])).unwrap());
    }

    #[test]
    fn minimal_generators() {
        let r = ring(&["x", "y"]);
        let (g, d) = minimalize_generators(&r, &ideal(&r, &["x", "x^2", "y"])).unwrap();
        assert_eq!(d, vec![1, 1]);
        assert_eq!(g.len(), 2);
        let (g, d) = minimalize_generators(&r, &ideal(&r, &["x^2+y^2", "y^2", "x^2"])).unwrap();
        assert_eq!(d, vec![2, 2]);
        assert!(ideals_equal(&r, &Ideal::new(g), &ideal(&r, &["x^2", "y^2"])).unwrap());
        assert_eq!(
            minimalize_generators(&r, &ideal(&r, &["x", "y^2 + x"])).unwrap_err(),
            IdealError::NonHomogeneous { index: 1 }
        );
    }

    #[test]
    fn regular_sequences() {
        let r = ring(&["x", "y", "z"]);
        let seq = |t: &[&str]| t.iter().map(|s| parse_poly(&r, s).unwrap()).collect::<Vec<_>>();
        assert!(is_regular_sequence(&r, &seq(&["x^2", "y^2", "z^2"])).unwrap());
        assert!(!is_regular_sequence(&r, &seq(&["x", "x*y"])).unwrap());
    }
}
