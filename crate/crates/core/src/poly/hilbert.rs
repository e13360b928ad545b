//! Hilbert series of monomial ideals, and codimension and multiplicity of
//! homogeneous ideals through their leading-term ideals.

use thiserror::Error;

use super::field::Field;
use super::groebner::GroebnerError;
use super::ideal::Ideal;
use super::monomial::{Exponent, Monomial, MonomialOrder};
use super::ring::PolyRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("the unit ideal has an empty quotient")]
    UnitIdeal,
    #[error("the zero ideal is not supported")]
    ZeroIdeal,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Polynomial in `t` with integer coefficients, lowest degree first.
pub type TPoly = Vec<i128>;

fn tpoly_trim(mut p: TPoly) -> TPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn tpoly_add(a: &[i128], b: &[i128]) -> TPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    tpoly_trim(out)
}

fn tpoly_mul(a: &[i128], b: &[i128]) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    tpoly_trim(out)
}

fn one_minus_t_pow(d: u32) -> TPoly {
    let mut p = vec![0; d as usize + 1];
    p[0] += 1;
    p[d as usize] -= 1;
    tpoly_trim(p)
}

/// Removes generators divisible by others (and duplicates).
pub fn minimal_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `R/I`,
/// where `I` is generated by `gens` in `n` variables.
pub fn hilbert_numerator(gens: &[Monomial]) -> TPoly {
    numerator_rec(minimal_monomials(gens.to_vec()))
}

fn numerator_rec(gens: Vec<Monomial>) -> TPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let nvars = gens[0].nvars();
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let Some(var) = (0..nvars).filter(|&i| counts[i] >= 2).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))) else {
        // pairwise coprime generators
        return gens.iter().fold(vec![1], |acc, g| tpoly_mul(&acc, &one_minus_t_pow(g.degree())));
    };
    // Exponents of `var` in generators that involve another variable; a
    // pure power of `var` in a minimal set exceeds all of them.
    let mut exps: Vec<Exponent> = gens
        .iter()
        .filter(|g| g.exponents()[var] > 0 && g.degree() > g.exponents()[var] as u32)
        .map(|g| g.exponents()[var])
        .collect();
    exps.sort_unstable();
    let k = exps[(exps.len() - 1) / 2];
    let mut pe = vec![0; nvars];
    pe[var] = k;
    let pivot = Monomial::from_exponents(&pe);

    let mut sum = gens.clone();
    sum.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            e[var] = e[var].saturating_sub(k);
            Monomial::from_exponents(&e)
        })
        .collect();
    let a = numerator_rec(minimal_monomials(sum));
    let mut b = vec![0; k as usize];
    b.extend(numerator_rec(minimal_monomials(colon)));
    tpoly_add(&a, &b)
}

/// Codimension and multiplicity read off a Hilbert numerator: the number of
/// `(1 - t)` factors it carries, and the value of the cofactor at `t = 1`.
pub fn codim_and_multiplicity_from_numerator(numerator: &[i128]) -> Option<(usize, i128)> {
    let mut q = tpoly_trim(numerator.to_vec());
    if q.is_empty() {
        return None;
    }
    let mut h = 0;
    loop {
        let at_one: i128 = q.iter().sum();
        if at_one != 0 {
            return Some((h, at_one));
        }
        // divide by (1 - t): prefix sums
        let mut acc = 0;
        let mut next = Vec::with_capacity(q.len());
        for c in &q[..q.len() - 1] {
            acc += c;
            next.push(acc);
        }
        q = tpoly_trim(next);
        h += 1;
    }
}

/// Codimension and multiplicity of `R/I` for a monomial ideal.
pub fn monomial_codim_and_multiplicity(gens: &[Monomial]) -> Option<(usize, i128)> {
    codim_and_multiplicity_from_numerator(&hilbert_numerator(gens))
}

/// Codimension `h` and multiplicity `e` of `R/I` from the Hilbert series of
/// the leading-term ideal with respect to grevlex.
pub fn codim_and_multiplicity<F: Field>(ring: &PolyRing<F>, ideal: &Ideal<F>) -> Result<(usize, i128), HilbertError> {
    if ideal.is_zero() {
        return Err(HilbertError::ZeroIdeal);
    }
    let leads: Vec<Monomial> = if ring.order() == MonomialOrder::Grevlex {
        ideal.groebner_basis(ring)?.iter().map(|g| g.lead_monomial().unwrap().clone()).collect()
    } else {
        let grevlex = ring.with_order(MonomialOrder::Grevlex).expect("same variables");
        let gens: Vec<_> = ideal.gens().iter().map(|g| g.reorder(&grevlex)).collect();
        Ideal::new(gens).groebner_basis(&grevlex)?.iter().map(|g| g.lead_monomial().unwrap().clone()).collect()
    };
    monomial_codim_and_multiplicity(&leads).ok_or(HilbertError::UnitIdeal)
}
