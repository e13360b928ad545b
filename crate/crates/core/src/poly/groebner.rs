//! Buchberger's algorithm.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use super::field::Field;
use super::monomial::Monomial;
use super::polynomial::{merge, Polynomial, Term};
use super::ring::PolyRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("computation budget exceeded after {pairs} S-pairs")]
    ComputationBudgetExceeded { pairs: u64 },
}

/// Index of the first basis element whose leading monomial divides `m`.
fn find_reducer<F: Field>(m: &Monomial, basis: &[Polynomial<F>]) -> Option<usize> {
    basis.iter().position(|g| g.lead_monomial().is_some_and(|l| l.divides(m)))
}

/// `p - c * q * g` where the leading terms cancel, skipping both leads.
fn cancel_lead<F: Field>(ring: &PolyRing<F>, p: &[Term<F>], c: &F::Elem, q: &Monomial, g: &Polynomial<F>) -> Vec<Term<F>> {
    let k = ring.field();
    let nc = k.neg(c);
    merge(ring, p, g.terms()[1..].iter().map(|(n, a)| (n.mul(q), k.mul(a, &nc))))
}

fn reducer_coeff<F: Field>(ring: &PolyRing<F>, c: &F::Elem, g: &Polynomial<F>) -> F::Elem {
    let k = ring.field();
    let lc = &g.terms()[0].1;
    if k.is_one(lc) {
        c.clone()
    } else {
        k.mul(c, &k.inv(lc))
    }
}

/// Fully reduced remainder of `f` on division by `basis`.
pub fn normal_form<F: Field>(ring: &PolyRing<F>, f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let mut p: Vec<Term<F>> = f.terms().to_vec();
    let mut start = 0;
    let mut rem = Vec::new();
    while start < p.len() {
        let (m, c) = &p[start];
        match find_reducer(m, basis) {
            Some(i) => {
                let g = &basis[i];
                let q = g.terms()[0].0.quotient_of(m);
                let coef = reducer_coeff(ring, c, g);
                p = cancel_lead(ring, &p[start + 1..], &coef, &q, g);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted(rem)
}

/// Reduces only until the leading monomial is not divisible by any leading
/// monomial of `basis`.
pub fn top_reduce<F: Field>(ring: &PolyRing<F>, f: Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let mut p = f;
    while let Some((m, c)) = p.lead() {
        let Some(i) = find_reducer(m, basis) else { break };
        let g = &basis[i];
        let q = g.terms()[0].0.quotient_of(m);
        let coef = reducer_coeff(ring, c, g);
        p = Polynomial::from_sorted(cancel_lead(ring, &p.terms()[1..], &coef, &q, g));
    }
    p
}

pub fn s_polynomial<F: Field>(ring: &PolyRing<F>, f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let k = ring.field();
    let (Some((fm, fc)), Some((gm, gc))) = (f.lead(), g.lead()) else {
        return Polynomial::zero();
    };
    let l = fm.lcm(gm);
    let a = f.mul_term(ring, &fm.quotient_of(&l), &k.inv(fc));
    a.sub_mul_term(ring, &k.inv(gc), &gm.quotient_of(&l), g)
}

/// Whether every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis<F: Field>(ring: &PolyRing<F>, basis: &[Polynomial<F>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !normal_form(ring, &s_polynomial(ring, &basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Whether `basis` is a reduced Gröbner basis: monic leads, no term of any
/// element divisible by another element's lead, S-polynomials reduce to 0.
pub fn is_reduced_groebner_basis<F: Field>(ring: &PolyRing<F>, basis: &[Polynomial<F>]) -> bool {
    let k = ring.field();
    for (i, g) in basis.iter().enumerate() {
        let Some((_, lc)) = g.lead() else { return false };
        if !k.is_one(lc) {
            return false;
        }
        for (j, h) in basis.iter().enumerate() {
            let hl = h.lead_monomial().expect("nonzero");
            if i != j && g.terms().iter().any(|(m, _)| hl.divides(m)) {
                return false;
            }
        }
    }
    is_groebner_basis(ring, basis)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// increasing leading monomial. The zero ideal gives an empty basis.
///
/// Pairs are processed by the normal strategy: smallest lcm degree first
/// (counting only non-auxiliary variables), ties by pair index. A pair is
/// skipped when its leading monomials are coprime, or when some third
/// element's leading monomial divides their lcm and both of its pairs with
/// the two have already been treated.
pub fn buchberger<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>, GroebnerError> {
    let mut state = PairState::<F>::default();
    for g in gens {
        if !g.is_zero() {
            state.add(ring, g.clone());
        }
    }
    let limit = ring.budget().max_pairs;
    let mut processed = 0u64;
    while let Some(Reverse((_, i, j))) = state.heap.pop() {
        state.pending[j][i] = false;
        let (li, lj) = (&state.leads[i], &state.leads[j]);
        if li.is_coprime(lj) || state.chain_criterion(i, j) {
            continue;
        }
        processed += 1;
        if limit.is_some_and(|l| processed > l) {
            return Err(GroebnerError::ComputationBudgetExceeded { pairs: processed - 1 });
        }
        let s = s_polynomial(ring, &state.basis[i], &state.basis[j]);
        let h = top_reduce(ring, s, &state.basis);
        if !h.is_zero() {
            if h.is_constant() {
                return Ok(vec![Polynomial::constant(ring, ring.field().one())]);
            }
            state.add(ring, h);
        }
    }
    Ok(interreduce(ring, state.basis))
}

type PairKey = Reverse<(u32, usize, usize)>;

struct PairState<F: Field> {
    basis: Vec<Polynomial<F>>,
    leads: Vec<Monomial>,
    heap: BinaryHeap<PairKey>,
    /// `pending[j][i]` for `i < j`: the pair is still queued.
    pending: Vec<Vec<bool>>,
}

impl<F: Field> Default for PairState<F> {
    fn default() -> Self {
        Self { basis: Vec::new(), leads: Vec::new(), heap: BinaryHeap::new(), pending: Vec::new() }
    }
}

impl<F: Field> PairState<F> {
    fn add(&mut self, ring: &PolyRing<F>, g: Polynomial<F>) {
        let g = g.monic(ring);
        let j = self.basis.len();
        let gl = g.lead_monomial().expect("nonzero").clone();
        for (i, bl) in self.leads.iter().enumerate() {
            self.heap.push(Reverse((ring.selection_degree(&bl.lcm(&gl)), i, j)));
        }
        self.pending.push(vec![true; j]);
        self.leads.push(gl);
        self.basis.push(g);
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.pending[hi][lo]
    }

    fn chain_criterion(&self, i: usize, j: usize) -> bool {
        let l = self.leads[i].lcm(&self.leads[j]);
        (0..self.leads.len()).any(|k| {
            k != i && k != j && self.leads[k].divides(&l) && !self.is_pending(i, k) && !self.is_pending(j, k)
        })
    }
}

/// Minimal and reduced form of a Gröbner basis.
fn interreduce<F: Field>(ring: &PolyRing<F>, basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut keep: Vec<Polynomial<F>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let gl = g.lead_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hl = h.lead_monomial().unwrap();
            j != i && hl.divides(gl) && (hl != gl || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    keep.sort_by(|a, b| ring.cmp(a.lead_monomial().unwrap(), b.lead_monomial().unwrap()));
    let mut out = Vec::with_capacity(keep.len());
    for (i, g) in keep.iter().enumerate() {
        let lead = Polynomial::from_sorted(vec![g.terms()[0].clone()]);
        let tail = Polynomial::from_sorted(g.terms()[1..].to_vec());
        let others: Vec<Polynomial<F>> =
            keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
        out.push(lead.add(ring, &normal_form(ring, &tail, &others)));
    }
    out
}
