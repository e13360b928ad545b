//! Sparse polynomials.

use std::cmp::Ordering;
use std::fmt;

use super::field::Field;
use super::monomial::Monomial;
use super::ring::PolyRing;

pub type Term<F> = (Monomial, <F as Field>::Elem);

/// Sparse polynomial: terms sorted descending in the ring order, no zero
/// coefficients, no repeated monomials. The ring is passed to every
/// operation rather than stored.
pub struct Polynomial<F: Field> {
    terms: Vec<Term<F>>,
}

impl<F: Field> Clone for Polynomial<F> {
    fn clone(&self) -> Self {
        Self { terms: self.terms.clone() }
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// Builds a polynomial from arbitrary terms, combining repeats and
    /// dropping zeros.
    pub fn from_terms(ring: &PolyRing<F>, mut terms: Vec<Term<F>>) -> Self {
        let k = ring.field();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = k.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if k.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if k.is_zero(lc) {
                out.pop();
            }
        }
        Self { terms: out }
    }

    /// Wraps terms already in canonical order.
    pub(crate) fn from_sorted(terms: Vec<Term<F>>) -> Self {
        Self { terms }
    }

    pub fn constant(ring: &PolyRing<F>, c: F::Elem) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &PolyRing<F>, m: Monomial, c: F::Elem) -> Self {
        if ring.field().is_zero(&c) {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    pub fn var(ring: &PolyRing<F>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Maximum total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Total degree in the variables from index `skip` on, when all terms
    /// agree.
    pub fn homogeneous_degree_after(&self, skip: usize) -> Option<u32> {
        let d = |m: &Monomial| m.exponents()[skip..].iter().map(|&e| e as u32).sum::<u32>();
        let first = d(&self.terms.first()?.0);
        self.terms.iter().all(|(m, _)| d(m) == first).then_some(first)
    }

    pub fn neg(&self, ring: &PolyRing<F>) -> Self {
        let k = ring.field();
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), k.neg(c))).collect() }
    }

    pub fn scale(&self, ring: &PolyRing<F>, c: &F::Elem) -> Self {
        let k = ring.field();
        if k.is_zero(c) {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (m.clone(), k.mul(a, c))).collect() }
    }

    pub fn mul_term(&self, ring: &PolyRing<F>, m: &Monomial, c: &F::Elem) -> Self {
        let k = ring.field();
        if k.is_zero(c) {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(n, a)| (n.mul(m), k.mul(a, c))).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, ring: &PolyRing<F>) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, c)) if ring.field().is_one(c) => self.clone(),
            Some((_, c)) => self.scale(ring, &ring.field().inv(c)),
        }
    }

    pub fn add(&self, ring: &PolyRing<F>, other: &Self) -> Self {
        Self { terms: merge(ring, &self.terms, other.terms.iter().cloned()) }
    }

    pub fn sub(&self, ring: &PolyRing<F>, other: &Self) -> Self {
        let k = ring.field();
        Self { terms: merge(ring, &self.terms, other.terms.iter().map(|(m, c)| (m.clone(), k.neg(c)))) }
    }

    /// `self - c * m * g`.
    pub fn sub_mul_term(&self, ring: &PolyRing<F>, c: &F::Elem, m: &Monomial, g: &Self) -> Self {
        let k = ring.field();
        let nc = k.neg(c);
        Self { terms: merge(ring, &self.terms, g.terms.iter().map(|(n, a)| (n.mul(m), k.mul(a, &nc)))) }
    }

    pub fn mul(&self, ring: &PolyRing<F>, other: &Self) -> Self {
        let k = ring.field();
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                terms.push((m.mul(n), k.mul(a, b)));
            }
        }
        Self::from_terms(ring, terms)
    }

    pub fn pow(&self, ring: &PolyRing<F>, e: u32) -> Self {
        let mut r = Self::constant(ring, ring.field().one());
        for _ in 0..e {
            r = r.mul(ring, self);
        }
        r
    }

    /// `self / f` when `f` divides `self` exactly.
    pub fn div_exact(&self, ring: &PolyRing<F>, f: &Self) -> Option<Self> {
        let k = ring.field();
        let (fm, fc) = f.lead()?;
        let finv = k.inv(fc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.lead() {
            if !fm.divides(rm) {
                return None;
            }
            let q = fm.quotient_of(rm);
            let c = k.mul(rc, &finv);
            rem = rem.sub_mul_term(ring, &c, &q, f);
            quot.push((q, c));
        }
        Some(Self { terms: quot })
    }

    /// Moves the polynomial into `target`, whose variables are this ring's
    /// with `k` auxiliary variables prepended.
    pub fn pad_into(&self, target: &PolyRing<F>, k: usize) -> Self {
        Self::from_terms(target, self.terms.iter().map(|(m, c)| (m.pad_leading(k), c.clone())).collect())
    }

    /// Inverse of [`Polynomial::pad_into`]; `None` if an auxiliary variable
    /// occurs.
    pub fn strip_into(&self, target: &PolyRing<F>, k: usize) -> Option<Self> {
        if self.terms.iter().any(|(m, _)| m.exponents()[..k].iter().any(|&e| e > 0)) {
            return None;
        }
        Some(Self::from_terms(target, self.terms.iter().map(|(m, c)| (m.drop_leading(k), c.clone())).collect()))
    }

    /// Re-sorts the terms for a ring with the same variables but another
    /// order.
    pub fn reorder(&self, target: &PolyRing<F>) -> Self {
        Self::from_terms(target, self.terms.clone())
    }

    /// Text form that [`crate::poly::parse_poly`] reads back.
    pub fn to_text(&self, ring: &PolyRing<F>) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let k = ring.field();
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = k.is_negative(c);
            let abs = if neg { k.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_text(ring, m);
            if mono.is_empty() {
                s.push_str(&k.format(&abs));
            } else if k.is_one(&abs) {
                s.push_str(&mono);
            } else {
                s.push_str(&k.format(&abs));
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

fn monomial_text<F: Field>(ring: &PolyRing<F>, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in ring.vars().iter().zip(m.exponents()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

/// Merges a sorted term list with a sorted term stream, adding
/// coefficients.
pub(crate) fn merge<F: Field>(ring: &PolyRing<F>, a: &[Term<F>], b: impl Iterator<Item = Term<F>>) -> Vec<Term<F>> {
    let k = ring.field();
    let mut out = Vec::with_capacity(a.len() + 8);
    let mut a = a.iter().peekable();
    let mut b = b.peekable();
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(a.next().unwrap().clone()),
            (None, Some(_)) => out.push(b.next().unwrap()),
            (Some((am, _)), Some((bm, _))) => match ring.cmp(am, bm) {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = k.add(x, &y);
                    if !k.is_zero(&s) {
                        out.push((m.clone(), s));
                    }
                }
            },
        }
    }
    out
}
