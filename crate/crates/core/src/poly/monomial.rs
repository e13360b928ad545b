//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

use smallvec::SmallVec;

pub type Exponent = u16;

/// An exponent vector with its cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 6]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: SmallVec::from_elem(0, nvars), deg: 0 }
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Self { exps: SmallVec::from_slice(exps), deg: exps.iter().map(|&e| e as u32).sum() }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Self { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Self {
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Self { exps, deg: other.deg - self.deg }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let exps: SmallVec<[Exponent; 6]> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Self { exps, deg }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drops the first `k` variables.
    pub fn drop_leading(&self, k: usize) -> Self {
        Self::from_exponents(&self.exps[k..])
    }

    /// Prepends `k` zero exponents.
    pub fn pad_leading(&self, k: usize) -> Self {
        let mut exps = SmallVec::from_elem(0, k);
        exps.extend_from_slice(&self.exps);
        Self { exps, deg: self.deg }
    }

    /// Monomials of total degree `deg` in `nvars` variables, in
    /// lexicographically decreasing exponent order.
    pub fn all_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        fn rec(i: usize, left: u32, cur: &mut Vec<Exponent>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left as Exponent;
                out.push(Monomial::from_exponents(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as Exponent;
                rec(i + 1, left - e, cur, out);
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if deg == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, deg, &mut vec![0; nvars], &mut out);
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    Grevlex,
    Lex,
    /// Grevlex on the first `split` variables, ties broken by grevlex on
    /// the rest. Eliminates the first block.
    Block { split: usize },
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::Block { .. } => "block",
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(&a.exps, &b.exps, a.deg, b.deg),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block { split } => {
                let (a1, a2) = a.exps.split_at(split);
                let (b1, b2) = b.exps.split_at(split);
                let da: u32 = a1.iter().map(|&e| e as u32).sum();
                let db: u32 = b1.iter().map(|&e| e as u32).sum();
                grevlex(a1, b1, da, db).then_with(|| grevlex(a2, b2, a.deg - da, b.deg - db))
            }
        }
    }
}

fn grevlex(a: &[Exponent], b: &[Exponent], da: u32, db: u32) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
