//! Skew-symmetric matrices and their pfaffians.

use rand::Rng;
use thiserror::Error;

use super::field::Field;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::PolyRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PfaffianError {
    #[error("maximal pfaffians need an odd-sized matrix, got {n}")]
    EvenDimension { n: usize },
    #[error("degree target has {got} weights for a {n}x{n} matrix")]
    TargetLength { n: usize, got: usize },
}

/// Square matrix with `A^T = -A` and zero diagonal, optionally with a
/// degree target: entry `(i, j)` homogeneous of degree `r_i + r_j`.
pub struct SkewMatrix<F: Field> {
    entries: Vec<Vec<Polynomial<F>>>,
    weights: Option<Vec<i64>>,
}

impl<F: Field> Clone for SkewMatrix<F> {
    fn clone(&self) -> Self {
        Self { entries: self.entries.clone(), weights: self.weights.clone() }
    }
}

impl<F: Field> std::fmt::Debug for SkewMatrix<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SkewMatrix").field("entries", &self.entries).field("weights", &self.weights).finish()
    }
}

impl<F: Field> SkewMatrix<F> {
    /// Builds the matrix from its strictly upper triangular entries,
    /// `upper(i, j)` for `i < j`.
    #[allow(clippy::needless_range_loop)]
    pub fn from_upper(ring: &PolyRing<F>, n: usize, mut upper: impl FnMut(usize, usize) -> Polynomial<F>) -> Self {
        let mut entries = vec![vec![Polynomial::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let a = upper(i, j);
                entries[j][i] = a.neg(ring);
                entries[i][j] = a;
            }
        }
        Self { entries, weights: None }
    }

    /// Random matrix with entry `(i, j)` a homogeneous form of degree
    /// `r_i + r_j` with coefficients drawn from `rng`; non-positive target
    /// degrees give zero entries.
    pub fn random_homogeneous<R: Rng + ?Sized>(ring: &PolyRing<F>, weights: &[i64], rng: &mut R) -> Self {
        let n = weights.len();
        let mut m = Self::from_upper(ring, n, |i, j| {
            let deg = weights[i] + weights[j];
            if deg <= 0 {
                return Polynomial::zero();
            }
            let terms = Monomial::all_of_degree(ring.nvars(), deg as u32)
                .into_iter()
                .map(|mono| (mono, ring.field().sample(rng)))
                .collect();
            Polynomial::from_terms(ring, terms)
        });
        m.weights = Some(weights.to_vec());
        m
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i][j]
    }

    pub fn weights(&self) -> Option<&[i64]> {
        self.weights.as_deref()
    }

    /// Whether every nonzero entry has its target degree.
    pub fn respects_degree_target(&self) -> bool {
        let Some(w) = &self.weights else { return true };
        (0..self.size()).all(|i| {
            (0..self.size()).all(|j| {
                let a = &self.entries[i][j];
                a.is_zero() || (a.is_homogeneous() && a.degree() == Some((w[i] + w[j]) as u32))
            })
        })
    }

    pub fn is_skew(&self, ring: &PolyRing<F>) -> bool {
        let n = self.size();
        (0..n).all(|i| self.entries[i][i].is_zero() && (0..n).all(|j| self.entries[i][j] == self.entries[j][i].neg(ring)))
    }

    pub fn to_text(&self, ring: &PolyRing<F>) -> String {
        self.entries
            .iter()
            .map(|row| row.iter().map(|a| a.to_text(ring)).collect::<Vec<_>>().join(" | ") + "\n")
            .collect()
    }
}

/// Pfaffian of the principal submatrix on `idx`, expanded along its first
/// row: `Pf = sum_k (-1)^(k+1) a_{0k} Pf(without 0, k)`.
fn pfaffian_on<F: Field>(ring: &PolyRing<F>, m: &SkewMatrix<F>, idx: &[usize]) -> Polynomial<F> {
    if idx.is_empty() {
        return Polynomial::constant(ring, ring.field().one());
    }
    if idx.len() % 2 == 1 {
        return Polynomial::zero();
    }
    let mut acc = Polynomial::zero();
    for k in 1..idx.len() {
        let a = m.get(idx[0], idx[k]);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
        let term = a.mul(ring, &pfaffian_on(ring, m, &rest));
        acc = if k % 2 == 1 { acc.add(ring, &term) } else { acc.sub(ring, &term) };
    }
    acc
}

pub fn pfaffian<F: Field>(ring: &PolyRing<F>, m: &SkewMatrix<F>) -> Polynomial<F> {
    let idx: Vec<usize> = (0..m.size()).collect();
    pfaffian_on(ring, m, &idx)
}

/// The `n` pfaffians of order `n - 1`; the `i`-th deletes row and column
/// `i` and carries the sign `(-1)^i`.
pub fn maximal_pfaffians<F: Field>(ring: &PolyRing<F>, m: &SkewMatrix<F>) -> Result<Vec<Polynomial<F>>, PfaffianError> {
    let n = m.size();
    if n.is_multiple_of(2) {
        return Err(PfaffianError::EvenDimension { n });
    }
    Ok((0..n)
        .map(|i| {
            let idx: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let p = pfaffian_on(ring, m, &idx);
            if i % 2 == 0 {
                p
            } else {
                p.neg(ring)
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::PrimeField;
    use crate::poly::monomial::MonomialOrder;
    use crate::poly::parse::parse_poly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Generic matrix over a ring with one variable per upper entry.
    fn generic(n: usize) -> (PolyRing<PrimeField>, SkewMatrix<PrimeField>) {
        let mut names = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                names.push(format!("a{}{}", i + 1, j + 1));
            }
        }
        let ring = PolyRing::new(PrimeField::default(), &names, MonomialOrder::Grevlex).unwrap();
        let mut k = 0;
        let m = SkewMatrix::from_upper(&ring, n, |_, _| {
            k += 1;
            Polynomial::var(&ring, k - 1)
        });
        (ring, m)
    }

    /// Determinant by cofactor expansion along the first row.
    fn det(ring: &PolyRing<PrimeField>, rows: &[Vec<Polynomial<PrimeField>>]) -> Polynomial<PrimeField> {
        let n = rows.len();
        if n == 0 {
            return Polynomial::constant(ring, 1);
        }
        let mut acc = Polynomial::zero();
        for c in 0..n {
            let minor: Vec<Vec<_>> =
                rows[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| v.clone()).collect()).collect();
            let t = rows[0][c].mul(ring, &det(ring, &minor));
            acc = if c % 2 == 0 { acc.add(ring, &t) } else { acc.sub(ring, &t) };
        }
        acc
    }

    #[test]
    fn three_by_three_signs() {
        let (ring, m) = generic(3);
        let p = maximal_pfaffians(&ring, &m).unwrap();
        let want: Vec<_> = ["a23", "-a13", "a12"].iter().map(|t| parse_poly(&ring, t).unwrap()).collect();
        assert_eq!(p, want);
    }

    #[test]
    fn five_by_five_expansion() {
        let (ring, m) = generic(5);
        let p = maximal_pfaffians(&ring, &m).unwrap();
        assert_eq!(p[4], parse_poly(&ring, "a12*a34 - a13*a24 + a14*a23").unwrap());
    }

    #[test]
    fn square_is_determinant() {
        for n in [2, 4] {
            let (ring, m) = generic(n);
            let pf = pfaffian(&ring, &m);
            let rows: Vec<Vec<_>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
            assert_eq!(pf.mul(&ring, &pf), det(&ring, &rows), "n = {n}");
        }
    }

    #[test]
    fn even_dimension_rejected() {
        let (ring, m) = generic(4);
        assert_eq!(maximal_pfaffians(&ring, &m).unwrap_err(), PfaffianError::EvenDimension { n: 4 });
    }

    #[test]
    fn random_matrix_degrees() {
        let ring = PolyRing::new(PrimeField::default(), &["x", "y", "z"], MonomialOrder::Grevlex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = SkewMatrix::random_homogeneous(&ring, &[2, 2, 2, 2, 2], &mut rng);
        assert!(m.is_skew(&ring));
        assert!(m.respects_degree_target());
        let p = maximal_pfaffians(&ring, &m).unwrap();
        assert_eq!(p.len(), 5);
        for f in &p {
            assert!(f.is_homogeneous());
            assert_eq!(f.degree(), Some(8));
        }
    }
}
