//! Closed-form multiplicities and the multiplicity bound checks.
//!
//! All comparisons are done on `h! * e` against products of shifts, so no
//! division ever happens outside the asserted-exact Gorenstein formula.

use serde::Serialize;
use thiserror::Error;

use crate::degrees::{pfaffian_to_aci, AciDegreeData, Degree, DegreeError, GorensteinDegrees, LinkedCiDegreeData, PfaffianDegreeData};
use crate::resolution::ShiftVectors;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("sum d_i (c - d_i)(c - 2 d_i) = {value} is not divisible by 6")]
    InexactDivision { value: i128 },
    #[error("closed-form multiplicity {value} is not positive")]
    NonPositiveMultiplicity { value: i128 },
    #[error("closed forms disagree: {what}: {left} vs {right}")]
    ClosedFormMismatch { what: &'static str, left: i128, right: i128 },
    #[error(transparent)]
    Degree(#[from] DegreeError),
}

fn factorial(h: usize) -> i128 {
    (1..=h as i128).product()
}

/// `e(R/K) = prod e_i` for a complete intersection.
pub fn mult_ci(e: &[Degree]) -> i128 {
    e.iter().map(|&x| x as i128).product()
}

/// `6 e(R/J) = sum d_i (c - d_i)(c - 2 d_i)`.
pub fn six_mult_gorenstein(g: &GorensteinDegrees) -> i128 {
    let c = g.c() as i128;
    g.d().iter().map(|&d| {
        let d = d as i128;
        d * (c - d) * (c - 2 * d)
    }).sum()
}

pub fn mult_gorenstein(g: &GorensteinDegrees) -> Result<i128, BoundsError> {
    let six = six_mult_gorenstein(g);
    if six % 6 != 0 {
        return Err(BoundsError::InexactDivision { value: six });
    }
    Ok(six / 6)
}

/// `6 e(R/I) = 6 e(R/K) - 6 e(R/J)`, without the positivity check.
pub fn six_mult_aci(a: &AciDegreeData) -> i128 {
    6 * mult_ci(a.e()) - six_mult_gorenstein(a.gorenstein())
}

/// `e(R/I) = e(R/K) - e(R/J)`; a non-positive value flags degree data
/// that no ideal can realize.
pub fn mult_aci(a: &AciDegreeData) -> Result<i128, BoundsError> {
    let value = mult_ci(a.e()) - mult_gorenstein(a.gorenstein())?;
    if value <= 0 {
        return Err(BoundsError::NonPositiveMultiplicity { value });
    }
    Ok(value)
}

/// `prod e - prod d`; zero for the degenerate link.
pub fn mult_linked_ci(l: &LinkedCiDegreeData) -> i128 {
    mult_ci(l.e()) - mult_ci(l.d())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub h: usize,
    /// `h! * e`.
    pub scaled_e: i128,
    pub lower_prod: i128,
    pub upper_prod: i128,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

/// Compares `h! * e` against the first `h` minimal and maximal shifts.
pub fn check_bounds(e: i128, s: &ShiftVectors, h: usize) -> BoundCheck {
    assert!(s.len() >= h, "need {h} shifts, have {}", s.len());
    let scaled_e = factorial(h) * e;
    let lower_prod: i128 = s.min[..h].iter().map(|&x| x as i128).product();
    let upper_prod: i128 = s.max[..h].iter().map(|&x| x as i128).product();
    BoundCheck {
        h,
        scaled_e,
        lower_prod,
        upper_prod,
        lower_ok: lower_prod <= scaled_e,
        upper_ok: scaled_e <= upper_prod,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseIvDelta {
    pub six_e: i128,
    pub upper_prod: i128,
    /// `6 e(R/I) - M1 M2 M3`; the upper bound holds iff this is `<= 0`.
    pub delta: i128,
}

/// `6 e(R/I)` in the skew-matrix weights:
/// `(T - r)(3 r^2 - 3 sum_{i<=3} r_i^2) + 2 sum_{i>=4} r_i^3 + (T - r)^3`.
pub fn case_iv_six_mult(p: &PfaffianDegreeData) -> i128 {
    let r: Vec<i128> = p.r().iter().map(|&x| x as i128).collect();
    let rsum = p.rsum() as i128;
    let tail = p.t() as i128 - rsum;
    let head_sq: i128 = r[..3].iter().map(|x| x * x).sum();
    let tail_cubes: i128 = r[3..].iter().map(|x| x * x * x).sum();
    tail * (3 * rsum * rsum - 3 * head_sq) + 2 * tail_cubes + tail * tail * tail
}

/// `Delta = 6 e(R/I) - M1 M2 M3` with `M1 = r - r3`, `M2 = T - r_n`,
/// `M3 = T + r4`. Cross-checks the weight formula against
/// `6 e(R/K) - 6 e(R/J)`.
pub fn case_iv_delta(p: &PfaffianDegreeData) -> Result<CaseIvDelta, BoundsError> {
    let six_e = case_iv_six_mult(p);
    let via_link = six_mult_aci(&pfaffian_to_aci(p)?);
    if six_e != via_link {
        return Err(BoundsError::ClosedFormMismatch { what: "6e(R/I) weights vs linkage", left: six_e, right: via_link });
    }
    let upper_prod = case_iv_upper_shifts(p).iter().map(|&x| x as i128).product::<i128>();
    Ok(CaseIvDelta { six_e, upper_prod, delta: six_e - upper_prod })
}

/// `[r - r3, T - r_n, T + r4]`.
pub fn case_iv_upper_shifts(p: &PfaffianDegreeData) -> [Degree; 3] {
    let r = p.r();
    [p.rsum() - r[2], p.t() - r[r.len() - 1], p.t() + r[3]]
}

/// `[T - r, T - r1, T + r_n]`.
pub fn case_iv_lower_shifts(p: &PfaffianDegreeData) -> [Degree; 3] {
    let r = p.r();
    [p.t() - p.rsum(), p.t() - r[0], p.t() + r[r.len() - 1]]
}

/// Lower bound on a codimension-three Gorenstein multiplicity:
/// `6 e(R/J) >= d1 c (c - d_n) + 2 d1^2 (d_n - d1)`.
pub fn mnr_bound_holds(g: &GorensteinDegrees) -> bool {
    let (d1, dn, c) = (g.d_min() as i128, g.d_max() as i128, g.c() as i128);
    six_mult_gorenstein(g) >= d1 * c * (c - dn) + 2 * d1 * d1 * (dn - d1)
}

/// A hypothesis and whether its promised conclusion held.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Implication {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Implication {
    pub fn holds(self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

/// Hypotheses of the conditional bound theorems for almost complete
/// intersections, evaluated on one datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AciPredicates {
    /// `e(R/K) <= 3 e(R/J)` promises the upper bound.
    pub ci_at_most_triple_gorenstein: Implication,
    /// `e(R/K) >= 3 e(R/J)` and `e3 < d_n` promise the lower bound.
    pub ci_at_least_triple_gorenstein: Implication,
    pub mnr_bound: bool,
}

impl AciPredicates {
    pub fn named(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("ci_at_most_triple_gorenstein", self.ci_at_most_triple_gorenstein.hypothesis),
            ("ci_at_least_triple_gorenstein_and_e3_below_dn", self.ci_at_least_triple_gorenstein.hypothesis),
            ("mnr_bound", self.mnr_bound),
        ]
    }
}

pub fn aci_predicates(a: &AciDegreeData, check: &BoundCheck) -> AciPredicates {
    // compare 6 e(R/K) with 3 * 6 e(R/J) to stay in integers
    let six_k = 6 * mult_ci(a.e());
    let six_j = six_mult_gorenstein(a.gorenstein());
    let e3 = a.e()[2];
    AciPredicates {
        ci_at_most_triple_gorenstein: Implication { hypothesis: six_k <= 3 * six_j, conclusion: check.upper_ok },
        ci_at_least_triple_gorenstein: Implication {
            hypothesis: six_k >= 3 * six_j && e3 < a.gorenstein().d_max(),
            conclusion: check.lower_ok,
        },
        mnr_bound: mnr_bound_holds(a.gorenstein()),
    }
}

/// Hypotheses for ideals linked to a complete intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinkedCiPredicates {
    /// `sum_{i>=2} (e_i - e_1) >= d_1` promises the upper bound.
    pub spread_covers_d1: Implication,
    pub single_degree: bool,
    /// Single degree: `m_k = k e` for some `k` forces `m_i = i e` for `i <= k`.
    pub lower_ladder: Implication,
    /// Single degree: `m_{n-1} = (n-1) e` promises the lower bound.
    pub penultimate_lower_linear: Implication,
    /// Single degree: `M_1 = e` forces `M_i = i e` for `i < n` and
    /// `(k-1) e <= d_1 + ... + d_k` for `2 <= k <= n`.
    pub upper_ladder: Implication,
    /// Single degree: `M_1 = e` promises the upper bound.
    pub first_upper_linear: Implication,
}

impl LinkedCiPredicates {
    pub fn named(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("spread_covers_d1", self.spread_covers_d1.hypothesis),
            ("single_degree", self.single_degree),
            ("lower_ladder", self.lower_ladder.hypothesis),
            ("penultimate_lower_linear", self.penultimate_lower_linear.hypothesis),
            ("upper_ladder", self.upper_ladder.hypothesis),
            ("first_upper_linear", self.first_upper_linear.hypothesis),
        ]
    }
}

pub fn linked_ci_predicates(l: &LinkedCiDegreeData, s: &ShiftVectors, check: &BoundCheck) -> LinkedCiPredicates {
    let (d, e, n) = (l.d(), l.e(), l.n());
    let spread: Degree = e[1..].iter().map(|&x| x - e[0]).sum();
    let spread_covers_d1 = Implication { hypothesis: spread >= d[0], conclusion: check.upper_ok };

    let single = l.is_single_degree();
    let off = Implication { hypothesis: false, conclusion: true };
    let (mut lower_ladder, mut penultimate, mut upper_ladder, mut first_upper) = (off, off, off, off);
    if single {
        let ed = e[0];
        let linear = |k: usize| k as Degree * ed;
        // largest k < n with m_k = k e
        if let Some(k) = (1..n).rev().find(|&k| s.min[k - 1] == linear(k)) {
            lower_ladder = Implication { hypothesis: true, conclusion: (1..=k).all(|i| s.min[i - 1] == linear(i)) };
        }
        if n >= 2 {
            penultimate = Implication { hypothesis: s.min[n - 2] == linear(n - 1), conclusion: check.lower_ok };
        }
        if n >= 2 && s.max[0] == ed {
            let ladder = (1..n).all(|i| s.max[i - 1] == linear(i));
            let partial_sums = (2..=n).all(|k| linear(k - 1) <= d[..k].iter().sum::<Degree>());
            upper_ladder = Implication { hypothesis: true, conclusion: ladder && partial_sums };
            first_upper = Implication { hypothesis: true, conclusion: check.upper_ok };
        }
    }
    LinkedCiPredicates {
        spread_covers_d1,
        single_degree: single,
        lower_ladder,
        penultimate_lower_linear: penultimate,
        upper_ladder,
        first_upper_linear: first_upper,
    }
}

/// Both sides of the scalar cubic inequality used in the generic case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CubicCheck {
    /// `6 e1 e2 e3`.
    pub lhs: i128,
    /// `e1^3 + e1^2 e3 + e2^2 e3 + 2 e2 e3^2 + e3^3`.
    pub stated_rhs: i128,
    /// The same with `e1^2 e2` in place of `e1^2 e3`.
    pub proof_rhs: i128,
    pub stated_holds: bool,
    pub proof_holds: bool,
}

pub fn cubic_inequality_check(e1: Degree, e2: Degree, e3: Degree) -> CubicCheck {
    let (a, b, c) = (e1 as i128, e2 as i128, e3 as i128);
    let lhs = 6 * a * b * c;
    let common = a * a * a + b * b * c + 2 * b * c * c + c * c * c;
    let stated_rhs = common + a * a * c;
    let proof_rhs = common + a * a * b;
    CubicCheck { lhs, stated_rhs, proof_rhs, stated_holds: lhs <= stated_rhs, proof_holds: lhs <= proof_rhs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degrees::{validate_aci, validate_gorenstein, validate_linked_ci};
    use crate::resolution::{linked_ci_betti, minimalize_aci_betti};

    fn golden_data() -> AciDegreeData {
        let g = validate_gorenstein(&[7, 7, 7, 8, 8, 8, 9]).unwrap();
        validate_aci(&[7, 8, 9], &g).unwrap()
    }

    fn case1() -> AciDegreeData {
        let g = validate_gorenstein(&[2, 2, 2, 2, 2]).unwrap();
        validate_aci(&[3, 3, 3], &g).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(mult_ci(&[7, 8, 9]), 504);
        assert_eq!(mult_ci(&[1, 1, 1]), 1);
        assert_eq!(mult_ci(&[3, 3, 3]), 27);

        let a = golden_data();
        assert_eq!(mult_gorenstein(a.gorenstein()), Ok(234));
        assert_eq!(mult_aci(&a), Ok(270));
        assert_eq!(mult_gorenstein(&validate_gorenstein(&[1, 1, 1]).unwrap()), Ok(1));
        assert_eq!(mult_gorenstein(&validate_gorenstein(&[2, 2, 2, 2, 2]).unwrap()), Ok(5));
        assert_eq!(mult_aci(&case1()), Ok(22));

        let p = PfaffianDegreeData::new(&[2, 2, 2, 2, 2]).unwrap();
        assert_eq!(mult_aci(&pfaffian_to_aci(&p).unwrap()), Ok(192));
    }

    #[test]
    fn linked_closed_forms() {
        assert_eq!(mult_linked_ci(&validate_linked_ci(&[1, 1, 1], &[2, 2, 2]).unwrap()), 7);
        assert_eq!(mult_linked_ci(&validate_linked_ci(&[2], &[2]).unwrap()), 0);
        assert_eq!(mult_linked_ci(&validate_linked_ci(&[1, 2], &[2, 2]).unwrap()), 2);
    }

    #[test]
    fn bound_checks() {
        let a = golden_data();
        let s = minimalize_aci_betti(&a).shift_vectors().unwrap();
        let b = check_bounds(270, &s, 3);
        assert_eq!((b.lower_prod, b.scaled_e, b.upper_prod), (1170, 1620, 2448));
        assert!(b.lower_ok && b.upper_ok);

        let pure = ShiftVectors { min: vec![2, 4], max: vec![2, 4] };
        let b = check_bounds(4, &pure, 2);
        assert_eq!((b.lower_prod, b.scaled_e, b.upper_prod), (8, 8, 8));
        assert!(b.lower_ok && b.upper_ok);

        let a = case1();
        let s = minimalize_aci_betti(&a).shift_vectors().unwrap();
        let b = check_bounds(22, &s, 3);
        assert_eq!((b.lower_prod, b.scaled_e, b.upper_prod), (126, 132, 168));
    }

    #[test]
    fn delta_examples() {
        let p = PfaffianDegreeData::new(&[2, 2, 2, 2, 2]).unwrap();
        let d = case_iv_delta(&p).unwrap();
        assert_eq!((d.six_e, d.upper_prod, d.delta), (1152, 1536, -384));

        let p = PfaffianDegreeData::new(&[3, 2, 2, 2, 2, 2, 2]).unwrap();
        assert!(case_iv_delta(&p).unwrap().delta <= 0);
    }

    #[test]
    fn predicate_examples() {
        let a = golden_data();
        let s = minimalize_aci_betti(&a).shift_vectors().unwrap();
        let p = aci_predicates(&a, &check_bounds(270, &s, 3));
        // 504 <= 3 * 234
        assert!(p.ci_at_most_triple_gorenstein.hypothesis);
        assert!(p.ci_at_most_triple_gorenstein.holds());
        // 1404 >= 1134 + 196
        assert!(p.mnr_bound);

        let l = validate_linked_ci(&[1, 1, 1], &[2, 2, 2]).unwrap();
        let s = linked_ci_betti(&l).unwrap().shift_vectors().unwrap();
        let check = check_bounds(mult_linked_ci(&l), &s, 3);
        let p = linked_ci_predicates(&l, &s, &check);
        assert!(p.single_degree);
        assert!(!p.first_upper_linear.hypothesis);
        assert!(!p.spread_covers_d1.hypothesis);
    }

    #[test]
    fn cubic_examples() {
        let c = cubic_inequality_check(1, 1, 1);
        assert_eq!((c.lhs, c.stated_rhs, c.proof_rhs), (6, 6, 6));
        let c = cubic_inequality_check(1, 2, 3);
        assert_eq!((c.lhs, c.stated_rhs, c.proof_rhs), (36, 79, 78));
        for e3 in 1..=30 {
            for e2 in 1..=e3 {
                for e1 in 1..=e2 {
                    let c = cubic_inequality_check(e1, e2, e3);
                    assert!(c.stated_holds && c.proof_holds, "{e1} {e2} {e3}");
                }
            }
        }
    }
}
