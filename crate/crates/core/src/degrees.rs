//! Degree data for codimension-three almost complete intersections.
//!
//! Every construction downstream (Betti tables, closed-form multiplicities,
//! bound checks) is driven by a handful of integer sequences: the degrees
//! `e` of a regular sequence, the generator degrees `d` of the linked
//! Gorenstein ideal with socle shift `c`, the derived degree `e4` of the
//! fourth generator, and for the fully cancelled case the skew-matrix
//! weights `r`. This module validates and enumerates those sequences.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Internal degrees and weights are plain signed integers.
pub type Degree = i64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("degree list is empty")]
    Empty,
    #[error("degree at position {pos} is {value}, degrees must be positive")]
    NonPositiveDegree { pos: usize, value: Degree },
    #[error("a Gorenstein ideal of codimension three needs an odd number of generators, got {n}")]
    EvenLength { n: usize },
    #[error("a Gorenstein ideal of codimension three needs at least three generators, got {n}")]
    TooFewGenerators { n: usize },
    #[error("socle shift is not an integer: sum of degrees {sum} is not divisible by m = {m}")]
    NonIntegralC { sum: Degree, m: usize },
    #[error("Diesel condition fails at i = {i}: c = {c} is not greater than d_{i} + d_{j} = {sum}")]
    DieselViolation { i: usize, j: usize, sum: Degree, c: Degree },
    #[error("fourth generator degree e4 = {e4} must be positive")]
    NonPositiveE4 { e4: Degree },
    #[error("degree comparison fails at i = {i}: e_{i} = {e} < d_{i} = {d}")]
    DegreeComparisonViolation { i: usize, e: Degree, d: Degree },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

fn check_positive(values: &[Degree]) -> Result<(), DegreeError> {
    match values.iter().position(|&v| v < 1) {
        Some(pos) => Err(DegreeError::NonPositiveDegree { pos: pos + 1, value: values[pos] }),
        None => Ok(()),
    }
}

fn sorted(values: &[Degree]) -> Vec<Degree> {
    let mut v = values.to_vec();
    v.sort_unstable();
    v
}

/// Degrees `e1 <= ... <= en` of a homogeneous regular sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CompleteIntersectionDegrees(Vec<Degree>);

impl CompleteIntersectionDegrees {
    /// Sorts the input ascending and checks positivity.
    pub fn new(e: &[Degree]) -> Result<Self, DegreeError> {
        if e.is_empty() {
            return Err(DegreeError::Empty);
        }
        let e = sorted(e);
        check_positive(&e)?;
        Ok(Self(e))
    }

    pub fn as_slice(&self) -> &[Degree] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `alpha = e1 + ... + en`.
    pub fn sum(&self) -> Degree {
        self.0.iter().sum()
    }
}

/// Generator degrees of a codimension-three Gorenstein ideal together with
/// the socle shift `c`, where `m * c = sum(d)` and `n = 2m + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GorensteinDegrees {
    d: Vec<Degree>,
    c: Degree,
    m: usize,
}

impl GorensteinDegrees {
    pub fn d(&self) -> &[Degree] {
        &self.d
    }

    pub fn c(&self) -> Degree {
        self.c
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of minimal generators, `2m + 1`.
    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn d_min(&self) -> Degree {
        self.d[0]
    }

    pub fn d_max(&self) -> Degree {
        self.d[self.d.len() - 1]
    }
}

/// Validates a Gorenstein degree sequence. The input is sorted ascending first.
///
/// The Diesel inequality `c > d_i + d_{n-i+2}` is checked for `i = 2..=n`
/// (1-based), which pairs `(d_2, d_n)` through `(d_n, d_2)`.
pub fn validate_gorenstein(d: &[Degree]) -> Result<GorensteinDegrees, DegreeError> {
    if d.is_empty() {
        return Err(DegreeError::Empty);
    }
    let d = sorted(d);
    check_positive(&d)?;
    let n = d.len();
    if n.is_multiple_of(2) {
        return Err(DegreeError::EvenLength { n });
    }
    if n < 3 {
        return Err(DegreeError::TooFewGenerators { n });
    }
    let m = (n - 1) / 2;
    let sum: Degree = d.iter().sum();
    if sum % m as Degree != 0 {
        return Err(DegreeError::NonIntegralC { sum, m });
    }
    let c = sum / m as Degree;
    for i in 2..=n {
        let j = n - i + 2;
        let pair = d[i - 1] + d[j - 1];
        if c <= pair {
            return Err(DegreeError::DieselViolation { i, j, sum: pair, c });
        }
    }
    Ok(GorensteinDegrees { d, c, m })
}

/// Degree data `(e1, e2, e3; d; c; e4)` of a codimension-three almost
/// complete intersection `I = (f1, f2, f3, f4)` linked to a Gorenstein ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AciDegreeData {
    e: CompleteIntersectionDegrees,
    g: GorensteinDegrees,
    e4: Degree,
}

impl AciDegreeData {
    pub fn e(&self) -> &[Degree] {
        self.e.as_slice()
    }

    pub fn ci(&self) -> &CompleteIntersectionDegrees {
        &self.e
    }

    pub fn gorenstein(&self) -> &GorensteinDegrees {
        &self.g
    }

    pub fn d(&self) -> &[Degree] {
        self.g.d()
    }

    pub fn c(&self) -> Degree {
        self.g.c()
    }

    pub fn e4(&self) -> Degree {
        self.e4
    }

    /// `e1 + e2 + e3`.
    pub fn e_sum(&self) -> Degree {
        self.e.sum()
    }
}

impl fmt::Display for AciDegreeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e={} d={} c={} e4={}",
            join(self.e()),
            join(self.d()),
            self.c(),
            self.e4
        )
    }
}

pub(crate) fn join(values: &[Degree]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Validates `e` (sorted ascending, length 3) against a Gorenstein sequence.
pub fn validate_aci(e: &[Degree], g: &GorensteinDegrees) -> Result<AciDegreeData, DegreeError> {
    if e.len() != 3 {
        return Err(DegreeError::LengthMismatch { expected: 3, got: e.len() });
    }
    let e = CompleteIntersectionDegrees::new(e)?;
    let e4 = e.sum() - g.c();
    if e4 < 1 {
        return Err(DegreeError::NonPositiveE4 { e4 });
    }
    for (i, (&ei, &di)) in e.as_slice().iter().zip(g.d()).enumerate() {
        if ei < di {
            return Err(DegreeError::DegreeComparisonViolation { i: i + 1, e: ei, d: di });
        }
    }
    Ok(AciDegreeData { e, g: g.clone(), e4 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseVariant {
    I,
    II,
    III,
    IV,
    NonPrefix,
}

impl CaseVariant {
    pub const ALL: [CaseVariant; 5] = [
        CaseVariant::I,
        CaseVariant::II,
        CaseVariant::III,
        CaseVariant::IV,
        CaseVariant::NonPrefix,
    ];

    /// Prefix patterns are the ones with a worked-out minimal resolution.
    pub fn is_prefix(self) -> bool {
        self != CaseVariant::NonPrefix
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseVariant::I => "I",
            CaseVariant::II => "II",
            CaseVariant::III => "III",
            CaseVariant::IV => "IV",
            CaseVariant::NonPrefix => "NonPrefix",
        }
    }
}

impl fmt::Display for CaseVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which of `e_i = d_i` (i = 1, 2, 3) hold, and the resulting case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CancellationCase {
    pub variant: CaseVariant,
    /// 1-based indices `i` with `e_i = d_i`, ascending.
    pub matched: Vec<usize>,
}

pub fn classify_case(a: &AciDegreeData) -> CancellationCase {
    let matched: Vec<usize> = (0..3).filter(|&i| a.e()[i] == a.d()[i]).map(|i| i + 1).collect();
    let variant = match matched.as_slice() {
        [] => CaseVariant::I,
        [1] => CaseVariant::II,
        [1, 2] => CaseVariant::III,
        [1, 2, 3] => CaseVariant::IV,
        _ => CaseVariant::NonPrefix,
    };
    CancellationCase { variant, matched }
}

/// Weights `r1 >= r2 >= ... >= rn` of a homogeneous skew-symmetric matrix
/// whose `(i, j)` entry has degree `r_i + r_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PfaffianDegreeData {
    r: Vec<Degree>,
    rsum: Degree,
    t: Degree,
}

impl PfaffianDegreeData {
    /// Sorts `r` non-increasing and checks that the derived data is a valid
    /// almost complete intersection (positive `d_i`, Diesel, `e4 >= 1`).
    pub fn new(r: &[Degree]) -> Result<Self, DegreeError> {
        if r.is_empty() {
            return Err(DegreeError::Empty);
        }
        let mut r = r.to_vec();
        r.sort_unstable_by(|a, b| b.cmp(a));
        if r.len().is_multiple_of(2) {
            return Err(DegreeError::EvenLength { n: r.len() });
        }
        if r.len() < 3 {
            return Err(DegreeError::TooFewGenerators { n: r.len() });
        }
        let rsum: Degree = r.iter().sum();
        let t = 2 * rsum - r[0] - r[1] - r[2];
        let p = Self { r, rsum, t };
        // validation of d, c and e4 lives in one place
        p.derive_aci()?;
        Ok(p)
    }

    pub fn r(&self) -> &[Degree] {
        &self.r
    }

    pub fn rsum(&self) -> Degree {
        self.rsum
    }

    /// `T = 2 rsum - r1 - r2 - r3`.
    pub fn t(&self) -> Degree {
        self.t
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// Derived generator degrees `d_i = rsum - r_i` (non-decreasing).
    pub fn d(&self) -> Vec<Degree> {
        self.r.iter().map(|ri| self.rsum - ri).collect()
    }

    pub fn c(&self) -> Degree {
        2 * self.rsum
    }

    pub fn e4(&self) -> Degree {
        self.rsum - self.r[0] - self.r[1] - self.r[2]
    }

    fn derive_aci(&self) -> Result<AciDegreeData, DegreeError> {
        let d = self.d();
        check_positive(&d)?;
        let g = validate_gorenstein(&d)?;
        debug_assert_eq!(g.c(), self.c());
        validate_aci(&d[..3], &g)
    }
}

/// The almost complete intersection with `e_i = d_i` for `i = 1, 2, 3`.
pub fn pfaffian_to_aci(p: &PfaffianDegreeData) -> Result<AciDegreeData, DegreeError> {
    p.derive_aci()
}

/// A complete intersection with degrees `d` linked through a regular
/// sequence of degrees `e` (`e_i >= d_i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LinkedCiDegreeData {
    d: Vec<Degree>,
    e: Vec<Degree>,
    alpha: Degree,
    degenerate: bool,
}

impl LinkedCiDegreeData {
    pub fn d(&self) -> &[Degree] {
        &self.d
    }

    pub fn e(&self) -> &[Degree] {
        &self.e
    }

    pub fn alpha(&self) -> Degree {
        self.alpha
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    /// `prod(e) == prod(d)`, i.e. the linked ideal is the whole ring.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// All linking degrees equal.
    pub fn is_single_degree(&self) -> bool {
        self.e.iter().all(|&x| x == self.e[0])
    }
}

impl fmt::Display for LinkedCiDegreeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} e={}", join(&self.d), join(&self.e))
    }
}

pub fn validate_linked_ci(d: &[Degree], e: &[Degree]) -> Result<LinkedCiDegreeData, DegreeError> {
    if d.is_empty() {
        return Err(DegreeError::Empty);
    }
    if d.len() != e.len() {
        return Err(DegreeError::LengthMismatch { expected: d.len(), got: e.len() });
    }
    let d = sorted(d);
    let e = sorted(e);
    check_positive(&d)?;
    check_positive(&e)?;
    for (i, (&ei, &di)) in e.iter().zip(&d).enumerate() {
        if ei < di {
            return Err(DegreeError::DegreeComparisonViolation { i: i + 1, e: ei, d: di });
        }
    }
    // e_i >= d_i termwise, so the products agree only when the lists do
    let degenerate = e == d;
    let alpha = e.iter().sum();
    Ok(LinkedCiDegreeData { d, e, alpha, degenerate })
}

/// Calls `f` on every non-decreasing sequence of length `len` with entries
/// in `lo..=hi`, in lexicographic order.
pub(crate) fn for_each_nondecreasing(len: usize, lo: Degree, hi: Degree, f: &mut impl FnMut(&[Degree])) {
    fn rec(buf: &mut Vec<Degree>, len: usize, lo: Degree, hi: Degree, f: &mut impl FnMut(&[Degree])) {
        if buf.len() == len {
            f(buf);
            return;
        }
        for v in lo..=hi {
            buf.push(v);
            rec(buf, len, v, hi, f);
            buf.pop();
        }
    }
    if lo <= hi || len == 0 {
        rec(&mut Vec::with_capacity(len), len, lo, hi, f);
    }
}

/// All valid Gorenstein sequences with `n` entries and `d_n <= max_dn`,
/// lexicographically ordered.
pub fn gorenstein_sequences(n: usize, max_dn: Degree) -> Vec<GorensteinDegrees> {
    let mut out = Vec::new();
    if n < 3 || n.is_multiple_of(2) {
        return out;
    }
    for_each_nondecreasing(n, 1, max_dn, &mut |d| {
        if let Ok(g) = validate_gorenstein(d) {
            out.push(g);
        }
    });
    out
}

/// Deterministic enumeration of almost complete intersection degree data.
///
/// The order is lexicographic in `(n, e3, e2, e1, d)`. The region is split
/// into blocks keyed by `(n, e3, e2, e1)` so that workers can take disjoint
/// index ranges.
#[derive(Debug, Clone)]
pub struct AciEnumeration {
    blocks: Vec<AciBlock>,
    gorenstein: Vec<(usize, Vec<GorensteinDegrees>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AciBlock {
    pub n: usize,
    pub e: [Degree; 3],
}

impl AciEnumeration {
    pub fn new(max_e3: Degree, gen_counts: &[usize], max_dn: Degree) -> Self {
        let mut counts: Vec<usize> = gen_counts.to_vec();
        counts.sort_unstable();
        counts.dedup();
        let mut blocks = Vec::new();
        let mut gorenstein = Vec::new();
        for &n in &counts {
            let seqs = gorenstein_sequences(n, max_dn);
            if seqs.is_empty() {
                continue;
            }
            for e3 in 1..=max_e3 {
                for e2 in 1..=e3 {
                    for e1 in 1..=e2 {
                        blocks.push(AciBlock { n, e: [e1, e2, e3] });
                    }
                }
            }
            gorenstein.push((n, seqs));
        }
        Self { blocks, gorenstein }
    }

    pub fn blocks(&self) -> &[AciBlock] {
        &self.blocks
    }

    /// Valid data in one block, in `d`-lexicographic order.
    pub fn block_data(&self, block: &AciBlock) -> Vec<AciDegreeData> {
        let Some((_, seqs)) = self.gorenstein.iter().find(|(n, _)| *n == block.n) else {
            return Vec::new();
        };
        seqs.iter().filter_map(|g| validate_aci(&block.e, g).ok()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = AciDegreeData> + '_ {
        self.blocks.iter().flat_map(move |b| self.block_data(b))
    }
}

/// Stream of every valid [`AciDegreeData`] with `e3 <= max_e3`,
/// `n` in `gen_counts` and `d_n <= max_dn`, each exactly once.
pub fn enumerate_aci(max_e3: Degree, gen_counts: &[usize], max_dn: Degree) -> impl Iterator<Item = AciDegreeData> {
    let en = AciEnumeration::new(max_e3, gen_counts, max_dn);
    let blocks = en.blocks.clone();
    blocks.into_iter().flat_map(move |b| en.block_data(&b))
}

/// Every valid [`PfaffianDegreeData`] with `n` in `gen_counts` and
/// `1 <= rsum <= max_rsum`, ordered by `(n, rsum, r)` with `r` descending
/// lexicographically.
pub fn enumerate_pfaffian(max_rsum: Degree, gen_counts: &[usize]) -> Vec<PfaffianDegreeData> {
    let mut counts: Vec<usize> = gen_counts.to_vec();
    counts.sort_unstable();
    counts.dedup();
    let mut out = Vec::new();
    for &n in &counts {
        if n < 3 || n % 2 == 0 {
            continue;
        }
        for rsum in 1..=max_rsum {
            // d_1 = rsum - r_1 >= 1 bounds r_1; Diesel gives r_n > -r_2 >= -r_1.
            let hi = rsum - 1;
            let lo = -hi;
            let mut buf = Vec::with_capacity(n);
            pfaffian_rec(&mut buf, n, hi, lo, rsum, &mut out);
        }
    }
    out
}

fn pfaffian_rec(buf: &mut Vec<Degree>, n: usize, hi: Degree, lo: Degree, target: Degree, out: &mut Vec<PfaffianDegreeData>) {
    let filled = buf.len();
    let partial: Degree = buf.iter().sum();
    if filled == n {
        if partial == target {
            if let Ok(p) = PfaffianDegreeData::new(buf) {
                out.push(p);
            }
        }
        return;
    }
    let remaining = (n - filled) as Degree;
    // remaining entries lie in [lo, v] once v is chosen
    let mut v = hi;
    while v >= lo {
        let max_total = partial + v * remaining;
        let min_total = partial + v + lo * (remaining - 1);
        if max_total < target {
            break;
        }
        if min_total <= target {
            buf.push(v);
            pfaffian_rec(buf, n, v, lo, target, out);
            buf.pop();
        }
        v -= 1;
    }
}

/// Every valid non-degenerate-or-degenerate [`LinkedCiDegreeData`] with `n`
/// in `n_values` and all degrees in `1..=max_degree`, ordered by `(n, d, e)`.
pub fn enumerate_linked_ci(n_values: &[usize], max_degree: Degree) -> Vec<LinkedCiDegreeData> {
    let mut ns: Vec<usize> = n_values.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut out = Vec::new();
    for &n in &ns {
        if n == 0 {
            continue;
        }
        for_each_nondecreasing(n, 1, max_degree, &mut |d| {
            let d = d.to_vec();
            for_each_nondecreasing(n, 1, max_degree, &mut |e| {
                if let Ok(l) = validate_linked_ci(&d, e) {
                    out.push(l);
                }
            });
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn golden_gorenstein() {
        let g = validate_gorenstein(&[7, 7, 7, 8, 8, 8, 9]).unwrap();
        assert_eq!((g.c(), g.m()), (18, 3));
    }

    #[test]
    fn linear_complete_intersection_is_gorenstein() {
        let g = validate_gorenstein(&[1, 1, 1]).unwrap();
        assert_eq!((g.c(), g.m()), (3, 1));
    }

    #[test]
    fn diesel_violation_is_named() {
        assert_eq!(
            validate_gorenstein(&[1, 1, 1, 1, 2]),
            Err(DegreeError::DieselViolation { i: 2, j: 5, sum: 3, c: 3 })
        );
    }

    #[test]
    fn gorenstein_rejections() {
        assert_eq!(validate_gorenstein(&[]), Err(DegreeError::Empty));
        assert_eq!(validate_gorenstein(&[1, 2]), Err(DegreeError::EvenLength { n: 2 }));
        assert_eq!(validate_gorenstein(&[2]), Err(DegreeError::TooFewGenerators { n: 1 }));
        assert_eq!(
            validate_gorenstein(&[0, 1, 1]),
            Err(DegreeError::NonPositiveDegree { pos: 1, value: 0 })
        );
        // sum 11, m = 2
        assert_eq!(
            validate_gorenstein(&[2, 2, 2, 2, 3]),
            Err(DegreeError::NonIntegralC { sum: 11, m: 2 })
        );
    }

    #[test]
    fn aci_examples() {
        let g = validate_gorenstein(&[7, 7, 7, 8, 8, 8, 9]).unwrap();
        assert_eq!(validate_aci(&[7, 8, 9], &g).unwrap().e4(), 6);

        let g = validate_gorenstein(&[2, 2, 2, 2, 2]).unwrap();
        assert_eq!(g.c(), 5);
        assert_eq!(validate_aci(&[3, 3, 3], &g).unwrap().e4(), 4);

        let g = validate_gorenstein(&[2, 2, 2, 3, 3]).unwrap();
        assert_eq!(g.c(), 6);
        assert_eq!(validate_aci(&[2, 2, 2], &g), Err(DegreeError::NonPositiveE4 { e4: 0 }));
    }

    #[test]
    fn aci_degree_comparison() {
        let g = validate_gorenstein(&[2, 2, 2, 2, 2]).unwrap();
        assert_eq!(
            validate_aci(&[1, 4, 5], &g),
            Err(DegreeError::DegreeComparisonViolation { i: 1, e: 1, d: 2 })
        );
    }

    #[test]
    fn case_classification() {
        let g = validate_gorenstein(&[7, 7, 7, 8, 8, 8, 9]).unwrap();
        let a = validate_aci(&[7, 8, 9], &g).unwrap();
        assert_eq!(classify_case(&a), CancellationCase { variant: CaseVariant::II, matched: vec![1] });

        let g = validate_gorenstein(&[2, 2, 2, 2, 2]).unwrap();
        let a = validate_aci(&[3, 3, 3], &g).unwrap();
        assert_eq!(classify_case(&a).variant, CaseVariant::I);

        let p = PfaffianDegreeData::new(&[2, 2, 2, 2, 2]).unwrap();
        let a = pfaffian_to_aci(&p).unwrap();
        assert_eq!(classify_case(&a).variant, CaseVariant::IV);

        // e1 > d1 but e2 = d2
        let g = validate_gorenstein(&[2, 3, 3, 3, 3]).unwrap();
        assert_eq!(g.c(), 7);
        let a = validate_aci(&[3, 3, 4], &g).unwrap();
        assert_eq!(classify_case(&a), CancellationCase { variant: CaseVariant::NonPrefix, matched: vec![2] });
    }

    #[test]
    fn pfaffian_examples() {
        let p = PfaffianDegreeData::new(&[2, 2, 2, 2, 2]).unwrap();
        let a = pfaffian_to_aci(&p).unwrap();
        assert_eq!(a.d(), &[8, 8, 8, 8, 8]);
        assert_eq!(a.c(), 20);
        assert_eq!(a.e(), &[8, 8, 8]);
        assert_eq!(a.e4(), 4);
        assert_eq!(p.t(), 14);

        let p = PfaffianDegreeData::new(&[3, 2, 2, 2, 2, 2, 2]).unwrap();
        assert_eq!(p.rsum(), 15);
        let a = pfaffian_to_aci(&p).unwrap();
        assert_eq!(a.d(), &[12, 13, 13, 13, 13, 13, 13]);
        assert_eq!(a.c(), 30);
        assert_eq!(a.e4(), 8);

        assert_eq!(PfaffianDegreeData::new(&[1, 1, 1]), Err(DegreeError::NonPositiveE4 { e4: 0 }));
    }

    #[test]
    fn pfaffian_allows_nonpositive_tail() {
        let p = PfaffianDegreeData::new(&[3, 3, 3, 2, -1]).unwrap();
        assert_eq!(p.rsum(), 10);
        let a = pfaffian_to_aci(&p).unwrap();
        assert_eq!(a.d(), &[7, 7, 7, 8, 11]);
        assert_eq!(a.e4(), 1);
    }

    #[test]
    fn enumeration_examples() {
        let all: Vec<_> = enumerate_aci(2, &[3], 2).collect();
        assert!(all.iter().any(|a| a.e() == [1, 1, 2] && a.d() == [1, 1, 1] && a.c() == 3 && a.e4() == 1));
        assert_eq!(enumerate_aci(1, &[5], 1).count(), 0);
    }

    /// Brute force: every triple and every nondecreasing d, validated directly.
    fn brute_force_aci(max_e3: Degree, n: usize, max_dn: Degree) -> HashSet<(Vec<Degree>, Vec<Degree>)> {
        let mut out = HashSet::new();
        for_each_nondecreasing(3, 1, max_e3, &mut |e| {
            for_each_nondecreasing(n, 1, max_dn, &mut |d| {
                let sum: Degree = d.iter().sum();
                let m = ((n - 1) / 2) as Degree;
                if sum % m != 0 {
                    return;
                }
                let c = sum / m;
                let diesel = (2..=n).all(|i| c > d[i - 1] + d[n - i + 1]);
                let e4 = e.iter().sum::<Degree>() - c;
                let cmp = (0..3).all(|i| e[i] >= d[i]);
                if diesel && e4 >= 1 && cmp {
                    out.insert((e.to_vec(), d.to_vec()));
                }
            });
        });
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (max_e3, n, max_dn) in [(6, 3, 6), (7, 5, 6), (6, 7, 4)] {
            let got: Vec<_> = enumerate_aci(max_e3, &[n], max_dn).map(|a| (a.e().to_vec(), a.d().to_vec())).collect();
            let set: HashSet<_> = got.iter().cloned().collect();
            assert_eq!(set.len(), got.len(), "duplicates");
            assert_eq!(set, brute_force_aci(max_e3, n, max_dn));
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let keys: Vec<_> = enumerate_aci(6, &[3, 5], 6)
            .map(|a| (a.gorenstein().n(), a.e()[2], a.e()[1], a.e()[0], a.d().to_vec()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn linked_ci_examples() {
        let l = validate_linked_ci(&[1, 1, 1], &[2, 2, 2]).unwrap();
        assert_eq!(l.alpha(), 6);
        assert!(!l.is_degenerate());

        let l = validate_linked_ci(&[2], &[2]).unwrap();
        assert!(l.is_degenerate());

        assert_eq!(
            validate_linked_ci(&[3, 1], &[2, 2]),
            Err(DegreeError::DegreeComparisonViolation { i: 2, e: 2, d: 3 })
        );
        assert_eq!(
            validate_linked_ci(&[1, 1], &[2]),
            Err(DegreeError::LengthMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn pfaffian_enumeration_matches_filter() {
        // brute force over a box of weights
        let mut brute = HashSet::new();
        let n = 5;
        let max_rsum = 8;
        let mut buf = vec![0; n];
        fn rec(buf: &mut Vec<Degree>, k: usize, max_rsum: Degree, brute: &mut HashSet<Vec<Degree>>) {
            if k == buf.len() {
                let s: Degree = buf.iter().sum();
                if (1..=max_rsum).contains(&s) && buf.windows(2).all(|w| w[0] >= w[1])
                    && PfaffianDegreeData::new(buf).is_ok() {
                        brute.insert(buf.clone());
                    }
                return;
            }
            for v in -max_rsum..=max_rsum {
                buf[k] = v;
                rec(buf, k + 1, max_rsum, brute);
            }
        }
        rec(&mut buf, 0, max_rsum, &mut brute);
        let got: Vec<_> = enumerate_pfaffian(max_rsum, &[n]).into_iter().map(|p| p.r().to_vec()).collect();
        let set: HashSet<_> = got.iter().cloned().collect();
        assert_eq!(set.len(), got.len());
        assert_eq!(set, brute);
    }
}
