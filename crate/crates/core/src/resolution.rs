//! Graded Betti tables of the structured resolutions.
//!
//! A table only records multiplicities `beta_{i,j}`; an entry at `(i, j)`
//! stands for a free summand generated in internal degree `j` at
//! homological step `i`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::degrees::{
    classify_case, pfaffian_to_aci, AciDegreeData, CompleteIntersectionDegrees, Degree, DegreeError,
    GorensteinDegrees, LinkedCiDegreeData, PfaffianDegreeData,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("inconsistent table: moment of order {k} is {value}, expected 0")]
    NonVanishingMoment { k: usize, value: i128 },
    #[error("inconsistent table: alternating sum {value} is not divisible by {divisor}")]
    InexactDivision { value: i128, divisor: i128 },
    #[error("homological step {i} is empty")]
    EmptyStep { i: usize },
    #[error("linked ideal is the unit ideal (prod e = prod d)")]
    Degenerate,
    #[error(transparent)]
    Degree(#[from] DegreeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedBettiTable {
    entries: BTreeMap<(usize, Degree), u64>,
    codim: usize,
}

impl GradedBettiTable {
    /// A table holding only the `(0, 0)` entry.
    pub fn new(codim: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), 1);
        Self { entries, codim }
    }

    pub fn add(&mut self, i: usize, j: Degree, count: u64) {
        debug_assert!(i > 0 && j >= 0, "entry ({i}, {j}) out of range");
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    /// Removes one copy of degree `j` at step `i`. Returns `false` when
    /// there was nothing to remove.
    pub fn remove_one(&mut self, i: usize, j: Degree) -> bool {
        match self.entries.get_mut(&(i, j)) {
            Some(b) if *b > 1 => {
                *b -= 1;
                true
            }
            Some(_) => {
                self.entries.remove(&(i, j));
                true
            }
            None => false,
        }
    }

    pub fn get(&self, i: usize, j: Degree) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Largest homological index carrying an entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, Degree, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Total rank at step `i`.
    pub fn rank(&self, i: usize) -> u64 {
        self.entries.range((i, Degree::MIN)..=(i, Degree::MAX)).map(|(_, &b)| b).sum()
    }

    /// Degrees at step `i` with multiplicity, ascending.
    pub fn degrees_at(&self, i: usize) -> Vec<Degree> {
        self.entries
            .range((i, Degree::MIN)..=(i, Degree::MAX))
            .flat_map(|(&(_, j), &b)| std::iter::repeat_n(j, b as usize))
            .collect()
    }

    /// `sum_{i,j} (-1)^i beta_{i,j} j^k`, with `0^0 = 1`.
    pub fn moment(&self, k: usize) -> i128 {
        self.entries
            .iter()
            .map(|(&(i, j), &b)| {
                let term = b as i128 * (j as i128).pow(k as u32);
                if i % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    /// Checks that the moments of order `0..codim` vanish.
    pub fn check_consistency(&self) -> Result<(), ResolutionError> {
        for k in 0..self.codim {
            let value = self.moment(k);
            if value != 0 {
                return Err(ResolutionError::NonVanishingMoment { k, value });
            }
        }
        Ok(())
    }

    /// Minimal and maximal internal degree at every step `1..=pd`.
    pub fn shift_vectors(&self) -> Result<ShiftVectors, ResolutionError> {
        let pd = self.pd();
        let mut min = Vec::with_capacity(pd);
        let mut max = Vec::with_capacity(pd);
        for i in 1..=pd {
            let mut range = self.entries.range((i, Degree::MIN)..=(i, Degree::MAX));
            let lo = range.next().ok_or(ResolutionError::EmptyStep { i })?;
            let hi = range.next_back().unwrap_or(lo);
            min.push(lo.0 .1);
            max.push(hi.0 .1);
        }
        Ok(ShiftVectors { min, max })
    }

    /// Aligned diagram: columns are homological steps, rows are `j - i`.
    pub fn to_text(&self) -> String {
        let pd = self.pd();
        let offsets = self.entries.keys().map(|&(i, j)| j - i as Degree);
        let (lo, hi) = offsets.fold((Degree::MAX, Degree::MIN), |(lo, hi), o| (lo.min(o), hi.max(o)));
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=pd).map(|i| i.to_string()));
        cells.push(header);
        let mut totals = vec!["total:".to_string()];
        totals.extend((0..=pd).map(|i| self.rank(i).to_string()));
        cells.push(totals);
        for row in lo..=hi {
            let mut line = vec![format!("{row}:")];
            for i in 0..=pd {
                let b = self.get(i, row + i as Degree);
                line.push(if b == 0 { ".".to_string() } else { b.to_string() });
            }
            cells.push(line);
        }
        let ncols = pd + 2;
        let widths: Vec<usize> =
            (0..ncols).map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for line in &cells {
            let rendered: Vec<String> =
                line.iter().zip(&widths).map(|(cell, &w)| format!("{cell:>w$}")).collect();
            let _ = writeln!(out, "{}", rendered.join(" ").trim_end());
        }
        out
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            codim: self.codim,
            pd: self.pd(),
            entries: self.entries().map(|(i, j, b)| [i as i64, j, b as i64]).collect(),
        }
    }
}

/// JSON form `{codim, pd, entries: [[i, j, beta], ...]}`, entries sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiJson {
    pub codim: usize,
    pub pd: usize,
    pub entries: Vec<[i64; 3]>,
}

/// Minimal and maximal shifts at each step, indexed from step 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftVectors {
    pub min: Vec<Degree>,
    pub max: Vec<Degree>,
}

impl ShiftVectors {
    /// Both vectors strictly increasing; expected for minimal resolutions
    /// but reported rather than enforced.
    pub fn is_strictly_increasing(&self) -> bool {
        self.min.windows(2).all(|w| w[0] < w[1]) && self.max.windows(2).all(|w| w[0] < w[1])
    }

    pub fn len(&self) -> usize {
        self.min.len()
    }

    pub fn is_empty(&self) -> bool {
        self.min.is_empty()
    }
}

fn subset_sums(values: &[Degree], size: usize) -> Vec<Degree> {
    fn rec(values: &[Degree], start: usize, left: usize, acc: Degree, out: &mut Vec<Degree>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for k in start..=values.len() - left {
            rec(values, k + 1, left - 1, acc + values[k], out);
        }
    }
    let mut out = Vec::new();
    if size <= values.len() {
        rec(values, 0, size, 0, &mut out);
    }
    out
}

/// Koszul complex on a regular sequence of degrees `e`.
pub fn koszul_betti(e: &CompleteIntersectionDegrees) -> GradedBettiTable {
    let n = e.len();
    let mut t = GradedBettiTable::new(n);
    for i in 1..=n {
        for s in subset_sums(e.as_slice(), i) {
            t.add(i, s, 1);
        }
    }
    t
}

/// Self-dual resolution `R(-c) <- sum R(-(c - d_i)) <- sum R(-d_i) <- R`.
pub fn gorenstein_betti(g: &GorensteinDegrees) -> GradedBettiTable {
    let mut t = GradedBettiTable::new(3);
    for &d in g.d() {
        t.add(1, d, 1);
        t.add(2, g.c() - d, 1);
    }
    t.add(3, g.c(), 1);
    t
}

/// Dual mapping cone of the Koszul complex into the Gorenstein resolution,
/// before any cancellation.
pub fn aci_raw_betti(a: &AciDegreeData) -> GradedBettiTable {
    let e = a.e();
    let s = a.e_sum();
    let mut t = GradedBettiTable::new(3);
    for &ei in e {
        t.add(1, ei, 1);
    }
    t.add(1, a.e4(), 1);
    for &d in a.d() {
        t.add(2, a.e4() + d, 1);
        t.add(3, s - d, 1);
    }
    for (x, y) in [(0, 1), (0, 2), (1, 2)] {
        t.add(2, e[x] + e[y], 1);
    }
    t
}

/// Cancels one pair `(sum e - e_i at step 2, sum e - d_i at step 3)` for
/// every index with `e_i = d_i`.
pub fn minimalize_aci_betti(a: &AciDegreeData) -> GradedBettiTable {
    let mut t = aci_raw_betti(a);
    let s = a.e_sum();
    for i in classify_case(a).matched {
        let removed2 = t.remove_one(2, s - a.e()[i - 1]);
        let removed3 = t.remove_one(3, s - a.d()[i - 1]);
        debug_assert!(removed2 && removed3);
    }
    t
}

/// The fully cancelled table written directly in the skew-matrix weights.
pub fn case_iv_betti(p: &PfaffianDegreeData) -> GradedBettiTable {
    let r = p.r();
    let rsum = p.rsum();
    let t_shift = p.t();
    let mut t = GradedBettiTable::new(3);
    for &ri in &r[..3] {
        t.add(1, rsum - ri, 1);
    }
    t.add(1, r[3..].iter().sum(), 1);
    for &ri in r {
        t.add(2, t_shift - ri, 1);
    }
    for &ri in &r[3..] {
        t.add(3, t_shift + ri, 1);
    }
    t
}

/// Same as [`case_iv_betti`] but routed through the mapping cone.
pub fn case_iv_betti_via_cone(p: &PfaffianDegreeData) -> Result<GradedBettiTable, ResolutionError> {
    Ok(minimalize_aci_betti(&pfaffian_to_aci(p)?))
}

/// Dual mapping cone for an ideal linked to a complete intersection, with
/// no cancellation: step `i < n` carries the `i`-subset sums of `e` and
/// `alpha` minus the `(n - i + 1)`-subset sums of `d`; step `n` carries
/// `alpha - d_t`.
pub fn linked_ci_betti(l: &LinkedCiDegreeData) -> Result<GradedBettiTable, ResolutionError> {
    if l.is_degenerate() {
        return Err(ResolutionError::Degenerate);
    }
    let n = l.n();
    let alpha = l.alpha();
    let mut t = GradedBettiTable::new(n);
    for i in 1..n {
        for s in subset_sums(l.e(), i) {
            t.add(i, s, 1);
        }
        for s in subset_sums(l.d(), n - i + 1) {
            t.add(i, alpha - s, 1);
        }
    }
    for &d in l.d() {
        t.add(n, alpha - d, 1);
    }
    Ok(t)
}

/// Closed-form shifts of the linked table.
pub fn linked_ci_shift_formulas(l: &LinkedCiDegreeData) -> ShiftVectors {
    let (d, e, n, alpha) = (l.d(), l.e(), l.n(), l.alpha());
    let mut min = Vec::with_capacity(n);
    let mut max = Vec::with_capacity(n);
    for i in 1..n {
        let top_e: Degree = e[n - i..].iter().sum();
        let low_d: Degree = d[..n - i + 1].iter().sum();
        max.push(top_e.max(alpha - low_d));
        let low_e: Degree = e[..i].iter().sum();
        let top_d: Degree = d[i - 1..].iter().sum();
        min.push(low_e.min(alpha - top_d));
    }
    min.push(alpha - d[n - 1]);
    max.push(alpha - d[0]);
    ShiftVectors { min, max }
}

/// `h! * e` from the alternating sum, `(-1)^h sum (-1)^i beta_{i,j} j^h`,
/// after checking the lower moments vanish.
pub fn scaled_multiplicity(b: &GradedBettiTable) -> Result<i128, ResolutionError> {
    b.check_consistency()?;
    let h = b.codim();
    let m = b.moment(h);
    Ok(if h.is_multiple_of(2) { m } else { -m })
}

/// Multiplicity from the shifts of a graded resolution.
pub fn multiplicity_from_betti(b: &GradedBettiTable) -> Result<i128, ResolutionError> {
    let scaled = scaled_multiplicity(b)?;
    let divisor: i128 = (1..=b.codim() as i128).product();
    if scaled % divisor != 0 {
        return Err(ResolutionError::InexactDivision { value: scaled, divisor });
    }
    Ok(scaled / divisor)
}
