//! Exhaustive sweeps over enumerated degree data.
//!
//! Work is split into blocks in enumeration order. Each block produces a
//! partial [`SweepReport`]; partials are merged left to right, so the final
//! report does not depend on the worker count.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    aci_predicates, case_iv_delta, case_iv_lower_shifts, case_iv_upper_shifts, check_bounds, linked_ci_predicates,
    mnr_bound_holds, mult_linked_ci, six_mult_aci, BoundCheck, BoundsError, Implication,
};
use crate::degrees::{
    classify_case, enumerate_linked_ci, enumerate_pfaffian, join, pfaffian_to_aci, AciDegreeData, AciEnumeration,
    CaseVariant, Degree, LinkedCiDegreeData, PfaffianDegreeData,
};
use crate::resolution::{
    aci_raw_betti, case_iv_betti, linked_ci_betti, linked_ci_shift_formulas, minimalize_aci_betti,
    scaled_multiplicity, ResolutionError,
};

/// Lower-bound failures kept verbatim in the report; the rest are counted.
pub const LOWER_FAILURE_SAMPLES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SweepPlan {
    Aci { max_e3: Degree, gen_counts: Vec<usize>, max_dn: Degree },
    CaseIv { max_rsum: Degree, gen_counts: Vec<usize> },
    LinkedCi { n_values: Vec<usize>, max_degree: Degree },
}

impl SweepPlan {
    pub fn mode_name(&self) -> &'static str {
        match self {
            SweepPlan::Aci { .. } => "aci",
            SweepPlan::CaseIv { .. } => "case-iv",
            SweepPlan::LinkedCi { .. } => "linked-ci",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("oracle mismatch on {datum}: {detail}")]
    OracleMismatch { datum: String, detail: String },
    #[error("resolution error on {datum}: {source}")]
    Resolution { datum: String, source: ResolutionError },
    #[error("bounds error on {datum}: {source}")]
    Bounds { datum: String, source: BoundsError },
    #[error("worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BoundTally {
    pub checked: u64,
    pub ok: u64,
    pub failed: u64,
}

impl BoundTally {
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if ok {
            self.ok += 1;
        } else {
            self.failed += 1;
        }
    }

    fn merge(&mut self, other: &Self) {
        self.checked += other.checked;
        self.ok += other.ok;
        self.failed += other.failed;
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ImplicationTally {
    pub evaluated: u64,
    pub hypothesis_held: u64,
    pub conclusion_held: u64,
    pub failures: u64,
}

impl ImplicationTally {
    fn record(&mut self, imp: Implication) {
        self.evaluated += 1;
        if imp.hypothesis {
            self.hypothesis_held += 1;
            if imp.conclusion {
                self.conclusion_held += 1;
            } else {
                self.failures += 1;
            }
        }
    }

    fn merge(&mut self, other: &Self) {
        self.evaluated += other.evaluated;
        self.hypothesis_held += other.hypothesis_held;
        self.conclusion_held += other.conclusion_held;
        self.failures += other.failures;
    }
}

/// One datum whose bound check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationRecord {
    pub mode: String,
    pub case: String,
    pub e: Vec<Degree>,
    pub d: Vec<Degree>,
    pub c: Option<Degree>,
    /// `h! * e`.
    pub scaled_e: i128,
    pub lower_prod: i128,
    pub upper_prod: i128,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DeltaStats {
    pub evaluated: u64,
    pub nonpositive: u64,
    pub positive: u64,
    pub max_delta: Option<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub plan: SweepPlan,
    /// Data enumerated, including skipped ones.
    pub total: u64,
    pub case_counts: BTreeMap<String, u64>,
    /// Data whose closed-form multiplicity is not positive.
    pub skipped_nonpositive: u64,
    /// Linked data with `e = d`.
    pub skipped_degenerate: u64,
    /// Upper bound on data the proven theorem covers.
    pub upper_covered: BoundTally,
    /// Upper bound on data outside the proven statement (non-prefix
    /// cancellation patterns, linked data without a hypothesis).
    pub upper_uncovered: BoundTally,
    pub lower: BoundTally,
    pub nonstrict_shifts: u64,
    pub predicates: BTreeMap<String, ImplicationTally>,
    pub mnr: BoundTally,
    pub delta: Option<DeltaStats>,
    /// Upper-bound failures on covered data, in enumeration order.
    pub violations: Vec<ViolationRecord>,
    pub lower_failure_samples: Vec<ViolationRecord>,
}

impl SweepReport {
    pub fn empty(plan: SweepPlan) -> Self {
        let mut case_counts = BTreeMap::new();
        if matches!(plan, SweepPlan::Aci { .. } | SweepPlan::CaseIv { .. }) {
            for v in CaseVariant::ALL {
                case_counts.insert(v.name().to_string(), 0);
            }
        }
        let predicate_names: &[&str] = match plan {
            SweepPlan::Aci { .. } | SweepPlan::CaseIv { .. } => {
                &["ci_at_most_triple_gorenstein", "ci_at_least_triple_gorenstein_and_e3_below_dn"]
            }
            SweepPlan::LinkedCi { .. } => &[
                "spread_covers_d1",
                "lower_ladder",
                "penultimate_lower_linear",
                "upper_ladder",
                "first_upper_linear",
            ],
        };
        let predicates = predicate_names.iter().map(|n| (n.to_string(), ImplicationTally::default())).collect();
        let delta = matches!(plan, SweepPlan::CaseIv { .. }).then(DeltaStats::default);
        Self {
            plan,
            total: 0,
            case_counts,
            skipped_nonpositive: 0,
            skipped_degenerate: 0,
            upper_covered: BoundTally::default(),
            upper_uncovered: BoundTally::default(),
            lower: BoundTally::default(),
            nonstrict_shifts: 0,
            predicates,
            mnr: BoundTally::default(),
            delta,
            violations: Vec::new(),
            lower_failure_samples: Vec::new(),
        }
    }

    /// Appends `other`, which must come later in enumeration order.
    pub fn merge(&mut self, other: SweepReport) {
        self.total += other.total;
        for (k, v) in other.case_counts {
            *self.case_counts.entry(k).or_insert(0) += v;
        }
        self.skipped_nonpositive += other.skipped_nonpositive;
        self.skipped_degenerate += other.skipped_degenerate;
        self.upper_covered.merge(&other.upper_covered);
        self.upper_uncovered.merge(&other.upper_uncovered);
        self.lower.merge(&other.lower);
        self.nonstrict_shifts += other.nonstrict_shifts;
        for (k, v) in other.predicates {
            self.predicates.entry(k).or_default().merge(&v);
        }
        self.mnr.merge(&other.mnr);
        if let (Some(a), Some(b)) = (self.delta.as_mut(), other.delta) {
            a.evaluated += b.evaluated;
            a.nonpositive += b.nonpositive;
            a.positive += b.positive;
            a.max_delta = match (a.max_delta, b.max_delta) {
                (Some(x), Some(y)) => Some(x.max(y)),
                (x, y) => x.or(y),
            };
        }
        self.violations.extend(other.violations);
        let room = LOWER_FAILURE_SAMPLES.saturating_sub(self.lower_failure_samples.len());
        self.lower_failure_samples.extend(other.lower_failure_samples.into_iter().take(room));
    }

    /// Sum of all implication failures.
    pub fn implication_failures(&self) -> u64 {
        self.predicates.values().map(|t| t.failures).sum()
    }

    /// No upper-bound violation on covered data.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        let _ = writeln!(s, "mode: {}", self.plan.mode_name());
        let _ = writeln!(s, "data enumerated: {}", self.total);
        if !self.case_counts.is_empty() {
            let cases: Vec<String> = CaseVariant::ALL
                .iter()
                .map(|v| format!("{}={}", v.name(), self.case_counts.get(v.name()).copied().unwrap_or(0)))
                .collect();
            let _ = writeln!(s, "cases: {}", cases.join(" "));
        }
        if self.skipped_nonpositive > 0 {
            let _ = writeln!(s, "skipped (non-positive multiplicity): {}", self.skipped_nonpositive);
        }
        if self.skipped_degenerate > 0 {
            let _ = writeln!(s, "skipped (degenerate link): {}", self.skipped_degenerate);
        }
        let tally = |t: &BoundTally| format!("{} checked, {} ok, {} failed", t.checked, t.ok, t.failed);
        let _ = writeln!(s, "upper bound (covered): {}", tally(&self.upper_covered));
        let _ = writeln!(s, "upper bound (uncovered): {}", tally(&self.upper_uncovered));
        let _ = writeln!(s, "lower bound: {}", tally(&self.lower));
        let _ = writeln!(s, "non-strict shift vectors: {}", self.nonstrict_shifts);
        if self.mnr.checked > 0 {
            let _ = writeln!(s, "MNR Gorenstein bound: {}", tally(&self.mnr));
            if self.mnr.failed > 0 {
                let _ = writeln!(s, "WARNING: MNR Gorenstein bound failed on {} data", self.mnr.failed);
            }
        }
        if let Some(d) = &self.delta {
            let max = d.max_delta.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            let _ = writeln!(s, "delta: {} evaluated, {} <= 0, {} > 0, max {}", d.evaluated, d.nonpositive, d.positive, max);
        }
        for (name, t) in &self.predicates {
            let _ = writeln!(
                s,
                "{name}: hypothesis {} / {}, conclusion held {}, failures {}",
                t.hypothesis_held, t.evaluated, t.conclusion_held, t.failures
            );
        }
        let _ = writeln!(s, "violations: {}", self.violations.len());
        s
    }
}

fn record(mode: &str, case: &str, e: &[Degree], d: &[Degree], c: Option<Degree>, check: &BoundCheck) -> ViolationRecord {
    ViolationRecord {
        mode: mode.to_string(),
        case: case.to_string(),
        e: e.to_vec(),
        d: d.to_vec(),
        c,
        scaled_e: check.scaled_e,
        lower_prod: check.lower_prod,
        upper_prod: check.upper_prod,
    }
}

fn mismatch(datum: &impl ToString, detail: String) -> SweepError {
    SweepError::OracleMismatch { datum: datum.to_string(), detail }
}

fn res_err(datum: &impl ToString) -> impl FnOnce(ResolutionError) -> SweepError + '_ {
    move |source| SweepError::Resolution { datum: datum.to_string(), source }
}

fn bounds_err(datum: &impl ToString) -> impl FnOnce(BoundsError) -> SweepError + '_ {
    move |source| SweepError::Bounds { datum: datum.to_string(), source }
}

/// Bound and predicate bookkeeping shared by the ACI and Case IV modes.
/// Returns the bound check, or `None` when the datum was skipped.
fn evaluate_aci(report: &mut SweepReport, a: &AciDegreeData, mode: &str) -> Result<Option<BoundCheck>, SweepError> {
    let case = classify_case(a);
    *report.case_counts.entry(case.variant.name().to_string()).or_insert(0) += 1;

    let raw = aci_raw_betti(a);
    let min = minimalize_aci_betti(a);
    let six_raw = scaled_multiplicity(&raw).map_err(res_err(a))?;
    let six_min = scaled_multiplicity(&min).map_err(res_err(a))?;
    let six_closed = six_mult_aci(a);
    if six_raw != six_min || six_min != six_closed {
        return Err(mismatch(a, format!("6e raw {six_raw}, minimal {six_min}, closed form {six_closed}")));
    }
    report.mnr.record(mnr_bound_holds(a.gorenstein()));
    if six_closed <= 0 {
        report.skipped_nonpositive += 1;
        return Ok(None);
    }
    if six_closed % 6 != 0 {
        return Err(mismatch(a, format!("6e = {six_closed} not divisible by 6")));
    }
    let shifts = min.shift_vectors().map_err(res_err(a))?;
    if !shifts.is_strictly_increasing() {
        report.nonstrict_shifts += 1;
    }
    let check = check_bounds(six_closed / 6, &shifts, 3);
    let covered = case.variant.is_prefix();
    if covered {
        report.upper_covered.record(check.upper_ok);
        if !check.upper_ok {
            report.violations.push(record(mode, case.variant.name(), a.e(), a.d(), Some(a.c()), &check));
        }
    } else {
        report.upper_uncovered.record(check.upper_ok);
    }
    report.lower.record(check.lower_ok);
    if !check.lower_ok && report.lower_failure_samples.len() < LOWER_FAILURE_SAMPLES {
        report.lower_failure_samples.push(record(mode, case.variant.name(), a.e(), a.d(), Some(a.c()), &check));
    }
    let preds = aci_predicates(a, &check);
    report.predicates.entry("ci_at_most_triple_gorenstein".into()).or_default().record(preds.ci_at_most_triple_gorenstein);
    report
        .predicates
        .entry("ci_at_least_triple_gorenstein_and_e3_below_dn".into())
        .or_default()
        .record(preds.ci_at_least_triple_gorenstein);
    Ok(Some(check))
}

fn sweep_aci_block(plan: &SweepPlan, data: Vec<AciDegreeData>) -> Result<SweepReport, SweepError> {
    let mut report = SweepReport::empty(plan.clone());
    for a in &data {
        report.total += 1;
        evaluate_aci(&mut report, a, "aci")?;
    }
    Ok(report)
}

fn sweep_case_iv_block(plan: &SweepPlan, data: &[PfaffianDegreeData]) -> Result<SweepReport, SweepError> {
    let mut report = SweepReport::empty(plan.clone());
    for p in data {
        report.total += 1;
        let datum = format!("r={}", join(p.r()));
        let a = pfaffian_to_aci(p).map_err(|e| mismatch(&datum, e.to_string()))?;
        if classify_case(&a).variant != CaseVariant::IV {
            return Err(mismatch(&datum, "derived data is not fully cancelled".into()));
        }
        let direct = case_iv_betti(p);
        if direct != minimalize_aci_betti(&a) {
            return Err(mismatch(&datum, "weight table differs from the cancelled mapping cone".into()));
        }
        let delta = case_iv_delta(p).map_err(bounds_err(&datum))?;
        let Some(check) = evaluate_aci(&mut report, &a, "case-iv")? else {
            continue;
        };
        let shifts = direct.shift_vectors().map_err(res_err(&datum))?;
        if shifts.max != case_iv_upper_shifts(p) || shifts.min != case_iv_lower_shifts(p) {
            return Err(mismatch(&datum, format!("shift formulas disagree with the table: {shifts:?}")));
        }
        if check.upper_prod != delta.upper_prod || check.scaled_e != delta.six_e {
            return Err(mismatch(&datum, "delta inputs disagree with the bound check".into()));
        }
        let stats = report.delta.get_or_insert_with(DeltaStats::default);
        stats.evaluated += 1;
        if delta.delta <= 0 {
            stats.nonpositive += 1;
        } else {
            stats.positive += 1;
        }
        stats.max_delta = Some(stats.max_delta.map_or(delta.delta, |m| m.max(delta.delta)));
    }
    Ok(report)
}

fn sweep_linked_block(plan: &SweepPlan, data: &[LinkedCiDegreeData]) -> Result<SweepReport, SweepError> {
    let mut report = SweepReport::empty(plan.clone());
    for l in data {
        report.total += 1;
        if l.is_degenerate() {
            report.skipped_degenerate += 1;
            continue;
        }
        let table = linked_ci_betti(l).map_err(res_err(l))?;
        let n = l.n();
        let scaled = scaled_multiplicity(&table).map_err(res_err(l))?;
        let e = mult_linked_ci(l);
        let nfact: i128 = (1..=n as i128).product();
        if scaled != nfact * e {
            return Err(mismatch(l, format!("n! e alternating sum {scaled} vs closed form {}", nfact * e)));
        }
        let shifts = table.shift_vectors().map_err(res_err(l))?;
        if shifts != linked_ci_shift_formulas(l) {
            return Err(mismatch(l, format!("shift formulas disagree with the table: {shifts:?}")));
        }
        if !shifts.is_strictly_increasing() {
            report.nonstrict_shifts += 1;
        }
        let check = check_bounds(e, &shifts, n);
        let preds = linked_ci_predicates(l, &shifts, &check);
        let covered = preds.spread_covers_d1.hypothesis || preds.first_upper_linear.hypothesis;
        if covered {
            report.upper_covered.record(check.upper_ok);
            if !check.upper_ok {
                report.violations.push(record("linked-ci", "-", l.e(), l.d(), None, &check));
            }
        } else {
            report.upper_uncovered.record(check.upper_ok);
        }
        report.lower.record(check.lower_ok);
        if !check.lower_ok && report.lower_failure_samples.len() < LOWER_FAILURE_SAMPLES {
            report.lower_failure_samples.push(record("linked-ci", "-", l.e(), l.d(), None, &check));
        }
        for (name, imp) in [
            ("spread_covers_d1", preds.spread_covers_d1),
            ("lower_ladder", preds.lower_ladder),
            ("penultimate_lower_linear", preds.penultimate_lower_linear),
            ("upper_ladder", preds.upper_ladder),
            ("first_upper_linear", preds.first_upper_linear),
        ] {
            // single-degree predicates are only tallied on single-degree data
            if name == "spread_covers_d1" || preds.single_degree {
                report.predicates.entry(name.to_string()).or_default().record(imp);
            }
        }
    }
    Ok(report)
}

/// Runs `f` over `blocks`, in parallel when `jobs > 1` and the `parallel`
/// feature is enabled, and merges the partial reports in block order.
fn run_blocks<B, F>(plan: &SweepPlan, blocks: &[B], jobs: usize, f: F) -> Result<SweepReport, SweepError>
where
    B: Sync,
    F: Fn(&B) -> Result<SweepReport, SweepError> + Sync + Send,
{
    let partials: Vec<Result<SweepReport, SweepError>> = map_blocks(blocks, jobs, &f)?;
    let mut report = SweepReport::empty(plan.clone());
    for p in partials {
        report.merge(p?);
    }
    Ok(report)
}

#[cfg(feature = "parallel")]
fn map_blocks<B, F>(blocks: &[B], jobs: usize, f: &F) -> Result<Vec<Result<SweepReport, SweepError>>, SweepError>
where
    B: Sync,
    F: Fn(&B) -> Result<SweepReport, SweepError> + Sync + Send,
{
    use rayon::prelude::*;
    if jobs <= 1 {
        return Ok(blocks.iter().map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    Ok(pool.install(|| blocks.par_iter().map(f).collect()))
}

#[cfg(not(feature = "parallel"))]
fn map_blocks<B, F>(blocks: &[B], _jobs: usize, f: &F) -> Result<Vec<Result<SweepReport, SweepError>>, SweepError>
where
    F: Fn(&B) -> Result<SweepReport, SweepError>,
{
    Ok(blocks.iter().map(f).collect())
}

const CHUNK: usize = 64;

/// Runs a sweep with `jobs` workers (`1` forces the sequential path).
pub fn sweep(plan: &SweepPlan, jobs: usize) -> Result<SweepReport, SweepError> {
    match plan {
        SweepPlan::Aci { max_e3, gen_counts, max_dn } => {
            let en = AciEnumeration::new(*max_e3, gen_counts, *max_dn);
            run_blocks(plan, en.blocks(), jobs, |b| sweep_aci_block(plan, en.block_data(b)))
        }
        SweepPlan::CaseIv { max_rsum, gen_counts } => {
            let data = enumerate_pfaffian(*max_rsum, gen_counts);
            let chunks: Vec<&[PfaffianDegreeData]> = data.chunks(CHUNK).collect();
            run_blocks(plan, &chunks, jobs, |c| sweep_case_iv_block(plan, c))
        }
        SweepPlan::LinkedCi { n_values, max_degree } => {
            let data = enumerate_linked_ci(n_values, *max_degree);
            let chunks: Vec<&[LinkedCiDegreeData]> = data.chunks(CHUNK).collect();
            run_blocks(plan, &chunks, jobs, |c| sweep_linked_block(plan, c))
        }
    }
}

/// CSV header for violation records.
pub const VIOLATION_CSV_HEADER: [&str; 8] = ["mode", "case", "e", "d", "c", "e_scaled", "lower_prod", "upper_prod"];

impl ViolationRecord {
    /// Row matching [`VIOLATION_CSV_HEADER`]; vectors are space separated.
    pub fn csv_row(&self) -> [String; 8] {
        let vec = |v: &[Degree]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        [
            self.mode.clone(),
            self.case.clone(),
            vec(&self.e),
            vec(&self.d),
            self.c.map(|c| c.to_string()).unwrap_or_default(),
            self.scaled_e.to_string(),
            self.lower_prod.to_string(),
            self.upper_prod.to_string(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_aci_sweep_is_clean_and_worker_independent() {
        let plan = SweepPlan::Aci { max_e3: 6, gen_counts: vec![3, 5], max_dn: 6 };
        let seq = sweep(&plan, 1).unwrap();
        let par = sweep(&plan, 3).unwrap();
        assert_eq!(seq, par);
        assert!(seq.total > 0);
        assert!(seq.is_clean());
        let cases: u64 = seq.case_counts.values().sum();
        assert_eq!(cases, seq.total);
        assert_eq!(seq.upper_covered.checked + seq.upper_uncovered.checked + seq.skipped_nonpositive, seq.total);
    }

    #[test]
    fn case_iv_sweep_small() {
        let plan = SweepPlan::CaseIv { max_rsum: 8, gen_counts: vec![5] };
        let r = sweep(&plan, 2).unwrap();
        let d = r.delta.unwrap();
        assert!(d.evaluated > 0);
        assert_eq!(d.positive, 0);
        assert_eq!(r.case_counts["IV"], r.total);
    }

    #[test]
    fn linked_sweep_small() {
        let plan = SweepPlan::LinkedCi { n_values: vec![1, 2, 3], max_degree: 4 };
        let r = sweep(&plan, 2).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.implication_failures(), 0);
        assert_eq!(r, sweep(&plan, 1).unwrap());
    }

    #[test]
    fn merge_keeps_sample_cap() {
        let plan = SweepPlan::LinkedCi { n_values: vec![2], max_degree: 2 };
        let mut a = SweepReport::empty(plan.clone());
        let check = check_bounds(1, &crate::resolution::ShiftVectors { min: vec![5, 5], max: vec![1, 1] }, 2);
        let rec = record("linked-ci", "-", &[1, 1], &[1, 1], None, &check);
        a.lower_failure_samples = vec![rec.clone(); LOWER_FAILURE_SAMPLES - 1];
        let mut b = SweepReport::empty(plan);
        b.lower_failure_samples = vec![rec; 5];
        a.merge(b);
        assert_eq!(a.lower_failure_samples.len(), LOWER_FAILURE_SAMPLES);
    }
}
