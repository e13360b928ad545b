//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use acimult::bounds::case_iv_delta;
use acimult::degrees::{enumerate_aci, enumerate_linked_ci, enumerate_pfaffian, CaseVariant, Degree, PfaffianDegreeData};
use acimult::golden;
use acimult::instance::generate_aci_instance;
use acimult::poly::{
    buchberger, codim_and_multiplicity, colon_ideal, ideals_equal, is_reduced_groebner_basis, normal_form, parse_poly,
    HilbertError, Ideal, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, Rationals,
};
use acimult::resolution::{aci_raw_betti, minimalize_aci_betti, multiplicity_from_betti};
use acimult::sweep::{sweep, SweepPlan};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn run(name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let ok = o.ok && in_time;
    let timing = format!("{:.2}s / {}s", elapsed.as_secs_f64(), limit.as_secs());
    let late = if in_time { "" } else { " [over time limit]" };
    println!("{} {name}: {} ({timing}){late}", if ok { "PASS" } else { "FAIL" }, o.detail);
    ok
}

fn golden_degree_level() -> Outcome {
    match golden::degree_level(&golden::E, &golden::D) {
        Ok(r) if r.is_ok() => outcome(true, format!("{} quantities match", r.entries.len())),
        Ok(r) => outcome(false, format!("mismatch: {:?}", r.first_mismatch())),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn golden_symbolic() -> Outcome {
    let prime = match golden::symbolic(PrimeField::default()) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    if !prime.is_ok() {
        return outcome(false, format!("prime field mismatch: {:?}", prime.first_mismatch()));
    }
    let rational = match golden::symbolic(Rationals) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("rational mode: {e}")),
    };
    if rational != prime {
        return outcome(false, "rational mode disagrees with the prime field");
    }
    outcome(true, format!("{} quantities match over GF(32003) and Q", prime.entries.len()))
}

const SWEEP_GENS: [usize; 2] = [5, 7];

fn upper_bound_sweep() -> Outcome {
    let plan = SweepPlan::Aci { max_e3: 10, gen_counts: SWEEP_GENS.to_vec(), max_dn: 10 };
    match sweep(&plan, 4) {
        Ok(r) => {
            let ok = r.violations.is_empty() && r.upper_covered.checked > 0;
            outcome(
                ok,
                format!(
                    "{} data, {} prefix-case checks, {} violations",
                    r.total,
                    r.upper_covered.checked,
                    r.violations.len()
                ),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

/// `prod e_i - (1/6) sum d_i (c - d_i)(c - 2 d_i)`, scaled by 6.
fn six_closed_form(e: &[Degree], d: &[Degree], c: Degree) -> i128 {
    let prod: i128 = e.iter().map(|&x| x as i128).product();
    let s: i128 = d.iter().map(|&x| (x as i128) * (c - x) as i128 * (c - 2 * x) as i128).sum();
    6 * prod - s
}

fn multiplicity_oracle() -> Outcome {
    let mut checked = 0u64;
    for a in enumerate_aci(10, &SWEEP_GENS, 10) {
        let six = six_closed_form(a.e(), a.d(), a.c());
        let raw = aci_raw_betti(&a);
        let min = minimalize_aci_betti(&a);
        let (Ok(er), Ok(em)) = (multiplicity_from_betti(&raw), multiplicity_from_betti(&min)) else {
            return outcome(false, format!("alternating sum failed on {a}"));
        };
        if 6 * em != six || er != em {
            return outcome(false, format!("{a}: raw {er}, minimal {em}, closed form {six}/6"));
        }
        checked += 1;
    }
    outcome(checked > 0, format!("{checked} data agree"))
}

fn case_iv() -> Outcome {
    let mut positive = 0u64;
    let mut total = 0u64;
    for p in enumerate_pfaffian(14, &SWEEP_GENS) {
        let Ok(d) = case_iv_delta(&p) else {
            return outcome(false, format!("delta failed on r={:?}", p.r()));
        };
        total += 1;
        if d.delta > 0 {
            positive += 1;
        }
    }
    let plan = SweepPlan::CaseIv { max_rsum: 14, gen_counts: SWEEP_GENS.to_vec() };
    let swept = match sweep(&plan, 4) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let sweep_positive = swept.delta.map_or(u64::MAX, |d| d.positive);
    let p = PfaffianDegreeData::new(&[2, 2, 2, 2, 2]).expect("valid weights");
    let d = case_iv_delta(&p).expect("delta");
    let point = d.six_e == 1152 && d.upper_prod == 1536 && d.delta == -384;
    let cases_ok = swept.case_counts.get(CaseVariant::IV.name()) == Some(&swept.total);
    outcome(
        positive == 0 && sweep_positive == 0 && point && total > 0 && cases_ok,
        format!(
            "{total} weight vectors, {positive} with delta > 0; r=(2,2,2,2,2): 6e={}, M-product {}, delta {}",
            d.six_e, d.upper_prod, d.delta
        ),
    )
}

/// `M_i` from the table of a complete intersection linked through `e`.
fn linked_max_shifts(d: &[Degree], e: &[Degree]) -> Vec<Degree> {
    let n = d.len();
    let alpha: Degree = e.iter().sum();
    (1..=n)
        .map(|i| {
            if i == n {
                alpha - d[0]
            } else {
                let top: Degree = e[n - i..].iter().sum();
                let other = alpha - d[..=n - i].iter().sum::<Degree>();
                top.max(other)
            }
        })
        .collect()
}

fn linked_ci() -> Outcome {
    let plan = SweepPlan::LinkedCi { n_values: vec![1, 2, 3, 4], max_degree: 6 };
    let r = match sweep(&plan, 4) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    // independent check of the spread hypothesis
    let mut hyp = 0u64;
    let mut fail = 0u64;
    for l in enumerate_linked_ci(&[1, 2, 3, 4], 6) {
        if l.is_degenerate() {
            continue;
        }
        let (d, e, n) = (l.d(), l.e(), l.n());
        let spread: Degree = e[1..].iter().map(|&x| x - e[0]).sum();
        if spread < d[0] {
            continue;
        }
        hyp += 1;
        let mult: i128 = e.iter().map(|&x| x as i128).product::<i128>() - d.iter().map(|&x| x as i128).product::<i128>();
        let fact: i128 = (1..=n as i128).product();
        let upper: i128 = linked_max_shifts(d, e).iter().map(|&x| x as i128).product();
        if fact * mult > upper {
            fail += 1;
        }
    }
    let failures = r.implication_failures();
    let tallies: Vec<String> =
        r.predicates.iter().map(|(k, t)| format!("{k} {}/{}", t.conclusion_held, t.hypothesis_held)).collect();
    outcome(
        failures == 0 && fail == 0 && r.violations.is_empty() && hyp > 0,
        format!("{} data; {}; independent spread check {hyp} hypotheses, {fail} failures", r.total, tallies.join(", ")),
    )
}

fn random_poly<R: Rng>(ring: &PolyRing<PrimeField>, rng: &mut R) -> Polynomial<PrimeField> {
    let nterms = rng.gen_range(1..=4);
    let terms = (0..nterms)
        .map(|_| {
            let deg = rng.gen_range(0..=4u32);
            let all = Monomial::all_of_degree(ring.nvars(), deg);
            let m = all[rng.gen_range(0..all.len())].clone();
            (m, rng.gen_range(1..ring.field().p()))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Standard monomials of a zero-dimensional monomial ideal, by direct count.
fn count_standard(gens: &[Monomial], nvars: usize, bound: u32) -> i128 {
    (0..=bound)
        .flat_map(|d| Monomial::all_of_degree(nvars, d))
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .count() as i128
}

fn groebner_kernel() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20240607);
    let orders = [MonomialOrder::Grevlex, MonomialOrder::Lex];
    for case in 0..200 {
        let nvars = rng.gen_range(1..=3);
        let names = ["x", "y", "z"];
        let ring = PolyRing::new(PrimeField::default(), &names[..nvars], orders[case % 2]).unwrap();
        let gens: Vec<_> = (0..rng.gen_range(1..=4)).map(|_| random_poly(&ring, &mut rng)).collect();
        let gb = match buchberger(&ring, &gens) {
            Ok(gb) => gb,
            Err(e) => return outcome(false, format!("instance {case}: {e}")),
        };
        if !gens.iter().all(|g| g.is_zero()) && !is_reduced_groebner_basis(&ring, &gb) {
            return outcome(false, format!("instance {case}: basis not reduced or S-pairs do not reduce to zero"));
        }
        if !gens.iter().all(|g| normal_form(&ring, g, &gb).is_zero()) {
            return outcome(false, format!("instance {case}: a generator does not reduce to zero"));
        }
    }

    let ring = PolyRing::new(PrimeField::default(), &["x", "y", "z"], MonomialOrder::Grevlex).unwrap();
    for case in 0..100 {
        let mut gens: Vec<Monomial> = (0..3)
            .map(|i| {
                let mut e = [0u16; 3];
                e[i] = rng.gen_range(1..=5);
                Monomial::from_exponents(&e)
            })
            .collect();
        for _ in 0..rng.gen_range(0..=4) {
            gens.push(Monomial::from_exponents(&[rng.gen_range(0..4), rng.gen_range(0..4), rng.gen_range(0..4)]));
        }
        let ideal = Ideal::new(gens.iter().map(|m| Polynomial::monomial(&ring, m.clone(), 1)).collect());
        let expected = count_standard(&gens, 3, 15);
        match codim_and_multiplicity(&ring, &ideal) {
            Ok((3, e)) if e == expected => {}
            Err(HilbertError::UnitIdeal) if expected == 0 => {}
            other => return outcome(false, format!("monomial case {case}: {other:?}, brute force {expected}")),
        }
    }

    let ideal = |texts: &[&str]| Ideal::new(texts.iter().map(|t| parse_poly(&ring, t).unwrap()).collect());
    let k = ideal(&["x^2", "y^2", "z^2"]);
    let colon = match colon_ideal(&ring, &k, &ideal(&["x", "y", "z"])) {
        Ok(c) => c,
        Err(e) => return outcome(false, e.to_string()),
    };
    let expected = ideal(&["x^2", "y^2", "z^2", "x*y*z"]);
    let eq = ideals_equal(&ring, &colon, &expected).unwrap_or(false);
    let leads: Vec<Monomial> = expected.gens().iter().map(|g| g.lead_monomial().unwrap().clone()).collect();
    let colength = count_standard(&leads, 3, 10);
    let hm = codim_and_multiplicity(&ring, &colon).ok();
    outcome(
        eq && colength == 7 && hm == Some((3, 7)),
        format!("200 random bases verified; 100 monomial multiplicities match; colon colength {colength}"),
    )
}

fn instance() -> Outcome {
    let ring = PolyRing::new(PrimeField::default(), &["x", "y", "z"], MonomialOrder::Grevlex).unwrap();
    let p = PfaffianDegreeData::new(&[2, 2, 2, 2, 2]).unwrap();
    let inst = match generate_aci_instance(&p, 1, &ring, 10) {
        Ok(i) => i,
        Err(e) => return outcome(false, e.to_string()),
    };
    let c = &inst.checks;
    let ok = c.all_hold() && c.k == (3, 512) && c.j == (3, 320) && c.i == (3, 192) && c.i_degrees == vec![4, 8, 8, 8];
    outcome(
        ok,
        format!(
            "seed {}: e(R/K)={}, e(R/J)={}, e(R/I)={}, I degrees {:?}, double link {}",
            inst.seed, c.k.1, c.j.1, c.i.1, c.i_degrees, c.double_link
        ),
    )
}

fn main() -> ExitCode {
    let results = [
        run("1 golden degree-level data", Duration::from_secs(1), golden_degree_level),
        run("2 golden symbolic pipeline", Duration::from_secs(60), golden_symbolic),
        run("3 upper-bound sweep", Duration::from_secs(300), upper_bound_sweep),
        run("4 multiplicity oracle equivalence", Duration::from_secs(300), multiplicity_oracle),
        run("5 fully cancelled case", Duration::from_secs(300), case_iv),
        run("6 linked complete intersections", Duration::from_secs(300), linked_ci),
        run("7 Groebner kernel properties", Duration::from_secs(300), groebner_kernel),
        run("8 pfaffian instance generation", Duration::from_secs(120), instance),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
