//! Property tests for the degree-level and symbolic layers.

use acimult::bounds::{mult_aci, six_mult_gorenstein};
use acimult::degrees::{
    classify_case, enumerate_aci, validate_aci, validate_gorenstein, CompleteIntersectionDegrees, Degree,
};
use acimult::poly::{
    buchberger, codim_and_multiplicity, colon_ideal, contains, ideal_member, intersect, parse_poly, Ideal, Monomial,
    MonomialOrder, PolyRing, Polynomial, PrimeField, Field,
};
use acimult::resolution::{
    aci_raw_betti, gorenstein_betti, koszul_betti, minimalize_aci_betti, multiplicity_from_betti, scaled_multiplicity,
};
use proptest::prelude::*;

fn ring3() -> PolyRing<PrimeField> {
    PolyRing::new(PrimeField::default(), &["x", "y", "z"], MonomialOrder::Grevlex).unwrap()
}

fn nondecreasing(len: usize, lo: Degree, hi: Degree, f: &mut impl FnMut(&[Degree])) {
    fn rec(cur: &mut Vec<Degree>, len: usize, lo: Degree, hi: Degree, f: &mut impl FnMut(&[Degree])) {
        if cur.len() == len {
            f(cur);
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(cur, len, v, hi, f);
            cur.pop();
        }
    }
    rec(&mut Vec::new(), len, lo, hi, f);
}

#[test]
fn koszul_multiplicity_is_product_of_degrees() {
    for n in 1..=6 {
        nondecreasing(n, 1, 9, &mut |e| {
            let ci = CompleteIntersectionDegrees::new(e).unwrap();
            let prod: i128 = e.iter().map(|&x| x as i128).product();
            assert_eq!(multiplicity_from_betti(&koszul_betti(&ci)).unwrap(), prod, "e = {e:?}");
        });
    }
}

#[test]
fn enumeration_yields_valid_data() {
    for a in enumerate_aci(7, &[3, 5, 7], 7) {
        let g = validate_gorenstein(a.d()).unwrap();
        assert_eq!(validate_aci(a.e(), &g).unwrap(), a);
        assert!(a.e4() >= 1);
    }
}

/// Nondecreasing degree vector of odd length.
fn degree_vec() -> impl Strategy<Value = Vec<Degree>> {
    prop_oneof![Just(3usize), Just(5), Just(7), Just(9)]
        .prop_flat_map(|n| proptest::collection::vec(1i64..=12, n))
        .prop_map(|mut v| {
            v.sort_unstable();
            v
        })
}

proptest! {
    #[test]
    fn gorenstein_table_matches_closed_form(d in degree_vec()) {
        if let Ok(g) = validate_gorenstein(&d) {
            prop_assert_eq!(scaled_multiplicity(&gorenstein_betti(&g)).unwrap(), six_mult_gorenstein(&g));
        }
    }

    #[test]
    fn cancellation_preserves_multiplicity(d in degree_vec(), extra in proptest::collection::vec(0i64..=4, 3)) {
        if let Ok(g) = validate_gorenstein(&d) {
            let mut e: Vec<Degree> = d[..3].iter().zip(&extra).map(|(a, b)| a + b).collect();
            e.sort_unstable();
            if let Ok(a) = validate_aci(&e, &g) {
                let raw = multiplicity_from_betti(&aci_raw_betti(&a)).unwrap();
                let min = multiplicity_from_betti(&minimalize_aci_betti(&a)).unwrap();
                prop_assert_eq!(raw, min);
                if let Ok(m) = mult_aci(&a) {
                    prop_assert_eq!(m, min);
                }
                let matched = classify_case(&a).matched.len() as u64;
                let (raw_t, min_t) = (aci_raw_betti(&a), minimalize_aci_betti(&a));
                prop_assert_eq!(raw_t.rank(1), min_t.rank(1));
                prop_assert_eq!(raw_t.rank(2) - min_t.rank(2), matched);
                prop_assert_eq!(raw_t.rank(3) - min_t.rank(3), matched);
            }
        }
    }
}

/// Random polynomial with up to five terms of degree at most four.
fn poly_terms() -> impl Strategy<Value = Vec<([u16; 3], i64)>> {
    proptest::collection::vec(((0u16..=4, 0u16..=4, 0u16..=4), -50i64..=50), 0..=5)
        .prop_map(|v| v.into_iter().filter(|((a, b, c), _)| a + b + c <= 4).map(|((a, b, c), k)| ([a, b, c], k)).collect())
}

fn build(ring: &PolyRing<PrimeField>, raw: &[([u16; 3], i64)]) -> Polynomial<PrimeField> {
    let terms = raw.iter().map(|(e, c)| (Monomial::from_exponents(e), ring.field().from_i64(*c))).collect();
    Polynomial::from_terms(ring, terms)
}

/// Homogeneous polynomial of the given degree with random coefficients.
fn homogeneous(ring: &PolyRing<PrimeField>, deg: u32, coeffs: &[i64]) -> Polynomial<PrimeField> {
    let terms = Monomial::all_of_degree(3, deg).into_iter().zip(coeffs.iter().cycle()).map(|(m, &c)| (m, ring.field().from_i64(c))).collect();
    Polynomial::from_terms(ring, terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(raw in poly_terms()) {
        let r = ring3();
        let p = build(&r, &raw);
        prop_assert_eq!(parse_poly(&r, &p.to_text(&r)).unwrap(), p);
    }

    #[test]
    fn reduced_basis_ignores_generator_order(term_lists in proptest::collection::vec(poly_terms(), 1..=4), rot in 0usize..4) {
        let r = ring3();
        let gens: Vec<_> = term_lists.iter().map(|s| build(&r, s)).collect();
        let mut permuted = gens.clone();
        let k = rot % permuted.len();
        permuted.rotate_left(k);
        permuted.reverse();
        prop_assert_eq!(buchberger(&r, &gens).unwrap(), buchberger(&r, &permuted).unwrap());
    }

    #[test]
    fn colon_is_correct_and_homogeneous(
        ck in proptest::collection::vec(-20i64..=20, 6),
        ci in proptest::collection::vec(-20i64..=20, 6),
        dk in proptest::collection::vec(1u32..=3, 2),
        di in 1u32..=2,
    ) {
        let r = ring3();
        let k = Ideal::new(vec![
            homogeneous(&r, dk[0], &ck),
            homogeneous(&r, dk[1], &ck[3..]),
            parse_poly(&r, "z^3").unwrap(),
        ]);
        let i = Ideal::new(vec![homogeneous(&r, di, &ci), parse_poly(&r, "x").unwrap()]);
        prop_assume!(!k.is_zero());
        let c = colon_ideal(&r, &k, &i).unwrap();
        prop_assert!(c.is_homogeneous());
        for g in c.gens() {
            for f in i.gens() {
                prop_assert!(ideal_member(&r, &k, &g.mul(&r, f)).unwrap());
            }
        }
        prop_assert!(contains(&r, &c, &k).unwrap());
    }

    #[test]
    fn intersection_is_contained_in_both(a in poly_terms(), b in poly_terms()) {
        let r = ring3();
        let (fa, fb) = (build(&r, &a), build(&r, &b));
        prop_assume!(!fa.is_zero() && !fb.is_zero());
        let ia = Ideal::new(vec![fa.clone()]);
        let ib = Ideal::new(vec![fb.clone()]);
        let m = intersect(&r, &ia, &ib).unwrap();
        prop_assert!(contains(&r, &ia, &m).unwrap());
        prop_assert!(contains(&r, &ib, &m).unwrap());
        prop_assert!(ideal_member(&r, &m, &fa.mul(&r, &fb)).unwrap());
    }

    #[test]
    fn hilbert_function_matches_standard_monomials(
        gens in proptest::collection::vec((0u16..=4, 0u16..=4, 0u16..=4), 1..=5)
    ) {
        let r = ring3();
        let monos: Vec<Monomial> = gens.iter().map(|&(a, b, c)| Monomial::from_exponents(&[a, b, c])).collect();
        prop_assume!(!monos.iter().any(|m| m.is_one()));
        let ideal = Ideal::new(monos.iter().map(|m| Polynomial::monomial(&r, m.clone(), 1)).collect());
        let (h, e) = codim_and_multiplicity(&r, &ideal).unwrap();
        // For large d the Hilbert function is a polynomial of degree 2 - h
        // with leading coefficient e / (2 - h)!; compare via finite
        // differences of the standard-monomial count at high degree.
        let count = |d: u32| Monomial::all_of_degree(3, d).iter().filter(|x| !monos.iter().any(|g| g.divides(x))).count() as i128;
        let d0 = 30;
        let diff = match h {
            3 => (0..=d0).map(count).sum::<i128>(),
            2 => count(d0),
            1 => count(d0 + 1) - count(d0),
            _ => unreachable!(),
        };
        prop_assert_eq!(diff, e);
    }
}
