use std::collections::BTreeMap;
use std::sync::Arc;

use mmmcalc::akfamily::{ak_report, riemann_hurwitz_genus, AKParams};
use mmmcalc::charnum::{evaluate, expand_odd_mmm, min_genus_bound, CharNumberVector, Flavor};
use mmmcalc::newton::{newton_coefficients, newton_poly};
use mmmcalc::poly::{partitions, GradedPoly, Monomial, VarTable};
use mmmcalc::symfun::{
    elementary_symmetric, expand_in_elementary, is_symmetric, verify_fiber_substitution,
    verify_newton_identity, FiberKind, FiberModel, SymmetricWorkspace,
};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

#[test]
fn newton_structure_up_to_20() {
    for n in 1..=20 {
        let f = newton_poly(n).unwrap();
        let table = f.poly().table();
        assert_eq!(f.poly().homogeneous_degree(), Some(n as u64), "n={n}");

        let mut xn = vec![0; n];
        xn[n - 1] = 1;
        let sign = if n % 2 == 1 { 1 } else { -1 };
        assert_eq!(
            f.poly().coefficient(&Monomial::new(xn)),
            BigInt::from(sign * n as i64)
        );

        let mut x1n = vec![0; n];
        x1n[0] = n as u32;
        assert_eq!(f.poly().coefficient(&Monomial::new(x1n)), BigInt::one());
        assert_eq!(table.len(), n);
    }
}

#[test]
fn absolute_coefficient_sums() {
    // sympy-derived: 1, 3, 7, 15, 31, 63, 127
    for (n, want) in [(1, 1), (2, 3), (3, 7), (4, 15), (5, 31), (6, 63), (7, 127)] {
        let s: BigInt = newton_coefficients(n)
            .unwrap()
            .into_iter()
            .map(|(_, c)| c.abs())
            .sum();
        assert_eq!(s, BigInt::from(want), "n={n}");
    }
}

#[test]
fn newton_identity_is_stable_in_extra_variables() {
    for n in 1..=8 {
        assert!(verify_newton_identity(n, n).unwrap(), "m=n={n}");
        assert!(verify_newton_identity(n, n + 2).unwrap(), "m={}", n + 2);
    }
}

#[test]
fn fiber_models_up_to_10() {
    for n in 1..=10 {
        for kind in [FiberKind::Pontryagin, FiberKind::Chern] {
            let m = FiberModel::new(kind, n).unwrap();
            assert!(verify_fiber_substitution(&m).unwrap(), "{kind:?} n={n}");
        }
    }
}

#[test]
fn odd_expansions_agree_with_newton_coefficients() {
    for n in 1..=12 {
        let exp = expand_odd_mmm(n).unwrap();
        assert_eq!(exp.terms(), newton_coefficients(n).unwrap().as_slice());
        assert_eq!(exp.terms().len(), partitions(n).len());
    }
}

#[test]
fn ak_grid_invariants() {
    for k in 2..=6u32 {
        let mut prev: Option<mmmcalc::akfamily::AKReport> = None;
        for g in 2..=6u32 {
            let r = ak_report(AKParams::new(g, k).unwrap()).unwrap();
            assert!(r.fiber_genus_over_hat >= BigInt::from(4));
            assert!(r.fiber_genus_over_s >= BigInt::from(3));
            assert_eq!(r.e1_number, &r.signature * 3);
            if let Some(p) = prev {
                assert!(r.cover_degree > p.cover_degree);
                assert!(r.genus_hat > p.genus_hat);
                assert!(r.fiber_genus_over_s > p.fiber_genus_over_s);
                assert!(r.signature.abs() > p.signature.abs());
            }
            prev = Some(r);
        }
    }
}

fn vector_strategy(degree: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-1_000_000i64..1_000_000, partitions(degree).len())
}

fn to_vector(degree: usize, values: &[i64]) -> CharNumberVector {
    let map: BTreeMap<_, _> = partitions(degree)
        .into_iter()
        .zip(values.iter().map(|&v| BigInt::from(v)))
        .collect();
    CharNumberVector::new(Flavor::Pontryagin, degree, map).unwrap()
}

fn sym_poly(coeffs: &[i64], ws: &SymmetricWorkspace) -> GradedPoly {
    // sum_i c_i e_i^2 + e_1 e_m, symmetric by construction
    let mut p = GradedPoly::zero(ws.table());
    for (i, &c) in coeffs.iter().enumerate() {
        let e = elementary_symmetric(i + 1, ws);
        p = p.add(&e.mul(&e).unwrap().scale(&BigInt::from(c))).unwrap();
    }
    p.add(
        &elementary_symmetric(1, ws)
            .mul(&elementary_symmetric(ws.m(), ws))
            .unwrap(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluate_is_linear(n in 1usize..=7, seed in any::<u64>()) {
        let degree = n;
        let len = partitions(degree).len();
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64) - (1 << 30)
        };
        let a: Vec<i64> = (0..len).map(|_| next()).collect();
        let b: Vec<i64> = (0..len).map(|_| next()).collect();
        let exp = expand_odd_mmm(n).unwrap();
        let (va, vb) = (to_vector(degree, &a), to_vector(degree, &b));
        let sum = va.add(&vb).unwrap();
        prop_assert_eq!(
            evaluate(&exp, &sum).unwrap(),
            evaluate(&exp, &va).unwrap() + evaluate(&exp, &vb).unwrap()
        );
    }

    #[test]
    fn e1_equals_p1(s in any::<i64>()) {
        let v = to_vector(1, &[s]);
        prop_assert_eq!(evaluate(&expand_odd_mmm(1).unwrap(), &v).unwrap(), BigInt::from(s));
    }

    #[test]
    fn evaluate_degree_two(values in vector_strategy(2)) {
        let v = to_vector(2, &values);
        let got = evaluate(&expand_odd_mmm(2).unwrap(), &v).unwrap();
        prop_assert_eq!(got, BigInt::from(values[0]) - 2 * BigInt::from(values[1]));
    }

    #[test]
    fn genus_bound_is_exactly_2n_plus_1(n in 1usize..50, v in any::<i64>()) {
        let got = min_genus_bound(n, &BigInt::from(v));
        if v == 0 {
            prop_assert_eq!(got, None);
        } else {
            prop_assert_eq!(got, Some(2 * n + 1));
        }
    }

    #[test]
    fn sphere_covers(k in 1i64..200) {
        prop_assert_eq!(
            riemann_hurwitz_genus(&BigInt::from(k), &BigInt::from(0), &BigInt::from(2)).unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn symmetric_round_trip(m in 2usize..=4, coeffs in prop::collection::vec(-5i64..=5, 1..=2)) {
        let ws = SymmetricWorkspace::new(m).unwrap();
        let coeffs: Vec<i64> = coeffs.into_iter().take(m).collect();
        let direct = sym_poly(&coeffs, &ws);
        prop_assert!(is_symmetric(&direct));

        // the same polynomial written in the e_i, then expanded
        let xt = VarTable::indexed("x", m).unwrap();
        let mut in_e = GradedPoly::zero(&xt);
        for (i, &c) in coeffs.iter().enumerate() {
            let x = GradedPoly::var_at(&xt, i);
            in_e = in_e.add(&x.mul(&x).unwrap().scale(&BigInt::from(c))).unwrap();
        }
        in_e = in_e
            .add(&GradedPoly::var_at(&xt, 0).mul(&GradedPoly::var_at(&xt, m - 1)).unwrap())
            .unwrap();
        prop_assert_eq!(expand_in_elementary(&in_e, &ws).unwrap(), direct);
    }

    #[test]
    fn text_round_trip(
        terms in prop::collection::vec((prop::collection::vec(0u32..5, 3), -1000i64..1000), 0..8)
    ) {
        let t: Arc<VarTable> = VarTable::new([("a", 1), ("b", 2), ("c", 5)]).unwrap();
        let p = GradedPoly::from_terms(
            &t,
            terms.into_iter().map(|(e, c)| (Monomial::new(e), BigInt::from(c) << 70)),
        )
        .unwrap();
        prop_assert_eq!(GradedPoly::parse(&t, &p.to_text()).unwrap(), p);
    }
}
