mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use qhpp::families::build_t;
use qhpp::{
    expand, make_pattern, pattern_determinant, pullback_k_dot, pullback_k_dot_class, weights, BlowupStep,
    ContractionPlan, CurveClass, HJFraction, KollarParams, SurfaceModel,
};

fn chain() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..=9, 1..=10)
}

fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..5000).prop_flat_map(|q| (Just(q), 1..q)).prop_filter("coprime", |&(q, q1)| gcd(q, q1) == 1)
}

fn bigints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| big(x)).collect()
}

proptest! {
    #[test]
    fn determinant_matches_matrix(c in chain()) {
        let w = HJFraction::new(bigints(&c)).unwrap();
        prop_assert_eq!(w.determinant(), chain_det(&c));
        prop_assert_eq!(w.evaluate().unwrap(), nested(&c));
    }

    #[test]
    fn expand_inverts_evaluate((q, q1) in coprime_pair()) {
        let w = expand(big(q), big(q1)).unwrap();
        let entries: Vec<i64> = w.entries().iter().map(|x| x.to_i64().unwrap()).collect();
        prop_assert!(entries.iter().all(|&n| n >= 2));
        prop_assert_eq!(nested(&entries), rat(q, q1));
    }

    #[test]
    fn bump_identity_and_monotonicity(c in chain(), j in 0usize..10) {
        let j = j % c.len() + 1;
        let w = HJFraction::new(bigints(&c)).unwrap();
        let mut b = c.clone();
        b[j - 1] += 1;
        let got = w.bump_determinant(j).unwrap();
        prop_assert_eq!(&got, &chain_det(&b));
        prop_assert!(got > w.determinant());
        let o = w.partial_orders();
        prop_assert!(o.u[j] >= BigInt::one() && o.v[j] >= BigInt::one());
        prop_assert_eq!(&o.u[j] * &o.v[j] + w.determinant(), got);
    }

    #[test]
    fn reversal_inverts_q1(c in chain()) {
        let w = HJFraction::new(bigints(&c)).unwrap();
        let r = w.reverse();
        let (x, y) = (w.evaluate().unwrap(), r.evaluate().unwrap());
        prop_assert_eq!(x.numer(), y.numer());
        let q = x.numer().clone();
        prop_assert!(((x.denom() * y.denom()) - BigInt::one()) % &q == BigInt::zero() || q == BigInt::one());
    }

    #[test]
    fn discrepancies_in_unit_interval(c in chain()) {
        let w = HJFraction::new(bigints(&c)).unwrap();
        let d = w.discrepancy_coefficients().unwrap();
        prop_assert!(d.iter().all(|x| !x.is_negative() && *x < BigRational::one()));
        prop_assert_eq!(d.iter().all(Zero::is_zero), c.iter().all(|&n| n == 2));
    }

    #[test]
    fn pattern_closed_form(a in 1i64..40, b in 2i64..40, c in 2i64..40, d in 1i64..40) {
        let w = make_pattern(big(a), big(b), big(c), big(d)).unwrap();
        prop_assert_eq!(w.determinant(), big(pattern_closed(a, b, c, d)));
        prop_assert_eq!(pattern_determinant(big(a), big(b), big(c), big(d)).unwrap(), big(pattern_closed(a, b, c, d)));
    }

    #[test]
    fn kollar_weight_identities(a in prop::array::uniform4(2i64..30)) {
        let kw = weights(&KollarParams::<BigInt>::from_ints(a).unwrap());
        let (raw, g) = kollar_raw(a);
        prop_assert_eq!(&kw.wstar, &big(g));
        let w: Vec<BigInt> = raw.iter().map(|&x| big(x / g)).collect();
        prop_assert_eq!(kw.w.to_vec(), w);
        let prod: i64 = a.iter().product();
        prop_assert_eq!(kw.d, big((prod - 1) / g));
    }

    /// Blowing up random points on random lines keeps the lattice
    /// bookkeeping consistent.
    #[test]
    fn blow_up_bookkeeping(steps in prop::collection::vec((0usize..3, 0usize..3), 1..12)) {
        let mut s = SurfaceModel::plane();
        for n in ["A", "B", "C"] {
            s = s.with_curve(n, 1, true).unwrap();
        }
        let names = ["A", "B", "C"];
        for (k, (x, y)) in steps.into_iter().enumerate() {
            let mut step = BlowupStep::new(format!("X{k}")).through(names[x], 1);
            if y != x {
                step = step.through(names[y], 1);
            }
            let Ok(next) = s.blow_up(&step) else { continue };
            let e = format!("X{k}");
            prop_assert_eq!(next.picard_rank(), 1 + next.blowup_count());
            prop_assert_eq!(next.self_int(&e).unwrap(), -1);
            prop_assert_eq!(next.intersect(&e, names[x]).unwrap(), 1);
            prop_assert_eq!(next.self_int(names[x]).unwrap(), s.self_int(names[x]).unwrap() - 1);
            for n in next.names() {
                for m in next.names() {
                    prop_assert_eq!(next.intersect(n, m).unwrap(), next.intersect(m, n).unwrap());
                }
            }
            s = next;
        }
        let n = s.blowup_count();
        prop_assert_eq!(s.canonical().self_int(), 9 - n as i64);
        prop_assert_eq!(CurveClass::plane_curve(1, n).self_int(), 1);
        for k in 1..=n {
            prop_assert_eq!(CurveClass::exceptional(k, n).self_int(), -1);
        }
    }

    #[test]
    fn pullback_is_linear(a in prop::array::uniform4(2i64..6), x in -3i64..4, y in -3i64..4) {
        let b = build_t(a).unwrap();
        let e1 = b.model.class(&b.test_curve).unwrap().clone();
        let e2 = b.model.class(&b.alt_test_curve).unwrap().clone();
        let combo = CurveClass {
            degree: x * e1.degree + y * e2.degree,
            mults: e1.mults.iter().zip(&e2.mults).map(|(p, q)| x * p + y * q).collect(),
        };
        let lhs = pullback_k_dot_class::<BigInt>(&b.model, &b.plan, &combo).unwrap();
        let f1 = pullback_k_dot::<BigInt>(&b.model, &b.plan, &b.test_curve).unwrap();
        let f2 = pullback_k_dot::<BigInt>(&b.model, &b.plan, &b.alt_test_curve).unwrap();
        let rhs = f1 * BigRational::from_integer(big(x)) + f2 * BigRational::from_integer(big(y));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn pullback_off_the_strings_is_k_dot() {
    let mut s = SurfaceModel::plane().with_curve("A", 1, true).unwrap();
    for k in 1..=3 {
        s = s.blow_up(&BlowupStep::new(format!("E{k}")).through("A", 1)).unwrap();
    }
    s = s.blow_up(&BlowupStep::new("X")).unwrap();
    let plan = ContractionPlan::new(vec![vec!["A".to_string()]]);
    assert_eq!(s.self_int("A").unwrap(), -2);
    assert_eq!(s.intersect("A", "X").unwrap(), 0);
    let v = pullback_k_dot::<BigInt>(&s, &plan, "X").unwrap();
    assert_eq!(v, BigRational::from_integer(big(s.k_dot("X").unwrap())));
    // E1 meets A once and A has discrepancy 0
    let v = pullback_k_dot::<BigInt>(&s, &plan, "E1").unwrap();
    assert_eq!(v, BigRational::from_integer(big(-1)));
}

#[test]
fn pullback_vanishes_on_contracted_curves() {
    for a in grid4(2, 4) {
        let b = build_t(a).unwrap();
        for n in b.plan.chains.iter().flatten() {
            let c = b.model.class(n).unwrap();
            let v = pullback_k_dot_class::<BigInt>(&b.model, &b.plan, c).unwrap();
            assert_eq!(v, BigRational::zero(), "{a:?}: {n}");
        }
    }
}
