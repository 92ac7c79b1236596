use std::f64::consts::TAU;

use logradius::io::{read_profile, write_profile};
use logradius::{inner_product, ElementaryComponent, Frequency, Interval, LogRadiusProfile};
use proptest::prelude::*;

fn frequency() -> impl Strategy<Value = Frequency> {
    prop_oneof![
        4 => (1u32..=8, 1u32..=8).prop_map(|(m, n)| Frequency::rational(m, n).unwrap()),
        1 => (0.05f64..8.0).prop_map(|v| Frequency::real(v).unwrap()),
    ]
}

fn component() -> impl Strategy<Value = ElementaryComponent> {
    (frequency(), -1.0f64..=1.0, 0.0f64..TAU)
        .prop_map(|(f, e, t)| ElementaryComponent::new(f, e, t).unwrap())
}

prop_compose! {
    fn profile()(
        c0 in -1.0f64..=1.0,
        slope in prop_oneof![Just(0.0), -0.3f64..=0.3],
        comps in prop::collection::vec(component(), 0..5),
    ) -> LogRadiusProfile {
        LogRadiusProfile::new(c0, slope, comps, Interval::from_zero(TAU).unwrap()).unwrap()
    }
}

fn max_deviation(a: &LogRadiusProfile, b: &LogRadiusProfile) -> f64 {
    (0..=64)
        .map(|j| {
            let t = TAU * j as f64 / 64.0;
            (a.evaluate(t).unwrap() - b.evaluate(t).unwrap()).abs()
        })
        .fold(0.0, f64::max)
}

proptest! {
    #[test]
    fn addition_commutes_exactly(p in profile(), q in profile()) {
        prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
    }

    #[test]
    fn zero_and_negation(p in profile()) {
        let zero = LogRadiusProfile::zero_on(p.domain());
        prop_assert_eq!(p.add(&zero).unwrap(), p.clone());
        prop_assert!(p.add(&p.scalar_multiply(-1.0)).unwrap().is_zero());
        prop_assert_eq!(p.scalar_multiply(1.0), p.clone());
        prop_assert!(p.scalar_multiply(0.0).is_zero());
    }

    #[test]
    fn addition_associates(p in profile(), q in profile(), r in profile()) {
        let left = p.add(&q).unwrap().add(&r).unwrap();
        let right = p.add(&q.add(&r).unwrap()).unwrap();
        prop_assert!(left.approx_eq(&right, 1e-12), "{left:?} vs {right:?}");
        prop_assert!(max_deviation(&left, &right) <= 1e-12);
    }

    #[test]
    fn scaling_distributes(p in profile(), q in profile(), a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let over_sum = p.add(&q).unwrap().scalar_multiply(a);
        let summed = p.scalar_multiply(a).add(&q.scalar_multiply(a)).unwrap();
        prop_assert!(over_sum.approx_eq(&summed, 1e-12));
        let combined = p.scalar_multiply(a + b);
        let split = p.scalar_multiply(a).add(&p.scalar_multiply(b)).unwrap();
        prop_assert!(combined.approx_eq(&split, 1e-12));
        prop_assert!(max_deviation(&combined, &split) <= 1e-12);
    }

    #[test]
    fn scaling_composes(p in profile(), a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let twice = p.scalar_multiply(b).scalar_multiply(a);
        prop_assert!(twice.approx_eq(&p.scalar_multiply(a * b), 1e-12));
    }

    #[test]
    fn pointwise_sum(p in profile(), q in profile(), t in 0.0f64..=TAU) {
        let s = p.add(&q).unwrap();
        let expected = p.evaluate(t).unwrap() + q.evaluate(t).unwrap();
        prop_assert!((s.evaluate(t).unwrap() - expected).abs() <= 1e-12);
    }

    #[test]
    fn documents_round_trip_exactly(p in profile()) {
        prop_assert_eq!(read_profile(&write_profile(&p)).unwrap(), p);
    }

    #[test]
    fn inner_product_is_symmetric_and_bilinear(
        c in prop::collection::vec((1u32..=6, -1.0f64..=1.0, 0.0f64..TAU), 3),
        a in -2.0f64..2.0,
    ) {
        let make = |(m, e, t): (u32, f64, f64)| {
            LogRadiusProfile::elementary(Frequency::integer(m).unwrap(), e, t).unwrap()
        };
        let (p, q, r) = (make(c[0]), make(c[1]), make(c[2]));
        let pq = inner_product(&p, &q, None).unwrap();
        prop_assert_eq!(pq, inner_product(&q, &p, None).unwrap());
        let lhs = inner_product(&p.scalar_multiply(a).add(&r).unwrap(), &q, None).unwrap();
        let rhs = a * pq + inner_product(&r, &q, None).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-10);
    }
}

#[test]
fn hundred_documents_round_trip() {
    let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig::with_cases(100));
    runner
        .run(&profile(), |p| {
            let text = write_profile(&p);
            prop_assert_eq!(write_profile(&read_profile(&text).unwrap()), text);
            Ok(())
        })
        .unwrap();
}

#[test]
fn disjoint_domains_do_not_add() {
    let a = LogRadiusProfile::unit_circle();
    let b = LogRadiusProfile::zero_on(Interval::new(10.0, 12.0).unwrap());
    assert!(a.add(&b).is_err());
}
