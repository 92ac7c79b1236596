use std::f64::consts::TAU;

use logradius::spectrum::{decompose, parseval_residual, reconstruct, sample_periodic};
use logradius::{ElementaryComponent, Frequency, Interval, LogRadiusProfile};
use proptest::prelude::*;

prop_compose! {
    fn band_limited(max_k: u32)(
        turns in 1u32..=3,
        c0 in -1.0f64..1.0,
        comps in prop::collection::vec((1u32..=16, -1.0f64..1.0, 0.0f64..TAU), 1..5),
    ) -> LogRadiusProfile {
        let comps = comps
            .into_iter()
            .map(|(k, e, t)| {
                ElementaryComponent::new(Frequency::rational(k.min(max_k), turns).unwrap(), e, t).unwrap()
            })
            .collect();
        LogRadiusProfile::new(c0, 0.0, comps, Interval::from_zero(TAU * turns as f64).unwrap()).unwrap()
    }
}

proptest! {
    #[test]
    fn reconstruction_matches(p in band_limited(16)) {
        let (values, period) = sample_periodic(&p, 128).unwrap();
        let spectrum = decompose(&values, period, 16).unwrap();
        prop_assert!(parseval_residual(&values, &spectrum).abs() < 1e-12);
        let back = reconstruct(&spectrum);
        for j in 0..50 {
            let t = period * j as f64 / 50.0 + 0.01;
            prop_assert!((back.evaluate_periodic(t).unwrap() - p.evaluate_periodic(t).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn decomposition_is_linear(a in -2.0f64..2.0, x in prop::collection::vec(-1.0f64..1.0, 64), y in prop::collection::vec(-1.0f64..1.0, 64)) {
        let combo: Vec<f64> = x.iter().zip(&y).map(|(u, v)| a * u + v).collect();
        let sx = decompose(&x, TAU, 20).unwrap();
        let sy = decompose(&y, TAU, 20).unwrap();
        let sc = decompose(&combo, TAU, 20).unwrap();
        prop_assert!((sc.mean() - (a * sx.mean() + sy.mean())).abs() < 1e-12);
        for k in 1..=20u32 {
            let coeff = |s: &logradius::ShapeSpectrum| s.bin(k).map(|b| b.sin_cos_coefficients(TAU)).unwrap_or((0.0, 0.0));
            let (cx, cy, cc) = (coeff(&sx), coeff(&sy), coeff(&sc));
            prop_assert!((cc.0 - (a * cx.0 + cy.0)).abs() < 1e-11);
            prop_assert!((cc.1 - (a * cx.1 + cy.1)).abs() < 1e-11);
        }
    }
}
