use num_bigint::BigInt;
use num_complex::Complex64 as C;
use num_rational::BigRational;
use phiver_core::zetakit::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

/// 1/h + γ₀ − γ₁h + γ₂h²/2 (+ the γ₃ term from a frozen oracle, if given).
fn laurent(a: f64, h: f64, gamma3: f64) -> (C, C) {
    let a = C::new(a, 0.0);
    let g: Vec<C> = (0..3).map(|n| stieltjes(n, a).unwrap().value).collect();
    let series = C::new(1.0 / h, 0.0) + g[0] - g[1] * h + g[2] * (h * h / 2.0) - gamma3 * h.powi(3) / 6.0;
    (series, hurwitz_zeta(C::new(1.0 + h, 0.0), a).unwrap().value)
}

#[test]
fn laurent_reconstruction() {
    // the three-term truncation error at h = 0.01 is γ₃h³/6: below 1e−8 for
    // a ∈ {1, 3/4} but 1.7e−8 relative at a = 1/4 (γ₃(1/4) ≈ −10.66)
    for a in [1.0, 0.75] {
        let (series, direct) = laurent(a, 0.01, 0.0);
        assert!((series - direct).norm() <= 1e-8 * direct.norm(), "a={a}");
    }
    // with γ₃ (mpmath) the remainder is O(h⁴ γ₄)
    for (a, g3) in
        [(1.0, 0.002_053_834_420_303_345_9), (0.25, -10.661_431_233_795_886), (0.75, -0.027_666_122_322_352_85)]
    {
        let (series, direct) = laurent(a, 0.01, g3);
        assert!((series - direct).norm() <= 1e-10 * direct.norm(), "a={a}");
    }
}

#[test]
fn bernoulli_reflection() {
    for x in [C::new(0.25, 0.0), C::new(0.3, 0.1)] {
        for n in 0..=12 {
            let lhs = bernoulli_poly(n, C::new(1.0, 0.0) - x).unwrap();
            let rhs = bernoulli_poly(n, x).unwrap() * if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((lhs - rhs).norm() <= 1e-12, "n={n} x={x}");
        }
    }
}

#[test]
fn zeta_at_negative_integers() {
    for a in [0.25, 0.75, 1.0] {
        for n in 0..=3usize {
            let z = hurwitz_zeta(C::new(-(n as f64), 0.0), C::new(a, 0.0)).unwrap().value;
            let b = bernoulli_poly(n + 1, C::new(a, 0.0)).unwrap() / -((n + 1) as f64);
            assert!((z - b).norm() <= 1e-10, "n={n} a={a}");
        }
    }
}

#[test]
fn euler_numbers_from_bernoulli_at_three_quarters() {
    let x = BigRational::new(BigInt::from(3), BigInt::from(4));
    for n in 0..=12usize {
        let b = bernoulli_poly_exact(n + 1, &x).unwrap();
        let four = BigRational::from_integer(BigInt::from(4).pow(n as u32 + 1));
        let cos = match n % 4 {
            0 => 1,
            2 => -1,
            _ => 0,
        };
        let lhs =
            four * b * BigRational::from_integer(BigInt::from(cos)) / BigRational::from_integer(BigInt::from(n + 1));
        let e = euler_number(n).unwrap();
        let rhs = BigRational::from_integer(if e < BigInt::from(0) { -e } else { e });
        assert_eq!(lhs, rhs, "n={n}");
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn shift_recurrence(sx in -3.0f64..5.0, sy in -10.0f64..10.0, ax in 0.05f64..3.0, ay in -2.0f64..2.0) {
        let s = C::new(sx, sy);
        prop_assume!((s - 1.0).norm() > 1e-2);
        let a = C::new(ax, ay);
        let lhs = hurwitz_zeta(s, a).unwrap().value - hurwitz_zeta(s, a + 1.0).unwrap().value;
        let rhs = a.powc(-s);
        prop_assert!((lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1.0), "s={} a={}", s, a);
    }

    #[test]
    fn multiplication_theorem(sx in 1.2f64..4.0, sy in -5.0f64..5.0, a in 0.1f64..2.0) {
        // ζ(s, 2a) = 2^{−s} (ζ(s, a) + ζ(s, a + ½))
        let s = C::new(sx, sy);
        let a = C::new(a, 0.0);
        let lhs = hurwitz_zeta(s, a * 2.0).unwrap().value;
        let rhs = C::new(2.0, 0.0).powc(-s) * (hurwitz_zeta(s, a).unwrap().value + hurwitz_zeta(s, a + 0.5).unwrap().value);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1.0));
    }
}
