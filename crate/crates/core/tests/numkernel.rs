use num_traits::Signed;
use proptest::prelude::*;
use szeta::error::Error;
use szeta::numkernel::rational::{binomial, euler_at_half, parse_rational, rat};
use szeta::numkernel::*;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(50).unwrap()
}

fn close(x: &Real, y: &Real, digits: i64) -> bool {
    let c = ctx();
    (x - y).abs() <= c.eps(digits)
}

#[test]
fn gamma_at_half_is_sqrt_pi() {
    let c = ctx();
    let g = gamma_real(&c.frac(1, 2)).unwrap();
    let sp = Real::pi(c.bits()).sqrt();
    assert!(close(&g, &sp, 45), "{}", g.to_decimal(50));
}

#[test]
fn gamma_integers_and_poles() {
    let c = ctx();
    for n in 1..12i64 {
        let f: i64 = (1..n).product();
        assert!(close(&gamma_real(&c.real(n)).unwrap(), &c.real(f), 40));
    }
    assert!(matches!(gamma_real(&c.real(0)), Err(Error::Pole(_))));
    assert!(matches!(gamma_real(&c.real(-3)), Err(Error::Pole(_))));
    assert!(rgamma_real(&c.real(-3)).is_zero());
}

#[test]
fn gamma_third_known_digits() {
    let c = ctx();
    let g = gamma_real(&c.frac(1, 3)).unwrap();
    assert!(g.to_decimal(30).starts_with("2.67893853470774763365569294097"), "{}", g.to_decimal(30));
}

#[test]
fn complex_gamma_reflection() {
    // Γ(z)Γ(1−z) = π/sin(πz)
    let c = ctx();
    let p = c.bits();
    let z = Complex::new(Real::from_frac(1, 4, p), Real::from_frac(1, 3, p));
    let one = Complex::one(p);
    let lhs = &gamma(&z, &c).unwrap() * &gamma(&(&one - &z), &c).unwrap();
    let pi = Complex::from_real(Real::pi(p));
    let piz = &pi * &z;
    let iz = piz.mul_i(1);
    let sin = (&iz.exp() - &(-iz).exp()).mul_i(-1).div_i64(2);
    let rhs = &pi * &sin.recip();
    assert!((&lhs - &rhs).abs() <= c.eps(40));
}

#[test]
fn pochhammer_matches_product() {
    let c = ctx();
    let v = pochhammer_real(&c.frac(1, 3), &c.real(4)).unwrap();
    let want = c.rational(&(rat(1, 3) * rat(4, 3) * rat(7, 3) * rat(10, 3)));
    assert!(close(&v, &want, 45));
}

#[test]
fn kummer_one_one_is_exponential() {
    // ₁F₁(1; 1; z) = e^z
    let c = ctx();
    let v = hyp_pfq_real(&[c.real(1)], &[c.real(1)], &c.frac(3, 2), &c).unwrap();
    assert!(close(&v, &c.frac(3, 2).exp(), 45));
}

#[test]
fn gauss_sum_terminating() {
    // Chu–Vandermonde: ₂F₁(−n, b; c; 1) = (c−b)_n/(c)_n
    let v = hyp_pfq_rational(&[rat(-4, 1), rat(1, 3)], &[rat(5, 2)], &rat(1, 1)).unwrap();
    let poch = |x: Rational, n: i64| (0..n).fold(rat(1, 1), |acc, i| acc * (&x + rat(i, 1)));
    assert_eq!(v, poch(rat(5, 2) - rat(1, 3), 4) / poch(rat(5, 2), 4));
}

#[test]
fn pfq_divergence_and_bad_lower() {
    let c = ctx();
    let r = hyp_pfq_real(&[c.real(1), c.real(1), c.real(1)], &[c.real(2)], &c.frac(1, 2), &c);
    assert!(matches!(r, Err(Error::Divergence(_))));
    let r = hyp_pfq_real(&[c.real(1), c.real(1)], &[c.real(2)], &c.real(2), &c);
    assert!(matches!(r, Err(Error::Divergence(_))));
    let r = hyp_pfq_real(&[c.real(1)], &[c.real(-2)], &c.frac(1, 2), &c);
    assert!(matches!(r, Err(Error::Parameter(_))));
    // a lower −N is harmless when the series stops first
    assert!(hyp_pfq_real(&[c.real(-2)], &[c.real(-3)], &c.frac(1, 2), &c).is_ok());
}

#[test]
fn bernoulli_and_euler_tables() {
    assert_eq!(classical_bernoulli(0), rat(1, 1));
    assert_eq!(classical_bernoulli(1), rat(-1, 2));
    assert_eq!(classical_bernoulli(2), rat(1, 6));
    assert_eq!(classical_bernoulli(12), rat(-691, 2730));
    assert_eq!(classical_bernoulli(7), rat(0, 1));
    // E_n(1/2) = E_n/2^n
    assert_eq!(euler_at_half(2), rat(-1, 4));
    assert_eq!(euler_at_half(4), rat(5, 16));
    assert_eq!(binomial(6, 3), 20.into());
    assert_eq!(binomial(-1, 3), (-1).into());
}

#[test]
fn parse_forms() {
    assert_eq!(parse_rational("-1/3"), Some(rat(-1, 3)));
    assert_eq!(parse_rational("0.5"), Some(rat(1, 2)));
    assert_eq!(parse_rational("2.5e-1"), Some(rat(1, 4)));
    assert_eq!(parse_rational("1/0"), None);
    assert_eq!(parse_rational("x"), None);
}

#[test]
fn context_rejects_low_digits() {
    assert!(PrecisionContext::new(10).is_err());
    assert!(PrecisionContext::new(15).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decimal_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..100_000) {
        let c = ctx();
        let x = c.frac(n, d);
        let s = x.to_decimal(55);
        let y = Real::parse(&s, c.bits()).unwrap();
        prop_assert!((&x - &y).abs() <= &c.eps(50) * &Real::max_ref(&c.real(1), &x.abs()).clone());
    }

    #[test]
    fn rational_real_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let c = ctx();
        let q = rat(n, d);
        let back = Rational::from(c.rational(&q).to_rational());
        let diff = (back - &q).abs();
        prop_assert!(diff < rat(1, 1) / Rational::from_integer(num_bigint_pow(10, 45)));
    }

    #[test]
    fn gamma_recurrence(n in 1i64..200, d in 1i64..50) {
        // Γ(x+1) = xΓ(x)
        let c = ctx();
        let x = c.frac(n, d);
        let g1 = gamma_real(&(&x + &c.real(1))).unwrap();
        let g0 = gamma_real(&x).unwrap();
        let rhs = &x * &g0;
        prop_assert!((&g1 - &rhs).abs() <= &c.eps(42) * &g1.abs());
    }

    #[test]
    fn exp_ln_inverse(n in 1i64..100_000, d in 1i64..1000) {
        let c = ctx();
        let x = c.frac(n, d);
        prop_assert!((&x.ln().exp() - &x).abs() <= &c.eps(44) * &x);
    }

    #[test]
    fn sin_cos_pythagoras(n in -10_000i64..10_000, d in 1i64..100) {
        let c = ctx();
        let (s, co) = c.frac(n, d).sin_cos();
        let one = &s.sqr() + &co.sqr();
        prop_assert!((&one - &c.real(1)).abs() <= c.eps(44));
    }
}

fn num_bigint_pow(b: i64, e: usize) -> num_bigint::BigInt {
    num_traits::pow(num_bigint::BigInt::from(b), e)
}
