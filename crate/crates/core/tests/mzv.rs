use proptest::prelude::*;
use szeta::error::Error;
use szeta::mzv::*;
use szeta::numkernel::rational::rat;
use szeta::numkernel::*;
use szeta::zerofinder::*;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(50).unwrap()
}

fn riemann() -> ZeroSequence {
    bessel_zeros(&rat(1, 2), 200, &ctx()).unwrap()
}

fn near(v: &Complex, q: Rational, bound: f64) {
    let c = ctx();
    let d = (&v.re - &c.rational(&q)).abs().to_f64();
    assert!(d <= bound + 1e-38, "{} vs {q}: {d:e} > {bound:e}", v.re.to_decimal(30));
    assert!(v.im.abs().to_f64() <= bound + 1e-38);
}

fn fact(n: i64) -> Rational {
    rat((1..=n).product(), 1)
}

#[test]
fn compositions() {
    assert_eq!(Composition::all(4, 2).len(), 3);
    assert_eq!(Composition::all(6, 3).len(), 10);
    assert!(Composition::all(2, 3).is_empty());
    assert!(Composition::new(vec![]).is_err());
    assert!(Composition::new(vec![2, 0]).is_err());
    let c = Composition::new(vec![3, 1, 2]).unwrap();
    assert_eq!((c.weight(), c.depth()), (6, 3));
    assert!(!Composition::new(vec![1]).unwrap().converges(1.0));
    assert!(Composition::new(vec![2, 1]).unwrap().converges(1.0));
}

#[test]
fn riemann_power_sums_and_tables() {
    let c = ctx();
    let t = power_sums_from_zeros(&riemann(), 2, 6, &c).unwrap();
    near(&t.values[0], rat(1, 6), t.truncation_error[0]);
    near(&t.values[1], rat(1, 90), t.truncation_error[1]);
    assert!(t.truncation_error[0] < 1e-6);
    assert!(t.truncation_error.windows(2).all(|w| w[1] <= w[0]));
    assert!(t.values.windows(2).all(|w| w[1].abs() < w[0].abs()));
    let m = mzv_tables(&t, 6).unwrap();
    for k in 0..=6 {
        near(&m.e[k], rat(1, 1) / fact(2 * k as i64 + 1), m.e_error[k]);
    }
    near(&m.h[2], rat(7, 360), m.h_error[2]);
    assert_eq!(m.e[1].re, m.h[1].re);
    assert!(m.convolution_defect().to_f64() < 1e-40);
}

#[test]
fn depth_one_newton() {
    let c = ctx();
    let p = c.bits();
    let t = PowerSumTable { s: 2, values: vec![Complex::from_frac(1, 3, p)], truncation_error: vec![0.0] };
    let (e, _) = newton_e_from_p(&t, 1).unwrap();
    let (h, _) = newton_h_from_p(&t, 1).unwrap();
    assert_eq!(e[1].re, h[1].re);
    assert!(newton_e_from_p(&t, 2).is_err());
}

#[test]
fn nested_sums() {
    let c = ctx();
    let s = riemann();
    let (v, b) = mzv_nested_sum(&s, &Composition::repeated(2, 2).unwrap(), 1, false, &c).unwrap();
    near(&v, rat(1, 120), b);
    let (v, b) = mzv_nested_sum(&s, &Composition::repeated(2, 2).unwrap(), 1, true, &c).unwrap();
    near(&v, rat(7, 360), b);
    // depth one equals the power sum
    let (v, _) = mzv_nested_sum(&s, &Composition::new(vec![3]).unwrap(), 2, false, &c).unwrap();
    let t = power_sums_from_zeros(&s, 6, 1, &c).unwrap();
    assert!((&v - &t.values[0]).abs().to_f64() < 1e-45);
    // ζ(3,2) = 3ζ(2)ζ(3) − 11ζ(5)/2, here divided by π⁵
    let (v, b) = mzv_nested_sum(&s, &Composition::new(vec![3, 2]).unwrap(), 1, false, &c).unwrap();
    let pi = Real::pi(c.bits());
    let z3 = Real::parse("1.2020569031595942853997381615114499907649862923404988817922715553", c.bits()).unwrap();
    let z5 = Real::parse("1.0369277551433699263313654864570341680570809195019128119741926779", c.bits()).unwrap();
    let want = &(&z3 / &pi.powi(3)).div_i64(2) - &(&z5.mul_i64(11) / &pi.powi(5)).div_i64(2);
    assert!((&v.re - &want).abs().to_f64() <= b + 1e-38, "{} {b:e}", v.re.to_decimal(30));
    assert!(b < 1e-6);
    // a part with a divergent power sum is refused
    let r = mzv_nested_sum(&s, &Composition::new(vec![3, 1]).unwrap(), 1, false, &c);
    assert!(matches!(r, Err(Error::Divergence(_))));
}

#[test]
fn kummer_depth_one() {
    let c = ctx();
    let s = kummer_zeros_diagonal(&rat(1, 1), 200, &c).unwrap();
    let (v, b) = mzv_nested_sum(&s, &Composition::new(vec![2]).unwrap(), 1, false, &c).unwrap();
    near(&v, rat(-1, 12), b);
    assert!(b < 1e-6);
}

#[test]
fn divergence_and_depth_guards() {
    let c = ctx();
    let a = airy_zeros(20, &c).unwrap();
    assert!(matches!(power_sums_from_zeros(&a, 1, 2, &c), Err(Error::Divergence(_))));
    let comp = Composition::repeated(2, 7).unwrap();
    assert!(matches!(mzv_nested_sum(&a, &comp, 1, false, &c), Err(Error::DepthLimit { .. })));
    assert!(matches!(average_direct(&a, 2, 7, 7, false, &c), Err(Error::DepthLimit { .. })));
}

#[test]
fn dissection_riemann() {
    let c = ctx();
    let t = power_sums_from_zeros(&riemann(), 2, 6, &c).unwrap();
    let m = mzv_tables(&t, 6).unwrap();
    let d = dissect_mzv(&m.e, 2, &c).unwrap();
    let bound = dissect_bound(&m.e.iter().map(|x| x.abs().to_f64()).collect::<Vec<_>>(), &m.e_error, 2);
    near(&d[0], rat(1, 1), bound[0]);
    near(&d[1], rat(1, 90), bound[1]);
    // ζ({4}²) = π⁸/113400
    near(&d[2], rat(1, 113400), bound[2]);
    assert!(dissect_mzv(&m.e, 0, &c).is_err());
}

#[test]
fn averages_riemann() {
    let c = ctx();
    let s = riemann();
    let a = averages(&s, 2, 2, 1, false, 5, &c).unwrap();
    near(&a.value, rat(1, 90), a.error);
    let a = averages(&s, 2, 2, 2, false, 5, &c).unwrap();
    near(&a.value, rat(1, 120), a.error);
    let (dv, db) = a.direct.unwrap();
    assert!((&dv - &a.value).abs().to_f64() <= db + a.error);
    let a = averages(&s, 2, 2, 3, false, 5, &c).unwrap();
    assert!(a.value.is_zero());
    for n in 1..=5 {
        for k in 1..=n {
            for starred in [false, true] {
                let a = averages(&s, 2, n, k, starred, 5, &c).unwrap();
                let (dv, db) = a.direct.unwrap();
                assert!((&dv - &a.value).abs().to_f64() <= db + a.error + 1e-38, "n={n} k={k}");
            }
        }
    }
}

#[test]
fn zeta_from_series_airy() {
    // Ψ = Ai(z)/Ai(0)·e^{−(Ai′(0)/Ai(0)) z}: genus 1, first value ζ_Ai(2)
    use szeta::powerseries::*;
    let c = ctx();
    let p = c.bits();
    let (a0, a1) = szeta::zerofinder::eval::airy_origin(p);
    let n = 8;
    let mut co = vec![Complex::zero(p); n];
    co[0] = Complex::one(p);
    co[1] = Complex::from_real(&a1 / &a0);
    for k in 3..n {
        co[k] = co[k - 3].div_i64((k * (k - 1)) as i64);
    }
    let f = TruncatedSeries::new(co);
    let norm = WeierstrassNormalization::new(0, vec![Complex::zero(p), Complex::from_real(&a1 / &a0)], 1).unwrap();
    let psi = weierstrass_normalize(&f, &norm).unwrap();
    let z = zeta_from_series(&psi, &norm).unwrap();
    assert!(z[0].re.to_decimal(10).starts_with("0.531457"), "{}", z[0].re.to_decimal(10));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn newton_round_trip(v in prop::collection::vec(-1000i64..1000, 1..9)) {
        let c = ctx();
        let p = c.bits();
        let values: Vec<Complex> = v.iter().map(|x| Complex::from_frac(*x, 997, p)).collect();
        let n = values.len();
        let t = PowerSumTable { s: 2, values: values.clone(), truncation_error: vec![0.0; n] };
        let (e, _) = newton_e_from_p(&t, n).unwrap();
        let back = p_from_e(&e);
        for (a, b) in back.iter().zip(&values) {
            prop_assert!((a - b).abs() <= c.eps(40));
        }
    }

    #[test]
    fn star_convolution(v in prop::collection::vec(-1000i64..1000, 1..9)) {
        let c = ctx();
        let p = c.bits();
        let n = v.len();
        let values: Vec<Complex> = v.iter().map(|x| Complex::from_frac(*x, 311, p)).collect();
        let t = PowerSumTable { s: 2, values, truncation_error: vec![0.0; n] };
        let m = mzv_tables(&t, n).unwrap();
        let scale = m.e.iter().chain(&m.h).map(|x| x.abs().to_f64()).fold(1.0, f64::max);
        prop_assert!(m.convolution_defect().to_f64() <= 1e-40 * scale * scale);
    }

    #[test]
    fn composition_count(n in 1u32..12, k in 1usize..6) {
        // C(n−1, k−1)
        let want = rational::binomial(n as i64 - 1, k as i64 - 1);
        prop_assert_eq!(num_bigint::BigInt::from(Composition::all(n, k).len()), want);
    }
}
