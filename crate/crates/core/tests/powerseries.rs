use proptest::prelude::*;
use szeta::error::Error;
use szeta::mzv::zeta_from_series;
use szeta::numkernel::*;
use szeta::powerseries::*;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(50).unwrap()
}

fn max_diff(a: &TruncatedSeries, b: &TruncatedSeries) -> f64 {
    a.coefficients
        .iter()
        .zip(&b.coefficients)
        .map(|(x, y)| (x - y).abs().to_f64())
        .fold(0.0, f64::max)
}

/// Taylor series of e^{cz}.
fn exp_series(c: i64, order: usize, p: u32) -> TruncatedSeries {
    let mut v = Vec::with_capacity(order);
    let mut t = Real::one(p);
    for k in 0..order {
        v.push(t.clone());
        t = t.mul_i64(c).div_i64(k as i64 + 1);
    }
    TruncatedSeries::from_reals(v)
}

#[test]
fn geometric_reciprocal() {
    let p = ctx().bits();
    let one_minus = TruncatedSeries::from_ints(&[1, -1], 12, p);
    let r = ps_recip(&one_minus).unwrap();
    for k in 0..12 {
        assert!((&r.coeff(k).re - &Real::one(p)).abs().to_f64() < 1e-60);
    }
    assert_eq!(ps_recip(&TruncatedSeries::from_ints(&[0, 1], 4, p)).unwrap_err(), Error::ZeroConstantTerm);
}

#[test]
fn exp_times_exp_inverse() {
    let p = ctx().bits();
    let prod = ps_mul(&exp_series(3, 20, p), &exp_series(-3, 20, p));
    assert!(max_diff(&prod, &TruncatedSeries::one(20, p)) < 1e-45);
}

#[test]
fn logderiv_of_exponential() {
    let p = ctx().bits();
    let l = ps_logderiv(&exp_series(5, 16, p)).unwrap();
    assert!((&l.coeff(0).re - &Real::from_i64(5, p)).abs().to_f64() < 1e-45);
    for k in 1..l.order() {
        assert!(l.coeff(k).abs().to_f64() < 1e-40);
    }
}

#[test]
fn ps_exp_matches_taylor() {
    let p = ctx().bits();
    let g = TruncatedSeries::from_ints(&[0, 2], 15, p);
    assert!(max_diff(&ps_exp(&g), &exp_series(2, 15, p)) < 1e-45);
}

#[test]
fn dissect_and_interleave() {
    let p = ctx().bits();
    let a = TruncatedSeries::from_ints(&[0, 1, 2, 3, 4, 5, 6, 7, 8], 9, p);
    let evens = ps_dissect(&a, 2, 0);
    let odds = ps_dissect(&a, 2, 1);
    assert_eq!(evens.order(), 5);
    assert_eq!(odds.coeff(2).re.to_f64(), 5.0);
    let back = ps_interleave(&[evens, odds], 9);
    assert_eq!(max_diff(&back, &a), 0.0);
}

#[test]
fn root_of_unity_product_of_exponential() {
    // e^z e^{−z} = 1; (1+z)(1−z) = 1 − z²
    let c = ctx();
    let p = c.bits();
    let r = ps_root_of_unity_product(&exp_series(1, 12, p), 2, &c).unwrap();
    assert!(max_diff(&r, &TruncatedSeries::one(12, p)) < 1e-45);
    let r = ps_root_of_unity_product(&TruncatedSeries::from_ints(&[1, 1], 6, p), 2, &c).unwrap();
    assert!(max_diff(&r, &TruncatedSeries::from_ints(&[1, 0, -1], 6, p)) < 1e-45);
    // (1+z)(1+ωz)(1+ω²z) = 1 + z³
    let r = ps_root_of_unity_product(&TruncatedSeries::from_ints(&[1, 1], 7, p), 3, &c).unwrap();
    assert!(max_diff(&r, &TruncatedSeries::from_ints(&[1, 0, 0, 1], 7, p)) < 1e-45);
}

#[test]
fn zeta_from_sine_product() {
    // sin(π√z)/(π√z) = Σ (−π²)^k z^k/(2k+1)!, zeros k², so ζ(2)/π² = 1/6 after
    // scaling z → z/π²: use Σ (−1)^k z^k/(2k+1)!
    let c = ctx();
    let p = c.bits();
    let mut v = Vec::new();
    let mut f = Real::one(p);
    for k in 0..10i64 {
        v.push(if k % 2 == 0 { f.clone() } else { -f.clone() });
        f = f.div_i64((2 * k + 2) * (2 * k + 3));
    }
    let psi = TruncatedSeries::from_reals(v);
    let norm = WeierstrassNormalization::new(0, vec![], 0).unwrap();
    let z = zeta_from_series(&psi, &norm).unwrap();
    assert!((&z[0].re - &c.frac(1, 6)).abs().to_f64() < 1e-45);
    assert!((&z[1].re - &c.frac(1, 90)).abs().to_f64() < 1e-45);
    let one = TruncatedSeries::one(6, p);
    assert!(zeta_from_series(&one, &norm).unwrap().iter().all(|x| x.is_zero()));
}

#[test]
fn normalization_rejects_high_degree() {
    let p = ctx().bits();
    let poly = vec![Complex::zero(p), Complex::one(p), Complex::one(p)];
    assert!(WeierstrassNormalization::new(0, poly, 1).is_err());
}

#[test]
fn normalize_strips_exponential() {
    let p = ctx().bits();
    let norm = WeierstrassNormalization::new(0, vec![Complex::zero(p), Complex::from_i64(3, p)], 1).unwrap();
    let n = weierstrass_normalize(&exp_series(3, 10, p), &norm).unwrap();
    assert!(max_diff(&n, &TruncatedSeries::one(10, p)) < 1e-45);
}

fn series_strategy() -> impl Strategy<Value = Vec<i64>> {
    (1i64..50).prop_flat_map(|c0| {
        prop::collection::vec(-30i64..30, 1..12).prop_map(move |mut v| {
            v.insert(0, c0);
            v
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn recip_round_trip(v in series_strategy()) {
        let p = ctx().bits();
        let a = TruncatedSeries::from_ints(&v, v.len(), p);
        let prod = ps_mul(&a, &ps_recip(&a).unwrap());
        let scale = prod.max_abs().to_f64().max(1.0);
        prop_assert!(max_diff(&prod, &TruncatedSeries::one(v.len(), p)) < 1e-40 * scale);
    }

    #[test]
    fn mul_commutes(v in series_strategy(), w in series_strategy()) {
        let p = ctx().bits();
        let n = v.len().min(w.len());
        let a = TruncatedSeries::from_ints(&v, n, p);
        let b = TruncatedSeries::from_ints(&w, n, p);
        prop_assert_eq!(max_diff(&ps_mul(&a, &b), &ps_mul(&b, &a)), 0.0);
    }

    #[test]
    fn dissect_interleave_identity(v in series_strategy(), m in 1usize..5) {
        let p = ctx().bits();
        let a = TruncatedSeries::from_ints(&v, v.len(), p);
        let parts: Vec<_> = (0..m).map(|r| ps_dissect(&a, m, r)).collect();
        prop_assert_eq!(max_diff(&ps_interleave(&parts, v.len()), &a), 0.0);
    }
}
