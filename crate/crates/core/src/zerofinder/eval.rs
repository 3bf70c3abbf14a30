//! Taylor-series evaluation of j_ν, Ai, Ai′ and ₁F₁(a; 2a; z) at raised
//! precision. The number of guard bits is the log₂ of the largest term, so
//! cancellation among the terms never eats into the requested accuracy.

use std::f64::consts::LN_2;

use crate::numkernel::{gamma_real, Complex, Real};

const EXTRA: u32 = 16;

/// log₂ of the largest term of Σ (−z²/4)^k / (k!(ν+1)_k).
pub fn bessel_max_term_bits(nu: f64, az: f64) -> u32 {
    let x = (az * az / 4.0).max(1e-300).ln();
    let (mut lt, mut best) = (0f64, 0f64);
    let mut k = 1f64;
    loop {
        lt += x - k.ln() - (nu + k).abs().max(1e-300).ln();
        best = best.max(lt);
        if k > az && lt < best - 40.0 {
            break;
        }
        k += 1.0;
    }
    (best / LN_2).ceil().max(0.0) as u32
}

/// log₂ of the largest term of the Airy Maclaurin series at |z|.
pub fn airy_max_term_bits(az: f64) -> u32 {
    let l3 = 3.0 * az.max(1e-300).ln();
    let (mut lu, mut lv) = (0f64, az.max(1e-300).ln());
    let mut best = lu.max(lv);
    let mut k = 0f64;
    loop {
        lu += l3 - ((3.0 * k + 3.0) * (3.0 * k + 2.0)).ln();
        lv += l3 - ((3.0 * k + 4.0) * (3.0 * k + 3.0)).ln();
        best = best.max(lu).max(lv);
        if k > az.powf(1.5) && lu.max(lv) < best - 40.0 {
            break;
        }
        k += 1.0;
    }
    (best / LN_2).ceil().max(0.0) as u32
}

/// log₂ of the largest term of ₁F₁(a; 2a; z) at |z|.
pub fn kummer_max_term_bits(a: f64, az: f64) -> u32 {
    let lz = az.max(1e-300).ln();
    let (mut lt, mut best) = (0f64, 0f64);
    let mut k = 0f64;
    loop {
        lt += (a + k).abs().max(1e-300).ln() - (2.0 * a + k).abs().max(1e-300).ln() + lz
            - (k + 1.0).ln();
        best = best.max(lt);
        if k > 2.0 * az && lt < best - 40.0 {
            break;
        }
        k += 1.0;
    }
    (best / LN_2).ceil().max(0.0) as u32
}

/// (j_ν(z), j_ν′(z)) for real z, accurate to about 2^(−p).
pub fn bessel_real(nu: &Real, z: &Real, p: u32) -> (Real, Real) {
    let guard = bessel_max_term_bits(nu.to_f64(), z.to_f64().abs()) + EXTRA;
    let wp = p + guard;
    let z = z.with_prec(wp);
    let nu = nu.with_prec(wp);
    let x = -(z.sqr().mul_2k(-2));
    let mut t = Real::one(wp);
    let mut f = Real::one(wp);
    let mut fd = Real::zero(wp);
    let eps = -(wp as i64) - 4;
    let zmag = z.to_f64().abs();
    let mut k = 1i64;
    loop {
        let den = &(&nu + &Real::from_i64(k, wp)) * &Real::from_i64(k, wp);
        t = &(&t * &x) / &den;
        f = &f + &t;
        let kt = t.mul_i64(k);
        fd = &fd + &kt;
        if (k as f64) > zmag / 2.0 + 2.0 && (kt.is_zero() || kt.top().unwrap() < eps) {
            break;
        }
        k += 1;
    }
    let d = if z.is_zero() { Real::zero(wp) } else { &fd.mul_2k(1) / &z };
    (f.with_prec(p), d.with_prec(p))
}

/// j_ν at complex z.
pub fn bessel_complex(nu: &Real, z: &Complex, p: u32) -> Complex {
    let az = z.log2_abs().exp2();
    let guard = bessel_max_term_bits(nu.to_f64(), az) + EXTRA;
    let wp = p + guard;
    let z = z.with_prec(wp);
    let nu = nu.with_prec(wp);
    let x = -(z.sqr().mul_2k(-2));
    let mut t = Complex::one(wp);
    let mut f = Complex::one(wp);
    let eps = -(wp as f64) - 4.0;
    let mut k = 1i64;
    loop {
        let den = (&nu + &Real::from_i64(k, wp)).mul_i64(k);
        t = (&t * &x).scale(&den.recip());
        f = &f + &t;
        if (k as f64) > az / 2.0 + 2.0 && (t.is_zero() || t.log2_abs() < eps) {
            break;
        }
        k += 1;
    }
    f.with_prec(p)
}

/// (Ai(0), Ai′(0)) at precision p.
pub fn airy_origin(p: u32) -> (Real, Real) {
    let wp = p + 16;
    let three = Real::from_i64(3, wp);
    let g13 = gamma_real(&Real::from_frac(1, 3, wp)).expect("Γ(1/3)");
    let g23 = gamma_real(&Real::from_frac(2, 3, wp)).expect("Γ(2/3)");
    let c1 = (&three.pow(&Real::from_frac(2, 3, wp)) * &g23).recip();
    let c2 = (&three.pow(&Real::from_frac(1, 3, wp)) * &g13).recip();
    (c1.with_prec(p), (-c2).with_prec(p))
}

/// (Ai(z), Ai′(z)) for real z; `origin` holds (Ai(0), Ai′(0)) at ≥ p bits.
pub fn airy_real(z: &Real, origin: &(Real, Real), p: u32) -> (Real, Real) {
    let az = z.to_f64().abs();
    let guard = airy_max_term_bits(az) + EXTRA;
    let wp = p + guard;
    let z = z.with_prec(wp);
    let z3 = &z.sqr() * &z;
    let mut u = origin.0.with_prec(wp);
    let mut v = &origin.1.with_prec(wp) * &z;
    let mut f = &u + &v;
    let mut fd = v.clone();
    let eps = -(wp as i64) - 4;
    let mut k = 0i64;
    loop {
        u = &(&u * &z3) / &Real::from_i64((3 * k + 3) * (3 * k + 2), wp);
        v = &(&v * &z3) / &Real::from_i64((3 * k + 4) * (3 * k + 3), wp);
        let du = u.mul_i64(3 * k + 3);
        let dv = v.mul_i64(3 * k + 4);
        f = &(&f + &u) + &v;
        fd = &(&fd + &du) + &dv;
        let small = |x: &Real| x.is_zero() || x.top().unwrap() < eps;
        if (k as f64) > az.powf(1.5) / 3.0 + 1.0 && small(&du) && small(&dv) {
            break;
        }
        k += 1;
    }
    let d = if z.is_zero() { origin.1.with_prec(wp) } else { &fd / &z };
    (f.with_prec(p), d.with_prec(p))
}

/// (Ai(z), Ai′(z)) for complex z.
pub fn airy_complex(z: &Complex, origin: &(Real, Real), p: u32) -> (Complex, Complex) {
    let az = z.log2_abs().exp2();
    let guard = airy_max_term_bits(az) + EXTRA;
    let wp = p + guard;
    let z = z.with_prec(wp);
    let z3 = &z.sqr() * &z;
    let mut u = Complex::from_real(origin.0.with_prec(wp));
    let mut v = &Complex::from_real(origin.1.with_prec(wp)) * &z;
    let mut f = &u + &v;
    let mut fd = v.clone();
    let eps = -(wp as f64) - 4.0;
    let mut k = 0i64;
    loop {
        u = (&u * &z3).div_i64((3 * k + 3) * (3 * k + 2));
        v = (&v * &z3).div_i64((3 * k + 4) * (3 * k + 3));
        let du = u.mul_i64(3 * k + 3);
        let dv = v.mul_i64(3 * k + 4);
        f = &(&f + &u) + &v;
        fd = &(&fd + &du) + &dv;
        let small = |x: &Complex| x.is_zero() || x.log2_abs() < eps;
        if (k as f64) > az.powf(1.5) / 3.0 + 1.0 && small(&du) && small(&dv) {
            break;
        }
        k += 1;
    }
    let d = if z.is_zero() { Complex::from_real(origin.1.with_prec(wp)) } else { &fd / &z };
    (f.with_prec(p), d.with_prec(p))
}

/// ₁F₁(a; 2a; z).
pub fn kummer_diagonal_complex(a: &Real, z: &Complex, p: u32) -> Complex {
    let az = z.log2_abs().exp2();
    let guard = kummer_max_term_bits(a.to_f64(), az) + EXTRA;
    let wp = p + guard;
    let z = z.with_prec(wp);
    let a = a.with_prec(wp);
    let two_a = a.mul_2k(1);
    let mut t = Complex::one(wp);
    let mut f = Complex::one(wp);
    let eps = -(wp as f64) - 4.0;
    let mut k = 0i64;
    loop {
        let kk = Real::from_i64(k, wp);
        let r = &(&a + &kk) / &(&(&two_a + &kk) * &Real::from_i64(k + 1, wp));
        t = (&t * &z).scale(&r);
        f = &f + &t;
        if (k as f64) > 2.0 * az + 2.0 && (t.is_zero() || t.log2_abs() < eps) {
            break;
        }
        k += 1;
    }
    f.with_prec(p)
}
