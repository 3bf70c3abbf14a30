//! Γ via the Stirling series after an upward shift, with reflection for
//! Re z < 1/2. Pochhammer symbols route through Γ-ratios unless the index is
//! a nonnegative integer.

use num_traits::ToPrimitive;

use super::complex::Complex;
use super::rational::bernoulli_even;
use super::real::Real;
use super::PrecisionContext;
use crate::error::{Error, Result};

fn pole_index(x: &Real) -> Option<i64> {
    if x.is_positive() {
        return None;
    }
    x.to_integer().and_then(|n| n.to_i64())
}

/// Shift target so that the Stirling tail e^(−2πx) is below 2^(−wp).
fn stirling_threshold(wp: u32) -> f64 {
    0.115 * wp as f64 + 4.0
}

fn stirling_ln_gamma_real(y: &Real, wp: u32) -> Real {
    let y = y.with_prec(wp);
    let half = Real::from_frac(1, 2, wp);
    let ln2pi = Real::pi(wp).mul_2k(1).ln();
    let mut s = &(&(&y - &half) * &y.ln()) - &y;
    s = &s + &ln2pi.mul_2k(-1);
    let y2 = y.sqr();
    let mut ypow = y.clone();
    let eps = -(wp as i64) - 4;
    let mut prev = f64::INFINITY;
    for k in 1.. {
        let b = Real::from_ratio(&bernoulli_even(k), wp);
        let term = &b / &ypow.mul_i64((2 * k as i64) * (2 * k as i64 - 1));
        let t = term.log2_abs();
        if term.is_zero() || term.top().unwrap() < eps || t > prev {
            break;
        }
        prev = t;
        s = &s + &term;
        ypow = &ypow * &y2;
    }
    s
}

fn stirling_ln_gamma_complex(y: &Complex, wp: u32) -> Complex {
    let y = y.with_prec(wp);
    let half = Complex::from_frac(1, 2, wp);
    let ln2pi = Real::pi(wp).mul_2k(1).ln();
    let mut s = &(&(&y - &half) * &y.ln()) - &y;
    s = &s + &Complex::from_real(ln2pi.mul_2k(-1));
    let y2 = y.sqr();
    let mut ypow = y.clone();
    let eps = -(wp as f64) - 4.0;
    let mut prev = f64::INFINITY;
    for k in 1.. {
        let b = Real::from_ratio(&bernoulli_even(k), wp);
        let den = ypow.mul_i64((2 * k as i64) * (2 * k as i64 - 1));
        let term = &Complex::from_real(b) / &den;
        let t = term.log2_abs();
        if term.is_zero() || t < eps || t > prev {
            break;
        }
        prev = t;
        s = &s + &term;
        ypow = &ypow * &y2;
    }
    s
}

/// Γ(x) for real x at the precision of `x`.
pub fn gamma_real(x: &Real) -> Result<Real> {
    if let Some(n) = pole_index(x) {
        return Err(Error::Pole(n.to_string()));
    }
    let p = x.prec();
    let mag = x.to_f64().abs();
    let guard = 32 + (mag.max(2.0) * mag.max(2.0).ln()).log2().max(0.0) as u32;
    let wp = p + guard;
    let x = x.with_prec(wp);
    if x < Real::from_frac(1, 2, wp) {
        // Γ(x) = π / (sin(πx) Γ(1−x))
        let pi = Real::pi(wp + 16);
        let s = (&pi * &x.with_prec(wp + 16)).sin();
        let g = gamma_real(&(&Real::one(wp) - &x))?;
        return Ok((&pi / &(&s * &g)).with_prec(p));
    }
    let x0 = stirling_threshold(wp);
    let xf = x.to_f64();
    let shift = if xf < x0 { (x0 - xf).ceil() as i64 } else { 0 };
    let mut prod = Real::one(wp);
    for i in 0..shift {
        prod = &prod * &(&x + &Real::from_i64(i, wp));
    }
    let y = &x + &Real::from_i64(shift, wp);
    let lg = stirling_ln_gamma_real(&y, wp);
    Ok((&lg.exp() / &prod).with_prec(p))
}

/// 1/Γ(x), zero at the poles.
pub fn rgamma_real(x: &Real) -> Real {
    match gamma_real(x) {
        Ok(g) => g.recip(),
        Err(_) => Real::zero(x.prec()),
    }
}

fn sin_complex(z: &Complex) -> Complex {
    // sin(a+ıb) = sin a cosh b + ı cos a sinh b
    let (s, c) = z.re.sin_cos();
    let eb = z.im.exp();
    let emb = eb.recip();
    let ch = (&eb + &emb).mul_2k(-1);
    let sh = (&eb - &emb).mul_2k(-1);
    Complex::new(&s * &ch, &c * &sh)
}

fn gamma_complex_at(z: &Complex, p: u32) -> Result<Complex> {
    if z.is_real() {
        return gamma_real(&z.re.with_prec(p)).map(Complex::from_real);
    }
    let mag = z.log2_abs().exp2();
    let guard = 32 + (mag.max(2.0) * mag.max(2.0).ln()).log2().max(0.0) as u32;
    let wp = p + guard;
    let z = z.with_prec(wp);
    if z.re < Real::from_frac(1, 2, wp) {
        let pi = Real::pi(wp);
        let s = sin_complex(&z.scale(&pi));
        let g = gamma_complex_at(&(&Complex::one(wp) - &z), wp)?;
        return Ok((&Complex::from_real(pi) / &(&s * &g)).with_prec(p));
    }
    let x0 = stirling_threshold(wp);
    let a = z.log2_abs().exp2();
    let shift = if a < x0 { (x0 - z.re.to_f64()).ceil().max(0.0) as i64 } else { 0 };
    let mut prod = Complex::one(wp);
    for i in 0..shift {
        prod = &prod * &(&z + &Complex::from_i64(i, wp));
    }
    let y = &z + &Complex::from_i64(shift, wp);
    let lg = stirling_ln_gamma_complex(&y, wp);
    Ok((&lg.exp() / &prod).with_prec(p))
}

pub fn gamma(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    gamma_complex_at(z, ctx.bits())
}

pub fn rgamma(z: &Complex, ctx: &PrecisionContext) -> Complex {
    match gamma(z, ctx) {
        Ok(g) => g.recip(),
        Err(_) => Complex::zero(ctx.bits()),
    }
}

/// (x)_n for real x and real n.
pub fn pochhammer_real(x: &Real, n: &Real) -> Result<Real> {
    let p = x.prec().max(n.prec());
    if let Some(k) = n.to_integer().and_then(|k| k.to_i64()) {
        if (0..1_000_000).contains(&k) {
            let mut acc = Real::one(p);
            for i in 0..k {
                acc = &acc * &(x + &Real::from_i64(i, p));
            }
            return Ok(acc);
        }
    }
    let xn = x + n;
    let top = gamma_real(&xn.with_prec(p))?;
    Ok(&top * &rgamma_real(&x.with_prec(p)))
}

pub fn pochhammer(z: &Complex, n: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let p = ctx.bits();
    if z.is_real() && n.is_real() {
        return pochhammer_real(&z.re.with_prec(p), &n.re.with_prec(p)).map(Complex::from_real);
    }
    if n.is_real() {
        if let Some(k) = n.re.to_integer().and_then(|k| k.to_i64()) {
            if (0..1_000_000).contains(&k) {
                let mut acc = Complex::one(p);
                for i in 0..k {
                    acc = &acc * &(z + &Complex::from_i64(i, p));
                }
                return Ok(acc);
            }
        }
    }
    let top = gamma(&(z + n), ctx)?;
    Ok(&top * &rgamma(z, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    fn rel(a: &Real, b: &Real) -> f64 {
        (a - b).abs().log2_abs() - b.log2_abs()
    }

    #[test]
    fn factorial_values() {
        let c = ctx();
        let p = c.bits();
        assert!(rel(&gamma_real(&Real::one(p)).unwrap(), &Real::one(p)) < -160.0);
        assert!(rel(&gamma_real(&Real::from_i64(5, p)).unwrap(), &Real::from_i64(24, p)) < -160.0);
        let g = gamma_real(&Real::from_i64(30, p)).unwrap();
        let f = Real::from_bigint(super::super::rational::factorial(29), p);
        assert!(rel(&g, &f) < -160.0);
    }

    #[test]
    fn reflection_oracle() {
        let p = ctx().bits();
        let a = gamma_real(&Real::from_frac(5, 6, p)).unwrap();
        let b = gamma_real(&Real::from_frac(1, 6, p)).unwrap();
        let two_pi = Real::pi(p).mul_2k(1);
        assert!(rel(&(&a * &b), &two_pi) < -160.0);
    }

    #[test]
    fn half_integer() {
        let p = ctx().bits();
        let g = gamma_real(&Real::from_frac(1, 2, p)).unwrap();
        assert!(rel(&g, &Real::pi(p).sqrt()) < -160.0);
        let g = gamma_real(&Real::from_frac(-3, 2, p)).unwrap();
        let want = &Real::pi(p).sqrt() * &Real::from_frac(4, 3, p);
        assert!(rel(&g, &want) < -160.0);
    }

    #[test]
    fn poles() {
        let p = 100;
        assert!(matches!(gamma_real(&Real::zero(p)), Err(Error::Pole(_))));
        assert!(matches!(gamma_real(&Real::from_i64(-3, p)), Err(Error::Pole(_))));
        assert!(rgamma_real(&Real::from_i64(-2, p)).is_zero());
    }

    #[test]
    fn complex_recurrence() {
        let c = ctx();
        let p = c.bits();
        let z = Complex::new(Real::from_frac(3, 2, p), Real::from_frac(7, 5, p));
        let g1 = gamma(&(&z + &Complex::one(p)), &c).unwrap();
        let g0 = gamma(&z, &c).unwrap();
        let d = (&g1 - &(&z * &g0)).abs();
        assert!(d.log2_abs() - g1.abs().log2_abs() < -150.0);
        // |Γ(ı)|² = π / sinh π
        let gi = gamma(&Complex::i(p), &c).unwrap();
        let pi = Real::pi(p);
        let e = pi.exp();
        let sinh = (&e - &e.recip()).mul_2k(-1);
        assert!(rel(&gi.norm_sqr(), &(&pi / &sinh)) < -150.0);
    }

    #[test]
    fn pochhammer_examples() {
        let c = ctx();
        let p = c.bits();
        let z = Complex::from_frac(3, 2, p);
        let v = pochhammer(&z, &Complex::from_i64(2, p), &c).unwrap();
        assert!(rel(&v.re, &Real::from_frac(15, 4, p)) < -160.0);
        let v = pochhammer(&z, &Complex::zero(p), &c).unwrap();
        assert_eq!(v.re, Real::one(p));
        let v = pochhammer(&Complex::from_frac(5, 6, p), &Complex::from_frac(1, 3, p), &c).unwrap();
        assert!(v.re.to_decimal(6).starts_with("0.82187"));
    }
}
