//! Generalized hypergeometric series pFq by direct summation.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::complex::Complex;
use super::real::Real;
use super::PrecisionContext;
use crate::error::{Error, Result};

/// Some(n) when c is the integer −n, n ≥ 0.
fn nonpositive_integer(c: &Complex) -> Option<u64> {
    if !c.im.is_zero() || c.re.is_positive() {
        return None;
    }
    c.re.to_integer().map(|n: BigInt| (-n).to_u64().unwrap_or(u64::MAX))
}

struct Pass {
    sum: Complex,
    max_term_log2: f64,
}

fn sum_series(
    upper: &[Complex],
    lower: &[Complex],
    z: &Complex,
    stop: Option<u64>,
    ctx: &PrecisionContext,
    wp: u32,
) -> Result<Pass> {
    let up: Vec<Complex> = upper.iter().map(|a| a.with_prec(wp)).collect();
    let lo: Vec<Complex> = lower.iter().map(|b| b.with_prec(wp)).collect();
    let z = z.with_prec(wp);
    let tol = ctx.series_tol.log2_abs();
    let mut term = Complex::one(wp);
    let mut sum = Complex::one(wp);
    let mut max_term_log2 = 0f64;
    let mut small_run = 0;
    let mut k: u64 = 0;
    loop {
        if let Some(m) = stop {
            if k >= m {
                break;
            }
        }
        if k as usize >= ctx.max_terms {
            return Err(Error::Divergence(format!(
                "pFq: {} terms without reaching tolerance",
                ctx.max_terms
            )));
        }
        let kk = Complex::from_i64(k as i64, wp);
        let mut num = z.clone();
        for a in &up {
            num = &num * &(a + &kk);
        }
        let mut den = Complex::from_i64(k as i64 + 1, wp);
        for b in &lo {
            den = &den * &(b + &kk);
        }
        term = &(&term * &num) / &den;
        sum = &sum + &term;
        k += 1;
        let t = term.log2_abs();
        max_term_log2 = max_term_log2.max(t);
        if stop.is_none() {
            if term.is_zero() || t - sum.log2_abs() < tol {
                small_run += 1;
                if small_run >= 2 {
                    break;
                }
            } else {
                small_run = 0;
            }
        }
    }
    Ok(Pass { sum, max_term_log2 })
}

/// pFq(upper; lower; z). Terminating series are summed to their last term;
/// working precision is raised when the terms cancel heavily.
pub fn hyp_pfq(
    upper: &[Complex],
    lower: &[Complex],
    z: &Complex,
    ctx: &PrecisionContext,
) -> Result<Complex> {
    let p = ctx.bits();
    let stop = upper.iter().filter_map(nonpositive_integer).min();
    for b in lower {
        if let Some(n) = nonpositive_integer(b) {
            match stop {
                Some(s) if s <= n => {}
                _ => {
                    return Err(Error::Parameter(format!(
                        "lower parameter {} is a nonpositive integer",
                        b.re.to_decimal(10)
                    )))
                }
            }
        }
    }
    if z.is_zero() {
        return Ok(Complex::one(p));
    }
    if stop.is_none() {
        let (np, nq) = (upper.len(), lower.len());
        if np > nq + 1 {
            return Err(Error::Divergence(format!("{np}F{nq} diverges for z ≠ 0")));
        }
        if np == nq + 1 && !(z.abs() < Real::one(p)) {
            return Err(Error::Divergence(format!("{np}F{nq} needs |z| < 1")));
        }
    }
    let mut guard = 16u32;
    for _ in 0..5 {
        let pass = sum_series(upper, lower, z, stop, ctx, p + guard)?;
        let loss = if pass.sum.is_zero() {
            f64::INFINITY
        } else {
            pass.max_term_log2 - pass.sum.log2_abs()
        };
        if loss.is_finite() && loss + 12.0 <= guard as f64 {
            return Ok(pass.sum.with_prec(p));
        }
        if pass.sum.is_zero() && stop.is_some() {
            return Ok(pass.sum.with_prec(p));
        }
        let need = if loss.is_finite() { loss } else { guard as f64 * 2.0 };
        guard = (need as u32 + 32).max(guard * 2);
    }
    Err(Error::Precision("pFq: catastrophic cancellation not resolved".into()))
}

pub fn hyp_pfq_real(upper: &[Real], lower: &[Real], z: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let up: Vec<Complex> = upper.iter().cloned().map(Complex::from_real).collect();
    let lo: Vec<Complex> = lower.iter().cloned().map(Complex::from_real).collect();
    let v = hyp_pfq(&up, &lo, &Complex::from_real(z.clone()), ctx)?;
    debug_assert!(v.im.is_zero() || v.im.abs().log2_abs() < -(ctx.bits() as f64));
    Ok(v.re)
}

/// Exact value of a terminating pFq with rational parameters and argument.
pub fn hyp_pfq_rational(
    upper: &[super::rational::Rational],
    lower: &[super::rational::Rational],
    z: &super::rational::Rational,
) -> Option<super::rational::Rational> {
    use super::rational::Rational;
    use num_traits::One;
    let stop = upper
        .iter()
        .filter(|a| a.is_integer() && !a.is_positive())
        .map(|a| (-a.to_integer()).to_u64().unwrap())
        .min()?;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..stop {
        let kk = Rational::from_integer(BigInt::from(k));
        let mut r = z.clone() / (&kk + Rational::one());
        for a in upper {
            r *= a + &kk;
        }
        for b in lower {
            let d = b + &kk;
            if d.is_zero() {
                return None;
            }
            r /= d;
        }
        term *= r;
        sum += &term;
    }
    Some(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::rational::rat;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    #[test]
    fn kummer_gives_e() {
        let c = ctx();
        let p = c.bits();
        let one = Complex::one(p);
        let v = hyp_pfq(std::slice::from_ref(&one), std::slice::from_ref(&one), &one, &c).unwrap();
        assert!(v.re.to_decimal(30).starts_with("2.718281828459045235360287471"));
    }

    #[test]
    fn zero_argument() {
        let c = ctx();
        let p = c.bits();
        let a = Complex::from_i64(2, p);
        let v = hyp_pfq(&[a.clone(), a.clone()], &[a.clone(), a.clone(), a], &Complex::zero(p), &c).unwrap();
        assert_eq!(v.re, Real::one(p));
    }

    #[test]
    fn kummer_identity_terminating() {
        // 2F1(−2, −2−ν; ν+1; −1) at ν = 1/2: 1 − 10/3 + 1
        let c = ctx();
        let p = c.bits();
        let v = hyp_pfq_real(
            &[Real::from_i64(-2, p), Real::from_frac(-5, 2, p)],
            &[Real::from_frac(3, 2, p)],
            &Real::from_i64(-1, p),
            &c,
        )
        .unwrap();
        let exact =
            hyp_pfq_rational(&[rat(-2, 1), rat(-5, 2)], &[rat(3, 2)], &rat(-1, 1)).unwrap();
        assert_eq!(exact, rat(-4, 3));
        assert!((&v - &Real::from_frac(-4, 3, p)).abs().log2_abs() < -170.0);
    }

    #[test]
    fn bad_lower_parameter() {
        let c = ctx();
        let p = c.bits();
        let r = hyp_pfq(&[Complex::one(p)], &[Complex::from_i64(-2, p)], &Complex::one(p), &c);
        assert!(matches!(r, Err(Error::Parameter(_))));
        // terminates before the zero denominator
        let r = hyp_pfq(&[Complex::from_i64(-1, p)], &[Complex::from_i64(-3, p)], &Complex::one(p), &c);
        assert!(r.is_ok());
    }

    #[test]
    fn divergent_cases() {
        let c = ctx();
        let p = c.bits();
        let one = Complex::one(p);
        let r = hyp_pfq(&[one.clone(), one.clone(), one.clone()], std::slice::from_ref(&one), &one, &c);
        assert!(matches!(r, Err(Error::Divergence(_))));
        let r = hyp_pfq(&[one.clone(), one.clone()], std::slice::from_ref(&one), &one, &c);
        assert!(matches!(r, Err(Error::Divergence(_))));
    }

    #[test]
    fn cancellation_is_compensated() {
        // 0F1(;1;−x²/4) = J0(x); at x = 40 the terms reach ~1e16
        let c = ctx();
        let p = c.bits();
        let x = Real::from_i64(40, p);
        let z = -x.sqr().mul_2k(-2);
        let v = hyp_pfq_real(&[], &[Real::one(p)], &z, &c).unwrap();
        assert!(v.to_decimal(20).starts_with("0.0073668905"));
    }
}
