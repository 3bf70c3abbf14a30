//! Zeros of j_ν, Ai, Ai′ and the diagonal Kummer function, refined by Newton
//! iteration on termwise-differentiated Taylor series.

pub mod asymptotic;
pub mod cache;
pub mod eval;
pub mod tail;

use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numkernel::{Complex, PrecisionContext, Rational, Real};

pub use cache::{load_zero_cache, save_zero_cache};
pub use tail::{tail_power_sum, TailSum};

/// Parameters are exact rationals so that closed forms and zero tables agree
/// on the same ν or a.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ZeroFamily {
    BesselJ(Rational),
    Airy,
    AiryPrime,
    KummerDiagonal(Rational),
}

impl ZeroFamily {
    pub fn bessel(nu: Rational) -> Result<ZeroFamily> {
        if nu <= Rational::from_integer((-1).into()) {
            return Err(Error::Parameter("Bessel order must exceed −1".into()));
        }
        Ok(ZeroFamily::BesselJ(nu))
    }

    pub fn kummer_diagonal(a: Rational) -> Result<ZeroFamily> {
        if a <= Rational::from_integer(0.into()) {
            return Err(Error::Parameter("Kummer parameter must be positive".into()));
        }
        Ok(ZeroFamily::KummerDiagonal(a))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ZeroFamily::BesselJ(_) => "bessel",
            ZeroFamily::Airy => "airy",
            ZeroFamily::AiryPrime => "airy-prime",
            ZeroFamily::KummerDiagonal(_) => "kummer",
        }
    }

    pub fn parameter(&self) -> Option<&Rational> {
        match self {
            ZeroFamily::BesselJ(v) | ZeroFamily::KummerDiagonal(v) => Some(v),
            _ => None,
        }
    }

    pub fn parameter_f64(&self) -> f64 {
        self.parameter().and_then(|q| q.to_f64()).unwrap_or(0.0)
    }

    /// (ρ, C) with |z_n| ~ C n^{1/ρ}, n counting individual zeros.
    pub fn growth(&self) -> (f64, f64) {
        use std::f64::consts::PI;
        match self {
            ZeroFamily::BesselJ(_) => (1.0, PI),
            ZeroFamily::Airy | ZeroFamily::AiryPrime => (1.5, (1.5 * PI).powf(2.0 / 3.0)),
            ZeroFamily::KummerDiagonal(_) => (1.0, PI),
        }
    }

    /// Asymptotic |z| for the k-th zero (k ≥ 1; for Kummer k counts pairs).
    pub fn model_magnitude(&self, k: f64) -> f64 {
        match self {
            ZeroFamily::BesselJ(_) => asymptotic::bessel_mcmahon(self.parameter_f64(), k),
            ZeroFamily::Airy => asymptotic::airy_magnitude(k),
            ZeroFamily::AiryPrime => asymptotic::airy_prime_magnitude(k),
            ZeroFamily::KummerDiagonal(_) => {
                2.0 * asymptotic::bessel_mcmahon(self.parameter_f64() - 0.5, k)
            }
        }
    }
}

impl fmt::Display for ZeroFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(q) => write!(f, "{}({})", self.tag(), q),
            None => write!(f, "{}", self.tag()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ZeroSequence {
    pub family: ZeroFamily,
    pub zeros: Vec<Complex>,
    pub digits: u32,
    pub tail_exponent: f64,
    pub tail_constant: f64,
}

impl ZeroSequence {
    fn new(family: ZeroFamily, zeros: Vec<Complex>, digits: u32) -> ZeroSequence {
        let (rho, c) = family.growth();
        ZeroSequence { family, zeros, digits, tail_exponent: rho, tail_constant: c }
    }

    pub fn count(&self) -> usize {
        self.zeros.len()
    }

    pub fn prec(&self) -> u32 {
        self.zeros.first().map(|z| z.prec()).unwrap_or(64)
    }

    /// Zeros counted by the asymptotic model (pairs for Kummer).
    pub fn model_count(&self) -> usize {
        match self.family {
            ZeroFamily::KummerDiagonal(_) => self.count() / 2,
            _ => self.count(),
        }
    }
}

fn newton_real<F>(index: usize, guess: f64, spacing: f64, p: u32, f: F) -> Result<Real>
where
    F: Fn(&Real, u32) -> (Real, Real),
{
    // Coarse phase at 64 bits, then precision doubling up to p. Evaluations
    // carry extra bits when |x f′(x)| is small, since the series are only
    // accurate relative to their O(1) scale.
    let target = p + 8;
    let mut cur = 64u32;
    let mut deficit = 0u32;
    let mut x = Real::from_f64(guess, cur);
    for _ in 0..100 {
        let wp = cur + deficit + 8;
        let (v, d) = f(&x.with_prec(wp), wp);
        if d.is_zero() {
            return Err(Error::Convergence { index, msg: "vanishing derivative".into() });
        }
        deficit = deficit.max((-(d.log2_abs() + x.log2_abs())).max(0.0).ceil() as u32);
        let mut step = (&v / &d).with_prec(cur);
        let lim = 0.3 * spacing;
        if step.to_f64().abs() > lim {
            step = Real::from_f64(lim.copysign(step.to_f64()), cur);
        }
        x = (&x.with_prec(cur) - &step).with_prec(cur);
        let rel = if step.is_zero() { f64::NEG_INFINITY } else { step.log2_abs() - x.log2_abs() };
        if cur >= target {
            if rel < -(p as f64) - 2.0 {
                return Ok(x.with_prec(p));
            }
        } else if rel < -(cur as f64) / 2.0 + 4.0 {
            cur = (cur * 2).min(target);
            x = x.with_prec(cur);
        }
    }
    Err(Error::Convergence { index, msg: "Newton iteration limit".into() })
}

fn bessel_zero(nu: &Rational, k: usize, p: u32) -> Result<Real> {
    let nuf = nu.to_f64().unwrap();
    let nur = Real::from_ratio(nu, p + 8);
    let guess = asymptotic::bessel_guess(nuf, k);
    newton_real(k, guess, std::f64::consts::PI, p, |x, wp| {
        eval::bessel_real(&nur.with_prec(wp), x, wp)
    })
}

fn airy_zero(k: usize, prime: bool, p: u32, origin: &(Real, Real)) -> Result<Real> {
    let mag = if prime {
        asymptotic::airy_prime_magnitude(k as f64)
    } else {
        asymptotic::airy_magnitude(k as f64)
    };
    let spacing = std::f64::consts::PI / mag.sqrt();
    newton_real(k, -mag, spacing, p, |x, wp| {
        let (a, ad) = eval::airy_real(x, origin, wp);
        if prime {
            (ad, x * &a)
        } else {
            (a, ad)
        }
    })
}

fn compute_zeros(family: &ZeroFamily, from: usize, to: usize, ctx: &PrecisionContext) -> Result<Vec<Complex>> {
    let p = ctx.bits();
    match family {
        ZeroFamily::BesselJ(nu) => (from + 1..=to)
            .into_par_iter()
            .map(|k| bessel_zero(nu, k, p).map(Complex::from_real))
            .collect(),
        ZeroFamily::Airy | ZeroFamily::AiryPrime => {
            let prime = matches!(family, ZeroFamily::AiryPrime);
            let origin = eval::airy_origin(p + 64);
            (from + 1..=to)
                .into_par_iter()
                .map(|k| airy_zero(k, prime, p, &origin).map(Complex::from_real))
                .collect()
        }
        ZeroFamily::KummerDiagonal(a) => {
            let nu = a - Rational::new(1.into(), 2.into());
            let pairs = compute_cached(&ZeroFamily::BesselJ(nu), to.div_ceil(2), ctx)?;
            let mut out = Vec::new();
            for n in from..to {
                let r = &pairs[n / 2];
                // ₁F₁(a; 2a; z) = e^{z/2}Γ(a+½)(z/4)^{½−a}I_{a−½}(z/2)
                let z = Complex::new(Real::zero(p), r.re.mul_2k(1));
                out.push(if n % 2 == 0 { z } else { z.conj() });
            }
            Ok(out)
        }
    }
}

fn compute_cached(family: &ZeroFamily, count: usize, ctx: &PrecisionContext) -> Result<Vec<Complex>> {
    cache::get_or_extend(family, count, ctx, compute_zeros)
}

fn validate(seq: &ZeroSequence, ctx: &PrecisionContext) -> Result<()> {
    let pair = matches!(seq.family, ZeroFamily::KummerDiagonal(_));
    let mut prev = 0f64;
    for (i, z) in seq.zeros.iter().enumerate() {
        let m = z.abs().to_f64();
        let strictly = if pair && i % 2 == 1 { (m - prev).abs() < 1e-9 * m } else { m > prev };
        if !strictly || !m.is_finite() {
            return Err(Error::Convergence { index: i + 1, msg: "zeros out of order".into() });
        }
        prev = m;
        let k = if pair { i / 2 + 1 } else { i + 1 };
        let model = seq.family.model_magnitude(k as f64);
        if k > 5 && ((m - model) / m).abs() > 0.02 {
            return Err(Error::Convergence { index: i + 1, msg: "zero far from asymptotic location".into() });
        }
    }
    let _ = ctx;
    Ok(())
}

fn sequence(family: ZeroFamily, count: usize, ctx: &PrecisionContext) -> Result<ZeroSequence> {
    if count == 0 {
        return Err(Error::Parameter("zero count must be ≥ 1".into()));
    }
    let zeros = compute_cached(&family, count, ctx)?;
    let seq = ZeroSequence::new(family, zeros[..count].to_vec(), ctx.digits);
    validate(&seq, ctx)?;
    Ok(seq)
}

/// First `count` positive zeros of j_ν.
pub fn bessel_zeros(nu: &Rational, count: usize, ctx: &PrecisionContext) -> Result<ZeroSequence> {
    sequence(ZeroFamily::bessel(nu.clone())?, count, ctx)
}

/// First `count` zeros of Ai (negative reals, by increasing magnitude).
pub fn airy_zeros(count: usize, ctx: &PrecisionContext) -> Result<ZeroSequence> {
    sequence(ZeroFamily::Airy, count, ctx)
}

pub fn airy_prime_zeros(count: usize, ctx: &PrecisionContext) -> Result<ZeroSequence> {
    sequence(ZeroFamily::AiryPrime, count, ctx)
}

/// Zeros ±ı z_{a−1/2,k} of ₁F₁(a; 2a; z), +ı first within each pair; odd
/// counts are rounded up to complete the last pair.
pub fn kummer_zeros_diagonal(a: &Rational, count: usize, ctx: &PrecisionContext) -> Result<ZeroSequence> {
    let count = count + count % 2;
    sequence(ZeroFamily::kummer_diagonal(a.clone())?, count, ctx)
}

pub fn zeros(family: &ZeroFamily, count: usize, ctx: &PrecisionContext) -> Result<ZeroSequence> {
    match family {
        ZeroFamily::KummerDiagonal(a) => kummer_zeros_diagonal(a, count, ctx),
        _ => sequence(family.clone(), count, ctx),
    }
}

/// The defining function of the family at z: j_ν, Ai, Ai′ or ₁F₁(a; 2a; ·).
pub fn evaluate_family(family: &ZeroFamily, z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let p = ctx.bits();
    let v = match family {
        ZeroFamily::BesselJ(nu) => eval::bessel_complex(&Real::from_ratio(nu, p), z, p),
        ZeroFamily::Airy => eval::airy_complex(z, &eval::airy_origin(p + 16), p).0,
        ZeroFamily::AiryPrime => eval::airy_complex(z, &eval::airy_origin(p + 16), p).1,
        ZeroFamily::KummerDiagonal(a) => eval::kummer_diagonal_complex(&Real::from_ratio(a, p), z, p),
    };
    Ok(v)
}

/// max_k |f(z_k)| over the sequence.
pub fn max_residual(seq: &ZeroSequence, ctx: &PrecisionContext) -> Result<Real> {
    let r: Result<Vec<Real>> = seq
        .zeros
        .par_iter()
        .map(|z| evaluate_family(&seq.family, z, ctx).map(|v| v.abs()))
        .collect();
    Ok(r?.into_iter().fold(Real::zero(ctx.bits()), |m, x| if x > m { x } else { m }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::rational::rat;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    #[test]
    fn half_order_zeros_are_multiples_of_pi() {
        let c = ctx();
        let s = bessel_zeros(&rat(1, 2), 3, &c).unwrap();
        for (k, z) in s.zeros.iter().enumerate() {
            let want = Real::pi(c.bits()).mul_i64(k as i64 + 1);
            assert!((&z.re - &want).abs().log2_abs() < -(c.bits() as f64) + 12.0);
        }
        let s = bessel_zeros(&rat(-1, 2), 2, &c).unwrap();
        let want = Real::pi(c.bits()).mul_i64(3).mul_2k(-1);
        assert!((&s.zeros[1].re - &want).abs().log2_abs() < -(c.bits() as f64) + 12.0);
    }

    #[test]
    fn airy_first_zeros() {
        let c = ctx();
        let s = airy_zeros(3, &c).unwrap();
        assert!(s.zeros[0].re.to_decimal(16).starts_with("-2.338107410459767"));
        assert!(s.zeros[1].re.to_decimal(17).starts_with("-4.0879494441309706"));
        assert!(s.zeros[2].re.to_decimal(10).starts_with("-5.520559828"));
        let s = airy_prime_zeros(1, &c).unwrap();
        assert!(s.zeros[0].re.to_decimal(16).starts_with("-1.018792971647471"));
    }

    #[test]
    fn kummer_pairs() {
        let c = ctx();
        let s = kummer_zeros_diagonal(&rat(1, 1), 2, &c).unwrap();
        let two_pi = Real::pi(c.bits()).mul_2k(1);
        assert!(s.zeros[0].re.is_zero());
        assert!((&s.zeros[0].im - &two_pi).abs().log2_abs() < -90.0);
        assert!((&s.zeros[1].im + &two_pi).abs().log2_abs() < -90.0);
        let res = max_residual(&s, &c).unwrap();
        assert!(res.log2_abs() < -80.0);
    }

    #[test]
    fn evaluate_at_origin() {
        let c = ctx();
        let one = evaluate_family(&ZeroFamily::BesselJ(rat(3, 7)), &Complex::zero(c.bits()), &c).unwrap();
        assert_eq!(one.re, Real::one(c.bits()));
        let ai0 = evaluate_family(&ZeroFamily::Airy, &Complex::zero(c.bits()), &c).unwrap();
        assert!(ai0.re.to_decimal(15).starts_with("0.355028053887817"));
    }
}
