//! Zeros of the Kummer function ₁F₁(a; a+b; z).

use num_traits::{One, Zero};

use super::{
    assert_close, poch, pow2, rfact, require_positive, rint, rseries_recip, sign, BernoulliFamily,
    BernoulliSequence,
};
use crate::error::{Error, Result};
use crate::mzv::zeta_from_series;
use crate::numkernel::{hyp_pfq_rational, Complex, PrecisionContext, Rational, Real};
use crate::powerseries::{ps_mul, weierstrass_normalize, TruncatedSeries, WeierstrassNormalization};

fn check(a: &Rational, b: &Rational) -> Result<()> {
    require_positive("a", a)?;
    require_positive("b", b)
}

/// Taylor coefficients of ₁F₁(a; c; z) up to z^{len−1}.
fn kummer_coeffs(a: &Rational, c: &Rational, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut t = Rational::one();
    for k in 0..len {
        out.push(t.clone());
        let kk = rint(k as i64);
        t = t * (a + &kk) / ((c + &kk) * rint(k as i64 + 1));
    }
    out
}

/// x(x−1)⋯(x−k+1)/k!.
fn gbinom(x: &Rational, k: usize) -> Rational {
    poch(&(x - rint(k as i64 - 1)), k) / rfact(k)
}

/// ζ_{a,b}({2}^n) = (−1)^n (a)_n (b)_n / (n! (a+b)_n (a+b)_{2n}).
pub fn hyp_mzv_2n_exact(a: &Rational, b: &Rational, n: usize) -> Result<Rational> {
    check(a, b)?;
    let s = a + b;
    Ok(sign(n) * poch(a, n) * poch(b, n) / (rfact(n) * poch(&s, n) * poch(&s, 2 * n)))
}

pub fn hyp_mzv_2n(a: &Rational, b: &Rational, n: usize, ctx: &PrecisionContext) -> Result<Real> {
    Ok(ctx.rational(&hyp_mzv_2n_exact(a, b, n)?))
}

/// ζ_{a,b}({4}^n) from the terminating ₆F₅ at −1.
pub fn hyp_mzv_4n_exact(a: &Rational, b: &Rational, n: usize) -> Result<Rational> {
    check(a, b)?;
    let s = a + b;
    let two_n = rint(2 * n as i64);
    let one = Rational::one();
    let half = Rational::new(1.into(), 2.into());
    let pre = sign(n) / rfact(2 * n) * poch(a, 2 * n) * poch(b, 2 * n) / (poch(&s, 2 * n) * poch(&s, 4 * n));
    // a, b > 0 keeps every lower parameter away from zero before the
    // series terminates at −2n
    let upper = [
        -two_n.clone(),
        &one - &two_n - &s,
        &one - &two_n - &s * &half,
        &one - &two_n - (&s + &one) * &half,
        a.clone(),
        b.clone(),
    ];
    let lower = [&one - &two_n - a, &one - &two_n - b, s.clone(), &s * &half, (&s + &one) * &half];
    let f = hyp_pfq_rational(&upper, &lower, &-one)
        .ok_or_else(|| Error::Parameter(format!("₆F₅ hits a zero lower parameter at a={a}, b={b}")))?;
    Ok(pre * f)
}

pub fn hyp_mzv_4n(a: &Rational, b: &Rational, n: usize, ctx: &PrecisionContext) -> Result<Real> {
    Ok(ctx.rational(&hyp_mzv_4n_exact(a, b, n)?))
}

/// Σ_k C(a+b+n−1, k) C(a−1+n−k, n−k) B_k = (a+b)_n δ_n solved for B_n.
pub fn hyp_bernoulli_recurrence(a: &Rational, b: &Rational, count: usize) -> Result<Vec<Rational>> {
    check(a, b)?;
    let s = a + b;
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    for n in 0..count {
        let top = &s + rint(n as i64 - 1);
        let rhs = if n == 0 { Rational::one() } else { Rational::zero() };
        let mut acc = rhs;
        for (k, bk) in out.iter().enumerate() {
            acc -= gbinom(&top, k) * gbinom(&(a - rint(1) + rint((n - k) as i64)), n - k) * bk;
        }
        out.push(acc / gbinom(&top, n));
    }
    Ok(out)
}

/// B_0..B_{count−1} of 1/₁F₁(a; a+b; z) = Σ B_n z^n/n!, by the linear
/// recurrence and cross-checked against the series reciprocal.
pub fn hyp_bernoulli_exact(a: &Rational, b: &Rational, count: usize) -> Result<Vec<Rational>> {
    let rec = hyp_bernoulli_recurrence(a, b, count)?;
    let inv = rseries_recip(&kummer_coeffs(a, &(a + b), count))?;
    for (n, (r, c)) in rec.iter().zip(&inv).enumerate() {
        if *r != c * rfact(n) {
            return Err(Error::Precision(format!("Bernoulli recurrence disagrees with 1/₁F₁ at n={n}")));
        }
    }
    Ok(rec)
}

pub fn hyp_bernoulli(a: &Rational, b: &Rational, count: usize, ctx: &PrecisionContext) -> Result<BernoulliSequence> {
    let ex = hyp_bernoulli_exact(a, b, count)?;
    Ok(BernoulliSequence {
        family: BernoulliFamily::Hypergeometric { a: a.clone(), b: b.clone() },
        values: ex.iter().map(|q| ctx.rational(q)).collect(),
        exact: Some(ex),
    })
}

/// ζ*_{a,b}({2}^n) = Σ_{k=0}^{2n} (−1)^k B_k B_{2n−k} / (k!(2n−k)!).
pub fn hyp_mzsv_2n_exact(a: &Rational, b: &Rational, n: usize) -> Result<Rational> {
    let bern = hyp_bernoulli_exact(a, b, 2 * n + 1)?;
    let m = 2 * n;
    let mut acc = Rational::zero();
    for k in 0..=m {
        acc += sign(k) * &bern[k] * &bern[m - k] / (rfact(k) * rfact(m - k));
    }
    Ok(acc)
}

pub fn hyp_mzsv_2n(a: &Rational, b: &Rational, n: usize, ctx: &PrecisionContext) -> Result<Real> {
    Ok(ctx.rational(&hyp_mzsv_2n_exact(a, b, n)?))
}

/// Coefficients k = 0..K−1 of Σ ζ_{a,b}(k+1) z^k = (b/(a+b))(Φ_{a,b+1}/Φ_{a,b} − 1).
pub fn hyp_zeta_gen_exact(a: &Rational, b: &Rational, count: usize) -> Result<Vec<Rational>> {
    check(a, b)?;
    let s = a + b;
    let num = kummer_coeffs(a, &(&s + rint(1)), count);
    let den = rseries_recip(&kummer_coeffs(a, &s, count))?;
    let q = super::rseries_mul(&num, &den, count);
    let f = b / &s;
    Ok(q
        .into_iter()
        .enumerate()
        .map(|(k, c)| if k == 0 { (c - rint(1)) * &f } else { c * &f })
        .collect())
}

/// ζ_{a,b}(k+1), k = 0..K−1, with the k ≥ 1 entries cross-checked against
/// the log-derivative of e^{−az/(a+b)}₁F₁(a; a+b; z).
pub fn hyp_zeta_gen(a: &Rational, b: &Rational, count: usize, ctx: &PrecisionContext) -> Result<Vec<Real>> {
    let ex = hyp_zeta_gen_exact(a, b, count)?;
    let vals: Vec<Real> = ex.iter().map(|q| ctx.rational(q)).collect();
    if count >= 2 {
        let p = ctx.bits();
        let s = a + b;
        let phi = TruncatedSeries::new(
            kummer_coeffs(a, &s, count + 1).iter().map(|q| Complex::from_real(ctx.rational(q))).collect(),
        );
        let lin = Complex::from_real(ctx.rational(&(a / &s)));
        let norm = WeierstrassNormalization::new(0, vec![Complex::zero(p), lin], 1)?;
        let psi = weierstrass_normalize(&phi, &norm)?;
        let z = zeta_from_series(&psi, &norm)?;
        for (k, v) in z.iter().enumerate().take(count - 1) {
            assert_close(&format!("ζ_{{a,b}}({}) generating function", k + 2), &v.re, &vals[k + 1], ctx)?;
        }
    }
    Ok(vals)
}

/// [z^{2n}] ₁F₁(a; a+b; ız)·₁F₁(a; a+b; −ız) as (series product, ₂F₃
/// coefficient), the latter from ₂F₃(a, b; a+b, (a+b)/2, (a+b+1)/2; −z²/4).
pub fn ramanujan_product_paths(a: &Rational, b: &Rational, n: usize, ctx: &PrecisionContext) -> Result<(Real, Real)> {
    check(a, b)?;
    let s = a + b;
    let half = Rational::new(1.into(), 2.into());
    let lower = [s.clone(), &s * &half, (&s + rint(1)) * &half];
    let mut term = poch(a, n) * poch(b, n) / rfact(n);
    for l in &lower {
        term /= poch(l, n);
    }
    let exact = term * sign(n) * pow2(-2 * n as i64);

    let len = 2 * n + 1;
    let p = ctx.bits() + 16;
    let c = kummer_coeffs(a, &s, len);
    let rot = |sgn: i32| {
        TruncatedSeries::new(
            c.iter()
                .enumerate()
                .map(|(k, q)| {
                    let v = Complex::from_real(Real::from_ratio(q, p));
                    // (±ı)^k
                    match (k % 4, sgn) {
                        (0, _) => v,
                        (2, _) => -v,
                        (1, 1) | (3, -1) => v.mul_i(1),
                        _ => v.mul_i(-1),
                    }
                })
                .collect(),
        )
    };
    let prod = ps_mul(&rot(1), &rot(-1));
    Ok((prod.coeff(2 * n).re.with_prec(ctx.bits()), ctx.rational(&exact)))
}

/// The ₂F₃ coefficient, asserted against the series product.
pub fn ramanujan_product_coeff(a: &Rational, b: &Rational, n: usize, ctx: &PrecisionContext) -> Result<Real> {
    let (numeric, value) = ramanujan_product_paths(a, b, n, ctx)?;
    assert_close("₁F₁ product coefficient", &numeric, &value, ctx)?;
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::rational::rat;

    #[test]
    fn kummer_one_one() {
        assert_eq!(hyp_mzv_4n_exact(&rat(1, 1), &rat(1, 1), 1).unwrap(), rat(1, 720));
        assert_eq!(hyp_mzv_4n_exact(&rat(1, 1), &rat(1, 1), 0).unwrap(), rat(1, 1));
        assert_eq!(hyp_mzv_2n_exact(&rat(1, 1), &rat(1, 1), 1).unwrap(), rat(-1, 12));
        assert_eq!(hyp_mzv_2n_exact(&rat(1, 1), &rat(1, 1), 0).unwrap(), rat(1, 1));
        assert!(hyp_mzv_2n_exact(&rat(0, 1), &rat(1, 1), 1).is_err());
    }

    #[test]
    fn bernoulli_first_terms() {
        let b = hyp_bernoulli_exact(&rat(2, 1), &rat(3, 1), 4).unwrap();
        assert_eq!(b[0], rat(1, 1));
        assert_eq!(b[1], rat(-2, 5));
        // a = b = 1 gives the classical numbers
        let c = hyp_bernoulli_exact(&rat(1, 1), &rat(1, 1), 9).unwrap();
        for (n, v) in c.iter().enumerate() {
            assert_eq!(*v, crate::numkernel::classical_bernoulli(n));
        }
    }
}
