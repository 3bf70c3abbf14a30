//! Zeros of the normalized Bessel function j_ν(z) = Γ(ν+1)(2/z)^ν J_ν(z).

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::{
    gamma_shift, poch, pow2, rat_to_f64, rbinom, rfact, require_nu, rint, rseries_recip, sign,
    BernoulliFamily, BernoulliSequence, IdentityReport,
};
use crate::error::{Error, Result};
use crate::mzv::power_sums_from_zeros;
use crate::numkernel::rational::{bernoulli_even, rat};
use crate::numkernel::{PrecisionContext, Rational, Real};
use crate::zerofinder::{bessel_zeros, eval::bessel_real};

/// ζ_ν({2}^n) = 1/(4^n n! (ν+1)_n).
pub fn bessel_mzv_2n_exact(nu: &Rational, n: usize) -> Result<Rational> {
    require_nu(nu)?;
    let nu1 = nu + rint(1);
    Ok(Rational::one() / (pow2(2 * n as i64) * rfact(n) * poch(&nu1, n)))
}

/// ζ_ν({4}^n) = 1/(16^n n! (ν+1)_{2n} (ν+1)_n).
pub fn bessel_mzv_4n_exact(nu: &Rational, n: usize) -> Result<Rational> {
    require_nu(nu)?;
    let nu1 = nu + rint(1);
    Ok(Rational::one() / (pow2(4 * n as i64) * rfact(n) * poch(&nu1, 2 * n) * poch(&nu1, n)))
}

/// Coefficients of j_ν(√w) in w.
fn j_coeffs(nu: &Rational, len: usize) -> Vec<Rational> {
    let nu1 = nu + rint(1);
    (0..len)
        .map(|k| sign(k) / (pow2(2 * k as i64) * rfact(k) * poch(&nu1, k)))
        .collect()
}

/// [z^{2m}] 1/j_ν(z) for m = 0..len−1.
fn recip_j(nu: &Rational, len: usize) -> Result<Vec<Rational>> {
    rseries_recip(&j_coeffs(nu, len))
}

/// B_{m,ν}(1/2); zero for odd m.
pub fn bessel_bernoulli_half_exact(nu: &Rational, m: usize) -> Result<Rational> {
    require_nu(nu)?;
    if m % 2 == 1 {
        return Ok(Rational::zero());
    }
    let n = m / 2;
    let c = recip_j(nu, n + 1)?;
    Ok(rfact(m) * sign(n) * pow2(-(m as i64)) * &c[n])
}

/// B_{0,ν}(1/2), …, B_{count−1,ν}(1/2).
pub fn bessel_bernoulli(nu: &Rational, count: usize, ctx: &PrecisionContext) -> Result<BernoulliSequence> {
    require_nu(nu)?;
    let c = recip_j(nu, count / 2 + 1)?;
    let ex: Vec<Rational> = (0..count)
        .map(|m| {
            if m % 2 == 1 {
                Rational::zero()
            } else {
                rfact(m) * sign(m / 2) * pow2(-(m as i64)) * &c[m / 2]
            }
        })
        .collect();
    Ok(BernoulliSequence {
        family: BernoulliFamily::Bessel { nu: nu.clone() },
        values: ex.iter().map(|q| ctx.rational(q)).collect(),
        exact: Some(ex),
    })
}

/// ζ*_ν({2}^n) = (−1)^n 2^{2n} B_{2n,ν}(1/2)/(2n)!.
pub fn bessel_mzsv_2n_exact(nu: &Rational, n: usize) -> Result<Rational> {
    let b = bessel_bernoulli_half_exact(nu, 2 * n)?;
    Ok(sign(n) * pow2(2 * n as i64) * b / rfact(2 * n))
}

/// ζ_ν(2p) for p = 1..=count from 𝒵_ν(w) = w j_{ν+1}(√w)/(4(ν+1) j_ν(√w)),
/// checked against Newton's identities on the ({2}^n) closed forms.
pub fn bessel_zeta_gen_exact(nu: &Rational, count: usize) -> Result<Vec<Rational>> {
    require_nu(nu)?;
    let nu1 = nu + rint(1);
    let q = super::rseries_mul(&j_coeffs(&nu1, count), &recip_j(nu, count)?, count);
    let f = Rational::one() / (rint(4) * &nu1);
    let vals: Vec<Rational> = q.into_iter().map(|c| c * &f).collect();

    let e: Vec<Rational> = (0..=count).map(|k| bessel_mzv_2n_exact(nu, k)).collect::<Result<_>>()?;
    let mut p: Vec<Rational> = vec![Rational::zero()];
    for k in 1..=count {
        let mut s = sign(k - 1) * rint(k as i64) * &e[k];
        for i in 1..k {
            s += sign(i - 1) * &e[i] * &p[k - i];
        }
        p.push(s);
    }
    if p[1..] != vals[..] {
        return Err(Error::Precision("Bessel zeta generating function disagrees with Newton identities".into()));
    }
    Ok(vals)
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::Parameter(format!("need 1 ≤ k ≤ n, got n={n}, k={k}")));
    }
    Ok(())
}

/// S_ν(2n, k) from the Bernoulli expression.
fn bessel_s_bernoulli(nu: &Rational, n: usize, k: usize) -> Result<Rational> {
    let nu1 = nu + rint(1);
    let mut acc = Rational::zero();
    for r in k..=n {
        let b = bessel_bernoulli_half_exact(nu, 2 * n - 2 * r)?;
        acc += rbinom(r as i64, k as i64) * pow2(2 * n as i64 - 4 * r as i64) * b
            / (rfact(r) * rfact(2 * n - 2 * r) * poch(&nu1, r));
    }
    Ok(sign(n - k) * acc)
}

/// S_ν(2n, k) from single zeta values.
fn bessel_s_zeta(nu: &Rational, n: usize, k: usize) -> Result<Rational> {
    let z = bessel_zeta_gen_exact(nu, n)?;
    let nu1 = nu + rint(1);
    let mut acc = Rational::zero();
    for j in 0..=(k - 1) / 2 {
        let g = gamma_shift(&(&nu1 + rint(j as i64)), k as i64 - 1 - 2 * j as i64)?;
        acc += sign(j) * pow2(-2 * j as i64) * rbinom((k - 1 - j) as i64, j as i64) * g * &z[n - j - 1];
    }
    Ok(acc / rfact(k))
}

/// Average S_ν(2n, k) of the depth-k MZVs of weight 2n with even arguments.
pub fn bessel_s_exact(nu: &Rational, n: usize, k: usize) -> Result<Rational> {
    require_nu(nu)?;
    check_nk(n, k)?;
    let a = bessel_s_bernoulli(nu, n, k)?;
    let b = bessel_s_zeta(nu, n, k)?;
    if a != b {
        return Err(Error::Precision(format!("S_ν(2n,k) expressions differ at ν={nu}, n={n}, k={k}")));
    }
    Ok(a)
}

/// Star average S*_ν(2n, k).
pub fn bessel_s_star_exact(nu: &Rational, n: usize, k: usize) -> Result<Rational> {
    require_nu(nu)?;
    check_nk(n, k)?;
    let nu1 = nu + rint(1);
    let mut acc = Rational::zero();
    for r in k..=n {
        let b = bessel_bernoulli_half_exact(nu, 2 * r)?;
        acc += rbinom(r as i64, k as i64) * pow2(4 * r as i64 - 2 * n as i64) * b
            / (rfact(n - r) * rfact(2 * r) * poch(&nu1, n - r));
    }
    Ok(sign(n) * acc)
}

macro_rules! real_wrapper {
    ($name:ident, $exact:ident, $($arg:ident: $ty:ty),*) => {
        pub fn $name(nu: &Rational, $($arg: $ty,)* ctx: &PrecisionContext) -> Result<Real> {
            Ok(ctx.rational(&$exact(nu, $($arg),*)?))
        }
    };
}

real_wrapper!(bessel_mzv_2n, bessel_mzv_2n_exact, n: usize);
real_wrapper!(bessel_mzv_4n, bessel_mzv_4n_exact, n: usize);
real_wrapper!(bessel_mzsv_2n, bessel_mzsv_2n_exact, n: usize);
real_wrapper!(bessel_bernoulli_half, bessel_bernoulli_half_exact, m: usize);
real_wrapper!(bessel_s, bessel_s_exact, n: usize, k: usize);
real_wrapper!(bessel_s_star, bessel_s_star_exact, n: usize, k: usize);

pub fn bessel_zeta_gen(nu: &Rational, count: usize, ctx: &PrecisionContext) -> Result<Vec<Real>> {
    Ok(bessel_zeta_gen_exact(nu, count)?.iter().map(|q| ctx.rational(q)).collect())
}

/// (power of z/2, coefficient) pairs of R_{m,ν}(z) = Σ_j (−1)^j C(m−j, j) (ν+j)_{m−2j} (z/2)^{2j−m}.
pub fn lommel_coeffs(m: usize, nu: &Rational) -> Vec<(i64, Rational)> {
    (0..=m / 2)
        .map(|j| {
            let c = sign(j) * rbinom((m - j) as i64, j as i64) * poch(&(nu + rint(j as i64)), m - 2 * j);
            (2 * j as i64 - m as i64, c)
        })
        .collect()
}

/// R_{m,ν}(z) by the explicit finite sum.
pub fn lommel_poly(m: usize, nu: &Real, z: &Real) -> Result<Real> {
    if z.is_zero() {
        return Err(Error::Pole("Lommel polynomial at z = 0".into()));
    }
    let p = nu.prec().max(z.prec());
    let half = z.mul_2k(-1);
    let mut acc = Real::zero(p);
    for j in 0..=m / 2 {
        let mut c = Real::from_bigint(crate::numkernel::rational::binomial((m - j) as i64, j as i64), p);
        for i in 0..(m - 2 * j) {
            c = &c * &(nu + &Real::from_i64((j + i) as i64, p));
        }
        let t = &c * &half.powi(2 * j as i64 - m as i64);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    Ok(acc)
}

/// Σ_q R_{r,ν}(z_q)/z_q^{s+2} over the zeros of j_{ν−1}, against
/// Γ(ν)/(2^{r+2}Γ(ν+r+1)) δ_{rs}. The sum is a combination of power sums of
/// the zeros, each taken with its tail correction.
pub fn lommel_orthogonality_check(
    nu: &Rational,
    r: usize,
    s: usize,
    count: usize,
    ctx: &PrecisionContext,
) -> Result<IdentityReport> {
    if !nu.is_positive() {
        return Err(Error::Parameter(format!("ν must be positive, got {nu}")));
    }
    if s > r {
        return Err(Error::Parameter(format!("need s ≤ r, got r={r}, s={s}")));
    }
    let order = nu - rint(1);
    let seq = bessel_zeros(&order, count, ctx)?;
    let coeffs = lommel_coeffs(r, nu);
    let mut lhs = Real::zero(ctx.bits());
    let mut bound = 0f64;
    for (pw, c) in &coeffs {
        // c (z/2)^{pw} / z^{s+2} = c 2^{−pw} z^{pw−s−2}
        let w = (s as i64 + 2 - pw) as u32;
        let t = power_sums_from_zeros(&seq, w, 1, ctx)?;
        let f = c * pow2(-pw);
        lhs = &lhs + &(&ctx.rational(&f) * &t.values[0].re);
        bound += rat_to_f64(&f).abs() * t.truncation_error[0];
    }
    let rhs = if r == s {
        Rational::one() / (pow2(r as i64 + 2) * poch(nu, r + 1))
    } else {
        Rational::zero()
    };
    let defect = (&lhs - &ctx.rational(&rhs)).abs().to_f64();
    let mut rep = IdentityReport::numeric(
        "lommel-orthogonality",
        format!("nu={nu} r={r} s={s} zeros={count}"),
        defect,
        bound.max(1e-6),
    );
    if (r + s).is_multiple_of(2) {
        // every power sum is an even zeta value, known exactly
        let z = bessel_zeta_gen_exact(&order, (r + s) / 2 + 1)?;
        let mut ex = Rational::zero();
        for (pw, c) in &coeffs {
            let w = (s as i64 + 2 - pw) as usize;
            ex += c * pow2(-pw) * &z[w / 2 - 1];
        }
        rep = rep.with_note(format!("exact left side {ex}, right side {rhs}"));
    } else {
        rep = rep.with_note("odd r−s: the left side contains odd zeta values");
    }
    Ok(rep)
}

/// Whether r lies in the range r ≥ 2(⌊ν/2 + 1/4⌋ + 1) where the Krein
/// expansion is proved.
pub fn alt_zeta_in_proved_range(nu: &Rational, r: usize) -> bool {
    let x = nu / rint(2) + rat(1, 4);
    let p = x.floor().to_integer() + 1;
    rint(r as i64) >= Rational::from_integer(p) * rint(2)
}

/// ζ̃_ν(r) = Σ_k 1/(j_{ν+1}(z_k) z_k^{r+2}) over the first `count` zeros of
/// j_ν, using j_{ν+1}(z) = −2(ν+1) j_ν′(z)/z. The terms alternate and decay
/// like k^{ν−r−1/2}; the partial sums are accelerated by repeated averaging.
/// Returns (value, error estimate).
pub fn alt_bessel_zeta(nu: &Rational, r: usize, count: usize, ctx: &PrecisionContext) -> Result<(Real, f64)> {
    require_nu(nu)?;
    if rint(2 * r as i64) <= rint(2) * nu - rint(1) {
        return Err(Error::Divergence(format!("ζ̃_ν({r}) diverges for ν={nu}")));
    }
    if count < 16 {
        return Err(Error::Parameter("alternate zeta needs at least 16 zeros".into()));
    }
    let seq = bessel_zeros(nu, count, ctx)?;
    let p = ctx.bits() + 32;
    let nur = Real::from_ratio(nu, p);
    let scale = Real::from_ratio(&(rint(-2) * (nu + rint(1))), p);
    let terms: Vec<Real> = seq
        .zeros
        .par_iter()
        .map(|z| {
            let x = z.re.with_prec(p);
            let (_, d) = bessel_real(&nur, &x, p);
            (&(&scale * &d) * &x.powi(r as i64 + 1)).recip()
        })
        .collect();
    let len = (count / 4).clamp(8, 24);
    for w in terms[count - len..].windows(2) {
        if w[0].signum() * w[1].signum() >= 0 {
            return Err(Error::Precision("alternate zeta terms do not alternate".into()));
        }
    }
    let mut partial = Vec::with_capacity(count);
    let mut acc = Real::zero(p);
    for t in &terms {
        acc = &acc + t;
        partial.push(acc.clone());
    }
    let mut level: Vec<Real> = partial[count - len..].to_vec();
    while level.len() > 2 {
        level = level.windows(2).map(|w| (&w[0] + &w[1]).mul_2k(-1)).collect();
    }
    let value = (&level[0] + &level[1]).mul_2k(-1);
    let spread = (&level[0] - &level[1]).abs().to_f64();
    let rounding = (count as f64) * value.to_f64().abs().max(1e-300) * (-(ctx.bits() as f64)).exp2();
    Ok((value.with_prec(ctx.bits()), spread + rounding))
}

/// 4(ν+1) ζ̃_ν(2n) against (−1)^n 2^{2n} B_{2n,ν}(1/2)/(2n)!.
pub fn krein_check(nu: &Rational, n: usize, count: usize, ctx: &PrecisionContext) -> Result<IdentityReport> {
    let (v, err) = alt_bessel_zeta(nu, 2 * n, count, ctx)?;
    let f = rint(4) * (nu + rint(1));
    let lhs = &ctx.rational(&f) * &v;
    let rhs = ctx.rational(&bessel_mzsv_2n_exact(nu, n)?);
    let bound = rat_to_f64(&f) * err;
    let defect = (&lhs - &rhs).abs().to_f64();
    let mut rep = IdentityReport::numeric("krein", format!("nu={nu} n={n} zeros={count}"), defect, bound);
    rep.pass = defect <= bound + 1e-30 && bound <= 1e-6;
    if !alt_zeta_in_proved_range(nu, 2 * n) {
        rep = rep.with_note("outside the proved range of the expansion");
    }
    Ok(rep)
}

/// ζ_{1/2}(2m) = ζ(2m)/π^{2m} from the classical Bernoulli numbers.
fn riemann_even(m: usize) -> Rational {
    pow2(2 * m as i64 - 1) * sign(m - 1) * bernoulli_even(m) / rfact(2 * m)
}

fn bernoulli_half(m: usize) -> Rational {
    // B_{2m}(1/2) = (2^{1−2m} − 1) B_{2m}
    (pow2(1 - 2 * m as i64) - rint(1)) * bernoulli_even(m)
}

/// Σ_{i≤⌊(k−1)/2⌋} C(2k−2i−1, k) C(2n+1, 2i+1) B_{2n−2i}.
fn gv_left(n: usize, k: usize) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..=(k - 1) / 2 {
        if i > n {
            break;
        }
        acc += rbinom(2 * k as i64 - 2 * i as i64 - 1, k as i64)
            * rbinom(2 * n as i64 + 1, 2 * i as i64 + 1)
            * bernoulli_even(n - i);
    }
    acc
}

/// S(2n,k)/π^{2n} as a combination of even zeta values (k ≤ n).
fn hoffman_zeta_form(n: usize, k: usize) -> Rational {
    let mut acc = Rational::zero();
    for j in 0..=(k - 1) / 2 {
        acc += sign(j) * riemann_even(n - j) * rbinom(2 * k as i64 - 2 * j as i64 - 1, k as i64)
            / (pow2(2 * k as i64 - 2 * j as i64 - 2) * rfact(2 * j + 1));
    }
    acc
}

/// S(2n,k)/π^{2n} as a combination of B_{2i}(1/2) (k ≤ n).
fn hoffman_bernoulli_form(n: usize, k: usize) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..=n - k {
        acc += rbinom((n - i) as i64, k as i64)
            * rbinom(2 * n as i64 + 1, 2 * i as i64)
            * pow2(2 * i as i64)
            * bernoulli_half(i);
    }
    sign(n - k) * acc / rfact(2 * n + 1)
}

/// The k ≤ n display equating the Bernoulli sum of the complementary range
/// with the Bernoulli form of S(2n,k), taken literally.
pub fn gessel_viennot_range1_literal(n: usize, k: usize) -> IdentityReport {
    IdentityReport::rational(
        "gessel-viennot-range1-literal",
        format!("n={n} k={k}"),
        &gv_left(n, k),
        &hoffman_bernoulli_form(n, k),
    )
}

fn lommel_sum_term(nu: &Rational, z: &[Rational], n: usize, k: usize, j: usize) -> Result<Rational> {
    let g = gamma_shift(&(nu + rint(1 + j as i64)), k as i64 - 1 - 2 * j as i64)?;
    Ok(z[n - j - 1].clone() * sign(j) * rbinom((k - 1 - j) as i64, j as i64) * g * pow2(-2 * j as i64))
}

/// Σ_{j<n} ζ_ν(2n−2j)(−1)^j C(k−1−j, j) Γ(k+ν−j)/(Γ(ν+1+j) 4^j)
/// = (−1)^{n−1} C(k−1−n, n−1) Γ(k+ν−n+1)/(Γ(ν+1+n) 4^n), 1 ≤ n ≤ ⌊k/2⌋.
pub fn first_lommel_check(nu: &Rational, n: usize, k: usize) -> Result<IdentityReport> {
    require_nu(nu)?;
    if n < 1 || n > k / 2 {
        return Err(Error::Parameter(format!("need 1 ≤ n ≤ ⌊k/2⌋, got n={n}, k={k}")));
    }
    let z = bessel_zeta_gen_exact(nu, n)?;
    let mut lhs = Rational::zero();
    for j in 0..n {
        lhs += lommel_sum_term(nu, &z, n, k, j)?;
    }
    let g = gamma_shift(&(nu + rint(1 + n as i64)), k as i64 - 2 * n as i64)?;
    let rhs = sign(n - 1) * rbinom((k - 1 - n) as i64, (n - 1) as i64) * g * pow2(-2 * n as i64);
    Ok(IdentityReport::rational("first-lommel", format!("nu={nu} n={n} k={k}"), &lhs, &rhs))
}

/// Σ_{j≤⌊(k−1)/2⌋} ζ_ν(2n−2j)(−1)^j C(k−1−j, j) Γ(k+ν−j)/(Γ(ν+1+j) 4^j) = 0
/// for ⌊(k+1)/2⌋ < n ≤ k−1.
pub fn second_lommel_check(nu: &Rational, n: usize, k: usize) -> Result<IdentityReport> {
    require_nu(nu)?;
    if n <= k.div_ceil(2) || n + 1 > k {
        return Err(Error::Parameter(format!("need ⌊(k+1)/2⌋ < n ≤ k−1, got n={n}, k={k}")));
    }
    let z = bessel_zeta_gen_exact(nu, n)?;
    let mut lhs = Rational::zero();
    for j in 0..=(k - 1) / 2 {
        lhs += lommel_sum_term(nu, &z, n, k, j)?;
    }
    Ok(IdentityReport::rational("second-lommel", format!("nu={nu} n={n} k={k}"), &lhs, &Rational::zero()))
}

/// Every identity of the (n, k) regime, in exact arithmetic:
/// k > n: the Bernoulli-number identity with right side ((2n+1)/2)C(2k−2n, k),
/// and the two Lommel corollaries at ν = 1/2 where they apply;
/// k ≤ n: the two expressions of S(2n,k)/π^{2n} and the averages computed
/// by `bessel_s_exact` at ν = 1/2 agree.
pub fn gessel_viennot_check(n: usize, k: usize) -> IdentityReport {
    let params = format!("n={n} k={k}");
    if n < 1 || k < 1 {
        let mut r = IdentityReport::rational("gessel-viennot", params, &rint(1), &rint(0));
        r.notes.push("need n, k ≥ 1".into());
        return r;
    }
    let half = rat(1, 2);
    let mut parts = Vec::new();
    if k > n {
        let rhs = rat(2 * n as i64 + 1, 2) * rbinom(2 * k as i64 - 2 * n as i64, k as i64);
        parts.push(IdentityReport::rational("gessel-viennot-range2", params.clone(), &gv_left(n, k), &rhs));
        if n <= k / 2 {
            parts.push(first_lommel_check(&half, n, k).expect("range checked"));
        }
        if n > k.div_ceil(2) && n < k {
            parts.push(second_lommel_check(&half, n, k).expect("range checked"));
        }
    } else {
        let a = hoffman_zeta_form(n, k);
        let b = hoffman_bernoulli_form(n, k);
        parts.push(IdentityReport::rational("gessel-viennot-range1", params.clone(), &a, &b));
        match bessel_s_exact(&half, n, k) {
            Ok(s) => parts.push(IdentityReport::rational("bessel-average-half", params.clone(), &s, &a)),
            Err(e) => {
                let mut r = IdentityReport::rational("bessel-average-half", params.clone(), &rint(1), &rint(0));
                r.notes.push(e.to_string());
                parts.push(r);
            }
        }
    }
    IdentityReport::combine("gessel-viennot", params, &parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn riemann_case() {
        let h = rat(1, 2);
        for n in 0..6 {
            assert_eq!(bessel_mzv_2n_exact(&h, n).unwrap(), Rational::one() / rfact(2 * n + 1));
        }
        assert_eq!(bessel_mzsv_2n_exact(&h, 2).unwrap(), rat(7, 360));
        assert_eq!(bessel_bernoulli_half_exact(&h, 2).unwrap(), rat(-1, 12));
        assert_eq!(bessel_zeta_gen_exact(&h, 2).unwrap(), vec![rat(1, 6), rat(1, 90)]);
    }

    #[test]
    fn lommel_low_orders() {
        let c = lommel_coeffs(1, &rat(3, 2));
        assert_eq!(c, vec![(-1, rat(3, 2))]);
        let p = 128;
        let v = lommel_poly(1, &Real::from_frac(3, 2, p), &Real::from_i64(3, p)).unwrap();
        assert!((&v - &Real::one(p)).abs().log2_abs() < -120.0);
        assert!(lommel_poly(2, &Real::one(p), &Real::zero(p)).is_err());
    }

    #[test]
    fn proved_range() {
        assert!(alt_zeta_in_proved_range(&rat(1, 2), 2));
        assert!(!alt_zeta_in_proved_range(&rat(3, 2), 2));
        assert!(alt_zeta_in_proved_range(&rat(3, 2), 4));
    }
}
