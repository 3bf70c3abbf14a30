//! Dense truncated power series over `Complex`.

use crate::error::{Error, Result};
use crate::numkernel::{Complex, PrecisionContext, Real};

#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    pub coefficients: Vec<Complex>,
}

/// ψ(z) = z^m e^{P(z)} Ψ(z) with Ψ(0) = 1 and deg P ≤ genus.
#[derive(Clone, Debug)]
pub struct WeierstrassNormalization {
    pub origin_multiplicity: usize,
    pub exp_poly: Vec<Complex>,
    pub genus: usize,
}

impl WeierstrassNormalization {
    pub fn new(origin_multiplicity: usize, exp_poly: Vec<Complex>, genus: usize) -> Result<Self> {
        if exp_poly.len() > genus + 1 {
            return Err(Error::Parameter(format!(
                "exponential polynomial of degree {} exceeds genus {genus}",
                exp_poly.len() - 1
            )));
        }
        Ok(WeierstrassNormalization { origin_multiplicity, exp_poly, genus })
    }
}

impl TruncatedSeries {
    pub fn new(coefficients: Vec<Complex>) -> TruncatedSeries {
        assert!(!coefficients.is_empty(), "series order must be positive");
        TruncatedSeries { coefficients }
    }

    pub fn from_reals(v: Vec<Real>) -> TruncatedSeries {
        TruncatedSeries::new(v.into_iter().map(Complex::from_real).collect())
    }

    pub fn one(order: usize, p: u32) -> TruncatedSeries {
        let mut c = vec![Complex::zero(p); order];
        c[0] = Complex::one(p);
        TruncatedSeries::new(c)
    }

    /// Polynomial from small integer coefficients, padded with zeros.
    pub fn from_ints(v: &[i64], order: usize, p: u32) -> TruncatedSeries {
        let c = (0..order).map(|k| Complex::from_i64(v.get(k).copied().unwrap_or(0), p)).collect();
        TruncatedSeries::new(c)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coeff(&self, k: usize) -> &Complex {
        &self.coefficients[k]
    }

    pub fn prec(&self) -> u32 {
        self.coefficients.iter().map(|c| c.prec()).max().unwrap_or(64)
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::new(self.coefficients[..order.min(self.order())].to_vec())
    }

    pub fn add(&self, o: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(o.order());
        TruncatedSeries::new((0..n).map(|k| &self.coefficients[k] + &o.coefficients[k]).collect())
    }

    pub fn sub(&self, o: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(o.order());
        TruncatedSeries::new((0..n).map(|k| &self.coefficients[k] - &o.coefficients[k]).collect())
    }

    pub fn scale(&self, c: &Complex) -> TruncatedSeries {
        TruncatedSeries::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries::new(self.coefficients.iter().map(|a| -a).collect())
    }

    /// A(c·z)
    pub fn substitute_scaled(&self, c: &Complex) -> TruncatedSeries {
        let mut pw = Complex::one(self.prec());
        let mut out = Vec::with_capacity(self.order());
        for a in &self.coefficients {
            out.push(a * &pw);
            pw = &pw * c;
        }
        TruncatedSeries::new(out)
    }

    /// A′, one order shorter.
    pub fn derivative(&self) -> TruncatedSeries {
        if self.order() == 1 {
            return TruncatedSeries::new(vec![Complex::zero(self.prec())]);
        }
        TruncatedSeries::new(
            (1..self.order()).map(|k| self.coefficients[k].mul_i64(k as i64)).collect(),
        )
    }

    pub fn max_abs(&self) -> Real {
        let p = self.prec();
        self.coefficients.iter().map(|c| c.abs()).fold(Real::zero(p), |m, x| if x > m { x } else { m })
    }
}

pub fn ps_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let n = a.order().min(b.order());
    let p = a.prec().max(b.prec());
    let mut out = vec![Complex::zero(p); n];
    for (i, ai) in a.coefficients.iter().take(n).enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coefficients.iter().take(n - i).enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    TruncatedSeries::new(out)
}

pub fn ps_recip(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    let a0 = a.coeff(0);
    if a0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let inv0 = a0.recip();
    let n = a.order();
    let mut r: Vec<Complex> = Vec::with_capacity(n);
    r.push(inv0.clone());
    for k in 1..n {
        let mut s = Complex::zero(a.prec());
        for i in 1..=k {
            let ai = &a.coefficients[i];
            if !ai.is_zero() {
                s = &s + &(ai * &r[k - i]);
            }
        }
        r.push(-(&s * &inv0));
    }
    Ok(TruncatedSeries::new(r))
}

/// A′/A truncated at order − 1.
pub fn ps_logderiv(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    if a.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let d = a.derivative();
    let r = ps_recip(&a.truncate(d.order()))?;
    Ok(ps_mul(&d, &r))
}

/// Coefficients with index ≡ residue (mod m), reindexed by (index − residue)/m.
pub fn ps_dissect(a: &TruncatedSeries, m: usize, residue: usize) -> TruncatedSeries {
    assert!(m > 0 && residue < m, "invalid multisection");
    let c: Vec<Complex> = a.coefficients.iter().skip(residue).step_by(m).cloned().collect();
    if c.is_empty() {
        return TruncatedSeries::new(vec![Complex::zero(a.prec())]);
    }
    TruncatedSeries::new(c)
}

/// Inverse of dissection: Σ_r z^r D_r(z^m), truncated at `order`.
pub fn ps_interleave(parts: &[TruncatedSeries], order: usize) -> TruncatedSeries {
    let m = parts.len();
    let p = parts.iter().map(|s| s.prec()).max().unwrap_or(64);
    let mut out = vec![Complex::zero(p); order];
    for (r, s) in parts.iter().enumerate() {
        for (n, c) in s.coefficients.iter().enumerate() {
            let idx = n * m + r;
            if idx < order {
                out[idx] = c.clone();
            }
        }
    }
    TruncatedSeries::new(out)
}

/// ∏_{j<m} A(ω^j z), ω = e^{2πı/m}. Residual imaginary parts and
/// coefficients off the multiples of m are zeroed when below
/// 10^−(digits−10) (relative to the largest coefficient) and rejected above.
pub fn ps_root_of_unity_product(
    a: &TruncatedSeries,
    m: usize,
    ctx: &PrecisionContext,
) -> Result<TruncatedSeries> {
    assert!(m > 0);
    let p = ctx.bits().max(a.prec());
    let real_input = a.coefficients.iter().all(|c| c.is_real());
    let mut acc = a.clone();
    for j in 1..m {
        let w = Complex::root_of_unity(j as i64, m as i64, p + 16);
        acc = ps_mul(&acc, &a.substitute_scaled(&w));
    }
    let scale = acc.max_abs().log2_abs().max(0.0);
    let tol = ctx.eps(ctx.digits as i64 - 10).log2_abs() + scale;
    let mut out = Vec::with_capacity(acc.order());
    for (k, c) in acc.coefficients.into_iter().enumerate() {
        let mut c = c.with_prec(p);
        if k % m != 0 {
            if !c.is_zero() && c.log2_abs() >= tol {
                return Err(Error::Precision(format!(
                    "root-of-unity product: coefficient {k} not annihilated"
                )));
            }
            c = Complex::zero(p);
        } else if real_input && !c.im.is_zero() {
            if c.im.log2_abs() >= tol {
                return Err(Error::Precision(format!(
                    "root-of-unity product: imaginary residue at {k}"
                )));
            }
            c = Complex::from_real(c.re);
        }
        out.push(c);
    }
    Ok(TruncatedSeries::new(out))
}

/// exp of a series with zero constant term, via F′ = G′F.
pub fn ps_exp(g: &TruncatedSeries) -> TruncatedSeries {
    let n = g.order();
    let p = g.prec();
    let mut f = vec![Complex::zero(p); n];
    f[0] = g.coeff(0).exp();
    let dg: Vec<Complex> = (1..n).map(|k| g.coefficients[k].mul_i64(k as i64)).collect();
    for k in 1..n {
        let mut s = Complex::zero(p);
        for i in 1..=k {
            if !dg[i - 1].is_zero() {
                s = &s + &(&dg[i - 1] * &f[k - i]);
            }
        }
        f[k] = s.div_i64(k as i64);
    }
    TruncatedSeries::new(f)
}

/// Ψ = ψ(z)/(z^m e^{P(z)}) from the Taylor series of ψ; the result has
/// order `f.order() − m`.
pub fn weierstrass_normalize(f: &TruncatedSeries, norm: &WeierstrassNormalization) -> Result<TruncatedSeries> {
    let m = norm.origin_multiplicity;
    if f.order() <= m {
        return Err(Error::Parameter("series too short for the origin multiplicity".into()));
    }
    let shifted = TruncatedSeries::new(f.coefficients[m..].to_vec());
    if norm.exp_poly.is_empty() {
        return Ok(shifted);
    }
    let n = shifted.order();
    let p = shifted.prec();
    let mut g = vec![Complex::zero(p); n];
    for (k, c) in norm.exp_poly.iter().enumerate().take(n) {
        g[k] = -c;
    }
    let c0 = g[0].clone();
    g[0] = Complex::zero(p);
    let e = ps_exp(&TruncatedSeries::new(g)).scale(&c0.exp());
    Ok(ps_mul(&shifted, &e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(40).unwrap()
    }

    fn is(a: &Complex, want: &Real, bits: f64) -> bool {
        (&a.re - want).abs().log2_abs() < -bits && (a.im.is_zero() || a.im.log2_abs() < -bits)
    }

    #[test]
    fn mul_and_identity() {
        let p = ctx().bits();
        let a = TruncatedSeries::from_ints(&[1, 1], 4, p);
        let b = TruncatedSeries::from_ints(&[1, -1], 4, p);
        let c = ps_mul(&a, &b);
        let want = [1, 0, -1, 0];
        for (k, w) in want.iter().enumerate() {
            assert!(is(c.coeff(k), &Real::from_i64(*w, p), 150.0));
        }
        let one = TruncatedSeries::one(4, p);
        let d = ps_mul(&a, &one);
        assert!(is(d.coeff(1), &Real::one(p), 150.0));
    }

    #[test]
    fn geometric_recip() {
        let p = ctx().bits();
        let r = ps_recip(&TruncatedSeries::from_ints(&[1, -1], 6, p)).unwrap();
        for k in 0..6 {
            assert!(is(r.coeff(k), &Real::one(p), 150.0));
        }
        let zero_const = TruncatedSeries::from_ints(&[0, 1], 3, p);
        assert!(matches!(ps_recip(&zero_const), Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn z_over_sin_z() {
        let p = ctx().bits();
        // sin z / z = Σ (−1)^k z^{2k}/(2k+1)!
        let mut c = Vec::new();
        let mut f = Real::one(p);
        for k in 0..8i64 {
            if k > 0 {
                f = f.div_i64((2 * k) * (2 * k + 1));
            }
            let v = if k % 2 == 0 { f.clone() } else { -&f };
            c.push(Complex::from_real(v));
            c.push(Complex::zero(p));
        }
        let r = ps_recip(&TruncatedSeries::new(c)).unwrap();
        assert!(is(r.coeff(2), &Real::from_frac(1, 6, p), 150.0));
        assert!(is(r.coeff(4), &Real::from_frac(7, 360, p), 150.0));
    }

    #[test]
    fn logderiv_examples() {
        let p = ctx().bits();
        let l = ps_logderiv(&TruncatedSeries::from_ints(&[1, -1], 5, p)).unwrap();
        assert_eq!(l.order(), 4);
        for k in 0..4 {
            assert!(is(l.coeff(k), &Real::from_i64(-1, p), 150.0));
        }
        // e^{3z}
        let mut c = Vec::new();
        let mut t = Real::one(p);
        for k in 0..10i64 {
            c.push(Complex::from_real(t.clone()));
            t = t.mul_i64(3).div_i64(k + 1);
        }
        let l = ps_logderiv(&TruncatedSeries::new(c)).unwrap();
        assert!(is(l.coeff(0), &Real::from_i64(3, p), 150.0));
        for k in 1..9 {
            assert!(l.coeff(k).abs().log2_abs() < -150.0);
        }
    }

    #[test]
    fn dissection_examples() {
        let p = ctx().bits();
        let a = TruncatedSeries::from_ints(&[1, 1, 1, 1], 4, p);
        let d = ps_dissect(&a, 2, 0);
        assert_eq!(d.order(), 2);
        assert!(is(d.coeff(1), &Real::one(p), 150.0));
        let back = ps_interleave(&[ps_dissect(&a, 2, 0), ps_dissect(&a, 2, 1)], 4);
        for k in 0..4 {
            assert!(back.coeff(k) == a.coeff(k));
        }
    }

    #[test]
    fn root_of_unity_examples() {
        let c = ctx();
        let p = c.bits();
        let a = TruncatedSeries::from_ints(&[1, -1], 6, p);
        let r2 = ps_root_of_unity_product(&a, 2, &c).unwrap();
        let r4 = ps_root_of_unity_product(&a, 4, &c).unwrap();
        for k in 0..6 {
            let w2 = match k {
                0 => 1,
                2 => -1,
                _ => 0,
            };
            let w4 = match k {
                0 => 1,
                4 => -1,
                _ => 0,
            };
            assert!(is(r2.coeff(k), &Real::from_i64(w2, p), 140.0), "{k}");
            assert!(is(r4.coeff(k), &Real::from_i64(w4, p), 140.0), "{k}");
        }
    }

    #[test]
    fn exp_series() {
        let p = ctx().bits();
        let g = TruncatedSeries::from_ints(&[0, 1], 6, p);
        let e = ps_exp(&g);
        assert!(is(e.coeff(5), &Real::from_frac(1, 120, p), 150.0));
    }
}
