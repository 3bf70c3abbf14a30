//! Multiple zeta values over a zero sequence: power sums, Newton identities,
//! the nested-sum oracle, root-of-unity dissection and weight averages.
//!
//! Error bounds are carried as f64 magnitudes next to the high-precision
//! values. Polynomial maps of power sums (Newton identities, generating
//! products) are bounded with majorants: the same recurrence with every sign
//! made positive, evaluated at |p|+δ minus at |p|.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numkernel::{Complex, PrecisionContext, Real};
use crate::powerseries::{ps_logderiv, ps_root_of_unity_product, TruncatedSeries, WeierstrassNormalization};
use crate::zerofinder::{tail_power_sum, ZeroSequence};

pub const MAX_DEPTH: usize = 6;

fn mag(c: &Complex) -> f64 {
    if c.is_zero() {
        0.0
    } else {
        c.log2_abs().exp2()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Parameter("composition parts must be positive and nonempty".into()));
        }
        Ok(Composition { parts })
    }

    /// {s}^n
    pub fn repeated(s: u32, n: usize) -> Result<Composition> {
        Composition::new(vec![s; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn scaled(&self, k: u32) -> Composition {
        Composition { parts: self.parts.iter().map(|s| s * k).collect() }
    }

    /// Absolute convergence of Σ_{n₁>⋯>n_r} ∏|z_{n_i}|^{−s_i} when
    /// |z_n| ~ C n^{1/ρ}: every outer partial weight must exceed j·ρ.
    pub fn converges(&self, rho: f64) -> bool {
        let mut w = 0.0;
        for (j, s) in self.parts.iter().enumerate() {
            w += *s as f64;
            if w <= (j + 1) as f64 * rho + 1e-12 {
                return false;
            }
        }
        true
    }

    /// All compositions of n into exactly k positive parts, lexicographic.
    pub fn all(n: u32, k: usize) -> Vec<Composition> {
        fn rec(left: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if k == 0 {
                if left == 0 {
                    out.push(Composition { parts: cur.clone() });
                }
                return;
            }
            if left < k as u32 {
                return;
            }
            for a in 1..=left - (k as u32 - 1) {
                cur.push(a);
                rec(left - a, k - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if k > 0 {
            rec(n, k, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// values[k] = ζ_G((k+1)s) with tail correction; truncation_error[k]
/// bounds |values[k] − ζ_G((k+1)s)| and is non-increasing in k.
#[derive(Clone, Debug)]
pub struct PowerSumTable {
    pub s: u32,
    pub values: Vec<Complex>,
    pub truncation_error: Vec<f64>,
}

impl PowerSumTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn prec(&self) -> u32 {
        self.values.first().map(|v| v.prec()).unwrap_or(64)
    }
}

/// e[k] = ζ_G({s}^k), h[k] = ζ*_G({s}^k), with e[0] = h[0] = 1.
#[derive(Clone, Debug)]
pub struct MzvTables {
    pub s: u32,
    pub e: Vec<Complex>,
    pub h: Vec<Complex>,
    pub e_error: Vec<f64>,
    pub h_error: Vec<f64>,
}

impl MzvTables {
    /// max_n |Σ_k (−1)^k e_k h_{n−k} − δ_{n,0}| over the table.
    pub fn convolution_defect(&self) -> Real {
        let n = self.e.len().min(self.h.len());
        let p = self.e[0].prec();
        let mut worst = Real::zero(p);
        for m in 0..n {
            let mut s = Complex::zero(p);
            for k in 0..=m {
                let t = &self.e[k] * &self.h[m - k];
                s = if k % 2 == 0 { &s + &t } else { &s - &t };
            }
            if m == 0 {
                s = &s - &Complex::one(p);
            }
            let a = s.abs();
            worst = Real::max_ref(&worst, &a).clone();
        }
        worst
    }
}

#[derive(Clone, Debug)]
pub struct AverageValue {
    pub weight: u32,
    pub depth: usize,
    pub starred: bool,
    pub value: Complex,
    pub error: f64,
    /// Path (i): direct sum of nested-sum oracles, when affordable.
    pub direct: Option<(Complex, f64)>,
}

fn check_family_weight(seq: &ZeroSequence, w: u32) -> Result<()> {
    if (w as f64) <= seq.tail_exponent + 1e-12 {
        return Err(Error::Divergence(format!(
            "Σ|z|^−{w} diverges for {} (growth exponent {})",
            seq.family, seq.tail_exponent
        )));
    }
    Ok(())
}

/// Σ_n z_n^{−w} over the computed zeros for w = s, 2s, …, K·s.
fn head_power_sums(seq: &ZeroSequence, s: u32, k: usize, p: u32) -> (Vec<Complex>, Vec<f64>) {
    let rows: Vec<Vec<Complex>> = seq
        .zeros
        .par_iter()
        .map(|z| {
            let base = z.with_prec(p).recip().powi(s as i64);
            let mut out = Vec::with_capacity(k);
            let mut cur = base.clone();
            for _ in 0..k {
                out.push(cur.clone());
                cur = &cur * &base;
            }
            out
        })
        .collect();
    let mut sums = vec![Complex::zero(p); k];
    let mut abs = vec![0f64; k];
    for row in &rows {
        for (j, t) in row.iter().enumerate() {
            sums[j] = &sums[j] + t;
            abs[j] += mag(t);
        }
    }
    (sums, abs)
}

fn rounding_bound(count: usize, abs: f64, p: u32) -> f64 {
    (count as f64 + 8.0) * abs * (-(p as f64) + 4.0).exp2()
}

/// ζ_G(ks) for k = 1..=count, from the computed zeros plus the modelled
/// tail beyond them.
pub fn power_sums_from_zeros(
    seq: &ZeroSequence,
    s: u32,
    count: usize,
    ctx: &PrecisionContext,
) -> Result<PowerSumTable> {
    check_family_weight(seq, s)?;
    let p = ctx.bits() + 16;
    let (sums, abs) = head_power_sums(seq, s, count, p);
    let mut values = Vec::with_capacity(count);
    let mut err = Vec::with_capacity(count);
    for (j, sum) in sums.into_iter().enumerate() {
        let w = s * (j as u32 + 1);
        let t = tail_power_sum(seq, w)?;
        values.push((&sum + &Complex::from_real(Real::from_f64(t.value, p))).with_prec(ctx.bits()));
        err.push(t.bound + rounding_bound(seq.count(), abs[j] + t.abs, p));
    }
    for j in (0..count.saturating_sub(1)).rev() {
        err[j] = err[j].max(err[j + 1]);
    }
    Ok(PowerSumTable { s, values, truncation_error: err })
}

/// k·e_k = Σ_{i≤k} (−1)^{i−1} e_{k−i} p_i  (signed) or
/// k·h_k = Σ_{i≤k} h_{k−i} p_i.
fn newton(p: &[Complex], n: usize, signed: bool) -> Vec<Complex> {
    let prec = p.first().map(|c| c.prec()).unwrap_or(64);
    let mut out = vec![Complex::one(prec)];
    for k in 1..=n {
        let mut s = Complex::zero(prec);
        for i in 1..=k {
            let t = &out[k - i] * &p[i - 1];
            s = if signed && i % 2 == 0 { &s - &t } else { &s + &t };
        }
        out.push(s.div_i64(k as i64));
    }
    out
}

fn newton_f64(p: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![1.0];
    for k in 1..=n {
        let s: f64 = (1..=k).map(|i| out[k - i] * p[i - 1]).sum();
        out.push(s / k as f64);
    }
    out
}

/// Majorant error bound for symmetric functions of power sums with
/// magnitudes `abs` and errors `err`: D_k = N_k(|p|+δ) − N_k(|p|) where N is
/// the all-positive Newton recurrence, propagated as a difference so that
/// tiny δ are not lost against |p| in f64.
fn newton_bound(abs: &[f64], err: &[f64], n: usize, prec: u32) -> Vec<f64> {
    let lo = newton_f64(abs, n);
    let mut d = vec![0f64];
    for k in 1..=n {
        let s: f64 = (1..=k).map(|i| d[k - i] * (abs[i - 1] + err[i - 1]) + lo[k - i] * err[i - 1]).sum();
        d.push(s / k as f64);
    }
    d.iter()
        .zip(&lo)
        .enumerate()
        .map(|(k, (dk, l))| dk + rounding_bound(k * k + 1, l + dk, prec))
        .collect()
}

fn check_rows(t: &PowerSumTable, n: usize) -> Result<()> {
    if t.len() < n {
        return Err(Error::Parameter(format!("need {n} power sums, table has {}", t.len())));
    }
    Ok(())
}

/// e_0..e_n from p_1..p_n, with error bounds.
pub fn newton_e_from_p(t: &PowerSumTable, n: usize) -> Result<(Vec<Complex>, Vec<f64>)> {
    check_rows(t, n)?;
    let abs: Vec<f64> = t.values.iter().map(mag).collect();
    Ok((newton(&t.values, n, true), newton_bound(&abs, &t.truncation_error, n, t.prec())))
}

/// h_0..h_n from p_1..p_n, with error bounds.
pub fn newton_h_from_p(t: &PowerSumTable, n: usize) -> Result<(Vec<Complex>, Vec<f64>)> {
    check_rows(t, n)?;
    let abs: Vec<f64> = t.values.iter().map(mag).collect();
    Ok((newton(&t.values, n, false), newton_bound(&abs, &t.truncation_error, n, t.prec())))
}

pub fn mzv_tables(t: &PowerSumTable, n: usize) -> Result<MzvTables> {
    let (e, e_error) = newton_e_from_p(t, n)?;
    let (h, h_error) = newton_h_from_p(t, n)?;
    Ok(MzvTables { s: t.s, e, h, e_error, h_error })
}

/// p_1..p_n from e_0..e_n (inverse Newton identities).
pub fn p_from_e(e: &[Complex]) -> Vec<Complex> {
    let n = e.len() - 1;
    let mut p: Vec<Complex> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut s = e[k].mul_i64(k as i64);
        for i in 1..k {
            let t = &e[k - i] * &p[i - 1];
            s = if i % 2 == 1 { &s - &t } else { &s + &t };
        }
        p.push(if k % 2 == 1 { s } else { -&s });
    }
    p
}

/// ζ_G(s₁·k, …, s_r·k) (or its starred variant) by dynamic programming over
/// the computed zeros, plus the tail: the index set splits into the j
/// outermost indices beyond the computed range and the rest within it, so
/// ζ = Σ_j ζ_tail(s₁..s_j)·ζ_head(s_{j+1}..s_r). Tail factors are exact
/// symmetric functions of modelled tail power sums for repeated arguments;
/// otherwise depth ≥ 2 tail factors are taken as zero and bounded by the
/// product of tail magnitudes.
pub fn mzv_nested_sum(
    seq: &ZeroSequence,
    comp: &Composition,
    s_scale: u32,
    starred: bool,
    ctx: &PrecisionContext,
) -> Result<(Complex, f64)> {
    let r = comp.depth();
    if r > MAX_DEPTH {
        return Err(Error::DepthLimit { depth: r, limit: MAX_DEPTH });
    }
    let c = comp.scaled(s_scale);
    if !c.converges(seq.tail_exponent) {
        return Err(Error::Divergence(format!(
            "nested sum {:?} diverges for {}",
            c.parts(),
            seq.family
        )));
    }
    let p = ctx.bits() + 16;
    let parts = c.parts();
    let n = seq.count();
    let inv: Vec<Complex> = seq.zeros.par_iter().map(|z| z.with_prec(p).recip()).collect();
    let mut distinct: Vec<u32> = parts.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let pw: Vec<Vec<Complex>> =
        distinct.iter().map(|&w| inv.par_iter().map(|x| x.powi(w as i64)).collect()).collect();
    let term = |w: u32, i: usize| &pw[distinct.binary_search(&w).unwrap()][i];

    // heads[j] = ζ_head(s_{j+1}..s_r); heads[r] = 1
    let mut heads = vec![Complex::one(p); r + 1];
    let mut abs_heads = vec![1f64; r + 1];
    // cur[i]: sum over chains whose outermost index is ≤ i (1-based; cur[0] = empty)
    let mut cur = vec![Complex::one(p); n + 1];
    let mut cur_abs = vec![1f64; n + 1];
    for j in (0..r).rev() {
        let mut next = vec![Complex::zero(p); n + 1];
        let mut next_abs = vec![0f64; n + 1];
        for i in 1..=n {
            let inner = if starred { &cur[i] } else { &cur[i - 1] };
            let inner_abs = if starred { cur_abs[i] } else { cur_abs[i - 1] };
            let t = term(parts[j], i - 1);
            let v = &next[i - 1] + &(t * inner);
            next_abs[i] = next_abs[i - 1] + mag(t) * inner_abs;
            next[i] = v;
        }
        heads[j] = next[n].clone();
        abs_heads[j] = next_abs[n];
        cur = next;
        cur_abs = next_abs;
    }

    // tail factors
    let mut total = heads[0].clone();
    let mut bound = rounding_bound(n * r, abs_heads[0], p);
    let symmetric = parts.iter().all(|&w| w == parts[0]);
    let mut tails = Vec::with_capacity(r);
    for w in parts {
        tails.push(tail_power_sum(seq, *w)?);
    }
    if symmetric {
        let base = parts[0];
        let mut tp = Vec::with_capacity(r);
        let mut tabs = Vec::with_capacity(r);
        let mut terr = Vec::with_capacity(r);
        for k in 1..=r as u32 {
            let t = tail_power_sum(seq, base * k)?;
            tp.push(Complex::from_real(Real::from_f64(t.value, p)));
            tabs.push(t.abs);
            terr.push(t.bound);
        }
        let tv = newton(&tp, r, !starred);
        let tb = newton_bound(&tabs, &terr, r, 53);
        for j in 1..=r {
            total = &total + &(&tv[j] * &heads[j]);
            bound += (tb[j] + 1e-16 * mag(&tv[j])) * abs_heads[j];
        }
    } else {
        let t1 = Complex::from_real(Real::from_f64(tails[0].value, p));
        total = &total + &(&t1 * &heads[1]);
        bound += tails[0].bound * abs_heads[1];
        let mut prod = tails[0].abs;
        for j in 2..=r {
            prod *= tails[j - 1].abs;
            bound += prod * abs_heads[j];
        }
    }
    Ok((total.with_prec(ctx.bits()), bound))
}

/// ζ_G({ms}^n) for n = 0..⌊(len−1)/m⌋ from e_k = ζ_G({s}^k):
/// ∏_j E(ω^j t) = Σ_n (−1)^{n(m−1)} ζ_G({ms}^n) t^{mn}.
pub fn dissect_mzv(e: &[Complex], m: usize, ctx: &PrecisionContext) -> Result<Vec<Complex>> {
    if m == 0 || e.is_empty() {
        return Err(Error::Parameter("dissection needs m ≥ 1 and a nonempty table".into()));
    }
    let prod = ps_root_of_unity_product(&TruncatedSeries::new(e.to_vec()), m, ctx)?;
    let count = (e.len() - 1) / m + 1;
    Ok((0..count)
        .map(|n| {
            let c = prod.coeff(m * n).clone();
            if (n * (m - 1)) % 2 == 1 {
                -&c
            } else {
                c
            }
        })
        .collect())
}

/// Majorant error bound for `dissect_mzv` given |e_k| and their errors:
/// (A+Δ)^m − A^m expanded as Σ_i A^{m−1−i}·Δ·(A+Δ)^i.
pub fn dissect_bound(e_abs: &[f64], e_err: &[f64], m: usize) -> Vec<f64> {
    let len = e_abs.len();
    let mul = |a: &[f64], b: &[f64]| {
        let mut out = vec![0f64; len];
        for i in 0..len {
            for j in 0..len - i {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    };
    let mut one = vec![0f64; len];
    one[0] = 1.0;
    let hi: Vec<f64> = e_abs.iter().zip(e_err).map(|(a, d)| a + d).collect();
    // pa[i] = A^i, ph[i] = (A+Δ)^i
    let mut pa = vec![one.clone()];
    let mut ph = vec![one];
    for i in 1..m {
        pa.push(mul(&pa[i - 1], e_abs));
        ph.push(mul(&ph[i - 1], &hi));
    }
    let mut tot = vec![0f64; len];
    for i in 0..m {
        let t = mul(&mul(&pa[m - 1 - i], e_err), &ph[i]);
        for k in 0..len {
            tot[k] += t[k];
        }
    }
    (0..(len - 1) / m + 1).map(|n| tot[m * n]).collect()
}

/// Path (ii): coefficient of y^k t^n in ∏_i (1 ± y u_i)^{±1}, u_i = x_i t/(1 − x_i t),
/// x_i = z_i^{−s}. With P_r(t) = Σ_i u_i^r = Σ_{n≥r} C(n−1, r−1) p_n t^n, Newton's
/// identities in y give the coefficients as t-series.
pub fn average_generating(t: &PowerSumTable, n: usize, k: usize, starred: bool) -> Result<AverageValue> {
    let weight = t.s * n as u32;
    let prec = t.prec();
    if k > n || k == 0 {
        let v = if k == 0 && n == 0 { Complex::one(prec) } else { Complex::zero(prec) };
        return Ok(AverageValue { weight, depth: k, starred, value: v, error: 0.0, direct: None });
    }
    check_rows(t, n)?;
    let len = n + 1;
    let binom = |a: usize, b: usize| -> i64 {
        let mut r: i128 = 1;
        for i in 0..b {
            r = r * (a - i) as i128 / (i + 1) as i128;
        }
        r as i64
    };
    let big_p = |r: usize| -> Vec<Complex> {
        (0..len)
            .map(|m| if m >= r { t.values[m - 1].mul_i64(binom(m - 1, r - 1)) } else { Complex::zero(prec) })
            .collect()
    };
    let big_p_f = |r: usize, v: &[f64]| -> Vec<f64> {
        (0..len).map(|m| if m >= r { v[m - 1] * binom(m - 1, r - 1) as f64 } else { 0.0 }).collect()
    };
    let mul = |a: &[Complex], b: &[Complex]| -> Vec<Complex> {
        let mut out = vec![Complex::zero(prec); len];
        for i in 0..len {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..len - i {
                if !b[j].is_zero() {
                    out[i + j] = &out[i + j] + &(&a[i] * &b[j]);
                }
            }
        }
        out
    };
    let mul_f = |a: &[f64], b: &[f64]| -> Vec<f64> {
        let mut out = vec![0f64; len];
        for i in 0..len {
            for j in 0..len - i {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    };
    let mut g: Vec<Vec<Complex>> = vec![{
        let mut one = vec![Complex::zero(prec); len];
        one[0] = Complex::one(prec);
        one
    }];
    let abs: Vec<f64> = t.values.iter().map(mag).collect();
    let hi: Vec<f64> = abs.iter().zip(&t.truncation_error).map(|(a, e)| a + e).collect();
    let mut gl: Vec<Vec<f64>> = vec![{
        let mut one = vec![0f64; len];
        one[0] = 1.0;
        one
    }];
    let mut gd: Vec<Vec<f64>> = vec![vec![0f64; len]];
    for kk in 1..=k {
        let mut acc = vec![Complex::zero(prec); len];
        let mut al = vec![0f64; len];
        let mut ad = vec![0f64; len];
        for r in 1..=kk {
            let prod = mul(&g[kk - r], &big_p(r));
            let neg = !starred && r % 2 == 0;
            for m in 0..len {
                acc[m] = if neg { &acc[m] - &prod[m] } else { &acc[m] + &prod[m] };
            }
            let pl = mul_f(&gl[kk - r], &big_p_f(r, &abs));
            // (g+Δg)(P+ΔP) − gP = Δg·(P+ΔP) + g·ΔP
            let dp = big_p_f(r, &t.truncation_error);
            let pd = mul_f(&gd[kk - r], &big_p_f(r, &hi));
            let pd2 = mul_f(&gl[kk - r], &dp);
            for m in 0..len {
                al[m] += pl[m];
                ad[m] += pd[m] + pd2[m];
            }
        }
        g.push(acc.into_iter().map(|c| c.div_i64(kk as i64)).collect());
        gl.push(al.into_iter().map(|c| c / kk as f64).collect());
        gd.push(ad.into_iter().map(|c| c / kk as f64).collect());
    }
    let err = gd[k][n] + rounding_bound(n * k + 1, gl[k][n] + gd[k][n], prec);
    Ok(AverageValue { weight, depth: k, starred, value: g[k][n].clone(), error: err, direct: None })
}

/// Path (i): Σ over compositions a of n into k parts of ζ_G(s·a).
pub fn average_direct(
    seq: &ZeroSequence,
    s: u32,
    n: usize,
    k: usize,
    starred: bool,
    ctx: &PrecisionContext,
) -> Result<(Complex, f64)> {
    if k > MAX_DEPTH {
        return Err(Error::DepthLimit { depth: k, limit: MAX_DEPTH });
    }
    let comps = Composition::all(n as u32, k);
    let parts: Vec<(Complex, f64)> = comps
        .par_iter()
        .map(|c| mzv_nested_sum(seq, c, s, starred, ctx))
        .collect::<Result<_>>()?;
    let p = ctx.bits();
    let mut v = Complex::zero(p + 16);
    let mut b = 0.0;
    for (x, e) in parts {
        v = &v + &x;
        b += e;
    }
    Ok((v.with_prec(p), b))
}

/// S_G(sn, k) (or S*_G) by the generating product, cross-checked by the
/// direct composition sum when n ≤ `direct_max_n` and k ≤ 6.
pub fn averages(
    seq: &ZeroSequence,
    s: u32,
    n: usize,
    k: usize,
    starred: bool,
    direct_max_n: usize,
    ctx: &PrecisionContext,
) -> Result<AverageValue> {
    let table = power_sums_from_zeros(seq, s, n.max(1), ctx)?;
    let mut out = average_generating(&table, n, k, starred)?;
    if k >= 1 && k <= n && n <= direct_max_n {
        out.direct = Some(average_direct(seq, s, n, k, starred, ctx)?);
    }
    Ok(out)
}

/// ζ_G(k+1) for k = genus..order−2 from the normalized product Ψ, using
/// Σ_{k≥p} ζ_G(k+1) z^k = −Ψ′/Ψ.
pub fn zeta_from_series(psi: &TruncatedSeries, norm: &WeierstrassNormalization) -> Result<Vec<Complex>> {
    if psi.order() == 0 || psi.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let c0 = psi.coeff(0).recip();
    let ld = ps_logderiv(&psi.scale(&c0))?.neg();
    Ok(ld.coefficients.into_iter().skip(norm.genus).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_enumerate() {
        assert_eq!(Composition::all(4, 2).len(), 3);
        assert_eq!(Composition::all(6, 3).len(), 10);
        assert!(Composition::all(2, 3).is_empty());
        let c = Composition::new(vec![2, 1]).unwrap();
        assert!(c.converges(1.0));
        assert!(!Composition::new(vec![1, 2]).unwrap().converges(1.0));
        assert!(!Composition::new(vec![1]).unwrap().converges(1.5));
        assert!(Composition::new(vec![0]).is_err());
    }

    #[test]
    fn newton_round_trip() {
        let p = 200;
        let vals: Vec<Complex> = (1..=6).map(|k| Complex::from_frac(1, k * k + 1, p)).collect();
        let t = PowerSumTable { s: 2, values: vals.clone(), truncation_error: vec![0.0; 6] };
        let (e, _) = newton_e_from_p(&t, 6).unwrap();
        let back = p_from_e(&e);
        for (a, b) in back.iter().zip(&vals) {
            assert!((a - b).log2_abs() < -180.0);
        }
        let tables = mzv_tables(&t, 6).unwrap();
        assert!(tables.convolution_defect().log2_abs() < -180.0);
        assert_eq!(tables.e[1], tables.h[1]);
    }
}
