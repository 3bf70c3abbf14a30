//! Spectral estimates: for energies E_k taken from a zero sequence,
//! Z(s) = Σ E_k^{−s} is dominated by the ground state for large s, and the
//! depth-r value ζ({s}^r) by 1/(E_1⋯E_r).

use super::IdentityReport;
use crate::error::{Error, Result};
use crate::numkernel::{PrecisionContext, Real};
use crate::zerofinder::{tail::tail_power_sum, ZeroSequence};

/// How a zero z becomes an energy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnergyMap {
    /// E = |z|.
    Magnitude,
    /// E = |z|².
    Square,
}

impl EnergyMap {
    fn exponent(self) -> u32 {
        match self {
            EnergyMap::Magnitude => 1,
            EnergyMap::Square => 2,
        }
    }
}

pub const MAX_PRODUCT_DEPTH: usize = 4;

/// Σ E_k^{−js} for j = 1..=r over the zeros plus the modelled tail.
fn energy_power_sums(seq: &ZeroSequence, s: u32, r: usize, map: EnergyMap, ctx: &PrecisionContext) -> Result<Vec<Real>> {
    let p = ctx.bits() + 16;
    let w = s * map.exponent();
    let mags: Vec<Real> = seq.zeros.iter().map(|z| z.abs().with_prec(p).recip()).collect();
    let mut out = Vec::with_capacity(r);
    for j in 1..=r as u32 {
        let wj = w * j;
        let mut acc = Real::zero(p);
        for m in &mags {
            acc = &acc + &m.powi(wj as i64);
        }
        let t = tail_power_sum(seq, wj)?;
        out.push(&acc + &Real::from_f64(t.abs, p));
    }
    Ok(out)
}

/// |Z(s)|^{−1/s}, which tends to the smallest energy.
pub fn ground_state_estimate(seq: &ZeroSequence, s: u32, map: EnergyMap, ctx: &PrecisionContext) -> Result<Real> {
    energy_product_estimate(seq, s, 1, map, ctx)
}

/// |ζ({s}^r)|^{−1/s}, which tends to E_1⋯E_r.
pub fn energy_product_estimate(
    seq: &ZeroSequence,
    s: u32,
    r: usize,
    map: EnergyMap,
    ctx: &PrecisionContext,
) -> Result<Real> {
    if r == 0 || r > MAX_PRODUCT_DEPTH {
        return Err(Error::DepthLimit { depth: r, limit: MAX_PRODUCT_DEPTH });
    }
    if s == 0 {
        return Err(Error::Parameter("s must be positive".into()));
    }
    if seq.count() < r {
        return Err(Error::Parameter(format!("need at least {r} zeros")));
    }
    let p = ctx.bits() + 16;
    let ps = energy_power_sums(seq, s, r, map, ctx)?;
    // Newton: k e_k = Σ_{i=1}^k (−1)^{i−1} e_{k−i} p_i
    let mut e = vec![Real::one(p)];
    for k in 1..=r {
        let mut acc = Real::zero(p);
        for i in 1..=k {
            let t = &e[k - i] * &ps[i - 1];
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        e.push(acc.div_i64(k as i64));
    }
    let er = e[r].abs();
    if !er.is_positive() {
        return Err(Error::Precision("vanishing depth-r value".into()));
    }
    Ok(er.pow(&Real::from_frac(-1, s as i64, p)).with_prec(ctx.bits()))
}

/// Estimates along a ladder of s values with their distance to `target`;
/// the report passes when that distance strictly decreases.
pub fn estimate_ladder(
    seq: &ZeroSequence,
    ladder: &[u32],
    r: usize,
    map: EnergyMap,
    target: &Real,
    ctx: &PrecisionContext,
) -> Result<(Vec<(u32, Real, f64)>, IdentityReport)> {
    let mut rows = Vec::with_capacity(ladder.len());
    for &s in ladder {
        let v = energy_product_estimate(seq, s, r, map, ctx)?;
        let d = (&v - target).abs().to_f64();
        rows.push((s, v, d));
    }
    let decreasing = rows.windows(2).all(|w| w[1].2 < w[0].2);
    let last = rows.last().map(|r| r.2).unwrap_or(f64::NAN);
    let mut rep = IdentityReport::numeric(
        "spectral-ladder",
        format!("{} r={r} s={ladder:?}", seq.family),
        last,
        f64::INFINITY,
    );
    rep.pass = decreasing;
    Ok((rows, rep))
}
