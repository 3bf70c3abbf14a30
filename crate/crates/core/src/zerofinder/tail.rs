//! Σ_{n>N} z_n^{−w} over the zeros beyond a computed sequence, from the
//! asymptotic model: explicit model terms up to M, Euler–Maclaurin beyond.

use super::asymptotic::TailShape;
use super::{ZeroFamily, ZeroSequence};
use crate::error::{Error, Result};

/// Tail estimate: `value` is added to truncated power sums, `abs` is the
/// estimate of Σ|z_n|^{−w}, `bound` the error of `value`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TailSum {
    pub value: f64,
    pub abs: f64,
    pub bound: f64,
}

fn shape(family: &ZeroFamily) -> TailShape {
    match family {
        ZeroFamily::BesselJ(_) => TailShape::bessel(family.parameter_f64()),
        ZeroFamily::KummerDiagonal(_) => TailShape::bessel(family.parameter_f64() - 0.5),
        ZeroFamily::Airy => TailShape::airy(),
        ZeroFamily::AiryPrime => TailShape::airy_prime(),
    }
}

/// (signed factor, absolute factor) turning model magnitude^{−w} into the
/// contribution of one model index.
fn factors(family: &ZeroFamily, w: u32) -> (f64, f64) {
    match family {
        ZeroFamily::BesselJ(_) => (1.0, 1.0),
        ZeroFamily::Airy | ZeroFamily::AiryPrime => (if w.is_multiple_of(2) { 1.0 } else { -1.0 }, 1.0),
        // (ır)^{−w} + (−ır)^{−w} = 2cos(πw/2) r^{−w}
        ZeroFamily::KummerDiagonal(_) => {
            let c = match w % 4 {
                0 => 2.0,
                2 => -2.0,
                _ => 0.0,
            };
            (c, 2.0)
        }
    }
}

struct Kahan {
    s: f64,
    c: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.s + y;
        self.c = (t - self.s) - y;
        self.s = t;
    }
}

pub fn tail_power_sum(seq: &ZeroSequence, w: u32) -> Result<TailSum> {
    let fam = &seq.family;
    let sh = shape(fam);
    let (sign, absf) = factors(fam, w);
    let wf = w as f64;
    let mut extra = TailSum::default();
    let mut k0 = seq.model_count();
    if let ZeroFamily::KummerDiagonal(_) = fam {
        if seq.count() % 2 == 1 {
            // unpaired last zero: its conjugate lies in the tail
            let z = &seq.zeros[seq.count() - 1];
            // its conjugate −ır contributes ı^w r^{−w}; only the real part
            // survives once the pair is complete
            let t = z.im.to_f64().abs().powf(-wf);
            extra.value = match w % 4 {
                0 => t,
                2 => -t,
                _ => 0.0,
            };
            extra.abs = t;
            k0 += 1;
        }
    }
    if sign == 0.0 {
        return Ok(extra);
    }
    if wf * sh.inv_rho <= 1.0 {
        return Err(Error::Divergence(format!("Σ|z|^−{w} diverges for {fam}")));
    }
    let pair = matches!(fam, ZeroFamily::KummerDiagonal(_));
    let n = k0.max(1);
    let m = (64 * n).max(4096);
    let f = |k: f64| fam.model_magnitude(k).powf(-wf);

    let mut acc = Kahan { s: 0.0, c: 0.0 };
    for k in n + 1..=m {
        acc.add(f(k as f64));
    }
    let mf = m as f64;
    let (mut int, mut next_order) = sh.integral(mf, wf);
    if pair {
        // pair magnitudes are twice the Bessel zeros
        int *= 2f64.powf(-wf);
        next_order *= 2f64.powf(-wf);
    }
    // Σ_{k>M} f = ∫_M^∞ f − f(M)/2 − f′(M)/12 + …
    let fm = f(mf);
    let slope = -wf * sh.log_slope(mf);
    let em = int - fm / 2.0 - slope * fm / 12.0;
    let em_next = (slope.abs().powi(3) * fm / 720.0).abs();
    let t_abs = acc.s + em;

    // model mismatch at the last computed indices
    let mut delta = 0f64;
    for k in [n, n.saturating_sub(1)] {
        if k == 0 || k > seq.model_count() {
            continue;
        }
        let idx = if pair { 2 * (k - 1) } else { k - 1 };
        let z = &seq.zeros[idx];
        let got = z.abs().to_f64();
        let model = fam.model_magnitude(k as f64);
        delta = delta.max(((got - model) / got).abs());
    }
    delta = delta.max(1e-16);
    let model_err = 2.0 * wf * delta * t_abs;
    let rounding = 1e-15 * t_abs + (m as f64) * f64::EPSILON * fm;
    let model_bound = absf * (model_err + next_order + em_next + rounding);

    // crude bound on the whole tail with the slowest plausible growth
    let (rho, c) = fam.growth();
    let zn = seq.zeros.last().map(|z| z.abs().to_f64()).unwrap_or(1.0);
    let c_eff = c.min(zn / (n as f64).powf(1.0 / rho));
    let g = wf / rho;
    let crude = absf * c_eff.powf(-wf) * (n as f64).powf(1.0 - g) / (g - 1.0);

    let value = sign * t_abs + extra.value;
    let bound = model_bound.min((sign * t_abs).abs() + crude);
    Ok(TailSum { value, abs: absf * t_abs + extra.abs, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::rational::rat;
    use crate::numkernel::PrecisionContext;
    use crate::zerofinder::{airy_zeros, bessel_zeros, kummer_zeros_diagonal};
    use std::f64::consts::PI;

    #[test]
    fn half_order_tail_is_exact_remainder() {
        let ctx = PrecisionContext::new(20).unwrap();
        let seq = bessel_zeros(&rat(1, 2), 50, &ctx).unwrap();
        let t = tail_power_sum(&seq, 2).unwrap();
        let head: f64 = (1..=50).map(|k| (k as f64 * PI).powi(-2)).sum();
        let exact = 1.0 / 6.0 - head;
        assert!((t.value - exact).abs() < 1e-12, "{} {}", t.value, exact);
        assert!(t.bound < 1e-9 && t.bound + 1e-16 >= (t.value - exact).abs());
    }

    #[test]
    fn airy_tail_closes_zeta_two() {
        let ctx = PrecisionContext::new(20).unwrap();
        let seq = airy_zeros(60, &ctx).unwrap();
        let t = tail_power_sum(&seq, 2).unwrap();
        let head: f64 = seq.zeros.iter().map(|z| z.re.to_f64().powi(-2)).sum();
        assert!((head + t.value - 0.5314572319609995).abs() < 1e-8f64.max(t.bound));
    }

    #[test]
    fn kummer_odd_weight_vanishes() {
        let ctx = PrecisionContext::new(20).unwrap();
        let seq = kummer_zeros_diagonal(&rat(1, 1), 10, &ctx).unwrap();
        let t = tail_power_sum(&seq, 3).unwrap();
        assert_eq!(t.value, 0.0);
    }

    #[test]
    fn divergent_weight_rejected() {
        let ctx = PrecisionContext::new(20).unwrap();
        let seq = bessel_zeros(&rat(0, 1), 5, &ctx).unwrap();
        assert!(tail_power_sum(&seq, 1).is_err());
    }
}
