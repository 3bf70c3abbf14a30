//! Asymptotic zero locations (f64). They seed Newton iterations and model
//! the zeros beyond the computed range when estimating truncation tails.

use std::f64::consts::PI;

/// McMahon's expansion for the k-th positive zero of J_ν.
pub fn bessel_mcmahon(nu: f64, k: f64) -> f64 {
    let beta = (k + nu / 2.0 - 0.25) * PI;
    let mu = 4.0 * nu * nu;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8.powi(5))
        - 64.0
            * (mu - 1.0)
            * (6949.0 * mu.powi(3) - 153855.0 * mu * mu + 1585743.0 * mu - 6277237.0)
            / (105.0 * b8.powi(7))
}

/// Initial guess for the k-th zero of j_ν; uniform expansion for the first
/// zeros of large order, McMahon otherwise.
pub fn bessel_guess(nu: f64, k: usize) -> f64 {
    if nu > 3.0 && k <= 2 {
        let c = nu.cbrt();
        return if k == 1 {
            nu + 1.8557571 * c + 1.033150 / c - 0.00397 / nu - 0.0908 / (c * c * nu)
        } else {
            nu + 3.2446076 * c + 3.158244 / c - 0.08331 / nu - 0.8437 / (c * c * nu)
        };
    }
    let g = bessel_mcmahon(nu, k as f64);
    if g > 0.0 {
        g
    } else {
        // small first zeros for ν close to −1: j_ν(z) ≈ 1 − z²/(4(ν+1))
        2.0 * (nu + 1.0).sqrt()
    }
}

/// T(t) of the Airy zero expansion a_k = −T(3π(4k−1)/8).
fn airy_t(t: f64) -> f64 {
    let u = t.powi(-2);
    t.powf(2.0 / 3.0)
        * (1.0 + u * (5.0 / 48.0 + u * (-5.0 / 36.0 + u * (77125.0 / 82944.0 - u * 108056875.0 / 6967296.0))))
}

/// U(t) of the Airy-derivative zero expansion a′_k = −U(3π(4k−3)/8).
fn airy_u(t: f64) -> f64 {
    let u = t.powi(-2);
    t.powf(2.0 / 3.0)
        * (1.0 + u * (-7.0 / 48.0 + u * (35.0 / 288.0 + u * (-181223.0 / 207360.0 + u * 18683371.0 / 1244160.0))))
}

/// |a_k| for the k-th zero of Ai.
pub fn airy_magnitude(k: f64) -> f64 {
    airy_t(3.0 * PI * (4.0 * k - 1.0) / 8.0)
}

/// |a′_k| for the k-th zero of Ai′.
pub fn airy_prime_magnitude(k: f64) -> f64 {
    if k < 1.5 {
        // the expansion is useless for the first zero
        return 1.018_792_971_647_471;
    }
    airy_u(3.0 * PI * (4.0 * k - 3.0) / 8.0)
}

/// Leading-order shape |z_k| ≈ (α(k+s))^{1/ρ}(1 + c₂(α(k+s))^{−2}) used to
/// integrate the far tail analytically.
#[derive(Clone, Copy, Debug)]
pub struct TailShape {
    pub alpha: f64,
    pub shift: f64,
    pub inv_rho: f64,
    pub c2: f64,
}

impl TailShape {
    pub fn bessel(nu: f64) -> TailShape {
        let mu = 4.0 * nu * nu;
        TailShape { alpha: PI, shift: nu / 2.0 - 0.25, inv_rho: 1.0, c2: -(mu - 1.0) / 8.0 }
    }

    pub fn airy() -> TailShape {
        TailShape { alpha: 1.5 * PI, shift: -0.25, inv_rho: 2.0 / 3.0, c2: 5.0 / 48.0 }
    }

    pub fn airy_prime() -> TailShape {
        TailShape { alpha: 1.5 * PI, shift: -0.75, inv_rho: 2.0 / 3.0, c2: -7.0 / 48.0 }
    }

    /// (∫_x^∞ |z(t)|^{−w} dt, size of the first neglected order)
    pub fn integral(&self, x: f64, w: f64) -> (f64, f64) {
        let beta = self.alpha * (x + self.shift);
        let g = w * self.inv_rho;
        let lead = beta.powf(1.0 - g) / (g - 1.0);
        let corr = -w * self.c2 * beta.powf(-1.0 - g) / (g + 1.0);
        let next = (w * self.c2).powi(2) * beta.powf(-3.0 - g) / (g + 3.0);
        ((lead + corr) / self.alpha, next.abs() / self.alpha)
    }

    /// d/dx log|z(x)| at leading order.
    pub fn log_slope(&self, x: f64) -> f64 {
        self.inv_rho / (x + self.shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_first_zeros() {
        assert!((bessel_guess(0.0, 1) - 2.404825557695773).abs() < 5e-3);
        assert!((bessel_guess(0.5, 3) - 3.0 * PI).abs() < 1e-12);
        assert!((bessel_guess(-0.5, 2) - 1.5 * PI).abs() < 1e-12);
        assert!((airy_magnitude(1.0) - 2.338107410459767).abs() < 2e-3);
        assert!((airy_magnitude(2.0) - 4.087949444130971).abs() < 1e-4);
        assert!((airy_prime_magnitude(2.0) - 3.248197582179837).abs() < 1e-3);
    }

    #[test]
    fn tail_integral_matches_sum() {
        // Σ_{k>1000} ((k+s)π)^{-2} for ν=1/2 (exact zeros kπ)
        let sh = TailShape::bessel(0.5);
        let (int, _) = sh.integral(1000.0, 2.0);
        let direct: f64 = (1001..2_000_000).map(|k| (k as f64 * PI).powi(-2)).sum::<f64>()
            + 1.0 / (PI * PI * 2_000_000.0);
        // Euler–Maclaurin: Σ_{k>M} f = ∫_M f − f(M)/2 + …
        let em = int - (1000.0 * PI).powi(-2) / 2.0;
        assert!((em - direct).abs() / direct < 1e-6, "{em} {direct}");
    }
}
