pub mod complex;
pub mod gamma;
pub mod hyper;
pub mod rational;
pub mod real;

pub use complex::Complex;
pub use gamma::{gamma, gamma_real, pochhammer, pochhammer_real, rgamma, rgamma_real};
pub use hyper::{hyp_pfq, hyp_pfq_rational, hyp_pfq_real};
pub use rational::{classical_bernoulli, euler_at_half, Rational};
pub use real::Real;

use crate::error::{Error, Result};

/// Working precision shared by every numerical operation.
#[derive(Clone, Debug)]
pub struct PrecisionContext {
    pub digits: u32,
    pub series_tol: Real,
    pub max_terms: usize,
}

const GUARD_BITS: u32 = 24;

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<PrecisionContext> {
        if digits < 15 {
            return Err(Error::Parameter(format!("digits must be ≥ 15, got {digits}")));
        }
        let bits = digits_to_bits(digits) + GUARD_BITS;
        let tol = Real::from_i64(10, bits).powi(-(digits as i64 + 5));
        Ok(PrecisionContext { digits, series_tol: tol, max_terms: 100_000 })
    }

    pub fn with_max_terms(mut self, n: usize) -> Result<PrecisionContext> {
        if n < 16 {
            return Err(Error::Parameter("max_terms must be ≥ 16".into()));
        }
        self.max_terms = n;
        Ok(self)
    }

    /// Binary working precision including guard bits.
    pub fn bits(&self) -> u32 {
        digits_to_bits(self.digits) + GUARD_BITS
    }

    /// A context with `extra` more decimal digits.
    pub fn raised(&self, extra: u32) -> PrecisionContext {
        let mut c = PrecisionContext::new(self.digits + extra).expect("digits stay valid");
        c.max_terms = self.max_terms;
        c
    }

    /// 10^(−k) at working precision.
    pub fn eps(&self, k: i64) -> Real {
        Real::from_i64(10, self.bits()).powi(-k)
    }

    pub fn real(&self, v: i64) -> Real {
        Real::from_i64(v, self.bits())
    }

    pub fn frac(&self, n: i64, d: i64) -> Real {
        Real::from_frac(n, d, self.bits())
    }

    pub fn rational(&self, q: &Rational) -> Real {
        Real::from_ratio(q, self.bits())
    }
}

pub fn digits_to_bits(d: u32) -> u32 {
    (d as f64 * std::f64::consts::LOG2_10).ceil() as u32
}
