//! Closed forms, generalized Bernoulli numbers and identity checks for the
//! Kummer, Bessel and Airy zero families, plus spectral estimates.

pub mod airy;
pub mod bessel;
pub mod hypergeometric;
pub mod quantum;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numkernel::{PrecisionContext, Rational, Real};

pub use airy::*;
pub use bessel::*;
pub use hypergeometric::*;
pub use quantum::*;

#[derive(Clone, Debug, PartialEq)]
pub enum BernoulliFamily {
    Hypergeometric { a: Rational, b: Rational },
    Bessel { nu: Rational },
    Airy,
}

impl fmt::Display for BernoulliFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BernoulliFamily::Hypergeometric { a, b } => write!(f, "hypergeometric(a={a}, b={b})"),
            BernoulliFamily::Bessel { nu } => write!(f, "bessel(nu={nu})"),
            BernoulliFamily::Airy => write!(f, "airy"),
        }
    }
}

/// values[n] is the n-th number of the family; `exact` is filled when the
/// family parameters are rational and the numbers are rational too.
#[derive(Clone, Debug)]
pub struct BernoulliSequence {
    pub family: BernoulliFamily,
    pub values: Vec<Real>,
    pub exact: Option<Vec<Rational>>,
}

impl BernoulliSequence {
    pub fn count(&self) -> usize {
        self.values.len()
    }
}

/// Outcome of one identity check. Exact checks report a zero defect and
/// `exact = true` only on rational equality.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: String,
    pub parameters: String,
    pub max_abs_defect: f64,
    pub tolerance: f64,
    pub exact: bool,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn numeric(identity: &str, parameters: String, defect: f64, tolerance: f64) -> IdentityReport {
        IdentityReport {
            identity: identity.into(),
            parameters,
            max_abs_defect: defect,
            tolerance,
            exact: false,
            pass: defect.is_finite() && defect <= tolerance,
            notes: Vec::new(),
        }
    }

    pub fn rational(identity: &str, parameters: String, lhs: &Rational, rhs: &Rational) -> IdentityReport {
        let d = (lhs - rhs).abs();
        let equal = d.is_zero();
        IdentityReport {
            identity: identity.into(),
            parameters,
            max_abs_defect: rat_to_f64(&d),
            tolerance: 0.0,
            exact: equal,
            pass: equal,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> IdentityReport {
        self.notes.push(note.into());
        self
    }

    /// Folds several reports of the same identity into one.
    pub fn combine(identity: &str, parameters: String, parts: &[IdentityReport]) -> IdentityReport {
        let defect = parts.iter().map(|r| r.max_abs_defect).fold(0.0, f64::max);
        let tol = parts.iter().map(|r| r.tolerance).fold(0.0, f64::max);
        IdentityReport {
            identity: identity.into(),
            parameters,
            max_abs_defect: defect,
            tolerance: tol,
            exact: parts.iter().all(|r| r.exact),
            pass: parts.iter().all(|r| r.pass),
            notes: parts
                .iter()
                .filter(|r| !r.pass)
                .map(|r| format!("{} [{}]: defect {:e}", r.identity, r.parameters, r.max_abs_defect))
                .collect(),
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        if self.exact {
            write!(f, "{verdict} {} [{}] exact", self.identity, self.parameters)
        } else {
            write!(
                f,
                "{verdict} {} [{}] defect {:.3e} (tol {:.1e})",
                self.identity, self.parameters, self.max_abs_defect, self.tolerance
            )
        }
    }
}

pub(crate) fn rat_to_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let shift = q.numer().bits() as i64 - q.denom().bits() as i64 - 60;
    let scaled = if shift >= 0 {
        q / Rational::from_integer(BigInt::one() << shift as u64)
    } else {
        q * Rational::from_integer(BigInt::one() << (-shift) as u64)
    };
    let v = scaled.to_integer().to_f64().unwrap_or(f64::NAN);
    crate::numkernel::real::ldexp(v, shift)
}

pub(crate) fn require_positive(name: &str, x: &Rational) -> Result<()> {
    if !x.is_positive() {
        return Err(Error::Parameter(format!("{name} must be positive, got {x}")));
    }
    Ok(())
}

pub(crate) fn require_nu(nu: &Rational) -> Result<()> {
    if *nu <= -Rational::one() {
        return Err(Error::Parameter(format!("ν must exceed −1, got {nu}")));
    }
    Ok(())
}

pub(crate) fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn rfact(n: usize) -> Rational {
    Rational::from_integer(crate::numkernel::rational::factorial(n as u64))
}

pub(crate) fn rbinom(n: i64, k: i64) -> Rational {
    Rational::from_integer(crate::numkernel::rational::binomial(n, k))
}

/// (x)_n.
pub(crate) fn poch(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n {
        acc *= x + rint(i as i64);
    }
    acc
}

/// Γ(x + m)/Γ(x) for integer m of either sign; a pole in the denominator
/// product is reported.
pub(crate) fn gamma_shift(x: &Rational, m: i64) -> Result<Rational> {
    if m >= 0 {
        return Ok(poch(x, m as usize));
    }
    let d = poch(&(x + rint(m)), (-m) as usize);
    if d.is_zero() {
        return Err(Error::Pole(format!("Γ ratio at {x} shifted by {m}")));
    }
    Ok(Rational::one() / d)
}

pub(crate) fn pow2(k: i64) -> Rational {
    if k >= 0 {
        Rational::from_integer(BigInt::one() << k as u64)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-k) as u64)
    }
}

pub(crate) fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Coefficients of 1/a up to the length of a.
pub(crate) fn rseries_recip(a: &[Rational]) -> Result<Vec<Rational>> {
    if a.is_empty() || a[0].is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let inv0 = Rational::one() / &a[0];
    let mut out: Vec<Rational> = Vec::with_capacity(a.len());
    out.push(inv0.clone());
    for n in 1..a.len() {
        let mut s = Rational::zero();
        for k in 1..=n {
            s += &a[k] * &out[n - k];
        }
        out.push(-s * &inv0);
    }
    Ok(out)
}

pub(crate) fn rseries_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Relative tolerance used by dual-path numeric assertions.
pub(crate) fn dual_path_tol(ctx: &PrecisionContext) -> Real {
    ctx.eps(ctx.digits as i64 - 12)
}

/// |x − y| ≤ tol·max(1, |x|), else a precision error naming `what`.
pub(crate) fn assert_close(what: &str, x: &Real, y: &Real, ctx: &PrecisionContext) -> Result<()> {
    let d = (x - y).abs();
    let one = Real::one(ctx.bits());
    let scale = Real::max_ref(&one, &x.abs()).clone();
    if d > &dual_path_tol(ctx) * &scale {
        return Err(Error::Precision(format!(
            "{what}: paths differ by {:e}",
            d.to_f64()
        )));
    }
    Ok(())
}
