//! Zeta values, multiple zeta values and their star variants built from the
//! zeros of Kummer, Bessel and Airy functions, together with brute-force
//! oracles over numerically computed zeros.

pub mod error;
pub mod families;
pub mod numkernel;
pub mod powerseries;
pub mod mzv;
pub mod zerofinder;

pub use error::{Error, Result};
pub use numkernel::{Complex, PrecisionContext, Rational, Real};
