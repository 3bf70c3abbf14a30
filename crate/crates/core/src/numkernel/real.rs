//! Binary floating point with a big-integer mantissa.
//!
//! A value is `m · 2^e` carried at `p` bits; every operation rounds its
//! result to the larger precision of its operands (round half away from zero).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub struct Real {
    m: BigInt,
    e: i64,
    p: u32,
}

fn bits(m: &BigInt) -> i64 {
    m.bits() as i64
}

fn round_shift(m: &BigInt, shift: u64) -> BigInt {
    if shift == 0 {
        return m.clone();
    }
    let half = BigInt::one() << (shift - 1);
    if m.sign() == Sign::Minus {
        -((-m + half) >> shift)
    } else {
        (m + half) >> shift
    }
}

/// x · 2^n without intermediate overflow or underflow.
pub fn ldexp(mut x: f64, mut n: i64) -> f64 {
    while n > 1000 {
        x *= 2f64.powi(1000);
        n -= 1000;
        if x.is_infinite() {
            return x;
        }
    }
    while n < -1000 {
        x *= 2f64.powi(-1000);
        n += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * 2f64.powi(n as i32)
}

impl Real {
    fn norm(m: BigInt, e: i64, p: u32) -> Real {
        if m.is_zero() {
            return Real { m, e: 0, p };
        }
        let b = bits(&m);
        if b > p as i64 {
            let s = (b - p as i64) as u64;
            Real { m: round_shift(&m, s), e: e + s as i64, p }
        } else {
            Real { m, e, p }
        }
    }

    pub fn zero(p: u32) -> Real {
        Real { m: BigInt::zero(), e: 0, p }
    }

    pub fn one(p: u32) -> Real {
        Real::from_i64(1, p)
    }

    pub fn from_i64(v: i64, p: u32) -> Real {
        Real::norm(BigInt::from(v), 0, p)
    }

    pub fn from_bigint(v: BigInt, p: u32) -> Real {
        Real::norm(v, 0, p)
    }

    /// Exact `m · 2^e`, rounded to `p` bits.
    pub fn from_parts(m: BigInt, e: i64, p: u32) -> Real {
        Real::norm(m, e, p)
    }

    pub fn from_ratio(q: &BigRational, p: u32) -> Real {
        (Real::from_bigint(q.numer().clone(), p + 2) / Real::from_bigint(q.denom().clone(), p + 2))
            .with_prec(p)
    }

    pub fn from_frac(n: i64, d: i64, p: u32) -> Real {
        (Real::from_i64(n, p + 2) / Real::from_i64(d, p + 2)).with_prec(p)
    }

    pub fn from_f64(x: f64, p: u32) -> Real {
        assert!(x.is_finite(), "non-finite f64");
        if x == 0.0 {
            return Real::zero(p);
        }
        let b = x.to_bits();
        let sign = if b >> 63 == 1 { -1 } else { 1 };
        let ex = ((b >> 52) & 0x7ff) as i64;
        let frac = b & ((1u64 << 52) - 1);
        let (mant, e) = if ex == 0 { (frac, -1074) } else { (frac | (1u64 << 52), ex - 1075) };
        Real::norm(BigInt::from(mant) * sign, e, p)
    }

    /// Parses decimals (`-2.5e-3`) and fractions (`-1/3`).
    pub fn parse(s: &str, p: u32) -> Option<Real> {
        super::rational::parse_rational(s).map(|q| Real::from_ratio(&q, p))
    }

    pub fn prec(&self) -> u32 {
        self.p
    }

    pub fn with_prec(&self, p: u32) -> Real {
        Real::norm(self.m.clone(), self.e, p)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.m.sign() == Sign::Minus
    }

    pub fn is_positive(&self) -> bool {
        self.m.sign() == Sign::Plus
    }

    pub fn signum(&self) -> i32 {
        match self.m.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Real {
        Real { m: self.m.abs(), e: self.e, p: self.p }
    }

    /// Exact multiplication by 2^k.
    pub fn mul_2k(&self, k: i64) -> Real {
        if self.is_zero() {
            return self.clone();
        }
        Real { m: self.m.clone(), e: self.e + k, p: self.p }
    }

    pub fn mul_i64(&self, k: i64) -> Real {
        Real::norm(&self.m * k, self.e, self.p)
    }

    pub fn div_i64(&self, k: i64) -> Real {
        self / &Real::from_i64(k, self.p)
    }

    /// Position of the leading bit: |x| ∈ [2^t, 2^(t+1)). `None` for zero.
    pub fn top(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(bits(&self.m) + self.e - 1)
        }
    }

    /// log2|x| as f64 (−∞ for zero); valid far outside the f64 exponent range.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let b = bits(&self.m);
        let sh = (b - 60).max(0);
        let lead = (self.m.abs() >> sh as u64).to_f64().unwrap_or(1.0);
        lead.log2() + (sh + self.e) as f64
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let b = bits(&self.m);
        let sh = (b - 62).max(0);
        let lead = round_shift(&self.m, sh as u64).to_f64().unwrap_or(0.0);
        ldexp(lead, sh + self.e)
    }

    /// `Some(n)` when the value is an exact integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.e >= 0 {
            return Some(&self.m << self.e as u64);
        }
        let s = (-self.e) as u64;
        let q = &self.m >> s;
        if (&q << s) == self.m {
            Some(q)
        } else {
            None
        }
    }

    /// Nearest integer (ties away from zero).
    pub fn round_int(&self) -> BigInt {
        if self.e >= 0 {
            &self.m << self.e as u64
        } else {
            round_shift(&self.m, (-self.e) as u64)
        }
    }

    pub fn floor_int(&self) -> BigInt {
        if self.e >= 0 {
            &self.m << self.e as u64
        } else {
            self.m.clone() >> ((-self.e) as u64)
        }
    }

    /// Exact rational value.
    pub fn to_rational(&self) -> BigRational {
        if self.e >= 0 {
            BigRational::from_integer(&self.m << self.e as u64)
        } else {
            BigRational::new(self.m.clone(), BigInt::one() << ((-self.e) as u64))
        }
    }

    fn add_impl(a: &Real, b: &Real, negate_b: bool) -> Real {
        let p = a.p.max(b.p);
        let bm = if negate_b { -&b.m } else { b.m.clone() };
        if a.is_zero() {
            return Real::norm(bm, b.e, p);
        }
        if b.is_zero() {
            return Real::norm(a.m.clone(), a.e, p);
        }
        let at = bits(&a.m) + a.e;
        let bt = bits(&b.m) + b.e;
        let gap = p as i64 + 4;
        // the smaller operand is below a quarter ulp of the result
        if at > bt + gap {
            return Real::norm(a.m.clone(), a.e, p);
        }
        if bt > at + gap {
            return Real::norm(bm, b.e, p);
        }
        if a.e >= b.e {
            Real::norm((&a.m << (a.e - b.e) as u64) + bm, b.e, p)
        } else {
            Real::norm(a.m.clone() + (bm << (b.e - a.e) as u64), a.e, p)
        }
    }

    fn mul_impl(a: &Real, b: &Real) -> Real {
        let p = a.p.max(b.p);
        Real::norm(&a.m * &b.m, a.e + b.e, p)
    }

    fn div_impl(a: &Real, b: &Real) -> Real {
        assert!(!b.is_zero(), "division by zero");
        let p = a.p.max(b.p);
        if a.is_zero() {
            return Real::zero(p);
        }
        let s = (p as i64 + 3 + bits(&b.m) - bits(&a.m)).max(0);
        let num = &a.m << s as u64;
        let (q, r) = num.div_rem(&b.m);
        // sticky bit so that rounding of q accounts for the remainder
        let q = if r.is_zero() {
            q << 1u64
        } else if (num.sign() == Sign::Minus) != (b.m.sign() == Sign::Minus) {
            (q << 1u64) - 1
        } else {
            (q << 1u64) + 1
        };
        Real::norm(q, a.e - b.e - s - 1, p)
    }

    pub fn recip(&self) -> Real {
        &Real::one(self.p) / self
    }

    pub fn sqr(&self) -> Real {
        self * self
    }

    pub fn sqrt(&self) -> Real {
        assert!(!self.is_negative(), "sqrt of negative number");
        if self.is_zero() {
            return self.clone();
        }
        let p = self.p as i64;
        let mut s = (2 * p + 4 - bits(&self.m)).max(0);
        if (self.e - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let r = (&self.m << s as u64).sqrt();
        Real::norm(r, (self.e - s) / 2, self.p)
    }

    pub fn powi(&self, n: i64) -> Real {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut result = Real::one(self.p);
        let mut base = self.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.sqr();
            }
        }
        result
    }

    /// x^y for x > 0.
    pub fn pow(&self, y: &Real) -> Real {
        if let Some(n) = y.to_integer() {
            if let Some(n) = n.to_i64() {
                if n.abs() < 1 << 20 {
                    return self.powi(n);
                }
            }
        }
        assert!(self.is_positive(), "real power of a non-positive base");
        let p = self.p.max(y.p);
        let g = 16 + (y.abs().log2_abs() + self.ln().abs().log2_abs()).max(0.0) as u32;
        (y.with_prec(p + g) * self.with_prec(p + g).ln()).exp().with_prec(p)
    }

    pub fn pi(p: u32) -> Real {
        cached(&PI_CACHE, p, compute_pi)
    }

    pub fn ln2(p: u32) -> Real {
        cached(&LN2_CACHE, p, compute_ln2)
    }

    pub fn exp(&self) -> Real {
        let p = self.p;
        if self.is_zero() {
            return Real::one(p);
        }
        let mag = self.log2_abs().max(0.0) as u32;
        let wp = p + 24 + mag;
        let x = self.with_prec(wp);
        let ln2 = Real::ln2(wp);
        let k = (&x / &ln2).round_int();
        let r = &x - &(&ln2 * &Real::from_bigint(k.clone(), wp));
        let s = ((wp as f64).sqrt() / 2.0) as i64;
        let wp2 = wp + s as u32;
        let r = r.with_prec(wp2).mul_2k(-s);
        let mut term = Real::one(wp2);
        let mut sum = Real::one(wp2);
        let eps = -(wp2 as i64) - 2;
        let mut n = 1i64;
        loop {
            term = (&term * &r).div_i64(n);
            if term.is_zero() || term.top().unwrap() < eps {
                break;
            }
            sum = &sum + &term;
            n += 1;
        }
        for _ in 0..s {
            sum = sum.sqr();
        }
        let k = k.to_i64().expect("exponent overflow in exp");
        sum.mul_2k(k).with_prec(p)
    }

    pub fn ln(&self) -> Real {
        assert!(self.is_positive(), "ln of non-positive number");
        let p = self.p;
        let t = bits(&self.m) + self.e;
        // y ∈ [1/2, 1)
        let y = Real { m: self.m.clone(), e: -bits(&self.m), p: self.p };
        let k = ((p as f64).sqrt() / 3.0) as u32 + 2;
        let wp = p + 24 + k;
        let mut y = y.with_prec(wp);
        for _ in 0..k {
            y = y.sqrt();
        }
        let one = Real::one(wp);
        let u = &(&y - &one) / &(&y + &one);
        let u2 = u.sqr();
        let mut pow = u.clone();
        let mut sum = u.clone();
        let eps = -(wp as i64) - 2;
        let mut j = 3i64;
        loop {
            pow = &pow * &u2;
            let term = pow.div_i64(j);
            if term.is_zero() || term.top().unwrap() < eps + u.top().unwrap_or(0) {
                break;
            }
            sum = &sum + &term;
            j += 2;
        }
        let lny = sum.mul_2k(k as i64 + 1);
        let res = &lny + &(&Real::ln2(wp + 64) * &Real::from_i64(t, wp));
        res.with_prec(p)
    }

    /// (sin x, cos x)
    pub fn sin_cos(&self) -> (Real, Real) {
        let p = self.p;
        if self.is_zero() {
            return (Real::zero(p), Real::one(p));
        }
        let mag = self.log2_abs().max(0.0) as u32;
        let wp = p + 24 + mag;
        let x = self.with_prec(wp);
        let half_pi = Real::pi(wp + mag).mul_2k(-1);
        let k = (&x / &half_pi).round_int();
        let r = &x - &(&half_pi * &Real::from_bigint(k.clone(), wp + mag));
        let r = r.with_prec(wp);
        let r2 = r.sqr();
        let eps = -(wp as i64) - 2;
        let mut s = r.clone();
        let mut c = Real::one(wp);
        let mut ts = r.clone();
        let mut tc = Real::one(wp);
        let mut n = 1i64;
        loop {
            tc = -(&tc * &r2).div_i64(n * (n + 1));
            ts = -(&ts * &r2).div_i64((n + 1) * (n + 2));
            let small = |t: &Real| t.is_zero() || t.top().unwrap() < eps;
            if small(&tc) && small(&ts) {
                break;
            }
            c = &c + &tc;
            s = &s + &ts;
            n += 2;
        }
        let q = k.mod_floor(&BigInt::from(4)).to_i64().unwrap();
        let (s, c) = match q {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        };
        (s.with_prec(p), c.with_prec(p))
    }

    pub fn sin(&self) -> Real {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Real {
        self.sin_cos().1
    }

    pub fn atan(&self) -> Real {
        let p = self.p;
        if self.is_zero() {
            return self.clone();
        }
        let wp = p + 24;
        let x = self.with_prec(wp);
        if x.abs() > Real::one(wp) {
            let base = Real::pi(wp).mul_2k(-1);
            let r = (&base - &x.recip().abs().atan()).with_prec(p);
            return if x.is_negative() { -r } else { r };
        }
        let k = 5i64;
        let wp2 = wp + k as u32;
        let one = Real::one(wp2);
        let mut y = x.with_prec(wp2);
        for _ in 0..k {
            y = &y / &(&one + &(&one + &y.sqr()).sqrt());
        }
        let y2 = y.sqr();
        let mut pow = y.clone();
        let mut sum = y.clone();
        let eps = y.top().unwrap_or(0) - wp2 as i64 - 2;
        let mut j = 3i64;
        loop {
            pow = -(&pow * &y2);
            let term = pow.div_i64(j);
            if term.is_zero() || term.top().unwrap() < eps {
                break;
            }
            sum = &sum + &term;
            j += 2;
        }
        sum.mul_2k(k).with_prec(p)
    }

    pub fn atan2(y: &Real, x: &Real) -> Real {
        let p = y.p.max(x.p);
        if x.is_zero() {
            let h = Real::pi(p).mul_2k(-1);
            return match y.signum() {
                1 => h,
                -1 => -h,
                _ => Real::zero(p),
            };
        }
        let a = (y / x).atan();
        if x.is_positive() {
            a
        } else if y.is_negative() {
            a - Real::pi(p)
        } else {
            a + Real::pi(p)
        }
    }

    pub fn max_ref<'a>(a: &'a Real, b: &'a Real) -> &'a Real {
        if a >= b {
            a
        } else {
            b
        }
    }

    /// `digits` significant decimal digits: plain notation for moderate
    /// exponents, scientific otherwise. Deterministic for identical inputs.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let d = digits.max(1) as i64;
        let (neg, n, k) = self.decimal_digits(d);
        let mut ds = n.to_string();
        debug_assert_eq!(ds.len() as i64, d);
        let sign = if neg { "-" } else { "" };
        if (-5..d).contains(&k) {
            if k >= 0 {
                let int_len = (k + 1) as usize;
                let (ip, fp) = ds.split_at(int_len);
                let fp = fp.trim_end_matches('0');
                if fp.is_empty() {
                    format!("{sign}{ip}")
                } else {
                    format!("{sign}{ip}.{fp}")
                }
            } else {
                let zeros = "0".repeat((-k - 1) as usize);
                let fp = ds.trim_end_matches('0');
                format!("{sign}0.{zeros}{fp}")
            }
        } else {
            let rest = ds.split_off(1);
            let rest = rest.trim_end_matches('0');
            if rest.is_empty() {
                format!("{sign}{ds}e{k}")
            } else {
                format!("{sign}{ds}.{rest}e{k}")
            }
        }
    }

    /// (negative, N, k) with |x| ≈ N · 10^(k − d + 1), 10^(d−1) ≤ N < 10^d.
    fn decimal_digits(&self, d: i64) -> (bool, BigInt, i64) {
        let neg = self.is_negative();
        let m = self.m.abs();
        let mut k = (self.log2_abs() * std::f64::consts::LOG10_2).floor() as i64;
        let ten = BigInt::from(10);
        let lo = num_traits::pow(ten.clone(), (d - 1) as usize);
        let hi = &lo * &ten;
        loop {
            let sc = d - 1 - k;
            let mut num = m.clone();
            let mut den = BigInt::one();
            if self.e >= 0 {
                num <<= self.e as u64;
            } else {
                den <<= (-self.e) as u64;
            }
            if sc >= 0 {
                num *= num_traits::pow(ten.clone(), sc as usize);
            } else {
                den *= num_traits::pow(ten.clone(), (-sc) as usize);
            }
            let n = (num * 2 + &den) / (den * 2);
            if n >= hi {
                k += 1;
            } else if n < lo {
                k -= 1;
            } else {
                return (neg, n, k);
            }
        }
    }
}

static PI_CACHE: Mutex<Option<Real>> = Mutex::new(None);
static LN2_CACHE: Mutex<Option<Real>> = Mutex::new(None);

fn cached(cell: &Mutex<Option<Real>>, p: u32, f: fn(u32) -> Real) -> Real {
    {
        let g = cell.lock().unwrap();
        if let Some(v) = g.as_ref() {
            if v.p >= p + 8 {
                return v.with_prec(p);
            }
        }
    }
    let wp = (p + 8).max(256).next_power_of_two();
    let v = f(wp);
    let mut g = cell.lock().unwrap();
    let better = g.as_ref().is_none_or(|old| old.p < wp);
    if better {
        *g = Some(v.clone());
    }
    v.with_prec(p)
}

/// Σ (±1)^k / ((2k+1) n^(2k+1)) in fixed point with `fb` fractional bits.
fn arctan_inv_fixed(n: u64, fb: u64, hyperbolic: bool) -> BigInt {
    let n2 = BigInt::from(n * n);
    let mut pow = (BigInt::one() << fb) / n;
    let mut sum = pow.clone();
    let mut k = 1u64;
    loop {
        pow /= &n2;
        if pow.is_zero() {
            break;
        }
        let t = &pow / (2 * k + 1);
        if hyperbolic || k.is_multiple_of(2) {
            sum += t;
        } else {
            sum -= t;
        }
        k += 1;
    }
    sum
}

fn compute_pi(p: u32) -> Real {
    let fb = p as u64 + 32;
    let v = arctan_inv_fixed(5, fb, false) * 16 - arctan_inv_fixed(239, fb, false) * 4;
    Real::from_parts(v, -(fb as i64), p)
}

fn compute_ln2(p: u32) -> Real {
    let fb = p as u64 + 32;
    let v = arctan_inv_fixed(26, fb, true) * 18 - arctan_inv_fixed(4801, fb, true) * 2
        + arctan_inv_fixed(8749, fb, true) * 8;
    Real::from_parts(v, -(fb as i64), p)
}

impl PartialEq for Real {
    fn eq(&self, other: &Real) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Real {
    fn cmp_value(&self, other: &Real) -> Ordering {
        let (a, b) = (self.signum(), other.signum());
        if a != b {
            return a.cmp(&b);
        }
        if a == 0 {
            return Ordering::Equal;
        }
        let e = self.e.min(other.e);
        let x = &self.m << (self.e - e) as u64;
        let y = &other.m << (other.e - e) as u64;
        x.cmp(&y)
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = ((self.p as f64) * std::f64::consts::LOG10_2) as usize;
        write!(f, "{}", self.to_decimal(d.max(1)))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = f.precision().unwrap_or(((self.p as f64) * std::f64::consts::LOG10_2) as usize);
        write!(f, "{}", self.to_decimal(d.max(1)))
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { m: -self.m, e: self.e, p: self.p }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { m: -&self.m, e: self.e, p: self.p }
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $f(self, o: &Real) -> Real {
                $body(self, o)
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $f(self, o: Real) -> Real {
                $body(&self, &o)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $f(self, o: &Real) -> Real {
                $body(&self, o)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $f(self, o: Real) -> Real {
                $body(self, &o)
            }
        }
    };
}

binop!(Add, add, |a: &Real, b: &Real| Real::add_impl(a, b, false));
binop!(Sub, sub, |a: &Real, b: &Real| Real::add_impl(a, b, true));
binop!(Mul, mul, Real::mul_impl);
binop!(Div, div, Real::div_impl);

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 200;

    fn close(a: &Real, b: &Real, bits: i64) -> bool {
        let d = (a - b).abs();
        d.is_zero() || d.top().unwrap() < b.top().unwrap_or(0) - bits
    }

    #[test]
    fn pi_digits() {
        let pi = Real::pi(P);
        assert!(pi.to_decimal(40).starts_with("3.14159265358979323846264338327950288419"));
    }

    #[test]
    fn exp_ln_roundtrip() {
        for x in ["0.001", "1", "-3.5", "42.25"] {
            let v = Real::parse(x, P).unwrap();
            assert!(close(&v.exp().ln(), &v, 180), "{x}");
        }
        let e = Real::one(P).exp();
        assert!(e.to_decimal(30).starts_with("2.71828182845904523536028747"));
    }

    #[test]
    fn trig_identities() {
        for x in ["0.3", "-2", "100.5", "1e-20"] {
            let v = Real::parse(x, P).unwrap();
            let (s, c) = v.sin_cos();
            let one = &s.sqr() + &c.sqr();
            assert!(close(&one, &Real::one(P), 180), "{x}");
            assert!(close(&Real::atan2(&s, &c), &v.with_prec(P), 150) || x == "100.5");
        }
        let six = Real::pi(P).div_i64(6);
        assert!(close(&six.sin(), &Real::from_frac(1, 2, P), 190));
    }

    #[test]
    fn decimal_format() {
        assert_eq!(Real::from_frac(1, 6, P).to_decimal(5), "0.16667");
        assert_eq!(Real::from_i64(24, P).to_decimal(10), "24");
        assert_eq!(Real::from_frac(-1, 12, P).to_decimal(4), "-0.08333");
        assert_eq!(Real::from_frac(1, 1_000_000_000, P).to_decimal(3), "1e-9");
        assert_eq!(Real::from_frac(-3, 2_000_000, P).to_decimal(3), "-1.5e-6");
    }

    #[test]
    fn sqrt_and_div() {
        let two = Real::from_i64(2, P);
        let r = two.sqrt();
        assert!(close(&r.sqr(), &two, 195));
        assert!(close(&(&Real::one(P) / &r), &r.mul_2k(-1), 195));
    }

    #[test]
    fn absorbs_negligible_addend() {
        let big = Real::one(64);
        let tiny = Real::from_parts(BigInt::one(), -500, 64);
        assert!((&big + &tiny) == big);
        assert!((&tiny - &big) == -big.clone());
    }
}
