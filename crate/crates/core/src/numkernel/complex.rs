use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::real::Real;

#[derive(Clone, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Complex {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Complex {
        let p = re.prec();
        Complex { re, im: Real::zero(p) }
    }

    pub fn zero(p: u32) -> Complex {
        Complex::from_real(Real::zero(p))
    }

    pub fn one(p: u32) -> Complex {
        Complex::from_real(Real::one(p))
    }

    pub fn i(p: u32) -> Complex {
        Complex { re: Real::zero(p), im: Real::one(p) }
    }

    pub fn from_i64(v: i64, p: u32) -> Complex {
        Complex::from_real(Real::from_i64(v, p))
    }

    pub fn from_frac(n: i64, d: i64, p: u32) -> Complex {
        Complex::from_real(Real::from_frac(n, d, p))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn with_prec(&self, p: u32) -> Complex {
        Complex { re: self.re.with_prec(p), im: self.im.with_prec(p) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Complex {
        Complex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re.sqr() + &self.im.sqr()
    }

    pub fn abs(&self) -> Real {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt()
    }

    /// log2|z|, cheap and approximate.
    pub fn log2_abs(&self) -> f64 {
        let a = self.re.log2_abs();
        let b = self.im.log2_abs();
        let m = a.max(b);
        if m == f64::NEG_INFINITY {
            return m;
        }
        m + 0.5 * (1.0 + 2f64.powf(2.0 * (a.min(b) - m))).log2()
    }

    pub fn scale(&self, r: &Real) -> Complex {
        if self.im.is_zero() {
            let re = &self.re * r;
            let p = re.prec();
            return Complex { re, im: Real::zero(p) };
        }
        Complex { re: &self.re * r, im: &self.im * r }
    }

    pub fn mul_2k(&self, k: i64) -> Complex {
        Complex { re: self.re.mul_2k(k), im: self.im.mul_2k(k) }
    }

    pub fn mul_i64(&self, k: i64) -> Complex {
        Complex { re: self.re.mul_i64(k), im: self.im.mul_i64(k) }
    }

    pub fn div_i64(&self, k: i64) -> Complex {
        if self.im.is_zero() {
            let re = self.re.div_i64(k);
            let p = re.prec();
            return Complex { re, im: Real::zero(p) };
        }
        Complex { re: self.re.div_i64(k), im: self.im.div_i64(k) }
    }

    /// Multiplication by ±ı.
    pub fn mul_i(&self, sign: i32) -> Complex {
        if sign >= 0 {
            Complex { re: -&self.im, im: self.re.clone() }
        } else {
            Complex { re: self.im.clone(), im: -&self.re }
        }
    }

    pub fn sqr(&self) -> Complex {
        self * self
    }

    pub fn recip(&self) -> Complex {
        Complex::one(self.prec()) / self
    }

    pub fn powi(&self, n: i64) -> Complex {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut result = Complex::one(self.prec());
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

    pub fn arg(&self) -> Real {
        Real::atan2(&self.im, &self.re)
    }

    pub fn exp(&self) -> Complex {
        let r = self.re.exp();
        if self.im.is_zero() {
            let p = r.prec();
            return Complex { re: r, im: Real::zero(p) };
        }
        let (s, c) = self.im.sin_cos();
        Complex { re: &r * &c, im: &r * &s }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Complex {
        if self.im.is_zero() && self.re.is_positive() {
            let re = self.re.ln();
            let p = re.prec();
            return Complex { re, im: Real::zero(p) };
        }
        Complex { re: self.norm_sqr().ln().mul_2k(-1), im: self.arg() }
    }

    /// Principal power z^w.
    pub fn pow(&self, w: &Complex) -> Complex {
        if w.im.is_zero() {
            if let Some(n) = w.re.to_integer() {
                if n.bits() < 20 {
                    use num_traits::ToPrimitive;
                    return self.powi(n.to_i64().unwrap());
                }
            }
            if self.im.is_zero() && self.re.is_positive() {
                return Complex::from_real(self.re.pow(&w.re));
            }
        }
        if self.is_zero() {
            return Complex::zero(self.prec());
        }
        (w * &self.ln()).exp()
    }

    /// e^(2πı k/m)
    pub fn root_of_unity(k: i64, m: i64, p: u32) -> Complex {
        let k = k.rem_euclid(m);
        if k == 0 {
            return Complex::one(p);
        }
        if 2 * k == m {
            return Complex::from_i64(-1, p);
        }
        if 4 * k == m {
            return Complex::i(p);
        }
        if 4 * k == 3 * m {
            return Complex::i(p).mul_i64(-1);
        }
        let ang = Real::pi(p + 8).mul_i64(2 * k).div_i64(m);
        let (s, c) = ang.sin_cos();
        Complex { re: c.with_prec(p), im: s.with_prec(p) }
    }

    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        (self.re.to_decimal(digits), self.im.to_decimal(digits))
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{:?}", self.re)
        } else {
            write!(f, "({:?} + {:?}ı)", self.re, self.im)
        }
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -self.re, im: -self.im }
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -&self.re, im: -&self.im }
    }
}

fn add(a: &Complex, b: &Complex) -> Complex {
    Complex { re: &a.re + &b.re, im: &a.im + &b.im }
}

fn sub(a: &Complex, b: &Complex) -> Complex {
    Complex { re: &a.re - &b.re, im: &a.im - &b.im }
}

fn mul(a: &Complex, b: &Complex) -> Complex {
    // real operands are the common case: keep them on the cheap path
    if a.im.is_zero() && b.im.is_zero() {
        let re = &a.re * &b.re;
        let p = re.prec();
        return Complex { re, im: Real::zero(p) };
    }
    if b.im.is_zero() {
        return Complex { re: &a.re * &b.re, im: &a.im * &b.re };
    }
    if a.im.is_zero() {
        return Complex { re: &a.re * &b.re, im: &a.re * &b.im };
    }
    Complex {
        re: &(&a.re * &b.re) - &(&a.im * &b.im),
        im: &(&a.re * &b.im) + &(&a.im * &b.re),
    }
}

fn div(a: &Complex, b: &Complex) -> Complex {
    if b.im.is_zero() {
        if a.im.is_zero() {
            let re = &a.re / &b.re;
            let p = re.prec();
            return Complex { re, im: Real::zero(p) };
        }
        return Complex { re: &a.re / &b.re, im: &a.im / &b.re };
    }
    let d = b.norm_sqr();
    let n = mul(a, &b.conj());
    Complex { re: &n.re / &d, im: &n.im / &d }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr<&Complex> for &Complex {
            type Output = Complex;
            fn $f(self, o: &Complex) -> Complex {
                $body(self, o)
            }
        }
        impl $tr<Complex> for Complex {
            type Output = Complex;
            fn $f(self, o: Complex) -> Complex {
                $body(&self, &o)
            }
        }
        impl $tr<&Complex> for Complex {
            type Output = Complex;
            fn $f(self, o: &Complex) -> Complex {
                $body(&self, o)
            }
        }
        impl $tr<Complex> for &Complex {
            type Output = Complex;
            fn $f(self, o: Complex) -> Complex {
                $body(self, &o)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);
