//! Exact rational helpers: parsing, binomials, Bernoulli and Euler numbers.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `3`, `-1/3`, `0.5`, `-2.5e-3`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_rational(n)?;
        let d = parse_rational(d)?;
        if d.is_zero() {
            return None;
        }
        return Some(n / d);
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("0{ip}{fp}").parse().ok()?;
    let e10 = exp - fp.len() as i64;
    let ten = BigInt::from(10);
    let mut q = Rational::from_integer(digits);
    if e10 >= 0 {
        q *= Rational::from_integer(num_traits::pow(ten, e10 as usize));
    } else {
        q /= Rational::from_integer(num_traits::pow(ten, (-e10) as usize));
    }
    Some(if neg { -q } else { q })
}

/// Generalized binomial n(n−1)⋯(n−k+1)/k!; zero for k < 0.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    let k = if n >= 0 && k > n - k { n - k } else { k };
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

static EVEN_BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// B_0, B_2, …, B_{2n} via integer tangent numbers.
fn even_bernoulli_table(n: usize) -> Vec<Rational> {
    let mut t = vec![BigInt::zero(); n + 1];
    if n >= 1 {
        t[1] = BigInt::one();
    }
    for k in 2..=n {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::one());
    for (k, tk) in t.iter().enumerate().skip(1) {
        let four_k = BigInt::one() << (2 * k);
        let num = tk * BigInt::from(2 * k);
        let den = &four_k * (&four_k - 1);
        let b = Rational::new(num, den);
        out.push(if k % 2 == 1 { b } else { -b });
    }
    out
}

/// B_{2k}, cached and grown on demand.
pub fn bernoulli_even(k: usize) -> Rational {
    let mut g = EVEN_BERNOULLI.lock().unwrap();
    if g.len() <= k {
        let n = (2 * g.len()).max(k).max(32);
        *g = even_bernoulli_table(n);
    }
    g[k].clone()
}

/// B_n with B_1 = −1/2 (generating function z/(e^z − 1)).
pub fn classical_bernoulli(n: usize) -> Rational {
    match n {
        0 => Rational::one(),
        1 => rat(-1, 2),
        _ if n % 2 == 1 => Rational::zero(),
        _ => bernoulli_even(n / 2),
    }
}

/// Euler numbers E_0..E_n (sech generating function).
pub fn euler_numbers(n: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for m in (2..=n).step_by(2) {
        let mut s = BigInt::zero();
        for k in (0..m).step_by(2) {
            s += binomial(m as i64, k as i64) * &e[k];
        }
        e[m] = -s;
    }
    e
}

/// E_n(1/2) = E_n / 2^n.
pub fn euler_at_half(n: usize) -> Rational {
    let e = euler_numbers(n);
    Rational::new(e[n].clone(), BigInt::one() << n)
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_examples() {
        assert_eq!(classical_bernoulli(0), rat_int(1));
        assert_eq!(classical_bernoulli(2), rat(1, 6));
        assert_eq!(classical_bernoulli(3), rat_int(0));
        assert_eq!(classical_bernoulli(12), rat(-691, 2730));
        assert_eq!(classical_bernoulli(60).denom(), &BigInt::from(56786730u64));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_at_half(0), rat_int(1));
        assert_eq!(euler_at_half(1), rat_int(0));
        assert_eq!(euler_at_half(2), rat(-1, 4));
        assert_eq!(euler_at_half(4), rat(5, 16));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-1/3"), Some(rat(-1, 3)));
        assert_eq!(parse_rational("0.5"), Some(rat(1, 2)));
        assert_eq!(parse_rational("-2.5e-3"), Some(rat(-1, 400)));
        assert_eq!(parse_rational("12"), Some(rat_int(12)));
        assert_eq!(parse_rational(".25"), Some(rat(1, 4)));
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(7, 0), BigInt::one());
    }
}
