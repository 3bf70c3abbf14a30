//! Append-only zero cache keyed by (family, digits), plus a plain-text file
//! format: one zero per line as
//! `tag parameter index re im digits`, all exact decimal strings.

use std::collections::HashMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ZeroFamily, ZeroSequence};
use crate::error::{Error, Result};
use crate::numkernel::rational::parse_rational;
use crate::numkernel::{Complex, PrecisionContext, Rational, Real};

type Key = (ZeroFamily, u32);

fn store() -> &'static Mutex<HashMap<Key, Vec<Complex>>> {
    static S: OnceLock<Mutex<HashMap<Key, Vec<Complex>>>> = OnceLock::new();
    S.get_or_init(|| Mutex::new(HashMap::new()))
}

type Compute = fn(&ZeroFamily, usize, usize, &PrecisionContext) -> Result<Vec<Complex>>;

/// Prefix of length ≥ count; missing indices are computed outside the lock
/// and appended only if nobody else extended the entry meanwhile. Zeros are
/// a deterministic function of (family, index, digits), so racing writers
/// produce identical values.
pub(super) fn get_or_extend(
    family: &ZeroFamily,
    count: usize,
    ctx: &PrecisionContext,
    compute: Compute,
) -> Result<Vec<Complex>> {
    let key = (family.clone(), ctx.digits);
    let have = {
        let g = store().lock().unwrap();
        match g.get(&key) {
            Some(v) if v.len() >= count => return Ok(v[..count].to_vec()),
            Some(v) => v.len(),
            None => 0,
        }
    };
    let fresh = compute(family, have, count, ctx)?;
    let mut g = store().lock().unwrap();
    let entry = g.entry(key).or_default();
    if entry.len() == have {
        entry.extend(fresh);
    } else if entry.len() < count {
        let skip = entry.len() - have;
        entry.extend(fresh.into_iter().skip(skip));
    }
    Ok(entry[..count].to_vec())
}

/// Exact decimal for terminating fractions, `p/q` otherwise.
fn rational_string(q: &Rational) -> String {
    let mut d = q.denom().clone();
    for f in [2u32, 5] {
        while (&d % f).is_zero() {
            d /= f;
        }
    }
    if !d.is_one() {
        return format!("{}/{}", q.numer(), q.denom());
    }
    let mut k = 0usize;
    let mut x = q.clone();
    while !x.is_integer() {
        x *= Rational::from_integer(BigInt::from(10));
        k += 1;
    }
    let n = x.to_integer();
    if k == 0 {
        return n.to_string();
    }
    let neg = n < BigInt::zero();
    let s = if neg { (-n).to_string() } else { n.to_string() };
    let s = format!("{:0>width$}", s, width = k + 1);
    let (ip, fp) = s.split_at(s.len() - k);
    format!("{}{}.{}", if neg { "-" } else { "" }, ip, fp)
}

pub fn family_parameter_string(f: &ZeroFamily) -> String {
    f.parameter().map(rational_string).unwrap_or_else(|| "-".into())
}

/// Appends every zero of `seq` to `path`.
pub fn save_zero_cache(path: &Path, seq: &ZeroSequence) -> Result<()> {
    let digits = seq.digits as usize + 10;
    let mut out = String::new();
    for (i, z) in seq.zeros.iter().enumerate() {
        out.push_str(&format!(
            "{} {} {} {} {} {}\n",
            seq.family.tag(),
            family_parameter_string(&seq.family),
            i + 1,
            z.re.to_decimal(digits),
            z.im.to_decimal(digits),
            seq.digits
        ));
    }
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Error::Parameter(format!("cache file {}: {e}", path.display())))?;
    f.write_all(out.as_bytes()).map_err(|e| Error::Parameter(format!("cache write: {e}")))?;
    Ok(())
}

fn parse_family(tag: &str, param: &str) -> Option<ZeroFamily> {
    match tag {
        "airy" => Some(ZeroFamily::Airy),
        "airy-prime" => Some(ZeroFamily::AiryPrime),
        "bessel" => parse_rational(param).map(ZeroFamily::BesselJ),
        "kummer" => parse_rational(param).map(ZeroFamily::KummerDiagonal),
        _ => None,
    }
}

/// Loads contiguous prefixes from `path` into the in-memory cache; returns
/// the number of zeros accepted.
pub fn load_zero_cache(path: &Path) -> Result<usize> {
    let f = fs::File::open(path).map_err(|e| Error::Parameter(format!("cache file {}: {e}", path.display())))?;
    let mut rows: HashMap<Key, Vec<(usize, Complex)>> = HashMap::new();
    for (n, line) in BufReader::new(f).lines().enumerate() {
        let line = line.map_err(|e| Error::Parameter(format!("cache read: {e}")))?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.is_empty() {
            continue;
        }
        let bad = || Error::Parameter(format!("cache line {}: malformed record", n + 1));
        if parts.len() != 6 {
            return Err(bad());
        }
        let family = parse_family(parts[0], parts[1]).ok_or_else(bad)?;
        let index: usize = parts[2].parse().map_err(|_| bad())?;
        let digits: u32 = parts[5].parse().map_err(|_| bad())?;
        let ctx = PrecisionContext::new(digits)?;
        let re = Real::parse(parts[3], ctx.bits()).ok_or_else(bad)?;
        let im = Real::parse(parts[4], ctx.bits()).ok_or_else(bad)?;
        rows.entry((family, digits)).or_default().push((index, Complex::new(re, im)));
    }
    let mut accepted = 0;
    let mut g = store().lock().unwrap();
    for (key, mut v) in rows {
        v.sort_by_key(|(i, _)| *i);
        v.dedup_by_key(|(i, _)| *i);
        let entry = g.entry(key).or_default();
        for (i, z) in v {
            if i == entry.len() + 1 {
                entry.push(z);
                accepted += 1;
            }
        }
    }
    Ok(accepted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::rational::rat;

    #[test]
    fn parameter_strings() {
        assert_eq!(rational_string(&rat(1, 2)), "0.5");
        assert_eq!(rational_string(&rat(-1, 3)), "-1/3");
        assert_eq!(rational_string(&rat(-1, 20)), "-0.05");
        assert_eq!(rational_string(&rat(5, 2)), "2.5");
        assert_eq!(rational_string(&rat(3, 1)), "3");
    }
}
