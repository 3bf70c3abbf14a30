use std::fs;
use std::path::Path;

use szeta::families::*;
use szeta::mzv::*;
use szeta::numkernel::rational::rat;
use szeta::numkernel::{Rational, Real};
use szeta::zerofinder::cache::family_parameter_string;
use szeta::zerofinder::*;

use crate::record::{Bound, Emitter, CLOSED_FORM, ORACLE};
use crate::{rational_arg, usage, CliError, Energy, Family, IndexRange, Params, RunConfig, Suite};

type Res<T> = Result<T, CliError>;

fn nu_list(p: &Params, default: &[(i64, i64)]) -> Res<Vec<Rational>> {
    if p.nu.is_empty() {
        if default.is_empty() {
            return usage("--nu is required");
        }
        return Ok(default.iter().map(|&(n, d)| rat(n, d)).collect());
    }
    p.nu.iter().map(|s| rational_arg("nu", s)).collect()
}

fn one_nu(p: &Params) -> Res<Rational> {
    match p.nu.as_slice() {
        [s] => rational_arg("nu", s),
        [] => usage("--nu is required for the Bessel family"),
        _ => usage("a single --nu is expected here"),
    }
}

fn ab(p: &Params) -> Res<(Rational, Rational)> {
    let a = match &p.a {
        Some(s) => rational_arg("a", s)?,
        None => return usage("--a is required for the hypergeometric family"),
    };
    let b = match &p.b {
        Some(s) => rational_arg("b", s)?,
        None => a.clone(),
    };
    Ok((a, b))
}

/// Zero family behind a parameter set; the hypergeometric family has a
/// zero finder on the diagonal a = b only.
fn zero_family(f: Family, p: &Params) -> Res<ZeroFamily> {
    Ok(match f {
        Family::Bessel => ZeroFamily::bessel(one_nu(p)?)?,
        Family::Airy => ZeroFamily::Airy,
        Family::AiryPrime => ZeroFamily::AiryPrime,
        Family::Hyper => {
            let (a, b) = ab(p)?;
            if a != b {
                return usage("zeros of ₁F₁(a; a+b; z) are available for a = b only");
            }
            ZeroFamily::kummer_diagonal(a)?
        }
    })
}

fn param_string(f: Family, p: &Params) -> Res<String> {
    Ok(match f {
        Family::Bessel => format!("nu={}", one_nu(p)?),
        Family::Hyper => {
            let (a, b) = ab(p)?;
            format!("a={a} b={b}")
        }
        Family::Airy | Family::AiryPrime => String::new(),
    })
}

fn prefix(f: Family) -> &'static str {
    match f {
        Family::Bessel => "zeta_B",
        Family::Hyper => "zeta_ab",
        Family::Airy => "zeta_Ai",
        Family::AiryPrime => "zeta_Aip",
    }
}

/// Rounding bound of a value computed at working precision.
fn rounding(v: &Real, cfg: &RunConfig) -> Bound {
    Bound::Abs(v.to_f64().abs().max(f64::MIN_POSITIVE) * 10f64.powi(1 - cfg.ctx.digits as i32))
}

#[allow(clippy::too_many_arguments)]
pub fn values(
    cfg: &RunConfig,
    em: &mut Emitter,
    family: Family,
    quantity: &str,
    params: &Params,
    range: IndexRange,
    k: Option<usize>,
    s: u32,
    star: bool,
) -> Res<()> {
    let c = &cfg.ctx;
    let pstr = param_string(family, params)?;
    let qname = format!("{}.{quantity}", prefix(family));
    let ni = |n: usize| Some(n as i64);

    if quantity == "nested" || quantity == "power-sum" {
        let seq = szeta::zerofinder::zeros(&zero_family(family, params)?, cfg.zero_count, c)?;
        let pstr = format!("{pstr} s={s} zeros={}{}", cfg.zero_count, if star { " star" } else { "" });
        if quantity == "power-sum" {
            let lo = range.lo.max(1);
            let t = power_sums_from_zeros(&seq, s, range.hi.max(1), c)?;
            for n in lo..=range.hi {
                em.complex(&qname, &pstr, ni(n), &t.values[n - 1], Bound::Abs(t.truncation_error[n - 1]), ORACLE);
            }
        } else {
            for n in range.iter() {
                if n == 0 {
                    em.value(&qname, &pstr, ni(0), None, &c.real(1), Bound::Exact, ORACLE);
                    continue;
                }
                let (v, b) = mzv_nested_sum(&seq, &Composition::repeated(s, n)?, 1, star, c)?;
                em.complex(&qname, &pstr, ni(n), &v, Bound::Abs(b), ORACLE);
            }
        }
        return Ok(());
    }

    let need_k = || k.ok_or_else(|| CliError::Usage(format!("--k is required for {quantity}")));
    match family {
        Family::Bessel => {
            let nu = one_nu(params)?;
            for n in range.iter() {
                let exact = match quantity {
                    "mzv2n" => bessel_mzv_2n_exact(&nu, n)?,
                    "mzv4n" => bessel_mzv_4n_exact(&nu, n)?,
                    "mzsv2n" => bessel_mzsv_2n_exact(&nu, n)?,
                    "bernoulli-half" => bessel_bernoulli_half_exact(&nu, n)?,
                    "zeta" => {
                        if n == 0 {
                            continue;
                        }
                        bessel_zeta_gen_exact(&nu, n)?.pop().unwrap()
                    }
                    "s" | "s-star" => {
                        let kk = need_k()?;
                        if kk == 0 || kk > n {
                            continue;
                        }
                        let v = if quantity == "s" { bessel_s_exact(&nu, n, kk)? } else { bessel_s_star_exact(&nu, n, kk)? };
                        em.value(&qname, &pstr, ni(n), Some(kk as i64), &c.rational(&v), Bound::Exact, CLOSED_FORM);
                        continue;
                    }
                    "alt-zeta" => {
                        let (v, b) = alt_bessel_zeta(&nu, n, cfg.zero_count, c)?;
                        em.value(&qname, &format!("{pstr} zeros={}", cfg.zero_count), ni(n), None, &v, Bound::Abs(b), ORACLE);
                        continue;
                    }
                    _ => return usage(format!("unknown Bessel quantity '{quantity}'")),
                };
                em.value(&qname, &pstr, ni(n), None, &c.rational(&exact), Bound::Exact, CLOSED_FORM);
            }
        }
        Family::Hyper => {
            let (a, b) = ab(params)?;
            for n in range.iter() {
                let exact = match quantity {
                    "mzv2n" => hyp_mzv_2n_exact(&a, &b, n)?,
                    "mzv4n" => hyp_mzv_4n_exact(&a, &b, n)?,
                    "mzsv2n" => hyp_mzsv_2n_exact(&a, &b, n)?,
                    "bernoulli" => hyp_bernoulli_exact(&a, &b, n + 1)?.pop().unwrap(),
                    "zeta" => {
                        if n < 2 {
                            continue;
                        }
                        hyp_zeta_gen(&a, &b, n, c)?;
                        hyp_zeta_gen_exact(&a, &b, n)?.pop().unwrap()
                    }
                    "product-coeff" => {
                        let v = ramanujan_product_coeff(&a, &b, n, c)?;
                        let bd = rounding(&v, cfg);
                        em.value(&qname, &pstr, ni(n), None, &v, bd, CLOSED_FORM);
                        continue;
                    }
                    _ => return usage(format!("unknown hypergeometric quantity '{quantity}'")),
                };
                em.value(&qname, &pstr, ni(n), None, &c.rational(&exact), Bound::Exact, CLOSED_FORM);
            }
        }
        Family::Airy => {
            let table = match quantity {
                "bernoulli" => Some(airy_bernoulli(range.hi + 1, c)?.values),
                "zeta" => Some(airy_zeta(range.hi.max(2) - 1, c)?),
                _ => None,
            };
            for n in range.iter() {
                let v = match quantity {
                    "mzv2n" => {
                        let v = airy_mzv_2n(n, c)?;
                        let b = if airy_mzv_2n_exact(n).is_some() { Bound::Exact } else { rounding(&v, cfg) };
                        em.value(&qname, &pstr, ni(n), None, &v, b, CLOSED_FORM);
                        continue;
                    }
                    "mzv4n" => airy_mzv_4n(n, c)?,
                    "mzsv2n" => airy_mzsv_2n(n, c)?,
                    "bernoulli" => table.as_ref().unwrap()[n].clone(),
                    "zeta" => {
                        if n < 2 {
                            continue;
                        }
                        table.as_ref().unwrap()[n - 2].clone()
                    }
                    _ => return usage(format!("unknown Airy quantity '{quantity}'")),
                };
                let b = rounding(&v, cfg);
                em.value(&qname, &pstr, ni(n), None, &v, b, CLOSED_FORM);
            }
        }
        Family::AiryPrime => {
            if quantity != "mzv2n" {
                return usage(format!("unknown Airy-prime quantity '{quantity}'"));
            }
            for n in range.iter() {
                let v = airy_prime_mzv_2n(n, c)?;
                let b = rounding(&v, cfg);
                em.value(&qname, &pstr, ni(n), None, &v, b, CLOSED_FORM);
            }
        }
    }
    Ok(())
}

/// 10^−(digits−15): tolerance for checks between two computed paths.
fn path_tol(cfg: &RunConfig) -> f64 {
    10f64.powi(15 - cfg.ctx.digits as i32)
}

fn oracle_case(
    cfg: &RunConfig,
    em: &mut Emitter,
    seq: &ZeroSequence,
    name: &str,
    s: u32,
    n: usize,
    starred: bool,
    closed: &Real,
) -> Res<()> {
    let (v, b) = mzv_nested_sum(seq, &Composition::repeated(s, n)?, 1, starred, &cfg.ctx)?;
    let d = (&v.re - closed).abs().to_f64().max(v.im.abs().to_f64());
    let tol = b + cfg.ctx.eps(cfg.ctx.digits as i64 - 12).to_f64();
    let params = format!("{} zeros={}", seq.family, seq.count());
    em.report(&IdentityReport::numeric(name, params, d, tol), Some(n as i64), None);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn verify(
    cfg: &RunConfig,
    em: &mut Emitter,
    suite: Suite,
    family: Option<Family>,
    params: &Params,
    n: Option<IndexRange>,
    max: Option<usize>,
    depth: Option<usize>,
) -> Res<()> {
    let c = &cfg.ctx;
    match suite {
        Suite::Oracle => {
            let depth = depth.unwrap_or(3);
            let fam = family.unwrap_or(Family::Bessel);
            match fam {
                Family::Bessel => {
                    for nu in nu_list(params, &[(-1, 3), (1, 3), (1, 2), (5, 2)])? {
                        let seq = bessel_zeros(&nu, cfg.zero_count, c)?;
                        for k in 1..=depth {
                            oracle_case(cfg, em, &seq, "oracle-mzv2n", 2, k, false, &bessel_mzv_2n(&nu, k, c)?)?;
                            oracle_case(cfg, em, &seq, "oracle-mzv4n", 4, k, false, &bessel_mzv_4n(&nu, k, c)?)?;
                            oracle_case(cfg, em, &seq, "oracle-mzsv2n", 2, k, true, &bessel_mzsv_2n(&nu, k, c)?)?;
                        }
                    }
                }
                Family::Hyper => {
                    let (a, b) = ab(params)?;
                    let seq = szeta::zerofinder::zeros(&zero_family(fam, params)?, cfg.zero_count, c)?;
                    for k in 1..=depth {
                        oracle_case(cfg, em, &seq, "oracle-mzv2n", 2, k, false, &hyp_mzv_2n(&a, &b, k, c)?)?;
                        oracle_case(cfg, em, &seq, "oracle-mzv4n", 4, k, false, &hyp_mzv_4n(&a, &b, k, c)?)?;
                        oracle_case(cfg, em, &seq, "oracle-mzsv2n", 2, k, true, &hyp_mzsv_2n(&a, &b, k, c)?)?;
                    }
                }
                Family::Airy => {
                    let seq = airy_zeros(cfg.zero_count, c)?;
                    for k in 1..=depth {
                        oracle_case(cfg, em, &seq, "oracle-mzv2n", 2, k, false, &airy_mzv_2n(k, c)?)?;
                        oracle_case(cfg, em, &seq, "oracle-mzv4n", 4, k, false, &airy_mzv_4n(k, c)?)?;
                        oracle_case(cfg, em, &seq, "oracle-mzsv2n", 2, k, true, &airy_mzsv_2n(k, c)?)?;
                    }
                }
                Family::AiryPrime => {
                    let seq = airy_prime_zeros(cfg.zero_count, c)?;
                    for k in 1..=depth {
                        oracle_case(cfg, em, &seq, "oracle-mzv2n", 2, k, false, &airy_prime_mzv_2n(k, c)?)?;
                    }
                }
            }
        }
        Suite::Dissection => {
            let top = n.map(|r| r.hi).unwrap_or(3);
            let mut cases: Vec<(String, Vec<Real>, Vec<Real>)> = Vec::new();
            let fams = match family {
                Some(f) => vec![f],
                None => vec![Family::Bessel, Family::Hyper],
            };
            for f in fams {
                match f {
                    Family::Bessel => {
                        for nu in nu_list(params, &[(-1, 3), (1, 3), (1, 2), (5, 2)])? {
                            let e2 = (0..=2 * top).map(|k| bessel_mzv_2n(&nu, k, c)).collect::<Result<_, _>>()?;
                            let e4 = (0..=top).map(|k| bessel_mzv_4n(&nu, k, c)).collect::<Result<_, _>>()?;
                            cases.push((format!("bessel({nu})"), e2, e4));
                        }
                    }
                    Family::Hyper => {
                        let grid = if params.a.is_some() {
                            vec![ab(params)?]
                        } else {
                            vec![(rat(1, 1), rat(1, 1)), (rat(1, 1), rat(2, 1)), (rat(3, 2), rat(1, 2))]
                        };
                        for (a, b) in grid {
                            let e2 = (0..=2 * top).map(|k| hyp_mzv_2n(&a, &b, k, c)).collect::<Result<_, _>>()?;
                            let e4 = (0..=top).map(|k| hyp_mzv_4n(&a, &b, k, c)).collect::<Result<_, _>>()?;
                            cases.push((format!("hyper(a={a}, b={b})"), e2, e4));
                        }
                    }
                    Family::Airy => {
                        for k in 0..=top {
                            let p = airy_mzv_4n_paths(k, c)?;
                            let d = (&p.convolution - &p.dissection).abs().to_f64();
                            em.report(&IdentityReport::numeric("dissection", "airy".into(), d, path_tol(cfg)), Some(k as i64), None);
                        }
                    }
                    Family::AiryPrime => return usage("no {4}-closed form for the Airy-prime family"),
                }
            }
            for (name, e2, e4) in cases {
                let e: Vec<_> = e2.into_iter().map(szeta::numkernel::Complex::from_real).collect();
                let d = dissect_mzv(&e, 2, c)?;
                for k in 0..=top {
                    let x = (&d[k].re - &e4[k]).abs().to_f64().max(d[k].im.abs().to_f64());
                    em.report(&IdentityReport::numeric("dissection", name.clone(), x, path_tol(cfg)), Some(k as i64), None);
                }
            }
        }
        Suite::GesselViennot => {
            let m = max.unwrap_or(20);
            for nn in 1..=m {
                for k in 1..=m {
                    em.report(&gessel_viennot_check(nn, k), Some(nn as i64), Some(k as i64));
                }
            }
        }
        Suite::Lommel => {
            let m = max.unwrap_or(5);
            for nu in nu_list(params, &[(3, 2), (5, 2)])? {
                for r in 0..=m {
                    for s in 0..=r {
                        let rep = lommel_orthogonality_check(&nu, r, s, cfg.zero_count, c)?;
                        em.report(&rep, Some(r as i64), Some(s as i64));
                    }
                }
            }
        }
        Suite::Krein => {
            let range = n.unwrap_or(IndexRange { lo: 1, hi: 3 });
            for nu in nu_list(params, &[(1, 2), (3, 2)])? {
                for k in range.iter().filter(|&k| k >= 1) {
                    em.report(&krein_check(&nu, k, cfg.zero_count, c)?, Some(k as i64), None);
                }
            }
        }
        Suite::AiryBessel => {
            let range = n.unwrap_or(IndexRange { lo: 0, hi: 2 });
            for k in range.iter() {
                em.report(&airy_bessel_relation_check(k, c)?, Some(k as i64), None);
                em.report(&airy_0f3_check(k, c)?, Some(k as i64), None);
            }
        }
        Suite::StarConvolution => {
            let depth = depth.unwrap_or(6);
            let mut fams: Vec<ZeroFamily> = Vec::new();
            for nu in nu_list(params, &[(-1, 3), (1, 3), (1, 2), (5, 2)])? {
                fams.push(ZeroFamily::bessel(nu)?);
            }
            fams.push(ZeroFamily::Airy);
            fams.push(ZeroFamily::AiryPrime);
            fams.push(ZeroFamily::kummer_diagonal(rat(1, 1))?);
            for f in fams {
                let seq = szeta::zerofinder::zeros(&f, cfg.zero_count, c)?;
                for s in [2u32, 4] {
                    let m = mzv_tables(&power_sums_from_zeros(&seq, s, depth, c)?, depth)?;
                    let d = m.convolution_defect().to_f64();
                    let params = format!("{f} s={s} zeros={}", cfg.zero_count);
                    em.report(&IdentityReport::numeric("star-convolution", params, d, path_tol(cfg)), Some(depth as i64), None);
                }
            }
        }
        Suite::Quantum => {
            let seq = airy_zeros(cfg.zero_count, c)?;
            let ladder = [10, 20, 30];
            let a1 = seq.zeros[0].re.abs();
            let a12 = &a1 * &seq.zeros[1].re.abs();
            for (r, target, tol) in [(1usize, a1, 1e-6), (2, a12, 1e-4)] {
                let (rows, rep) = estimate_ladder(&seq, &ladder, r, EnergyMap::Magnitude, &target, c)?;
                em.report(&rep, None, Some(r as i64));
                let last = rows.last().unwrap();
                let name = if r == 1 { "ground-state" } else { "energy-product" };
                let params = format!("airy s={} zeros={}", last.0, cfg.zero_count);
                em.report(&IdentityReport::numeric(name, params, last.2, tol), Some(last.0 as i64), Some(r as i64));
            }
        }
    }
    Ok(())
}

/// Rewrites `path` so that it holds `seq` plus every unrelated record.
fn update_cache(path: &Path, seq: &ZeroSequence) -> Res<()> {
    let key = format!("{} {} ", seq.family.tag(), family_parameter_string(&seq.family));
    let digits = format!(" {}", seq.digits);
    let old = fs::read_to_string(path).unwrap_or_default();
    let (mine, rest): (Vec<&str>, Vec<&str>) =
        old.lines().filter(|l| !l.trim().is_empty()).partition(|l| l.starts_with(&key) && l.ends_with(&digits));
    if mine.len() >= seq.count() {
        return Ok(());
    }
    let text: String = rest.iter().map(|l| format!("{l}\n")).collect();
    if !text.is_empty() || path.exists() {
        fs::write(path, &text)?;
    }
    save_zero_cache(path, seq)?;
    Ok(())
}

pub fn zeros(cfg: &RunConfig, em: &mut Emitter, family: Family, params: &Params, count: usize, cache: Option<&Path>) -> Res<()> {
    if count == 0 || count > 10_000 {
        return usage("--count must be between 1 and 10000");
    }
    if let Some(p) = cache {
        if p.exists() {
            load_zero_cache(p)?;
        }
    }
    let fam = zero_family(family, params)?;
    let seq = szeta::zerofinder::zeros(&fam, count, &cfg.ctx)?;
    if let Some(p) = cache {
        update_cache(p, &seq)?;
    }
    let q = format!("zeros.{}", fam.tag());
    let pstr = family_parameter_string(&fam);
    for (i, z) in seq.zeros.iter().enumerate() {
        let b = rounding(&z.abs(), cfg);
        em.complex(&q, &pstr, Some(i as i64 + 1), z, b, ORACLE);
    }
    Ok(())
}

pub fn estimate(
    cfg: &RunConfig,
    em: &mut Emitter,
    family: Family,
    params: &Params,
    ladder: &[u32],
    r: usize,
    energy: Energy,
) -> Res<()> {
    let c = &cfg.ctx;
    let fam = zero_family(family, params)?;
    let seq = szeta::zerofinder::zeros(&fam, cfg.zero_count, c)?;
    if seq.count() < r || r == 0 {
        return usage(format!("--r must be between 1 and {}", MAX_PRODUCT_DEPTH));
    }
    let map = match energy {
        Energy::Magnitude => EnergyMap::Magnitude,
        Energy::Square => EnergyMap::Square,
    };
    // distances are measured to the product of the first r computed energies
    let mut target = Real::one(c.bits());
    for z in &seq.zeros[..r] {
        let e = z.abs();
        target = &target * &if map == EnergyMap::Square { e.sqr() } else { e };
    }
    let (rows, rep) = estimate_ladder(&seq, ladder, r, map, &target, c)?;
    let q = if r == 1 { "estimate.ground-state" } else { "estimate.energy-product" };
    let pstr = format!("{fam} energy={energy:?} zeros={}", cfg.zero_count).to_lowercase();
    for (s, v, d) in &rows {
        em.value(q, &pstr, Some(*s as i64), Some(r as i64), v, Bound::Abs(*d), ORACLE);
    }
    em.report(&rep, None, Some(r as i64));
    Ok(())
}
