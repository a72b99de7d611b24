use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero as NumZero;

use padic_core::padic::{inv_mod, pow_p};
use padic_core::{Padic, PadicError, Prime, Result};

use crate::cubic::CubicProblem;

/// Budget for the recursive isolation. Each cluster descent costs one
/// depth level and at least one working digit.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub max_depth: u32,
    pub work_digits: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_depth: 48,
            work_digits: 48,
        }
    }
}

struct Ctx {
    p: u64,
    max_depth: u32,
}

fn poly_eval(c: &[BigUint; 4], x: &BigUint, modulus: &BigUint) -> BigUint {
    let mut acc = c[3].clone();
    for k in (0..3).rev() {
        acc = (acc * x + &c[k]) % modulus;
    }
    acc
}

fn poly_deriv_eval(c: &[BigUint; 4], x: &BigUint, modulus: &BigUint) -> BigUint {
    let mut acc = &c[3] * 3u32 % modulus;
    acc = (acc * x + &c[2] * 2u32) % modulus;
    (acc * x + &c[1]) % modulus
}

fn val_capped(n: &BigUint, p: u64, cap: usize) -> usize {
    if n.is_zero() {
        return cap;
    }
    let mut v = 0;
    let mut m = n.clone();
    let pb = BigUint::from(p);
    while v < cap && (&m % &pb).is_zero() {
        m /= &pb;
        v += 1;
    }
    v
}

/// Newton iteration at a certified simple residue root; converges to the
/// unique root of the polynomial in that residue class, mod p^k.
fn lift_simple(c: &[BigUint; 4], k: usize, r: u64, p: u64) -> Result<BigUint> {
    let modulus = pow_p(p, k);
    let mut x = BigUint::from(r);
    for _ in 0..96 {
        let fx = poly_eval(c, &x, &modulus);
        if fx.is_zero() {
            return Ok(x);
        }
        let dx = poly_deriv_eval(c, &x, &modulus);
        let step = fx * inv_mod(&dx, &modulus)? % &modulus;
        x = (BigInt::from(x) - BigInt::from(step))
            .mod_floor(&BigInt::from(modulus.clone()))
            .to_biguint()
            .expect("nonnegative");
    }
    Err(PadicError::Precision(
        "simple-root lift did not settle".into(),
    ))
}

/// Recursive isolation: walk residues mod p, certify simple roots through
/// the derivative, and descend into clusters by the substitution
/// x = r + p w after stripping the common p power.
#[allow(clippy::too_many_arguments)]
fn isolate_rec(
    ctx: &Ctx,
    c: [BigUint; 4],
    k: usize,
    depth: u32,
    skip_zero_residue: bool,
    prefix: BigUint,
    scale: usize,
    out: &mut Vec<(BigUint, usize)>,
) -> Result<()> {
    let p = ctx.p;
    let modulus = pow_p(p, k);
    let start = if skip_zero_residue { 1 } else { 0 };
    for r in start..p {
        let rb = BigUint::from(r);
        let fr = poly_eval(&c, &rb, &modulus);
        if !(&fr % p).is_zero() {
            continue;
        }
        let dr = poly_deriv_eval(&c, &rb, &modulus);
        if !(&dr % p).is_zero() {
            let w = lift_simple(&c, k, r, p)?;
            let root = &prefix + w * pow_p(p, scale);
            out.push((root, scale + k));
            continue;
        }
        // cluster: substitute x = r + p w and recurse
        if depth + 1 > ctx.max_depth {
            return Err(PadicError::Resource(format!(
                "root cluster at residue {r} not separated within depth {}",
                ctx.max_depth
            )));
        }
        let pb = BigUint::from(p);
        let g0 = fr;
        let g1 = dr * &pb % &modulus;
        let g2 = (&c[3] * 3u32 * &rb + &c[2]) * (&pb * &pb) % &modulus;
        let g3 = &c[3] * (&pb * &pb * &pb) % &modulus;
        let g = [g0, g1, g2, g3];
        let s = g.iter().map(|x| val_capped(x, p, k)).min().expect("4 coeffs");
        if s >= k {
            return Err(PadicError::Resource(
                "cluster polynomial vanishes at working precision".into(),
            ));
        }
        let k2 = k - s;
        if k2 < 8 {
            return Err(PadicError::Resource(
                "working digits exhausted while separating a cluster".into(),
            ));
        }
        let ps = pow_p(p, s);
        let m2 = pow_p(p, k2);
        let c2 = [
            &g[0] / &ps % &m2,
            &g[1] / &ps % &m2,
            &g[2] / &ps % &m2,
            &g[3] / &ps % &m2,
        ];
        isolate_rec(
            ctx,
            c2,
            k2,
            depth + 1,
            false,
            &prefix + rb * pow_p(p, scale),
            scale + 1,
            out,
        )?;
    }
    Ok(())
}

fn padic_from_residue(p: Prime, residue: &BigUint, known_digits: usize) -> Padic {
    if residue.is_zero() {
        return Padic::zero(p);
    }
    let x = Padic::from_bigint(p, &BigInt::from(residue.clone()), known_digits);
    let ord = x.ord().expect("nonzero") as usize;
    if ord > 0 {
        x.truncate(known_digits.saturating_sub(ord).max(1))
    } else {
        x
    }
}

fn exact_double_root_case(problem: &CubicProblem) -> Result<Vec<Padic>> {
    // disc = 0 forces x^3 + ax - b = (x - t)^2 (x + 2t) with t = 3b / 2a
    let p = problem.prime();
    let prec = problem.a.prec().unwrap_or(padic_core::DEFAULT_DIGITS);
    let three = Padic::from_u64(p, 3, prec);
    let two = Padic::from_u64(p, 2, prec);
    let t = three.mul(&problem.b)?.div(&two.mul(&problem.a)?)?;
    let s = t.mul(&two)?.neg();
    let f = problem.polynomial();
    for r in [&t, &s] {
        let fr = f.eval(r)?;
        if !fr.is_zero() {
            return Err(PadicError::Precision(
                "discriminant vanished at tracked precision but the closed-form double root does not; raise precision".into(),
            ));
        }
    }
    Ok(vec![t, s])
}

fn isolate(problem: &CubicProblem, cfg: &OracleConfig, units_only: bool) -> Result<Vec<Padic>> {
    let p = problem.prime();
    let d = problem.discriminant()?;
    if d.is_zero() {
        let mut roots: Vec<Padic> = exact_double_root_case(problem)?
            .into_iter()
            .filter(|r| {
                if units_only {
                    r.ord() == Some(0)
                } else {
                    r.ord().map_or(false, |o| o >= 0)
                }
            })
            .collect();
        sort_roots(&mut roots);
        return Ok(roots);
    }

    // clear denominators: p^t x^3 + (a p^t) x - (b p^t) with integral coeffs
    let oa = problem.a.ord().expect("nonzero");
    let ob = problem.b.ord().expect("nonzero");
    let t = (-(oa.min(ob).min(0))) as usize;
    let c3 = Padic::one(p, cfg.work_digits).mul_pow_p(t as i64);
    let c1 = problem.a.mul_pow_p(t as i64);
    let c0 = problem.b.mul_pow_p(t as i64).neg();
    let k = cfg
        .work_digits
        .min(c1.abs_prec().expect("nonzero") as usize)
        .min(c0.abs_prec().expect("nonzero") as usize);
    if k < 8 {
        return Err(PadicError::Precision(
            "oracle needs at least 8 digits of absolute precision".into(),
        ));
    }
    let c = [
        c0.residue_mod_pk(k)?,
        c1.residue_mod_pk(k)?,
        BigUint::zero(),
        c3.residue_mod_pk(k)?,
    ];
    let ctx = Ctx {
        p: p.get(),
        max_depth: cfg.max_depth,
    };
    let mut found = Vec::new();
    isolate_rec(
        &ctx,
        c,
        k,
        0,
        units_only,
        BigUint::zero(),
        0,
        &mut found,
    )?;
    let mut roots: Vec<Padic> = found
        .iter()
        .map(|(residue, digits)| padic_from_residue(p, residue, *digits))
        .collect();
    sort_roots(&mut roots);
    Ok(roots)
}

pub(crate) fn sort_roots(roots: &mut [Padic]) {
    roots.sort_by_key(|r| {
        (
            r.ord().unwrap_or(i64::MAX),
            r.unit_part().cloned().unwrap_or_default(),
        )
    });
}

/// All roots in Z_p, by exhaustive certified isolation.
pub fn isolate_integral_roots(problem: &CubicProblem, cfg: &OracleConfig) -> Result<Vec<Padic>> {
    isolate(problem, cfg, false)
}

/// Number of distinct roots in the unit group Z_p^*, counted without any
/// table: this is the independent check the case analysis is held to.
pub fn brute_force_root_count(problem: &CubicProblem, cfg: &OracleConfig) -> Result<u8> {
    Ok(isolate(problem, cfg, true)?.len() as u8)
}
