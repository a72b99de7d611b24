//! Randomized self-checks for the arithmetic core.
//!
//! These live in the library rather than in a test file because the
//! acceptance harness re-runs them with its own case budget. Each check
//! draws its cases from a seeded ChaCha stream, so failures reproduce.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{PadicError, Result};
use crate::functions::{exp_p, log_p};
use crate::padic::Padic;
use crate::prime::Prime;

const CHECK_PREC: usize = 8;

fn random_nonzero(rng: &mut ChaCha8Rng, p: Prime, ord_lo: i64, ord_hi: i64) -> Padic {
    let ord = rng.gen_range(ord_lo..=ord_hi);
    let mut digits = Vec::with_capacity(CHECK_PREC);
    digits.push(rng.gen_range(1..p.get()));
    for _ in 1..CHECK_PREC {
        digits.push(rng.gen_range(0..p.get()));
    }
    Padic::from_unit_digits(p, ord, &digits).expect("valid digits")
}

fn random_integral(rng: &mut ChaCha8Rng, p: Prime) -> Padic {
    if rng.gen_range(0..10) == 0 {
        Padic::zero(p)
    } else {
        random_nonzero(rng, p, 0, 3)
    }
}

/// |x + y| <= max(|x|, |y|), with equality when the norms differ.
pub fn check_ultrametric(p: Prime, cases: u32, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.get());
    for i in 0..cases {
        let x = random_nonzero(&mut rng, p, -6, 6);
        let y = random_nonzero(&mut rng, p, -6, 6);
        let s = x.add(&y)?;
        let bound = x.norm().max(y.norm());
        if s.norm() > bound {
            return Err(PadicError::Invariant(format!(
                "ultrametric failed at case {i}: x={x}, y={y}, |x+y|={}",
                s.norm()
            )));
        }
        if x.norm() != y.norm() && s.norm() != bound {
            return Err(PadicError::Invariant(format!(
                "ultrametric equality failed at case {i}: x={x}, y={y}"
            )));
        }
    }
    Ok(())
}

/// |xy| = |x| |y| and |x/y| = |x| / |y|.
pub fn check_multiplicativity(p: Prime, cases: u32, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.get() ^ 0x517c);
    for i in 0..cases {
        let x = random_nonzero(&mut rng, p, -6, 6);
        let y = random_nonzero(&mut rng, p, -6, 6);
        let prod = x.mul(&y)?;
        if prod.norm() != x.norm().mul(&y.norm()) {
            return Err(PadicError::Invariant(format!(
                "multiplicativity failed at case {i}: x={x}, y={y}"
            )));
        }
        let quot = x.div(&y)?;
        if quot.norm() != x.norm().mul(&y.norm().pow(-1)) {
            return Err(PadicError::Invariant(format!(
                "norm of quotient failed at case {i}: x={x}, y={y}"
            )));
        }
    }
    Ok(())
}

/// For integral a_i, b_i: |prod a_i - prod b_i| <= max_i |a_i - b_i|.
pub fn check_product_bound(p: Prime, cases: u32, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.get() ^ 0xb0b0);
    for i in 0..cases {
        let k = rng.gen_range(1..=4usize);
        let a: Vec<Padic> = (0..k).map(|_| random_integral(&mut rng, p)).collect();
        let b: Vec<Padic> = (0..k).map(|_| random_integral(&mut rng, p)).collect();
        let mut pa = Padic::one(p, CHECK_PREC);
        let mut pb = Padic::one(p, CHECK_PREC);
        let mut rhs = padic_zero_norm();
        for j in 0..k {
            pa = pa.mul(&a[j])?;
            pb = pb.mul(&b[j])?;
            rhs = rhs.max(a[j].sub(&b[j])?.norm());
        }
        let lhs = pa.sub(&pb)?.norm();
        if lhs > rhs {
            return Err(PadicError::Invariant(format!(
                "product bound failed at case {i}: lhs={lhs}, rhs={rhs}"
            )));
        }
    }
    Ok(())
}

fn padic_zero_norm() -> crate::norm::Norm {
    crate::norm::Norm::zero()
}

/// exp and log invert each other where both converge, and
/// |exp(x) - 1| = |x| on the convergence disc.
pub fn check_exp_log_round_trip(p: Prime, cases: u32, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.get() ^ 0xe19);
    for i in 0..cases {
        let x = random_nonzero(&mut rng, p, 1, 3);
        let e = exp_p(&x)?;
        let one = Padic::one(p, CHECK_PREC);
        if e.sub(&one)?.norm() != x.norm() {
            return Err(PadicError::Invariant(format!(
                "|exp(x) - 1| != |x| at case {i}: x={x}"
            )));
        }
        let back = log_p(&e)?;
        if !back.agrees_with(&x) {
            return Err(PadicError::Invariant(format!(
                "log(exp(x)) != x at case {i}: x={x}, got {back}"
            )));
        }
        // other direction: u = 1 + (unit of positive valuation)
        let t = random_nonzero(&mut rng, p, 1, 3);
        let u = one.add(&t)?;
        let l = log_p(&u)?;
        if l.norm() != t.norm() {
            return Err(PadicError::Invariant(format!(
                "|log(1+t)| != |t| at case {i}: t={t}"
            )));
        }
        let back = exp_p(&l)?;
        if !back.agrees_with(&u) {
            return Err(PadicError::Invariant(format!(
                "exp(log(u)) != u at case {i}: u={u}, got {back}"
            )));
        }
    }
    Ok(())
}

/// Runs every check over the working primes. `cases` is per check per prime.
pub fn run_all(cases: u32, seed: u64) -> Result<()> {
    for pv in [5u64, 7, 11, 13] {
        let p = Prime::new(pv)?;
        check_ultrametric(p, cases, seed)?;
        check_multiplicativity(p, cases, seed)?;
        check_product_bound(p, cases, seed)?;
        check_exp_log_round_trip(p, cases, seed)?;
    }
    Ok(())
}
