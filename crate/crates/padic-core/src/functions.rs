use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero as NumZero};

use crate::error::{PadicError, Result};
use crate::padic::{inv_mod, pow_p, strip_p, Padic, DEFAULT_DIGITS};
use crate::prime::pow_mod;

/// p-adic exponential. Converges exactly when |x| <= p^(-1), i.e. ord >= 1.
///
/// The result is accurate to the absolute precision of the input: replacing
/// x by x + O(p^M) perturbs exp(x) by a factor exp(O(p^M)) = 1 + O(p^M).
/// Series terms are accumulated with extra working digits to absorb the
/// denominators n!.
pub fn exp_p(x: &Padic) -> Result<Padic> {
    let p = x.prime();
    if x.is_zero() {
        return Ok(Padic::one(p, DEFAULT_DIGITS));
    }
    let ord = x.ord().expect("nonzero");
    if ord < 1 {
        return Err(PadicError::Convergence(format!(
            "exp_p needs |x| <= p^-1, got valuation {ord}"
        )));
    }
    let m = x.abs_prec().expect("nonzero") as usize;
    // v_p(n!) <= (n-1)/(p-1) and the series needs about m/ord terms,
    // so m/2 + 8 spare digits are plenty for p >= 5
    let work = m + m / 2 + 8;
    let modulus = pow_p(p.get(), work);
    let unit_x = x.unit_part().expect("nonzero") % &modulus;
    let pm1 = (p.get() - 1) as i64;

    let mut sum = BigUint::one(); // n = 0 term
    let mut term_ord: i64 = 0;
    let mut term_unit = BigUint::one();
    let mut n: u64 = 0;
    loop {
        n += 1;
        term_ord += ord;
        term_unit = term_unit * &unit_x % &modulus;
        let (e, n_unit) = strip_p(BigUint::from(n), p.get());
        term_ord -= e as i64;
        if e > 0 || n_unit > BigUint::one() {
            term_unit = term_unit * inv_mod(&(n_unit % &modulus), &modulus)? % &modulus;
        }
        if term_ord < work as i64 {
            sum = (sum + &term_unit * pow_p(p.get(), term_ord as usize)) % &modulus;
        }
        // all later terms have valuation at least n'*(ord - 1/(p-1)),
        // which is increasing; stop once that floor clears m
        let np = (n + 1) as i64;
        if np * (ord * pm1 - 1) >= (m as i64 + 1) * pm1 {
            break;
        }
    }
    let unit = sum % pow_p(p.get(), m);
    // exp(x) = 1 + x + ... is a unit congruent to 1 mod p
    Padic::from_unit_digits_raw(p, 0, unit, m)
}

/// p-adic logarithm on the disc |x - 1| < 1.
pub fn log_p(x: &Padic) -> Result<Padic> {
    let p = x.prime();
    if x.is_zero() {
        return Err(PadicError::Convergence("log_p of zero".into()));
    }
    let one = Padic::one(p, x.prec().expect("nonzero"));
    let y = x.sub(&one)?;
    if y.is_zero() {
        return Ok(Padic::zero(p));
    }
    let d = y.ord().expect("nonzero");
    if d < 1 {
        return Err(PadicError::Convergence(format!(
            "log_p needs |x - 1| < 1, got |x - 1| = p^{}",
            -d
        )));
    }
    let m = y.abs_prec().expect("nonzero") as usize;
    let work = m + 8;
    let modulus = pow_p(p.get(), work);
    let modulus_i = BigInt::from(modulus.clone());
    let unit_y = y.unit_part().expect("nonzero") % &modulus;

    let mut sum = BigInt::zero();
    let mut pow_ord: i64 = 0;
    let mut pow_unit = BigUint::one();
    let mut n: u64 = 0;
    loop {
        n += 1;
        pow_ord += d;
        pow_unit = pow_unit * &unit_y % &modulus;
        let (e, n_unit) = strip_p(BigUint::from(n), p.get());
        let term_ord = pow_ord - e as i64;
        if term_ord < work as i64 {
            let mut t = &pow_unit * pow_p(p.get(), term_ord as usize) % &modulus;
            if n_unit > BigUint::one() {
                t = t * inv_mod(&(&n_unit % &modulus), &modulus)? % &modulus;
            }
            let signed = if n % 2 == 1 {
                BigInt::from(t)
            } else {
                -BigInt::from(t)
            };
            sum = (sum + signed).mod_floor(&modulus_i);
        }
        // stop once n'*d - log_p(n') clears m for every later n'
        let np = n + 1;
        let digits_np = base_p_digit_count(np, p.get());
        if (np as i64) * d >= m as i64 + digits_np as i64 {
            break;
        }
    }
    let r = sum
        .mod_floor(&BigInt::from(pow_p(p.get(), m)))
        .to_biguint()
        .expect("nonnegative");
    if r.is_zero() {
        return Err(PadicError::Precision(
            "log_p lost all tracked digits".into(),
        ));
    }
    let (v, unit) = strip_p(r, p.get());
    Padic::from_unit_digits_raw(p, v as i64, unit, m - v)
}

fn base_p_digit_count(mut n: u64, p: u64) -> u32 {
    let mut c = 0;
    while n > 0 {
        n /= p;
        c += 1;
    }
    c
}

/// Square roots of a unit, if any: Euler criterion on the leading digit,
/// then a Newton lift to full tracked precision. Returns the two roots
/// (the one with the smaller leading digit first), or None when the
/// leading digit is a quadratic nonresidue.
pub fn sqrt_unit(a: &Padic) -> Result<Option<(Padic, Padic)>> {
    let p = a.prime();
    if a.ord() != Some(0) {
        return Err(PadicError::Domain(
            "sqrt_unit expects a unit (valuation 0)".into(),
        ));
    }
    let pv = p.get();
    let a0 = a.leading_digit().expect("unit");
    if pow_mod(a0, (pv - 1) / 2, pv) != 1 {
        return Ok(None);
    }
    let prec = a.prec().expect("unit");
    let r0 = tonelli_shanks(a0, pv);
    let r0 = r0.min(pv - r0);

    let a_full = a.unit_part().expect("unit");
    let mut cur = 1usize;
    let mut r = BigUint::from(r0);
    while cur < prec {
        cur = (cur * 2).min(prec);
        let modulus = pow_p(pv, cur);
        let rr = &r * &r % &modulus;
        let fa = (BigInt::from(rr) - BigInt::from(a_full % &modulus))
            .mod_floor(&BigInt::from(modulus.clone()))
            .to_biguint()
            .expect("nonnegative");
        let dinv = inv_mod(&(&r * 2u32 % &modulus), &modulus)?;
        r = (BigInt::from(r) - BigInt::from(fa * dinv))
            .mod_floor(&BigInt::from(modulus.clone()))
            .to_biguint()
            .expect("nonnegative");
    }
    let modulus = pow_p(pv, prec);
    r %= &modulus;
    let other = &modulus - &r;
    let (first, second) = if (&r % pv).to_u64() <= (&other % pv).to_u64() {
        (r, other)
    } else {
        (other, r)
    };
    Ok(Some((
        Padic::from_unit_digits_raw(p, 0, first, prec)?,
        Padic::from_unit_digits_raw(p, 0, second, prec)?,
    )))
}

/// Square root mod an odd prime, input must be a nonzero residue.
fn tonelli_shanks(a: u64, p: u64) -> u64 {
    use crate::prime::mul_mod;
    debug_assert!(pow_mod(a, (p - 1) / 2, p) == 1);
    if p % 4 == 3 {
        return pow_mod(a, (p + 1) / 4, p);
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

/// Membership in the subgroup of units x with |x| = 1 and |x - 1| <= p^-1.
pub fn is_in_ep(x: &Padic) -> Result<bool> {
    if x.is_zero() || x.ord() != Some(0) {
        return Ok(false);
    }
    Ok(x.leading_digit() == Some(1))
}
