use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero as NumZero};

use crate::error::{PadicError, Result};
use crate::norm::Norm;
use crate::prime::Prime;

pub const DEFAULT_DIGITS: usize = 32;
pub const MIN_DIGITS: usize = 8;
/// Hard ceiling on tracked digits, to keep series work bounded.
pub const MAX_DIGITS: usize = 4096;

/// How many unit digits new values carry by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionContext {
    digits: usize,
}

impl PrecisionContext {
    pub fn new(digits: usize) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(PadicError::Domain(format!(
                "precision context needs at least {MIN_DIGITS} digits, got {digits}"
            )));
        }
        if digits > MAX_DIGITS {
            return Err(PadicError::Resource(format!(
                "precision context capped at {MAX_DIGITS} digits, got {digits}"
            )));
        }
        Ok(PrecisionContext { digits })
    }

    pub fn digits(&self) -> usize {
        self.digits
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            digits: DEFAULT_DIGITS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Zero,
    /// value = unit * p^ord with unit in [1, p^prec), unit not divisible by p.
    Unit { ord: i64, unit: BigUint, prec: usize },
}

/// A p-adic number: either exact zero, or a valuation together with a
/// truncated unit part.
///
/// A nonzero value tracks `prec` base-p digits of its unit, so it is known
/// exactly modulo p^(ord + prec). Equality (`==`) is structural: same prime,
/// same valuation, same tracked digits, same precision. Use `agrees_with`
/// for "indistinguishable at joint precision".
///
/// Subtraction of two values whose tracked digits cancel completely returns
/// exact zero. The tracked window is the ground truth this engine reasons
/// about; a caller that needs to separate "exactly zero" from "zero to this
/// many digits" must carry enough digits up front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Padic {
    p: Prime,
    repr: Repr,
}

/// p^k as a big integer.
pub fn pow_p(p: u64, k: usize) -> BigUint {
    BigUint::from(p).pow(k as u32)
}

/// Strips all factors of p from a nonzero integer.
pub(crate) fn strip_p(mut n: BigUint, p: u64) -> (usize, BigUint) {
    debug_assert!(!n.is_zero());
    let pb = BigUint::from(p);
    let mut v = 0usize;
    loop {
        let (q, r) = n.div_rem(&pb);
        if r.is_zero() {
            n = q;
            v += 1;
        } else {
            return (v, n);
        }
    }
}

/// Inverse of a modulo an arbitrary modulus, via the extended gcd.
pub fn inv_mod(a: &BigUint, modulus: &BigUint) -> Result<BigUint> {
    let e = BigInt::from(a.clone()).extended_gcd(&BigInt::from(modulus.clone()));
    if !e.gcd.is_one() {
        return Err(PadicError::Invariant(format!(
            "no inverse of {a} modulo {modulus}"
        )));
    }
    let x = e.x.mod_floor(&BigInt::from(modulus.clone()));
    Ok(x.to_biguint().expect("mod_floor is nonnegative"))
}

fn balanced_lift(r: &BigUint, modulus: &BigUint) -> BigInt {
    // modulus is odd, so no tie to break
    if r * 2u32 <= modulus - 1u32 {
        BigInt::from(r.clone())
    } else {
        BigInt::from(r.clone()) - BigInt::from(modulus.clone())
    }
}

impl Padic {
    pub fn zero(p: Prime) -> Padic {
        Padic {
            p,
            repr: Repr::Zero,
        }
    }

    pub fn one(p: Prime, prec: usize) -> Padic {
        Padic {
            p,
            repr: Repr::Unit {
                ord: 0,
                unit: BigUint::one(),
                prec,
            },
        }
    }

    /// Exact integer, tracked to `prec` unit digits.
    pub fn from_bigint(p: Prime, n: &BigInt, prec: usize) -> Padic {
        Self::from_shifted_bigint(p, n, 0, prec)
    }

    /// Exact value n * p^shift.
    pub fn from_shifted_bigint(p: Prime, n: &BigInt, shift: i64, prec: usize) -> Padic {
        if n.is_zero() {
            return Padic::zero(p);
        }
        let (v, m) = strip_p(n.magnitude().clone(), p.get());
        let modulus = pow_p(p.get(), prec);
        let mut unit = m % &modulus;
        if n.is_negative() {
            unit = &modulus - unit;
        }
        Padic {
            p,
            repr: Repr::Unit {
                ord: shift + v as i64,
                unit,
                prec,
            },
        }
    }

    pub fn from_i64(p: Prime, n: i64, prec: usize) -> Padic {
        Self::from_bigint(p, &BigInt::from(n), prec)
    }

    pub fn from_u64(p: Prime, n: u64, prec: usize) -> Padic {
        Self::from_bigint(p, &BigInt::from(n), prec)
    }

    /// Exact rational num/den.
    pub fn from_ratio(p: Prime, num: &BigInt, den: &BigInt, prec: usize) -> Result<Padic> {
        if den.is_zero() {
            return Err(PadicError::Domain("rational with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Padic::zero(p));
        }
        let (vn, mn) = strip_p(num.magnitude().clone(), p.get());
        let (vd, md) = strip_p(den.magnitude().clone(), p.get());
        let modulus = pow_p(p.get(), prec);
        let mut unit = (mn % &modulus) * inv_mod(&(md % &modulus), &modulus)? % &modulus;
        if num.is_negative() != den.is_negative() {
            unit = &modulus - unit;
        }
        Ok(Padic {
            p,
            repr: Repr::Unit {
                ord: vn as i64 - vd as i64,
                unit,
                prec,
            },
        })
    }

    /// Builds a value from explicit unit digits, least significant first.
    /// digits[0] must be nonzero and every digit below p.
    pub fn from_unit_digits(p: Prime, ord: i64, digits: &[u64]) -> Result<Padic> {
        if digits.is_empty() {
            return Err(PadicError::Domain("empty digit list".into()));
        }
        if digits[0] == 0 {
            return Err(PadicError::Domain("leading unit digit must be nonzero".into()));
        }
        let mut unit = BigUint::zero();
        for &d in digits.iter().rev() {
            if d >= p.get() {
                return Err(PadicError::Domain(format!(
                    "digit {d} out of range for p={}",
                    p.get()
                )));
            }
            unit = unit * p.get() + d;
        }
        Ok(Padic {
            p,
            repr: Repr::Unit {
                ord,
                unit,
                prec: digits.len(),
            },
        })
    }

    /// Internal constructor from an already reduced unit residue.
    pub(crate) fn from_unit_digits_raw(
        p: Prime,
        ord: i64,
        unit: BigUint,
        prec: usize,
    ) -> Result<Padic> {
        if prec == 0 {
            return Err(PadicError::Precision("no tracked digits left".into()));
        }
        let modulus = pow_p(p.get(), prec);
        let u = unit % &modulus;
        if u.is_zero() || (&u % p.get()).is_zero() {
            return Err(PadicError::Invariant(
                "raw unit constructor got a non-unit residue".into(),
            ));
        }
        Ok(Padic {
            p,
            repr: Repr::Unit { ord, unit: u, prec },
        })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero)
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.repr, Repr::Unit { ord: 0, .. })
    }

    /// Valuation; None for exact zero.
    pub fn ord(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Unit { ord, .. } => Some(*ord),
        }
    }

    /// Tracked unit digits; None for exact zero.
    pub fn prec(&self) -> Option<usize> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Unit { prec, .. } => Some(*prec),
        }
    }

    /// The value is known modulo p^abs_prec.
    pub fn abs_prec(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Unit { ord, prec, .. } => Some(ord + *prec as i64),
        }
    }

    pub fn unit_part(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Unit { unit, .. } => Some(unit),
        }
    }

    /// |x| as an integer exponent of p.
    pub fn norm(&self) -> Norm {
        Norm::from_ord(self.ord())
    }

    /// Base-p digits of the unit part, least significant first, length prec.
    pub fn digits(&self) -> Vec<u64> {
        match &self.repr {
            Repr::Zero => Vec::new(),
            Repr::Unit { unit, prec, .. } => {
                let pb = BigUint::from(self.p.get());
                let mut out = Vec::with_capacity(*prec);
                let mut rest = unit.clone();
                for _ in 0..*prec {
                    let (q, r) = rest.div_rem(&pb);
                    out.push(r.to_u64().expect("digit fits u64"));
                    rest = q;
                }
                out
            }
        }
    }

    /// Leading unit digit reduced mod p; None for zero.
    pub fn leading_digit(&self) -> Option<u64> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Unit { unit, .. } => (unit % self.p.get()).to_u64(),
        }
    }

    /// Canonical representative of the value modulo p^k. Requires ord >= 0
    /// and enough tracked digits to actually know those residues.
    pub fn residue_mod_pk(&self, k: usize) -> Result<BigUint> {
        match &self.repr {
            Repr::Zero => Ok(BigUint::zero()),
            Repr::Unit { ord, unit, prec } => {
                if *ord < 0 {
                    return Err(PadicError::Domain(format!(
                        "residue_mod_pk on a value of valuation {ord}"
                    )));
                }
                if ord + (*prec as i64) < k as i64 {
                    return Err(PadicError::Precision(format!(
                        "value known mod p^{}, requested mod p^{k}",
                        ord + *prec as i64
                    )));
                }
                let modulus = pow_p(self.p.get(), k);
                Ok(unit * pow_p(self.p.get(), *ord as usize) % modulus)
            }
        }
    }

    /// Drops tracked digits down to `prec` (no-op if already coarser).
    pub fn truncate(&self, new_prec: usize) -> Padic {
        match &self.repr {
            Repr::Zero => self.clone(),
            Repr::Unit { ord, unit, prec } => {
                if *prec <= new_prec {
                    self.clone()
                } else {
                    Padic {
                        p: self.p,
                        repr: Repr::Unit {
                            ord: *ord,
                            unit: unit % pow_p(self.p.get(), new_prec),
                            prec: new_prec,
                        },
                    }
                }
            }
        }
    }

    /// Multiplies by p^k, exactly.
    pub fn mul_pow_p(&self, k: i64) -> Padic {
        match &self.repr {
            Repr::Zero => self.clone(),
            Repr::Unit { ord, unit, prec } => Padic {
                p: self.p,
                repr: Repr::Unit {
                    ord: ord + k,
                    unit: unit.clone(),
                    prec: *prec,
                },
            },
        }
    }

    fn check_same_prime(&self, other: &Padic) -> Result<()> {
        if self.p != other.p {
            return Err(PadicError::Domain(format!(
                "mixed primes {} and {}",
                self.p, other.p
            )));
        }
        Ok(())
    }

    pub fn neg(&self) -> Padic {
        match &self.repr {
            Repr::Zero => self.clone(),
            Repr::Unit { ord, unit, prec } => {
                let modulus = pow_p(self.p.get(), *prec);
                Padic {
                    p: self.p,
                    repr: Repr::Unit {
                        ord: *ord,
                        unit: &modulus - unit,
                        prec: *prec,
                    },
                }
            }
        }
    }

    fn combine(&self, other: &Padic, subtract: bool) -> Result<Padic> {
        self.check_same_prime(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Zero, _) => {
                return Ok(if subtract { other.neg() } else { other.clone() })
            }
            (_, Repr::Zero) => return Ok(self.clone()),
            _ => {}
        }
        let (ox, ux, px) = match &self.repr {
            Repr::Unit { ord, unit, prec } => (*ord, unit, *prec),
            Repr::Zero => unreachable!(),
        };
        let (oy, uy, py) = match &other.repr {
            Repr::Unit { ord, unit, prec } => (*ord, unit, *prec),
            Repr::Zero => unreachable!(),
        };
        let o = ox.min(oy);
        let abs = (ox + px as i64).min(oy + py as i64);
        // abs > o always: abs >= min(ox,oy) + 1
        let m = (abs - o) as usize;
        let modulus = pow_p(self.p.get(), m);
        let the_rep = |ord_v: i64, unit_v: &BigUint| -> BigUint {
            let s = (ord_v - o) as usize;
            if s >= m {
                BigUint::zero()
            } else {
                (unit_v % pow_p(self.p.get(), m - s)) * pow_p(self.p.get(), s)
            }
        };
        let bx = balanced_lift(&the_rep(ox, ux), &modulus);
        let by = balanced_lift(&the_rep(oy, uy), &modulus);
        let isum = if subtract { bx - by } else { bx + by };
        if isum.is_zero() {
            // every tracked digit cancelled: exact zero by convention
            return Ok(Padic::zero(self.p));
        }
        let r = isum
            .mod_floor(&BigInt::from(modulus))
            .to_biguint()
            .expect("mod_floor nonnegative");
        // |isum| < modulus, so a nonzero isum leaves a nonzero residue
        let (v, mres) = strip_p(r, self.p.get());
        debug_assert!(v < m);
        Ok(Padic {
            p: self.p,
            repr: Repr::Unit {
                ord: o + v as i64,
                unit: mres,
                prec: m - v,
            },
        })
    }

    pub fn add(&self, other: &Padic) -> Result<Padic> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Padic) -> Result<Padic> {
        self.combine(other, true)
    }

    pub fn mul(&self, other: &Padic) -> Result<Padic> {
        self.check_same_prime(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Zero, _) | (_, Repr::Zero) => Ok(Padic::zero(self.p)),
            (
                Repr::Unit { ord: ox, unit: ux, prec: px },
                Repr::Unit { ord: oy, unit: uy, prec: py },
            ) => {
                let prec = (*px).min(*py);
                let modulus = pow_p(self.p.get(), prec);
                let ord = ox.checked_add(*oy).ok_or_else(|| {
                    PadicError::Resource("valuation overflow in mul".into())
                })?;
                Ok(Padic {
                    p: self.p,
                    repr: Repr::Unit {
                        ord,
                        unit: (ux % &modulus) * (uy % &modulus) % &modulus,
                        prec,
                    },
                })
            }
        }
    }

    pub fn div(&self, other: &Padic) -> Result<Padic> {
        self.check_same_prime(other)?;
        match (&other.repr, &self.repr) {
            (Repr::Zero, _) => Err(PadicError::Singular(
                "division by a value indistinguishable from zero".into(),
            )),
            (_, Repr::Zero) => Ok(Padic::zero(self.p)),
            (
                Repr::Unit { ord: oy, unit: uy, prec: py },
                Repr::Unit { ord: ox, unit: ux, prec: px },
            ) => {
                let prec = (*px).min(*py);
                let modulus = pow_p(self.p.get(), prec);
                let inv = inv_mod(&(uy % &modulus), &modulus)?;
                let ord = ox.checked_sub(*oy).ok_or_else(|| {
                    PadicError::Resource("valuation overflow in div".into())
                })?;
                Ok(Padic {
                    p: self.p,
                    repr: Repr::Unit {
                        ord,
                        unit: (ux % &modulus) * inv % &modulus,
                        prec,
                    },
                })
            }
        }
    }

    pub fn inv(&self) -> Result<Padic> {
        Padic::one(self.p, self.prec().unwrap_or(DEFAULT_DIGITS)).div(self)
    }

    pub fn pow(&self, k: i64) -> Result<Padic> {
        match &self.repr {
            Repr::Zero => {
                if k > 0 {
                    Ok(self.clone())
                } else {
                    Err(PadicError::Domain(format!("0 raised to power {k}")))
                }
            }
            Repr::Unit { ord, unit, prec } => {
                let ord_k = ord.checked_mul(k).ok_or_else(|| {
                    PadicError::Resource("valuation overflow in pow".into())
                })?;
                let modulus = pow_p(self.p.get(), *prec);
                let base = if k < 0 {
                    inv_mod(&(unit % &modulus), &modulus)?
                } else {
                    unit % &modulus
                };
                let e = k.unsigned_abs();
                let u = base.modpow(&BigUint::from(e), &modulus);
                Ok(Padic {
                    p: self.p,
                    repr: Repr::Unit {
                        ord: ord_k,
                        unit: u,
                        prec: *prec,
                    },
                })
            }
        }
    }

    /// True when the two values cannot be told apart at their joint
    /// tracked precision.
    pub fn agrees_with(&self, other: &Padic) -> bool {
        match self.sub(other) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }
}

impl std::fmt::Display for Padic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::literal::format_padic(self))
    }
}
