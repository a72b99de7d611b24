use crate::error::{PadicError, Result};

/// A verified odd prime greater than 3.
///
/// Everything in this workspace assumes p > 3 (several constructions divide
/// by 2 and 3, and the residue field needs both units), so `Prime::new`
/// rejects 2 and 3 outright.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if p <= 3 {
            return Err(PadicError::Domain(format!(
                "prime must exceed 3, got {p}"
            )));
        }
        if !is_prime_u64(p) {
            return Err(PadicError::Domain(format!("{p} is not prime")));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    // this base set decides primality for all n < 2^64
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_two_and_three() {
        assert!(Prime::new(2).is_err());
        assert!(Prime::new(3).is_err());
        assert!(Prime::new(4).is_err());
        assert!(Prime::new(1).is_err());
    }

    #[test]
    fn accepts_working_primes() {
        for p in [5u64, 7, 11, 13, 19, 97, 65537] {
            assert_eq!(Prime::new(p).unwrap().get(), p);
        }
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division_below_10k() {
        let trial = |n: u64| -> bool {
            if n < 2 {
                return false;
            }
            let mut d = 2;
            while d * d <= n {
                if n % d == 0 {
                    return false;
                }
                d += 1;
            }
            true
        };
        for n in 0..10_000u64 {
            assert_eq!(is_prime_u64(n), trial(n), "disagree at {n}");
        }
    }
}
