use serde::{Deserialize, Serialize};

/// A p-adic absolute value, stored as the integer exponent e with |x| = p^e.
/// Exact zero has no exponent and compares below every power of p.
///
/// Serializes as {"exp": e} with null for zero, so norms stay exact in
/// reports instead of being flattened to floats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Norm {
    pub exp: Option<i64>,
}

impl Norm {
    pub fn zero() -> Norm {
        Norm { exp: None }
    }

    pub fn one() -> Norm {
        Norm { exp: Some(0) }
    }

    pub fn power(e: i64) -> Norm {
        Norm { exp: Some(e) }
    }

    /// Norm of a value with the given valuation (None = exact zero).
    pub fn from_ord(ord: Option<i64>) -> Norm {
        Norm {
            exp: ord.map(|v| -v),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.exp.is_none()
    }

    pub fn is_one(&self) -> bool {
        self.exp == Some(0)
    }

    /// |x*y| = |x| |y|.
    pub fn mul(&self, other: &Norm) -> Norm {
        match (self.exp, other.exp) {
            (Some(a), Some(b)) => Norm { exp: Some(a + b) },
            _ => Norm::zero(),
        }
    }

    pub fn pow(&self, k: i64) -> Norm {
        Norm {
            exp: self.exp.map(|e| e * k),
        }
    }
}

impl std::fmt::Display for Norm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.exp {
            None => write!(f, "0"),
            Some(0) => write!(f, "1"),
            Some(e) => write!(f, "p^{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_zero_first() {
        assert!(Norm::zero() < Norm::power(-100));
        assert!(Norm::power(-2) < Norm::power(-1));
        assert!(Norm::power(-1) < Norm::one());
        assert!(Norm::one() < Norm::power(3));
    }

    #[test]
    fn serializes_with_exp_key() {
        assert_eq!(
            serde_json::to_string(&Norm::power(-2)).unwrap(),
            r#"{"exp":-2}"#
        );
        assert_eq!(serde_json::to_string(&Norm::zero()).unwrap(), r#"{"exp":null}"#);
    }
}
