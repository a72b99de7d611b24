use num_bigint::{BigInt, BigUint};
use num_traits::Zero as NumZero;

use crate::error::{PadicError, Result};
use crate::padic::{pow_p, Padic};
use crate::prime::Prime;

/// Parses a p-adic literal. Three forms are accepted:
///
///   integers            "42", "-7"
///   rationals           "3/25", "-1/3"
///   digit expansions    "5^-2 * (3 + 1*5 + 4*5^3)"
///
/// The expansion form is base * "^" * valuation * "(" digit terms ")".
/// Terms may be sparse and unordered; every digit must be below p and the
/// written base must match the prime in force. Whitespace is ignored.
pub fn parse_padic(input: &str, p: Prime, prec: usize) -> Result<Padic> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(PadicError::Parse("empty literal".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_bigint(num)?;
        let den = parse_bigint(den)?;
        if den.is_zero() {
            return Err(PadicError::Parse("zero denominator in rational".into()));
        }
        return Padic::from_ratio(p, &num, &den, prec)
            .map_err(|e| PadicError::Parse(e.to_string()));
    }
    if is_plain_int(&s) {
        return Ok(Padic::from_bigint(p, &parse_bigint(&s)?, prec));
    }
    parse_expansion(&s, p, prec)
}

fn is_plain_int(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| PadicError::Parse(format!("bad integer '{s}'")))
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(PadicError::Parse(format!(
                "expected '{}' at offset {} of literal",
                b as char, self.pos
            )))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(PadicError::Parse(format!(
                "expected a number at offset {start} of literal"
            )));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| PadicError::Parse("number too large in literal".into()))
    }

    fn signed_number(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.number()? as i64;
        Ok(if neg { -n } else { n })
    }
}

fn parse_expansion(s: &str, p: Prime, prec: usize) -> Result<Padic> {
    let mut c = Cursor {
        bytes: s.as_bytes(),
        pos: 0,
    };
    let base = c.number()?;
    if base != p.get() {
        return Err(PadicError::Parse(format!(
            "literal base {base} does not match prime {}",
            p.get()
        )));
    }
    c.eat(b'^')?;
    let val = c.signed_number()?;
    c.eat(b'*')?;
    c.eat(b'(')?;
    let mut acc = BigUint::zero();
    loop {
        let d = c.number()?;
        if d >= p.get() {
            return Err(PadicError::Parse(format!(
                "digit {d} out of range for base {}",
                p.get()
            )));
        }
        let mut e: usize = 0;
        if c.peek() == Some(b'*') {
            c.pos += 1;
            let b = c.number()?;
            if b != p.get() {
                return Err(PadicError::Parse(format!(
                    "term base {b} does not match prime {}",
                    p.get()
                )));
            }
            e = 1;
            if c.peek() == Some(b'^') {
                c.pos += 1;
                let raw = c.number()?;
                if raw > 100_000 {
                    return Err(PadicError::Parse("term exponent too large".into()));
                }
                e = raw as usize;
            }
        }
        acc += BigUint::from(d) * pow_p(p.get(), e);
        match c.peek() {
            Some(b'+') => {
                c.pos += 1;
            }
            Some(b')') => {
                c.pos += 1;
                break;
            }
            other => {
                return Err(PadicError::Parse(format!(
                    "unexpected {:?} in digit list",
                    other.map(|b| b as char)
                )));
            }
        }
    }
    if c.pos != c.bytes.len() {
        return Err(PadicError::Parse("trailing input after literal".into()));
    }
    if acc.is_zero() {
        return Ok(Padic::zero(p));
    }
    Ok(Padic::from_shifted_bigint(p, &BigInt::from(acc), val, prec))
}

/// Canonical expansion form, zero digits omitted. Round-trips through
/// `parse_padic` at the same precision.
pub fn format_padic(x: &Padic) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let p = x.prime().get();
    let ord = x.ord().expect("nonzero");
    let terms: Vec<String> = x
        .digits()
        .iter()
        .enumerate()
        .filter(|(_, d)| **d != 0)
        .map(|(i, d)| match i {
            0 => format!("{d}"),
            1 => format!("{d}*{p}"),
            _ => format!("{d}*{p}^{i}"),
        })
        .collect();
    format!("{p}^{ord} * ({})", terms.join(" + "))
}
