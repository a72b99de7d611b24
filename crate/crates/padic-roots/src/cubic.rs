use padic_core::{Padic, PadicError, Prime, Result};

/// A cubic polynomial c[3] x^3 + c[2] x^2 + c[1] x + c[0] over Q_p.
#[derive(Debug, Clone)]
pub struct Cubic {
    pub c: [Padic; 4],
}

impl Cubic {
    pub fn new(c: [Padic; 4]) -> Result<Cubic> {
        let p = c[0].prime();
        if c.iter().any(|x| x.prime() != p) {
            return Err(PadicError::Domain("cubic with mixed primes".into()));
        }
        Ok(Cubic { c })
    }

    /// x^3 + a x - b, the depressed form everything downstream uses.
    pub fn depressed(a: &Padic, b: &Padic) -> Cubic {
        let p = a.prime();
        let prec = a
            .prec()
            .unwrap_or(padic_core::DEFAULT_DIGITS)
            .min(b.prec().unwrap_or(padic_core::DEFAULT_DIGITS));
        Cubic {
            c: [b.neg(), a.clone(), Padic::zero(p), Padic::one(p, prec)],
        }
    }

    pub fn prime(&self) -> Prime {
        self.c[0].prime()
    }

    pub fn eval(&self, x: &Padic) -> Result<Padic> {
        let mut acc = self.c[3].clone();
        for k in (0..3).rev() {
            acc = acc.mul(x)?.add(&self.c[k])?;
        }
        Ok(acc)
    }

    pub fn eval_derivative(&self, x: &Padic) -> Result<Padic> {
        let p = self.prime();
        let prec = x.prec().unwrap_or(padic_core::DEFAULT_DIGITS);
        let three = Padic::from_u64(p, 3, prec);
        let two = Padic::from_u64(p, 2, prec);
        let mut acc = self.c[3].mul(&three)?;
        acc = acc.mul(x)?.add(&self.c[2].mul(&two)?)?;
        acc = acc.mul(x)?.add(&self.c[1])?;
        Ok(acc)
    }
}

/// The equation x^3 + a x = b with both coefficients nonzero.
#[derive(Debug, Clone)]
pub struct CubicProblem {
    pub a: Padic,
    pub b: Padic,
}

impl CubicProblem {
    pub fn new(a: Padic, b: Padic) -> Result<CubicProblem> {
        if a.prime() != b.prime() {
            return Err(PadicError::Domain("coefficients over different primes".into()));
        }
        if a.is_zero() || b.is_zero() {
            return Err(PadicError::Domain(
                "both coefficients of x^3 + ax = b must be nonzero".into(),
            ));
        }
        Ok(CubicProblem { a, b })
    }

    pub fn prime(&self) -> Prime {
        self.a.prime()
    }

    pub fn polynomial(&self) -> Cubic {
        Cubic::depressed(&self.a, &self.b)
    }

    /// Discriminant -4a^3 - 27b^2. May come back as exact zero when every
    /// tracked digit cancels.
    pub fn discriminant(&self) -> Result<Padic> {
        let p = self.prime();
        let prec = self
            .a
            .prec()
            .unwrap_or(padic_core::DEFAULT_DIGITS)
            .max(self.b.prec().unwrap_or(padic_core::DEFAULT_DIGITS));
        let m4 = Padic::from_i64(p, -4, prec);
        let m27 = Padic::from_i64(p, -27, prec);
        let t1 = m4.mul(&self.a.pow(3)?)?;
        let t2 = m27.mul(&self.b.pow(2)?)?;
        t1.add(&t2)
    }
}
