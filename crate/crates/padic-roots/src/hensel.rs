use padic_core::{Padic, PadicError, Result};

use crate::cubic::Cubic;

/// Hensel lift with the general contact condition: writing i for the
/// valuation of f'(theta), the seed must satisfy f(theta) = 0 mod p^(2i+1).
/// Newton steps then converge to the unique root in theta + p^(i+1) Z_p.
///
/// The seed and coefficients must be integral. A seed that violates the
/// contact condition is a hypothesis error, not a domain error: the caller
/// picked a bad starting point, the inputs themselves are fine.
pub fn hensel_lift(f: &Cubic, theta: &Padic) -> Result<Padic> {
    if theta.ord().map_or(false, |o| o < 0) {
        return Err(PadicError::Hypothesis("hensel seed must be integral".into()));
    }
    let fd = f.eval_derivative(theta)?;
    let i = match fd.ord() {
        Some(o) if o >= 0 => o,
        Some(_) => {
            return Err(PadicError::Hypothesis(
                "derivative at seed is not integral".into(),
            ))
        }
        None => {
            return Err(PadicError::Hypothesis(
                "derivative vanishes at seed to working precision".into(),
            ))
        }
    };
    let fv = f.eval(theta)?;
    if let Some(o) = fv.ord() {
        if o < 2 * i + 1 {
            return Err(PadicError::Hypothesis(format!(
                "contact condition failed: ord f(seed) = {o}, need at least {}",
                2 * i + 1
            )));
        }
    }

    let mut x = theta.clone();
    for _ in 0..64 {
        let fx = f.eval(&x)?;
        if fx.is_zero() {
            return Ok(x);
        }
        let dx = f.eval_derivative(&x)?;
        let step = fx.div(&dx)?;
        x = x.sub(&step)?;
        // quadratic convergence: stop once the step falls below what the
        // tracked digits of x can express
        if let (Some(so), Some(ap)) = (step.ord(), x.abs_prec()) {
            if so >= ap {
                return Ok(x);
            }
        }
    }
    Err(PadicError::Precision(
        "newton iteration did not settle within 64 steps".into(),
    ))
}
