//! Exact p-adic arithmetic for odd primes p > 3.
//!
//! Values are stored as a valuation plus a truncated unit expansion, so
//! norms come out as exact integer exponents and never touch floating
//! point. On top of the field operations the crate provides the p-adic
//! exponential and logarithm, unit square roots, and membership in the
//! group of units congruent to 1 mod p.

pub mod error;
pub mod functions;
pub mod invariants;
pub mod literal;
pub mod norm;
pub mod padic;
pub mod prime;

pub use error::{PadicError, Result};
pub use functions::{exp_p, is_in_ep, log_p, sqrt_unit};
pub use literal::{format_padic, parse_padic};
pub use norm::Norm;
pub use padic::{Padic, PrecisionContext, DEFAULT_DIGITS, MIN_DIGITS};
pub use prime::Prime;
