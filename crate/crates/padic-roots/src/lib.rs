//! Roots of depressed cubics x^3 + a x = b over F_p and over the p-adic
//! units, for primes p > 3.
//!
//! The residue-field count comes from a linear recurrence criterion and is
//! cross-checked against direct enumeration on every call. The unit-ball
//! count follows a norm-class case split, with every extracted root
//! verified by substitution. An independent brute-force oracle isolates
//! roots by recursive residue splitting and certifies counts with zero
//! tolerance; the sweep helpers compare the two on demand.

pub mod cubic;
pub mod fp;
pub mod hensel;
pub mod oracle;
pub mod sweep;
pub mod zpstar;

pub use cubic::{Cubic, CubicProblem};
pub use fp::{count_roots_fp_cubic, fp_cubic_report, qth_power_residue, u_sequence, FpCubicReport, FpRoot};
pub use hensel::hensel_lift;
pub use oracle::{brute_force_root_count, isolate_integral_roots, OracleConfig};
pub use sweep::{oracle_sweep, trichotomy_calibration, SweepStats};
pub use zpstar::{zp_star_root_count, zp_star_roots, zp_star_solvable, NormClass, ZpStarRootReport};
