//! Bulk agreement checks between the case tables and direct enumeration.
//!
//! These are library functions (not just tests) so the acceptance harness
//! and the CLI scan mode can run them with their own budgets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use padic_core::{Padic, PadicError, Prime, Result};

use crate::cubic::CubicProblem;
use crate::fp::fp_cubic_report;
use crate::oracle::{brute_force_root_count, OracleConfig};
use crate::zpstar::{zp_star_root_count, zp_star_roots, NormClass};

/// Checks the residue-count recurrence against exhaustive enumeration for
/// every pair of nonzero leading digits. Returns the number of pairs.
/// `fp_cubic_report` already refuses to return on disagreement, so
/// surviving the double loop is the certificate.
pub fn trichotomy_calibration(p: Prime) -> Result<u64> {
    let mut pairs = 0u64;
    for a in 1..p.get() {
        for b in 1..p.get() {
            fp_cubic_report(p, a, b)?;
            pairs += 1;
        }
    }
    Ok(pairs)
}

#[derive(Debug, Clone, Default)]
pub struct SweepStats {
    pub cases: u64,
    pub small_a_unit_b: u64,
    pub small_b_unit_a: u64,
    pub unit_unit: u64,
    pub large_equal: u64,
    pub outside: u64,
    pub agreements: u64,
}

impl SweepStats {
    fn bump(&mut self, class: NormClass) {
        match class {
            NormClass::SmallAUnitB => self.small_a_unit_b += 1,
            NormClass::SmallBUnitA => self.small_b_unit_a += 1,
            NormClass::UnitUnit => self.unit_unit += 1,
            NormClass::LargeEqual => self.large_equal += 1,
            NormClass::Outside => self.outside += 1,
        }
    }
}

fn random_unit(rng: &mut ChaCha8Rng, p: Prime, ord: i64) -> Padic {
    const PREC: usize = 24;
    let mut digits = Vec::with_capacity(PREC);
    digits.push(rng.gen_range(1..p.get()));
    for _ in 1..PREC {
        digits.push(rng.gen_range(0..p.get()));
    }
    Padic::from_unit_digits(p, ord, &digits).expect("valid digits")
}

/// Random (a, b) pairs spanning all norm classes; on every draw the case
/// table count must equal the brute-force count exactly. Every fourth
/// case also extracts and verifies the root values.
pub fn oracle_sweep(p: Prime, cases: u32, seed: u64, cfg: &OracleConfig) -> Result<SweepStats> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (p.get() << 8));
    let mut stats = SweepStats::default();
    for i in 0..cases {
        let (oa, ob) = match i % 5 {
            0 => (rng.gen_range(1..=3), 0),
            1 => (0, rng.gen_range(1..=3)),
            2 => (0, 0),
            3 => {
                let m = rng.gen_range(1..=3);
                (-m, -m)
            }
            _ => (rng.gen_range(-2..=2), rng.gen_range(-2..=2)),
        };
        let a = random_unit(&mut rng, p, oa);
        let b = random_unit(&mut rng, p, ob);
        let problem = CubicProblem::new(a, b)?;
        let report = if i % 4 == 0 {
            zp_star_roots(&problem)?
        } else {
            zp_star_root_count(&problem)?
        };
        let oracle = brute_force_root_count(&problem, cfg)?;
        if oracle != report.count {
            return Err(PadicError::Oracle(format!(
                "case {i} at p={}: table count {} but enumeration found {} (a = {}, b = {})",
                p.get(),
                report.count,
                oracle,
                problem.a,
                problem.b
            )));
        }
        stats.cases += 1;
        stats.agreements += 1;
        stats.bump(report.norm_class);
    }
    Ok(stats)
}
