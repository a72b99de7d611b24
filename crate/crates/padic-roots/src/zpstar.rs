use padic_core::prime::pow_mod;
use padic_core::{sqrt_unit, Norm, Padic, PadicError, Prime, Result};
use serde::Serialize;

use crate::cubic::{Cubic, CubicProblem};
use crate::fp::{fp_cubic_report, qth_power_residue};
use crate::hensel::hensel_lift;

/// Norm classes that can carry a unit root, plus the sink for everything
/// else. A solution in Z_p^* forces |a| < |b| = 1, |b| < |a| = 1, or
/// |a| = |b| >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormClass {
    SmallAUnitB,
    SmallBUnitA,
    UnitUnit,
    LargeEqual,
    Outside,
}

pub fn norm_class(problem: &CubicProblem) -> NormClass {
    let oa = problem.a.ord().expect("nonzero");
    let ob = problem.b.ord().expect("nonzero");
    match (oa, ob) {
        (a, 0) if a > 0 => NormClass::SmallAUnitB,
        (0, b) if b > 0 => NormClass::SmallBUnitA,
        (0, 0) => NormClass::UnitUnit,
        (a, b) if a == b && a < 0 => NormClass::LargeEqual,
        _ => NormClass::Outside,
    }
}

/// Everything the case analysis can say about roots of x^3 + ax = b in
/// the unit group.
#[derive(Debug, Clone, Serialize)]
pub struct ZpStarRootReport {
    pub norm_class: NormClass,
    pub solvable: bool,
    /// Distinct roots in Z_p^*. This is the number the oracle must match.
    pub count: u8,
    /// Headline table value. Differs from `count` only when the
    /// discriminant is exactly zero: the table treats the double root as
    /// a multiplicity and reports 3 where only 2 distinct values exist.
    pub table_count: u8,
    /// |D| for the unit-unit class, D = -4a^3 - 27b^2.
    pub d_norm: Option<Norm>,
    pub d_exact_zero: bool,
    /// Leading digit of the unit part of D, when D != 0.
    pub d0: Option<u64>,
    #[serde(skip)]
    pub roots: Vec<Padic>,
    /// Filled by callers that ran the brute-force oracle alongside.
    pub oracle_count: Option<u8>,
}

/// Solvability in Z_p^* together with the norm class that decided it.
pub fn zp_star_solvable(problem: &CubicProblem) -> Result<(bool, NormClass)> {
    let report = zp_star_root_count(problem)?;
    Ok((report.solvable, report.norm_class))
}

/// Case-table count of distinct unit roots, without extracting values.
pub fn zp_star_root_count(problem: &CubicProblem) -> Result<ZpStarRootReport> {
    analyze(problem, false)
}

/// Case-table count plus the actual roots, each verified by substitution
/// and by the unit-norm requirement.
pub fn zp_star_roots(problem: &CubicProblem) -> Result<ZpStarRootReport> {
    analyze(problem, true)
}

fn analyze(problem: &CubicProblem, extract: bool) -> Result<ZpStarRootReport> {
    let p = problem.prime();
    let class = norm_class(problem);
    let mut report = ZpStarRootReport {
        norm_class: class,
        solvable: false,
        count: 0,
        table_count: 0,
        d_norm: None,
        d_exact_zero: false,
        d0: None,
        roots: Vec::new(),
        oracle_count: None,
    };
    match class {
        NormClass::Outside => {}
        NormClass::SmallAUnitB => {
            let b0 = problem.b.leading_digit().expect("unit");
            let (solvable, n) = qth_power_residue(p, b0, 3);
            report.solvable = solvable;
            report.count = n as u8;
            report.table_count = n as u8;
            if extract && solvable {
                let f = problem.polynomial();
                for x0 in 1..p.get() {
                    if pow_mod(x0, 3, p.get()) == b0 {
                        report.roots.push(hensel_lift(&f, &seed(p, x0, problem))?);
                    }
                }
            }
        }
        NormClass::SmallBUnitA => {
            let a0 = problem.a.leading_digit().expect("unit");
            let minus_a0 = (p.get() - a0) % p.get();
            let (solvable, _) = qth_power_residue(p, minus_a0, 2);
            report.solvable = solvable;
            report.count = if solvable { 2 } else { 0 };
            report.table_count = report.count;
            if extract && solvable {
                let f = problem.polynomial();
                for x0 in 1..p.get() {
                    if pow_mod(x0, 2, p.get()) == minus_a0 {
                        report.roots.push(hensel_lift(&f, &seed(p, x0, problem))?);
                    }
                }
            }
        }
        NormClass::UnitUnit => unit_unit_case(problem, extract, &mut report)?,
        NormClass::LargeEqual => {
            report.solvable = true;
            report.count = 1;
            report.table_count = 1;
            if extract {
                // multiply through by p^m: p^m x^3 + a* x = b* keeps the
                // unit roots and has integral coefficients
                let m = -problem.a.ord().expect("nonzero");
                let prec = working_prec(problem);
                let a_star = problem.a.mul_pow_p(m);
                let b_star = problem.b.mul_pow_p(m);
                let lead = Padic::one(p, prec).mul_pow_p(m);
                let g = Cubic::new([
                    b_star.neg(),
                    a_star.clone(),
                    Padic::zero(p),
                    lead,
                ])?;
                let a0 = a_star.leading_digit().expect("unit");
                let b0 = b_star.leading_digit().expect("unit");
                let x0 = padic_core::prime::mul_mod(b0, pow_mod(a0, p.get() - 2, p.get()), p.get());
                let root = hensel_lift(&g, &seed(p, x0, problem))?;
                let check = g.eval(&root)?;
                if !check.is_zero() {
                    return Err(PadicError::Invariant(
                        "scaled-cubic root fails substitution".into(),
                    ));
                }
                report.roots.push(root);
            }
        }
    }

    if extract {
        verify_roots(problem, &mut report)?;
    }
    Ok(report)
}

fn seed(p: Prime, x0: u64, problem: &CubicProblem) -> Padic {
    Padic::from_u64(p, x0, working_prec(problem))
}

fn working_prec(problem: &CubicProblem) -> usize {
    problem
        .a
        .prec()
        .unwrap_or(padic_core::DEFAULT_DIGITS)
        .min(problem.b.prec().unwrap_or(padic_core::DEFAULT_DIGITS))
}

fn unit_unit_case(
    problem: &CubicProblem,
    extract: bool,
    report: &mut ZpStarRootReport,
) -> Result<()> {
    let p = problem.prime();
    let pv = p.get();
    let d = problem.discriminant()?;
    report.d_norm = Some(d.norm());
    report.d_exact_zero = d.is_zero();
    report.d0 = d.leading_digit();

    if d.is_zero() {
        // (x - t)^2 (x + 2t) with t = 3b/2a; two distinct unit values,
        // three with multiplicity
        report.solvable = true;
        report.count = 2;
        report.table_count = 3;
        if extract {
            let prec = working_prec(problem);
            let three = Padic::from_u64(p, 3, prec);
            let two = Padic::from_u64(p, 2, prec);
            let t = three.mul(&problem.b)?.div(&two.mul(&problem.a)?)?;
            let s = t.mul(&two)?.neg();
            report.roots = vec![t, s];
        }
        return Ok(());
    }

    let d_ord = d.ord().expect("nonzero");
    if d_ord == 0 {
        // squarefree reduction: the residue count transfers verbatim
        let fp = crate::fp::count_roots_fp_cubic(problem)?;
        report.table_count = fp.count;
        report.count = fp.count;
        report.solvable = fp.count > 0;
        if extract {
            let f = problem.polynomial();
            for r in &fp.roots {
                report.roots.push(hensel_lift(&f, &seed(p, r.value, problem))?);
            }
        }
        return Ok(());
    }

    // 0 < |D| < 1: double root mod p at 3b/2a, simple residue root at
    // -3b/a lifts unconditionally
    let a0 = problem.a.leading_digit().expect("unit");
    let b0 = problem.b.leading_digit().expect("unit");
    let inv_a0 = pow_mod(a0, pv - 2, pv);
    let x_simple = (pv - padic_core::prime::mul_mod(3 % pv, padic_core::prime::mul_mod(b0, inv_a0, pv), pv)) % pv;
    let f = problem.polynomial();
    let x_tilde = hensel_lift(&f, &seed(p, x_simple, problem))?;

    // the remaining quadratic is (x + x_tilde/2)^2 = disc with
    // disc = -(3 (x_tilde/2)^2 + a); its norm equals |D|
    let prec = working_prec(problem);
    let two = Padic::from_u64(p, 2, prec);
    let three = Padic::from_u64(p, 3, prec);
    let half = x_tilde.div(&two)?;
    let disc = three.mul(&half.mul(&half)?)?.add(&problem.a)?.neg();
    match disc.ord() {
        Some(o) if o == d_ord => {}
        other => {
            return Err(PadicError::Invariant(format!(
                "branch discriminant valuation {:?} disagrees with ord(D) = {d_ord}",
                other
            )));
        }
    }
    let d0 = report.d0.expect("nonzero D");
    let d0_is_square = pow_mod(d0, (pv - 1) / 2, pv) == 1;
    let extra = if d_ord % 2 == 0 {
        let unit = disc.mul_pow_p(-d_ord);
        let sq = sqrt_unit(&unit)?;
        if sq.is_some() != d0_is_square {
            return Err(PadicError::Invariant(
                "quadratic-residue test on d0 disagrees with the lifted square root".into(),
            ));
        }
        sq.map(|(r, _)| r.mul_pow_p(d_ord / 2))
    } else {
        None
    };
    report.solvable = true;
    match extra {
        Some(s) => {
            report.count = 3;
            report.table_count = 3;
            if extract {
                let center = half.neg();
                report.roots = vec![x_tilde, center.add(&s)?, center.sub(&s)?];
            }
        }
        None => {
            report.count = 1;
            report.table_count = 1;
            if extract {
                report.roots = vec![x_tilde];
            }
        }
    }
    Ok(())
}

fn verify_roots(problem: &CubicProblem, report: &mut ZpStarRootReport) -> Result<()> {
    if report.roots.len() != report.count as usize {
        return Err(PadicError::Invariant(format!(
            "extracted {} roots but the case table promises {}",
            report.roots.len(),
            report.count
        )));
    }
    let f = problem.polynomial();
    for r in &report.roots {
        if r.ord() != Some(0) {
            return Err(PadicError::Invariant(format!(
                "extracted root {r} is not a unit"
            )));
        }
        // evaluate through the scaled polynomial when coefficients are
        // not integral, to stay inside the unit ball
        let value = if problem.a.ord().expect("nonzero") < 0 {
            let m = -problem.a.ord().expect("nonzero");
            let scaled = Cubic::new([
                problem.b.mul_pow_p(m).neg(),
                problem.a.mul_pow_p(m),
                Padic::zero(problem.prime()),
                Padic::one(problem.prime(), working_prec(problem)).mul_pow_p(m),
            ])?;
            scaled.eval(r)?
        } else {
            f.eval(r)?
        };
        if !value.is_zero() {
            return Err(PadicError::Invariant(format!(
                "root {r} fails substitution: f(root) = {value}"
            )));
        }
    }
    crate::oracle::sort_roots(&mut report.roots);
    Ok(())
}
