use num_bigint::{BigInt, BigUint};
use padic_core::{
    exp_p, is_in_ep, log_p, parse_padic, sqrt_unit, Norm, Padic, PadicError, PrecisionContext,
    Prime,
};

fn p5() -> Prime {
    Prime::new(5).unwrap()
}

fn p7() -> Prime {
    Prime::new(7).unwrap()
}

#[test]
fn precision_context_floor() {
    assert!(PrecisionContext::new(7).is_err());
    assert_eq!(PrecisionContext::new(8).unwrap().digits(), 8);
    assert_eq!(PrecisionContext::default().digits(), 32);
}

#[test]
fn integer_valuations() {
    let x = Padic::from_u64(p5(), 50, 8);
    assert_eq!(x.ord(), Some(2));
    assert_eq!(x.norm(), Norm::power(-2));
    assert_eq!(x.leading_digit(), Some(2));

    let y = Padic::from_i64(p5(), -1, 4);
    assert_eq!(y.digits(), vec![4, 4, 4, 4]);

    assert!(Padic::from_u64(p5(), 0, 8).is_zero());
    assert_eq!(Padic::from_u64(p5(), 0, 8).norm(), Norm::zero());
}

#[test]
fn one_third_expansion() {
    let x = Padic::from_ratio(p5(), &BigInt::from(1), &BigInt::from(3), 6).unwrap();
    assert_eq!(x.ord(), Some(0));
    assert_eq!(x.digits(), vec![2, 3, 1, 3, 1, 3]);
    // and back: 3 * (1/3) agrees with 1
    let three = Padic::from_u64(p5(), 3, 6);
    assert!(x.mul(&three).unwrap().agrees_with(&Padic::one(p5(), 6)));
}

#[test]
fn exact_cancellation_gives_exact_zero() {
    let x = Padic::from_ratio(p5(), &BigInt::from(7), &BigInt::from(3), 8).unwrap();
    assert!(x.add(&x.neg()).unwrap().is_zero());
    assert!(x.sub(&x).unwrap().is_zero());
}

#[test]
fn mixed_valuation_addition() {
    // 1/5 + 5 = 26/5
    let a = Padic::from_ratio(p5(), &BigInt::from(1), &BigInt::from(5), 8).unwrap();
    let b = Padic::from_u64(p5(), 5, 8);
    let s = a.add(&b).unwrap();
    let expect = Padic::from_ratio(p5(), &BigInt::from(26), &BigInt::from(5), 8).unwrap();
    assert!(s.agrees_with(&expect));
    assert_eq!(s.ord(), Some(-1));
}

#[test]
fn carrying_addition_strips_powers() {
    // 2 + 3 = 5 in Z_5
    let s = Padic::from_u64(p5(), 2, 8)
        .add(&Padic::from_u64(p5(), 3, 8))
        .unwrap();
    assert_eq!(s.ord(), Some(1));
    assert_eq!(s.leading_digit(), Some(1));
    // precision is conservative: one digit was spent on the carry
    assert_eq!(s.abs_prec(), Some(8));
}

#[test]
fn division_and_pow() {
    let x = Padic::from_u64(p7(), 10, 8);
    let y = Padic::from_u64(p7(), 49 * 3, 8);
    let q = x.div(&y).unwrap();
    assert_eq!(q.ord(), Some(-2));
    let expect = Padic::from_ratio(p7(), &BigInt::from(10), &BigInt::from(147), 8).unwrap();
    assert!(q.agrees_with(&expect));

    let c = Padic::from_u64(p7(), 2, 8);
    assert_eq!(
        c.pow(10).unwrap().residue_mod_pk(8).unwrap(),
        BigUint::from(1024u32)
    );
    let inv = c.pow(-1).unwrap();
    assert!(c.mul(&inv).unwrap().agrees_with(&Padic::one(p7(), 8)));

    match Padic::zero(p7()).pow(-2) {
        Err(PadicError::Domain(_)) => {}
        other => panic!("expected domain error, got {other:?}"),
    }
}

#[test]
fn division_by_zero_is_singular() {
    let x = Padic::from_u64(p5(), 2, 8);
    match x.div(&Padic::zero(p5())) {
        Err(PadicError::Singular(_)) => {}
        other => panic!("expected singular, got {other:?}"),
    }
}

#[test]
fn residue_precision_guard() {
    let x = Padic::from_u64(p5(), 7, 4);
    assert_eq!(x.residue_mod_pk(4).unwrap(), BigUint::from(7u32));
    match x.residue_mod_pk(5) {
        Err(PadicError::Precision(_)) => {}
        other => panic!("expected precision error, got {other:?}"),
    }
}

#[test]
fn exp_frozen_values() {
    let x = Padic::from_u64(p5(), 5, 10);
    let e = exp_p(&x).unwrap();
    assert_eq!(e.residue_mod_pk(8).unwrap(), BigUint::from(349_831u32));

    let e25 = exp_p(&Padic::from_u64(p5(), 25, 10)).unwrap();
    assert_eq!(e25.residue_mod_pk(8).unwrap(), BigUint::from(133_151u32));

    let e125 = exp_p(&Padic::from_u64(p5(), 125, 10)).unwrap();
    assert_eq!(
        e125.residue_mod_pk(10).unwrap(),
        BigUint::from(6_843_876u32)
    );
}

#[test]
fn log_frozen_values() {
    let l6 = log_p(&Padic::from_u64(p5(), 6, 8)).unwrap();
    assert_eq!(l6.residue_mod_pk(8).unwrap(), BigUint::from(329_930u32));

    let l26 = log_p(&Padic::from_u64(p5(), 26, 8)).unwrap();
    assert_eq!(l26.residue_mod_pk(8).unwrap(), BigUint::from(70_025u32));
    assert_eq!(l26.ord(), Some(2));
}

#[test]
fn exp_log_round_trip_small() {
    let x = Padic::from_u64(p5(), 5, 10);
    assert!(log_p(&exp_p(&x).unwrap()).unwrap().agrees_with(&x));
    let u = Padic::from_u64(p5(), 6, 10);
    assert!(exp_p(&log_p(&u).unwrap()).unwrap().agrees_with(&u));
}

#[test]
fn exp_outside_disc_rejected() {
    match exp_p(&Padic::from_u64(p5(), 2, 8)) {
        Err(PadicError::Convergence(_)) => {}
        other => panic!("expected convergence error, got {other:?}"),
    }
    match log_p(&Padic::from_u64(p5(), 3, 8)) {
        Err(PadicError::Convergence(_)) => {}
        other => panic!("expected convergence error, got {other:?}"),
    }
}

#[test]
fn log_of_one_is_exact_zero() {
    assert!(log_p(&Padic::one(p5(), 8)).unwrap().is_zero());
}

#[test]
fn sqrt_of_minus_three_mod_seven() {
    let a = Padic::from_i64(p7(), -3, 8);
    let (r1, r2) = sqrt_unit(&a).unwrap().expect("-3 is a square in Q_7");
    assert_eq!(r1.residue_mod_pk(8).unwrap(), BigUint::from(988_906u32));
    assert_eq!(r2.residue_mod_pk(8).unwrap(), BigUint::from(4_775_895u32));
    assert!(r1.mul(&r1).unwrap().agrees_with(&a));
    assert!(r1.add(&r2).unwrap().is_zero());
}

#[test]
fn sqrt_nonresidue_is_none() {
    // 2 is not a square mod 5
    assert!(sqrt_unit(&Padic::from_u64(p5(), 2, 8)).unwrap().is_none());
    // and sqrt of a non-unit is a domain error
    assert!(sqrt_unit(&Padic::from_u64(p5(), 10, 8)).is_err());
}

#[test]
fn ep_membership() {
    assert!(is_in_ep(&Padic::from_u64(p5(), 6, 8)).unwrap());
    assert!(is_in_ep(&Padic::one(p5(), 8)).unwrap());
    assert!(is_in_ep(&exp_p(&Padic::from_u64(p5(), 125, 8)).unwrap()).unwrap());
    assert!(!is_in_ep(&Padic::from_u64(p5(), 2, 8)).unwrap());
    assert!(!is_in_ep(&Padic::from_u64(p5(), 5, 8)).unwrap());
    assert!(!is_in_ep(&Padic::zero(p5())).unwrap());
}

#[test]
fn literal_round_trips() {
    let cases = [
        "42",
        "-7",
        "3/25",
        "-1/3",
        "5^-2 * (3 + 1*5 + 4*5^3)",
        "5^0 * (2 + 3*5 + 1*5^2)",
        "5^3 * (4)",
    ];
    for s in cases {
        let x = parse_padic(s, p5(), 8).unwrap();
        let printed = padic_core::format_padic(&x);
        let back = parse_padic(&printed, p5(), 8).unwrap();
        assert_eq!(x, back, "round trip failed for {s} -> {printed}");
    }
}

#[test]
fn literal_sparse_and_zero() {
    let x = parse_padic("5^-2*(3+4*5^3)", p5(), 8).unwrap();
    assert_eq!(x.ord(), Some(-2));
    assert_eq!(x.digits()[0..4], [3, 0, 0, 4]);

    assert!(parse_padic("0", p5(), 8).unwrap().is_zero());
    assert!(parse_padic("5^4 * (0)", p5(), 8).unwrap().is_zero());

    // literal digits that are multiples of p get normalized
    let y = parse_padic("5^1 * (0 + 2*5)", p5(), 8).unwrap();
    assert_eq!(y.ord(), Some(2));
    assert_eq!(y.leading_digit(), Some(2));
}

#[test]
fn literal_rejects_garbage() {
    for s in [
        "",
        "5^",
        "7^0 * (1)",
        "5^0 * (7)",
        "5^0 * (1 + 2*7)",
        "5^0 * (1))",
        "1/0",
        "abc",
        "5^0 * (1 + )",
    ] {
        match parse_padic(s, p5(), 8) {
            Err(PadicError::Parse(_)) => {}
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        }
    }
}

#[test]
fn mixed_primes_rejected() {
    let x = Padic::from_u64(p5(), 2, 8);
    let y = Padic::from_u64(p7(), 2, 8);
    assert!(x.add(&y).is_err());
}

#[test]
fn norm_comparisons() {
    let x = Padic::from_u64(p5(), 25, 8);
    let y = Padic::from_u64(p5(), 5, 8);
    assert!(x.norm() < y.norm());
    assert!(Padic::zero(p5()).norm() < x.norm());
    assert_eq!(x.norm().mul(&y.norm()), Norm::power(-3));
}
