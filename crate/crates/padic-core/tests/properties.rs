//! Property suite. The four arithmetic laws run 10_000 seeded cases per
//! prime through the invariants module; parser round-trips are fuzzed
//! with proptest on top.

use proptest::prelude::*;

use padic_core::{invariants, parse_padic, Padic, Prime};

const CASES: u32 = 10_000;
const SEED: u64 = 0x9d2c_5680;

#[test]
fn ultrametric_10k_cases_per_prime() {
    for pv in [5u64, 7, 11, 13] {
        invariants::check_ultrametric(Prime::new(pv).unwrap(), CASES, SEED).unwrap();
    }
}

#[test]
fn multiplicativity_10k_cases_per_prime() {
    for pv in [5u64, 7, 11, 13] {
        invariants::check_multiplicativity(Prime::new(pv).unwrap(), CASES, SEED).unwrap();
    }
}

#[test]
fn product_bound_10k_cases_per_prime() {
    for pv in [5u64, 7, 11, 13] {
        invariants::check_product_bound(Prime::new(pv).unwrap(), CASES, SEED).unwrap();
    }
}

#[test]
fn exp_log_round_trip_10k_cases_per_prime() {
    for pv in [5u64, 7, 11, 13] {
        invariants::check_exp_log_round_trip(Prime::new(pv).unwrap(), CASES, SEED).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn format_parse_round_trip(pv in prop_oneof![Just(5u64), Just(7), Just(11), Just(13)],
                               ord in -9i64..9,
                               d0 in 1u64..5,
                               rest in proptest::collection::vec(0u64..5, 0..7)) {
        // digits below 5 are valid for every working prime
        let p = Prime::new(pv).unwrap();
        let mut digits = vec![d0];
        digits.extend(rest);
        let x = Padic::from_unit_digits(p, ord, &digits).unwrap();
        let s = padic_core::format_padic(&x);
        let back = parse_padic(&s, p, digits.len()).unwrap();
        prop_assert_eq!(x, back);
    }

    #[test]
    fn rational_parse_is_exact(pv in prop_oneof![Just(5u64), Just(7), Just(11), Just(13)],
                               num in -1000i64..1000,
                               den in 1i64..1000) {
        let p = Prime::new(pv).unwrap();
        let s = format!("{num}/{den}");
        let x = parse_padic(&s, p, 12).unwrap();
        // multiplying back by den recovers num at tracked precision
        let d = Padic::from_i64(p, den, 12);
        let n = Padic::from_i64(p, num, 12);
        prop_assert!(x.mul(&d).unwrap().agrees_with(&n));
    }
}
