//! A short tour of the arithmetic core: literals, norms, exp/log,
//! square roots, and the unit ball around 1.
//!
//! Run with: cargo run -p padic-core --example padic_tour

use num_bigint::BigInt;
use padic_core::{exp_p, is_in_ep, log_p, parse_padic, sqrt_unit, Padic, Prime};

fn main() -> Result<(), padic_core::PadicError> {
    let p = Prime::new(5)?;
    let prec = 12;

    println!("== literals ==");
    for s in ["75", "-1/3", "5^-2 * (3 + 1*5 + 4*5^3)"] {
        let x = parse_padic(s, p, prec)?;
        println!("{s:28} -> {x}   norm {}", x.norm());
    }

    println!("\n== arithmetic ==");
    let a = parse_padic("1/3", p, prec)?;
    let b = parse_padic("7", p, prec)?;
    println!("1/3 + 7   = {}", a.add(&b)?);
    println!("1/3 * 7   = {}", a.mul(&b)?);
    println!("1/3 - 1/3 = {} (exact zero)", a.sub(&a)?);

    println!("\n== exp and log ==");
    let x = Padic::from_u64(p, 125, prec);
    let rho = exp_p(&x)?;
    println!("exp(125)      = {rho}");
    println!("log(exp(125)) = {}", log_p(&rho)?);
    println!("in E_5: {}", is_in_ep(&rho)?);

    println!("\n== square roots ==");
    let p7 = Prime::new(7)?;
    let m3 = Padic::from_bigint(p7, &BigInt::from(-3), 8);
    match sqrt_unit(&m3)? {
        Some((r, s)) => {
            println!("sqrt(-3) in Q_7: {r}");
            println!("          other: {s}");
            println!("check r*r = {}", r.mul(&r)?);
        }
        None => println!("-3 has no square root in Q_7"),
    }
    let two = Padic::from_u64(p, 2, 8);
    println!("sqrt(2) in Q_5 exists: {}", sqrt_unit(&two)?.is_some());

    Ok(())
}
