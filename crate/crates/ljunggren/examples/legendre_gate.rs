//! The exact approximation gate: |x/q - sqrt(2)| < 1/(2q^2), decided purely
//! in integers. A fraction this close to sqrt(2) has no choice but to be a
//! convergent, which is what lets a quartic equation collapse into a Pell
//! equation.
//!
//! ```bash
//! cargo run --example legendre_gate
//! ```

use num_bigint::BigUint;

use ljunggren::cf::{cf_expand_sqrt, convergents, legendre_gate};

fn main() {
    let two = BigUint::from(2u32);
    let expansion = cf_expand_sqrt(&two).unwrap();

    println!("convergents of sqrt(2) pass the gate:");
    for conv in convergents(&expansion, 8) {
        let pass = legendre_gate(&conv.p, &conv.q).unwrap();
        println!("  {:>9}  ->  {}", conv.to_string(), pass);
    }
    println!();

    println!("nearby non-convergents fail it:");
    for (x, q) in [(2u32, 1u32), (10, 7), (24, 17), (140, 99), (239, 170)] {
        let pass = legendre_gate(&BigUint::from(x), &BigUint::from(q)).unwrap();
        println!("  {x:>9}/{q:<5}->  {pass}");
    }
    println!();
    println!("the test is (A-q)^2 < 8q^6 < (A+q)^2 with A = 2q^2 x — no rounding anywhere");
}
