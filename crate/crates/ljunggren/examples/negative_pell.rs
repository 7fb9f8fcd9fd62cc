//! Solving x^2 - d*y^2 = ±1 by composing the fundamental solution, and the
//! period-parity criterion that decides whether the -1 equation is solvable.
//!
//! ```bash
//! cargo run --example negative_pell
//! ```

use num_bigint::BigUint;

use ljunggren::cf::{cf_expand_sqrt, pell_solutions, solve_negative_pell, PellSign};
use ljunggren::Error;

fn main() {
    println!("x^2 - d*y^2 = -1, first solutions:");
    for d in [2u32, 5, 10, 13] {
        let d = BigUint::from(d);
        let sols = pell_solutions(&d, PellSign::Minus, 5).unwrap();
        let line: Vec<String> = sols.iter().map(|s| s.to_string()).collect();
        println!("  d = {d:>2}: {}", line.join(", "));
    }
    println!();

    // solvability is read off the continued fraction: odd period length only
    println!("period parity decides solvability:");
    for d in [2u32, 3, 5, 7, 10, 13] {
        let d = BigUint::from(d);
        let expansion = cf_expand_sqrt(&d).unwrap();
        match solve_negative_pell(&d) {
            Ok(sol) => println!(
                "  d = {d:>2}: period length {} (odd)  -> fundamental {}",
                expansion.period_len(),
                sol
            ),
            Err(Error::NoNegativePellSolution(_)) => println!(
                "  d = {d:>2}: period length {} (even) -> unsolvable",
                expansion.period_len()
            ),
            Err(e) => println!("  d = {d:>2}: {e}"),
        }
    }
    println!();

    let two = BigUint::from(2u32);
    let plus: Vec<String> = pell_solutions(&two, PellSign::Plus, 5)
        .unwrap()
        .iter()
        .map(|s| s.to_string())
        .collect();
    println!("for comparison, x^2 - 2y^2 = +1: {}", plus.join(", "));
}
