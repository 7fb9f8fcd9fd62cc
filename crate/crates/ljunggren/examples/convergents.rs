//! Periodic continued fractions of square roots and their convergents.
//!
//! ```bash
//! cargo run --example convergents
//! ```

use num_bigint::BigUint;

use ljunggren::cf::{cf_expand_sqrt, convergents};

fn main() {
    for d in [2u32, 3, 7, 13, 61] {
        let d = BigUint::from(d);
        let expansion = cf_expand_sqrt(&d).unwrap();
        println!(
            "sqrt({d}) = {expansion}   (period length {})",
            expansion.period_len()
        );
    }
    println!();

    let two = BigUint::from(2u32);
    let expansion = cf_expand_sqrt(&two).unwrap();
    println!("convergents of sqrt(2), with p^2 - 2q^2:");
    for conv in convergents(&expansion, 13) {
        println!(
            "  k = {:>2}   {:>16}   residual {:>2}",
            conv.k,
            conv.to_string(),
            conv.pell_residual(&two)
        );
    }
    println!();
    println!("the residual alternates sign; the -1 rows are the solutions of x^2 - 2y^2 = -1");
}
