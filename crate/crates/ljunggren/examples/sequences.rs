//! The Pell numbers, their adjacent pairs, and the sum-of-squares identity
//! that sends every pair back into the sequence.
//!
//! ```bash
//! cargo run --example sequences
//! ```

use num_bigint::BigUint;

use ljunggren::pell::{adjacent_square_sum, pell_pairs, segment5, seq2_numbers};

fn main() {
    let terms: Vec<String> = pell_pairs(14)
        .unwrap()
        .map(|p| p.a.to_string())
        .collect();
    println!("Pell numbers:   {}", terms.join(", "));

    let seq2: Vec<String> = seq2_numbers(7).iter().map(|t| t.to_string()).collect();
    println!("odd-indexed:    {}", seq2.join(", "));
    println!();

    // a_n^2 + a_{n+1}^2 always lands back in the sequence, at index 2n+1
    println!("adjacent square sums:");
    for pair in pell_pairs(7).unwrap() {
        let (value, index) = adjacent_square_sum(&pair);
        println!(
            "  {}^2 + {}^2 = {:>6}   (sequence index {})",
            pair.a, pair.b, value, index
        );
    }
    println!();

    // any 5-term window of the recurrence, written in terms of its seeds
    let seg = segment5(&BigUint::from(2u32), &BigUint::from(5u32));
    let window: Vec<String> = seg.terms.iter().map(|t| t.to_string()).collect();
    println!(
        "segment seeded by (c, d) = ({}, {}): {}",
        seg.c,
        seg.d,
        window.join(", ")
    );
    println!("  (c, d, c+2d, 2c+5d, 5c+12d — a run of the sequence when the seeds are adjacent)");
}
