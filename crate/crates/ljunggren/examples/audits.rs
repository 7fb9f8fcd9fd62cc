//! The two brute-force audits.
//!
//! The first one grinds through adjacent Pell pairs and confirms that their
//! square sums are never perfect squares beyond the two known small cases.
//! The second one enumerates triples (c, beta, 13k) with 169k^2 - c^2 = beta^2
//! and 13 ∤ c, and checks the tempting shortcut "beta/c is always 5/12 or
//! 12/5" — which turns out to be false once the hypotenuse is composite, so
//! its verdict is reported as data rather than asserted.
//!
//! ```bash
//! cargo run --example audits
//! ```

use ljunggren::quadform::{audit_ratio_claim, audit_square_sums};

fn main() {
    let record = audit_square_sums(500).unwrap();
    println!(
        "square-sum audit over {}: {}",
        record.range,
        if record.pass { "pass" } else { "FAIL" }
    );
    println!("  counterexamples: {}", record.counterexamples.len());
    println!();

    let report = audit_ratio_claim(50).unwrap();
    let conforming = report.pairs.iter().filter(|p| p.conforms).count();
    println!("leg-ratio audit over {}:", report.record.range);
    println!(
        "  {} admissible triples, {} conforming, {} violations",
        report.pairs.len(),
        conforming,
        report.pairs.len() - conforming
    );
    println!("  first few violations:");
    for line in report.record.counterexamples.iter().take(5) {
        println!("    {line}");
    }
    println!();
    println!("  the smallest violations sit at hypotenuse 65 = 13 * 5, whose");
    println!("  extra sum-of-two-squares representations break the claimed ratio");
}
