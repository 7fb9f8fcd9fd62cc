//! The full pipeline for 1 + x^2 = 2y^4: generate negative-Pell solutions,
//! keep the ones whose y-value is a perfect square, and emit a certificate.
//!
//! ```bash
//! cargo run --example solve_quartic
//! ```

use ljunggren::quadform::audit_square_sums;
use ljunggren::quartic::solve_ljunggren;
use ljunggren::verify_solution;

fn main() {
    let mut cert = solve_ljunggren(50);
    cert.audits
        .insert("square_sums".into(), audit_square_sums(200).unwrap());

    println!(
        "searched the first {} solutions of x^2 - 2Y^2 = -1 (Y-values grow past 10^38)",
        cert.solution_bound
    );
    println!("solutions of 1 + x^2 = 2y^4:");
    for sol in &cert.solutions {
        assert!(verify_solution(&sol.x, &sol.y));
        println!("  x = {}, y = {}", sol.x, sol.y);
    }
    println!("squares among the examined Y-values:");
    for sq in &cert.squares_in_seq2 {
        println!("  position {}: {} = {}^2", sq.index, sq.value, sq.root);
    }
    println!();

    println!("certificate as JSON:");
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
}
