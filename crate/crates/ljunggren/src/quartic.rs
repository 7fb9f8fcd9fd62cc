//! The quartic `1 + x^2 = 2y^4`, solved by reduction to `x^2 - 2*(y^2)^2 = -1`.
//!
//! Any positive solution makes `x/y^2` such a sharp approximation of
//! `sqrt(2)` that it must be a convergent, so `(x, y^2)` is a solution of
//! `x^2 - 2*Y^2 = -1` and the hunt collapses to finding perfect squares among
//! those solutions' Y-values — the odd-indexed Pell numbers. The pipeline
//! here performs that search to an explicit bound and packages the outcome,
//! together with any requested audits, into a serializable certificate.
//!
//! Certificate JSON shape (all big integers are decimal strings):
//!
//! ```text
//! {
//!   "solution_bound": 7,
//!   "solutions":      [{"x": "1", "y": "1"}, {"x": "239", "y": "13"}],
//!   "squares_in_seq2": [{"index": 0, "value": "1", "root": "1"},
//!                       {"index": 3, "value": "169", "root": "13"}],
//!   "audits": {"square_sums": {"range": "...", "pass": true, "counterexamples": []}}
//! }
//! ```

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::cf::{self, PellSign};
use crate::isqrt::integer_sqrt;
use crate::pell;
use crate::quadform::AuditRecord;

mod decimal {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// A positive solution of `1 + x^2 = 2y^4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticSolution {
    #[serde(with = "decimal")]
    pub x: BigUint,
    #[serde(with = "decimal")]
    pub y: BigUint,
}

/// A perfect square found in the odd-indexed Pell subsequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seq2Square {
    pub index: u64,
    #[serde(with = "decimal")]
    pub value: BigUint,
    #[serde(with = "decimal")]
    pub root: BigUint,
}

/// Machine-checkable record of a bounded search: how far it went, what it
/// found, and how the audits came out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LjunggrenCertificate {
    /// Number of negative-Pell solutions examined.
    pub solution_bound: u64,
    pub solutions: Vec<QuarticSolution>,
    pub squares_in_seq2: Vec<Seq2Square>,
    pub audits: BTreeMap<String, AuditRecord>,
}

/// `true` iff `1 + x^2 = 2y^4` exactly.
pub fn verify_solution(x: &BigUint, y: &BigUint) -> bool {
    let y_sq = y * y;
    BigUint::one() + x * x == (&y_sq * &y_sq) << 1
}

/// Scan the odd-indexed Pell numbers `seq2(0) .. seq2(max_index - 1)` and
/// return every perfect square with its index and root.
pub fn search_squares_in_seq2(max_index: u64) -> Vec<Seq2Square> {
    let mut out = Vec::new();
    for (m, value) in pell::seq2_numbers(max_index).into_iter().enumerate() {
        let (root, exact) = integer_sqrt(&value);
        if exact {
            out.push(Seq2Square {
                index: m as u64,
                value,
                root,
            });
        }
    }
    out
}

/// Run the pipeline: generate the first `solution_bound` solutions of
/// `x^2 - 2*Y^2 = -1`, keep those whose Y is a perfect square `y^2`, and
/// record the parallel square scan of the odd-indexed subsequence.
///
/// Every emitted pair is re-verified against the quartic before it enters
/// the certificate. The audits map starts empty; callers attach audit
/// records they ran.
pub fn solve_ljunggren(solution_bound: u64) -> LjunggrenCertificate {
    let two = BigUint::from(2u32);
    let mut solutions = Vec::new();
    if solution_bound > 0 {
        let pell_solutions = cf::pell_solutions(&two, PellSign::Minus, solution_bound)
            .expect("x^2 - 2y^2 = -1 is solvable");
        for sol in pell_solutions {
            let (root, exact) = integer_sqrt(&sol.y);
            if exact {
                assert!(verify_solution(&sol.x, &root));
                solutions.push(QuarticSolution { x: sol.x, y: root });
            }
        }
    }
    LjunggrenCertificate {
        solution_bound,
        solutions,
        squares_in_seq2: search_squares_in_seq2(solution_bound),
        audits: BTreeMap::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn verify_solution_examples() {
        assert!(verify_solution(&n(1), &n(1)));
        // 1 + 239^2 = 57122 = 2 * 13^4
        assert!(verify_solution(&n(239), &n(13)));
        assert_eq!(n(1) + n(239) * n(239), n(57122));
        assert_eq!(n(2) * n(13) * n(13) * n(13) * n(13), n(57122));
        // 1 + 3^2 = 10, 2 * 2^4 = 32
        assert!(!verify_solution(&n(3), &n(2)));
    }

    #[test]
    fn square_scan_examples() {
        let squares = search_squares_in_seq2(7);
        assert_eq!(squares.len(), 2);
        assert_eq!((squares[0].index, &squares[0].value, &squares[0].root), (0, &n(1), &n(1)));
        assert_eq!((squares[1].index, &squares[1].value, &squares[1].root), (3, &n(169), &n(13)));

        let squares = search_squares_in_seq2(1);
        assert_eq!(squares.len(), 1);
        assert_eq!(squares[0].index, 0);

        // no further squares appear in the first 100 terms
        let squares = search_squares_in_seq2(100);
        assert_eq!(squares.len(), 2);
        assert_eq!(squares[1].index, 3);

        assert!(search_squares_in_seq2(0).is_empty());
    }

    #[test]
    fn pipeline_examples() {
        let cert = solve_ljunggren(7);
        assert_eq!(cert.solution_bound, 7);
        assert_eq!(
            cert.solutions,
            vec![
                QuarticSolution { x: n(1), y: n(1) },
                QuarticSolution { x: n(239), y: n(13) },
            ]
        );
        assert_eq!(cert.squares_in_seq2.len(), 2);
        assert!(cert.audits.is_empty());

        let cert = solve_ljunggren(1);
        assert_eq!(cert.solutions, vec![QuarticSolution { x: n(1), y: n(1) }]);

        // running further finds nothing new
        let cert = solve_ljunggren(50);
        assert_eq!(cert.solutions.len(), 2);
    }

    #[test]
    fn pipeline_solutions_all_verify() {
        let cert = solve_ljunggren(40);
        for sol in &cert.solutions {
            assert!(verify_solution(&sol.x, &sol.y));
        }
    }

    #[test]
    fn seq2_values_are_negative_pell_y_values() {
        // links the two routes: the y-value of the (m+1)-th solution of
        // x^2 - 2y^2 = -1 is seq2(m)
        let sols = cf::pell_solutions(&n(2), PellSign::Minus, 31).unwrap();
        for (m, sol) in sols.iter().enumerate() {
            assert_eq!(sol.y, pell::seq2_number(m as u64), "m = {m}");
        }
    }
}
