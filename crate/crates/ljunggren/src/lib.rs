//! Exact-arithmetic number theory around the quartic `1 + x^2 = 2y^4`, whose
//! only positive solutions are `(1, 1)` and `(239, 13)` (Ljunggren, 1942).
//!
//! Everything is computed over unbounded integers — no floating point, no
//! tolerances. The pieces fit together like this:
//!
//! * [`pell`] — the Pell numbers `0, 1, 2, 5, 12, 29, ...`, their adjacent
//!   pairs, and the identity `a_n^2 + a_{n+1}^2 = a_{2n+1}`;
//! * [`cf`] — periodic continued fractions of `sqrt(d)`, convergents, the
//!   exact approximation gate for `sqrt(2)`, and solutions of
//!   `x^2 - d*y^2 = ±1` by fundamental-solution composition;
//! * [`quartic`] — the reduction of `1 + x^2 = 2y^4` to a square hunt among
//!   negative-Pell y-values, producing a serializable certificate;
//! * [`quadform`] — the quadratic form `169d^2 + 140cd + 29c^2` behind
//!   adjacent square sums, Pythagorean-triple reduction, and the brute-force
//!   audits;
//! * [`isqrt`] — the integer square root every squareness test goes through;
//! * [`cli`] — the command-line surface (`seq`, `cf`, `pell`, `ljunggren`,
//!   `audit`).
//!
//! ```
//! use ljunggren::quartic::solve_ljunggren;
//!
//! let cert = solve_ljunggren(50);
//! let found: Vec<(String, String)> = cert
//!     .solutions
//!     .iter()
//!     .map(|s| (s.x.to_string(), s.y.to_string()))
//!     .collect();
//! assert_eq!(found, [("1".into(), "1".into()), ("239".into(), "13".into())]);
//! ```
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `cargo run --example sequences`.

pub mod cf;
pub mod cli;
mod error;
pub mod isqrt;
pub mod pell;
pub mod quadform;
pub mod quartic;

pub use error::Error;
pub use isqrt::integer_sqrt;
pub use quartic::{solve_ljunggren, verify_solution, LjunggrenCertificate};
