//! The quadratic form behind adjacent square sums, its Pythagorean-triple
//! reduction, and the brute-force audits built on both.
//!
//! Squaring the last two entries of a 5-term segment seeded by `(c, d)` gives
//! `(2c+5d)^2 + (5c+12d)^2 = 169d^2 + 140cd + 29c^2`. Whether that value can
//! be a perfect square `k^2` hinges on whether `169k^2 - c^2` is itself a
//! square `beta^2` — that is, on the triple `(c, beta, 13k)` — and on the
//! sign of the seed ratio `d/c` this forces. The audits here grind through
//! those conditions numerically instead of taking them on faith.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::isqrt::{exact_sqrt, integer_sqrt};
use crate::pell;

/// The form `169d^2 + 140cd + 29c^2` evaluated at seeds `(c, d)`, with its
/// square data when present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentForm {
    pub c: BigUint,
    pub d: BigUint,
    /// `169d^2 + 140cd + 29c^2 = (2c+5d)^2 + (5c+12d)^2`.
    pub value: BigUint,
    /// `sqrt(value)` when the value is a perfect square.
    pub k: Option<BigUint>,
    /// `sqrt(169k^2 - c^2)` when `k` is present and that number is a square.
    pub beta: Option<BigUint>,
}

impl SegmentForm {
    /// The excluded seed `c = 0`, for which the value `169d^2` genuinely is a
    /// square. Audits skip it; it is representable so the exclusion can be
    /// demonstrated.
    pub fn zero_seed(&self) -> bool {
        self.c == BigUint::ZERO
    }
}

/// Evaluate the segment form at `(c, d)`.
pub fn segment_form(c: &BigUint, d: &BigUint) -> SegmentForm {
    let value = BigUint::from(169u32) * d * d
        + BigUint::from(140u32) * c * d
        + BigUint::from(29u32) * c * c;
    let tail3 = (c << 1) + BigUint::from(5u32) * d;
    let tail4 = BigUint::from(5u32) * c + BigUint::from(12u32) * d;
    assert_eq!(value, &tail3 * &tail3 + &tail4 * &tail4);
    let k = exact_sqrt(&value);
    let beta = k
        .as_ref()
        .and_then(|k| exact_sqrt(&(BigUint::from(169u32) * k * k - c * c)));
    SegmentForm {
        c: c.clone(),
        d: d.clone(),
        value,
        k,
        beta,
    }
}

/// The larger root `(-140c + 2*beta) / (338c)` of the quadratic the form
/// imposes on the seed ratio `d/c`, as an exact rational in lowest terms.
///
/// For every admissible `(c, beta)` with `beta < 70c` this is negative, which
/// is incompatible with positive seeds; `beta = 70c` sits exactly on the
/// boundary and yields zero.
pub fn seed_ratio_root(c: &BigUint, beta: &BigUint) -> Result<BigRational, Error> {
    if c == &BigUint::ZERO {
        return Err(Error::ZeroDenominator);
    }
    let numer = BigInt::from(beta << 1) - BigInt::from(140u32) * BigInt::from(c.clone());
    let denom = BigInt::from(338u32) * BigInt::from(c.clone());
    Ok(BigRational::new(numer, denom))
}

/// A right triangle's sides. `primitive` records whether the legs are
/// coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PythagoreanTriple {
    pub leg1: BigUint,
    pub leg2: BigUint,
    pub hyp: BigUint,
    pub primitive: bool,
}

impl PythagoreanTriple {
    /// Validate `leg1^2 + leg2^2 = hyp^2` and record primitivity.
    pub fn new(leg1: BigUint, leg2: BigUint, hyp: BigUint) -> Result<Self, Error> {
        if &leg1 * &leg1 + &leg2 * &leg2 != &hyp * &hyp {
            return Err(Error::NotPythagorean { leg1, leg2, hyp });
        }
        let primitive = leg1.gcd(&leg2).is_one();
        Ok(PythagoreanTriple {
            leg1,
            leg2,
            hyp,
            primitive,
        })
    }
}

/// Reduce a `(c, beta, 13k)`-style triple to its primitive core.
///
/// While 13 divides all of the induced `(k, c, beta) = (hyp/13, leg1, leg2)`,
/// the whole triple is divided by 13; the remaining common factor of the legs
/// is then divided out. Requires `13 | hyp`.
pub fn reduce_triple(t: &PythagoreanTriple) -> Result<PythagoreanTriple, Error> {
    let thirteen = BigUint::from(13u32);
    if !(&t.hyp % &thirteen).is_zero() {
        return Err(Error::NotMultipleOf13(t.hyp.clone()));
    }
    let mut c = t.leg1.clone();
    let mut beta = t.leg2.clone();
    let mut hyp = t.hyp.clone();
    loop {
        let k = &hyp / &thirteen;
        let all_divisible = (&c % &thirteen).is_zero()
            && (&beta % &thirteen).is_zero()
            && (&k % &thirteen).is_zero();
        if !all_divisible {
            break;
        }
        c /= &thirteen;
        beta /= &thirteen;
        hyp /= &thirteen;
    }
    let g = c.gcd(&beta);
    if !g.is_one() {
        c /= &g;
        beta /= &g;
        hyp /= &g;
    }
    PythagoreanTriple::new(c, beta, hyp)
}

/// Outcome of one brute-force audit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    /// Human-readable description of the range swept.
    pub range: String,
    pub pass: bool,
    pub counterexamples: Vec<String>,
}

/// Brute-force check that `a_n^2 + a_{n+1}^2` is never a perfect square,
/// except at the known values `a_{n+1} = 1` and `a_{n+1} = 12`.
///
/// Sweeps every adjacent pair with `n + 1 <= max_n`; needs `max_n >= 5` to
/// get past the excluded cases.
pub fn audit_square_sums(max_n: u64) -> Result<AuditRecord, Error> {
    if max_n < 5 {
        return Err(Error::RangeTooSmall {
            what: "max_n",
            min: 5,
            got: max_n,
        });
    }
    let one = BigUint::one();
    let twelve = BigUint::from(12u32);
    let mut counterexamples = Vec::new();
    for pair in pell::pell_pairs(max_n)? {
        if pair.b == one || pair.b == twelve {
            continue;
        }
        let (sum, _) = pell::adjacent_square_sum(&pair);
        let (root, exact) = integer_sqrt(&sum);
        if exact {
            counterexamples.push(format!(
                "n={}: {}^2 + {}^2 = {}^2",
                pair.n, pair.a, pair.b, root
            ));
        }
    }
    Ok(AuditRecord {
        range: format!("adjacent pairs (a_n, a_n+1) for n = 0..={}", max_n - 1),
        pass: counterexamples.is_empty(),
        counterexamples,
    })
}

/// One enumerated triple `(c, beta, 13k)` with `169k^2 - c^2 = beta^2`, and
/// whether `beta/c` reduces to `5/12` or `12/5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioPair {
    pub k: u64,
    pub c: u64,
    pub beta: u64,
    pub conforms: bool,
}

/// Full enumeration report from [`audit_ratio_claim`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioClaimReport {
    pub max_k: u64,
    /// Every admissible pair, in `(k, c)` order.
    pub pairs: Vec<RatioPair>,
    pub record: AuditRecord,
}

/// Test, rather than assume, the claim that `13 ∤ c` forces
/// `beta/c ∈ {5/12, 12/5}`.
///
/// Enumerates all `(k, c)` with `1 <= k <= max_k`, `1 <= c < 13k`, `13 ∤ c`
/// such that `169k^2 - c^2` is a perfect square, and records conformity per
/// pair. The verdict is reported as data; nothing here asserts the claim.
pub fn audit_ratio_claim(max_k: u64) -> Result<RatioClaimReport, Error> {
    if max_k < 1 {
        return Err(Error::RangeTooSmall {
            what: "max_k",
            min: 1,
            got: max_k,
        });
    }
    let mut pairs = Vec::new();
    let mut counterexamples = Vec::new();
    for k in 1..=max_k {
        let hyp_sq = 169u128 * k as u128 * k as u128;
        for c in 1..13 * k {
            if c % 13 == 0 {
                continue;
            }
            let rest = hyp_sq - c as u128 * c as u128;
            let Some(root) = exact_sqrt(&BigUint::from(rest)) else {
                continue;
            };
            let beta: u64 = root.try_into().expect("beta < 13k fits in u64");
            // beta/c = 5/12 or 12/5, compared by cross-multiplication
            let conforms =
                12u128 * beta as u128 == 5u128 * c as u128 || 5u128 * beta as u128 == 12u128 * c as u128;
            pairs.push(RatioPair { k, c, beta, conforms });
            if !conforms {
                let g = beta.gcd(&c);
                counterexamples.push(format!(
                    "k={k}: (c, beta, 13k) = ({c}, {beta}, {}), beta/c = {}/{}",
                    13 * k,
                    beta / g,
                    c / g
                ));
            }
        }
    }
    let record = AuditRecord {
        range: format!("k = 1..={max_k}, 1 <= c < 13k, 13 does not divide c"),
        pass: counterexamples.is_empty(),
        counterexamples,
    };
    Ok(RatioClaimReport { max_k, pairs, record })
}
