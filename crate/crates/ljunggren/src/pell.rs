//! Pell numbers and the identities that tie adjacent terms to sums of squares.
//!
//! The sequence is `a_0 = 0, a_1 = 1, a_{n+2} = 2*a_{n+1} + a_n`:
//!
//! ```text
//! 0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741, 13860, 33461, ...
//! ```
//!
//! Two facts about it drive everything else in this crate:
//!
//! * for adjacent terms, `a_n^2 + a_{n+1}^2 = a_{2n+1}` — the sum of squares
//!   lands back in the sequence, at an odd index;
//! * the odd-indexed subsequence `1, 5, 29, 169, 985, 5741, 33461, ...`
//!   (called "seq2" throughout) collects exactly the y-values of
//!   `x^2 - 2*y^2 = -1`.
//!
//! All arithmetic here is exact unbounded-integer; there is no floating point
//! anywhere in this module.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;

/// Adjacent Pell numbers `(a_n, a_{n+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellPair {
    /// Index of `a` in the sequence.
    pub n: u64,
    /// `a_n`.
    pub a: BigUint,
    /// `a_{n+1}`.
    pub b: BigUint,
}

impl PellPair {
    /// The pair `(a_n, a_{n+1})` at a given index.
    pub fn at(n: u64) -> Self {
        pell_pairs(n + 1)
            .expect("limit is at least 1")
            .last()
            .expect("stream yields `limit` pairs")
    }
}

/// `a_n`, by linear iteration of the recurrence.
pub fn pell_number(n: u64) -> BigUint {
    let mut a = BigUint::zero();
    let mut b = BigUint::one();
    for _ in 0..n {
        let next = (&b << 1) + &a;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `a_n`, by 2x2 matrix power with exponentiation by squaring.
///
/// Fast path for isolated large indices; agrees with [`pell_number`]
/// everywhere (tested on 0..=1000).
pub fn pell_number_fast(n: u64) -> BigUint {
    // Powers of the symmetric matrix [[2, 1], [1, 0]] stay symmetric, so a
    // triple (m00, m01, m11) suffices; the off-diagonal entry of the n-th
    // power is a_n.
    type Sym = (BigUint, BigUint, BigUint);
    fn mul(x: &Sym, y: &Sym) -> Sym {
        (
            &x.0 * &y.0 + &x.1 * &y.1,
            &x.0 * &y.1 + &x.1 * &y.2,
            &x.1 * &y.1 + &x.2 * &y.2,
        )
    }
    let mut result: Sym = (BigUint::one(), BigUint::zero(), BigUint::one());
    let mut base: Sym = (BigUint::from(2u32), BigUint::one(), BigUint::zero());
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    result.1
}

/// Iterator over the first `limit` adjacent pairs, `n = 0 .. limit-1`.
///
/// Single consumer; each step costs one big-integer addition and a shift.
pub struct PellPairs {
    n: u64,
    limit: u64,
    a: BigUint,
    b: BigUint,
}

/// Stream the pairs `(a_n, a_{n+1})` for `n = 0 .. limit-1`.
///
/// Rejects `limit = 0`: an empty request is almost certainly a caller bug.
pub fn pell_pairs(limit: u64) -> Result<PellPairs, Error> {
    if limit == 0 {
        return Err(Error::RangeTooSmall {
            what: "limit",
            min: 1,
            got: 0,
        });
    }
    Ok(PellPairs {
        n: 0,
        limit,
        a: BigUint::zero(),
        b: BigUint::one(),
    })
}

impl Iterator for PellPairs {
    type Item = PellPair;

    fn next(&mut self) -> Option<PellPair> {
        if self.n >= self.limit {
            return None;
        }
        let pair = PellPair {
            n: self.n,
            a: self.a.clone(),
            b: self.b.clone(),
        };
        let next = (&self.b << 1) + &self.a;
        self.a = std::mem::replace(&mut self.b, next);
        self.n += 1;
        Some(pair)
    }
}

/// `a^2 + b^2` for an adjacent pair, together with the index `2n+1` where
/// that value sits in the sequence.
///
/// The closure `pell_number(2n+1) = a_n^2 + a_{n+1}^2` is an exact identity
/// of the recurrence (see the module tests).
pub fn adjacent_square_sum(pair: &PellPair) -> (BigUint, u64) {
    let value = &pair.a * &pair.a + &pair.b * &pair.b;
    (value, 2 * pair.n + 1)
}

/// The `m`-th element of the odd-indexed subsequence: `a_{2m+1}`.
pub fn seq2_number(m: u64) -> BigUint {
    pell_number(2 * m + 1)
}

/// First `count` elements of the odd-indexed subsequence, in one linear pass.
pub fn seq2_numbers(count: u64) -> Vec<BigUint> {
    if count == 0 {
        return Vec::new();
    }
    pell_pairs(2 * count)
        .expect("limit is at least 2")
        .filter(|pair| pair.n % 2 == 1)
        .map(|pair| pair.a)
        .collect()
}

/// Five consecutive terms of the recurrence seeded by `(c, d)`:
/// `c, d, c+2d, 2c+5d, 5c+12d`.
///
/// When `(c, d)` are adjacent Pell numbers all five terms appear
/// consecutively in the sequence itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment5 {
    pub c: BigUint,
    pub d: BigUint,
    pub terms: [BigUint; 5],
}

/// Build the 5-term segment for arbitrary seeds.
pub fn segment5(c: &BigUint, d: &BigUint) -> Segment5 {
    let t2 = c + (d << 1);
    let t3 = d + (&t2 << 1);
    let t4 = &t2 + (&t3 << 1);
    Segment5 {
        c: c.clone(),
        d: d.clone(),
        terms: [c.clone(), d.clone(), t2, t3, t4],
    }
}

/// gcd of the two entries of a pair; adjacent Pell numbers are coprime.
pub fn pair_gcd(pair: &PellPair) -> BigUint {
    pair.a.gcd(&pair.b)
}
