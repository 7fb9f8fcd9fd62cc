//! Integer square roots, the one squareness primitive everything else uses.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Compute `floor(sqrt(n))` together with an exactness flag.
///
/// Newton's method on integers: start from `2^((bits+1)/2)`, which is at least
/// `sqrt(n)`, and iterate `x -> (x + n/x) / 2`. From above the root the
/// iteration decreases monotonically, so the first step that fails to
/// decrease has already landed on `floor(sqrt(n))`. No floating point.
pub fn integer_sqrt(n: &BigUint) -> (BigUint, bool) {
    if n.is_zero() {
        return (BigUint::zero(), true);
    }
    let mut x = BigUint::one() << ((n.bits() + 1) / 2);
    loop {
        let next = (&x + n / &x) >> 1;
        if next >= x {
            break;
        }
        x = next;
    }
    debug_assert!(&x * &x <= *n && *n < (&x + 1u32) * (&x + 1u32));
    let exact = &x * &x == *n;
    (x, exact)
}

/// `Some(sqrt(n))` when `n` is a perfect square, `None` otherwise.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let (root, exact) = integer_sqrt(n);
    exact.then_some(root)
}
