//! Exact integer helpers shared across the crate.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Integer square root: the unique `r` with `r² ≤ n < (r+1)²`.
///
/// Integer Newton iteration seeded above the root, so the sequence decreases
/// monotonically and the first non-decreasing step is the answer. No floating
/// point is involved at any width.
pub fn isqrt(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    // 2^ceil(bits/2) ≥ √n, so the iteration approaches the root from above.
    let bits = n.bits();
    let mut x = BigUint::one() << bits.div_ceil(2);
    loop {
        let next = (&x + n / &x) >> 1u32;
        if next >= x {
            return x;
        }
        x = next;
    }
}

/// `Some(√n)` when `n` is a perfect square, `None` otherwise.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = isqrt(n);
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}
