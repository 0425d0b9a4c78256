//! Generalized Fibonacci sequence U_n(k, s) and Lucas sequence V_n(k, s).
//!
//! Seeds are U_0 = 0, U_1 = 1, V_0 = 2, V_1 = k with the shared recurrence
//! W_{n+1} = k·W_n + s·W_{n−1}. Two computation paths are exposed:
//! [`lucas_pair`] walks the recurrence (switching to doubling formulas for
//! large n) while [`binet_pair`] exponentiates the root α = (k + √D)/2 in
//! exact half-integer pairs, so each can serve as an oracle for the other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Above this index the recurrence walk gives way to the doubling ladder.
const DOUBLING_CUTOVER: u64 = 64;

/// Parameters (k, s) with k ≠ 0, s ≠ 0 and discriminant D = k² + 4s > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceParams {
    k: BigInt,
    s: BigInt,
    discriminant: BigInt,
}

impl SequenceParams {
    pub fn new(k: impl Into<BigInt>, s: impl Into<BigInt>) -> Result<Self> {
        let k = k.into();
        let s = s.into();
        let discriminant = &k * &k + &s * 4i32;
        if k.is_zero() || s.is_zero() || !discriminant.is_positive() {
            return Err(Error::InvalidParams { k, s });
        }
        Ok(SequenceParams { k, s, discriminant })
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    /// D = k² + 4s.
    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }
}

/// Exact (U_n, V_n) from the defining recurrence (doubling above the cutover).
pub fn lucas_pair(params: &SequenceParams, n: u64) -> (BigInt, BigInt) {
    if n < DOUBLING_CUTOVER {
        lucas_by_recurrence(params, n)
    } else {
        lucas_by_doubling(params, n)
    }
}

fn lucas_by_recurrence(params: &SequenceParams, n: u64) -> (BigInt, BigInt) {
    let mut u = (BigInt::zero(), BigInt::one()); // (U_0, U_1)
    let mut v = (BigInt::from(2), params.k.clone()); // (V_0, V_1)
    if n == 0 {
        return (u.0, v.0);
    }
    for _ in 1..n {
        u = (u.1.clone(), &params.k * &u.1 + &params.s * &u.0);
        v = (v.1.clone(), &params.k * &v.1 + &params.s * &v.0);
    }
    (u.1, v.1)
}

/// Binary ladder on (U_m, V_m, (−s)^m):
/// U_{2m} = U_m·V_m, V_{2m} = V_m² − 2(−s)^m, and the step to m+1 halves
/// k·U + V and D·U + k·V, both of which are always even.
fn lucas_by_doubling(params: &SequenceParams, n: u64) -> (BigInt, BigInt) {
    let neg_s = -&params.s;
    let mut u = BigInt::zero();
    let mut v = BigInt::from(2);
    let mut q = BigInt::one();
    for i in (0..u64::BITS as u64 - n.leading_zeros() as u64).rev() {
        let doubled_u = &u * &v;
        let doubled_v = &v * &v - &q * 2i32;
        q = &q * &q;
        u = doubled_u;
        v = doubled_v;
        if (n >> i) & 1 == 1 {
            let stepped_u = half_exact(&params.k * &u + &v);
            let stepped_v = half_exact(&params.discriminant * &u + &params.k * &v);
            u = stepped_u;
            v = stepped_v;
            q *= &neg_s;
        }
    }
    (u, v)
}

fn half_exact(x: BigInt) -> BigInt {
    assert!(x.is_even(), "ladder step produced an odd intermediate");
    x >> 1u32
}

/// A value (u + v·√D)/2. With u ≡ k·v (mod 2) the products below stay exact.
#[derive(Clone)]
struct HalfPair {
    u: BigInt,
    v: BigInt,
}

impl HalfPair {
    fn one() -> Self {
        HalfPair { u: BigInt::from(2), v: BigInt::zero() }
    }

    fn mul(&self, other: &HalfPair, disc: &BigInt) -> HalfPair {
        HalfPair {
            u: half_exact(&self.u * &other.u + disc * &self.v * &other.v),
            v: half_exact(&self.u * &other.v + &other.u * &self.v),
        }
    }
}

/// Same values as [`lucas_pair`] through Binet's closed form: αⁿ is computed
/// exactly as (V_n + U_n√D)/2, never through radicals or floats.
pub fn binet_pair(params: &SequenceParams, n: u64) -> (BigInt, BigInt) {
    let disc = &params.discriminant;
    let mut acc = HalfPair::one();
    let mut base = HalfPair { u: params.k.clone(), v: BigInt::one() }; // α
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base, disc);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base, disc);
        }
    }
    (acc.v, acc.u)
}
