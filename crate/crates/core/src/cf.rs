//! Periodic continued fraction expansion of √d and its convergents.
//!
//! For nonsquare d ≥ 2 the expansion has the shape `[a0; (a1, …, a_m)]` with
//! the block repeating forever and the last block term equal to 2·a0. The
//! integer state recurrence used here is
//!
//! ```text
//! P_0 = 0, Q_0 = 1, a_i = ⌊(a0 + P_i) / Q_i⌋
//! P_{i+1} = a_i·Q_i − P_i
//! Q_{i+1} = (d − P_{i+1}²) / Q_i        (always an exact division)
//! ```
//!
//! and the period closes at the first repeated (P, Q) state, which is provably
//! the state of index 1.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use crate::arith::{exact_sqrt, isqrt};
use crate::error::{Error, Result};

/// The expansion √d = [a0; (a1, …, a_m)] with minimal period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    d: BigUint,
    a0: BigUint,
    period: Vec<BigUint>,
}

impl CfExpansion {
    pub(crate) fn from_parts(d: BigUint, a0: BigUint, period: Vec<BigUint>) -> Self {
        debug_assert!(!period.is_empty());
        debug_assert_eq!(a0, isqrt(&d));
        debug_assert_eq!(*period.last().unwrap(), &a0 * 2u32);
        CfExpansion { d, a0, period }
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    /// Integer part a0 = ⌊√d⌋.
    pub fn a0(&self) -> &BigUint {
        &self.a0
    }

    /// The repeating block (a1, …, a_m).
    pub fn period(&self) -> &[BigUint] {
        &self.period
    }

    /// Period length m.
    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    /// Partial quotient a_k, continuing the period cyclically for k ≥ 1.
    pub fn term(&self, k: usize) -> &BigUint {
        if k == 0 {
            &self.a0
        } else {
            &self.period[(k - 1) % self.period.len()]
        }
    }

    /// Infinite stream of convergents p_k/q_k starting at k = 0.
    pub fn convergents(&self) -> Convergents<'_> {
        Convergents {
            cf: self,
            k: 0,
            p_prev: (BigUint::zero(), BigUint::one()),
            q_prev: (BigUint::one(), BigUint::zero()),
        }
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; (", self.a0)?;
        for (i, t) in self.period.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")]")
    }
}

/// A convergent p_k/q_k. Seeds live at k = −2 and k = −1; everything the
/// stream yields has k ≥ 0 and gcd(p, q) = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub p: BigUint,
    pub q: BigUint,
    pub index: i64,
}

impl Convergent {
    /// The recurrence seeds (p, q) = (0, 1) at k = −2 and (1, 0) at k = −1.
    pub fn seeds() -> [Convergent; 2] {
        [
            Convergent { p: BigUint::zero(), q: BigUint::one(), index: -2 },
            Convergent { p: BigUint::one(), q: BigUint::zero(), index: -1 },
        ]
    }
}

/// Iterator behind [`CfExpansion::convergents`].
pub struct Convergents<'a> {
    cf: &'a CfExpansion,
    k: usize,
    p_prev: (BigUint, BigUint), // (p_{k-2}, p_{k-1})
    q_prev: (BigUint, BigUint),
}

impl Iterator for Convergents<'_> {
    type Item = Convergent;

    fn next(&mut self) -> Option<Convergent> {
        let a = self.cf.term(self.k);
        let p = a * &self.p_prev.1 + &self.p_prev.0;
        let q = a * &self.q_prev.1 + &self.q_prev.0;
        self.p_prev = (self.p_prev.1.clone(), p.clone());
        self.q_prev = (self.q_prev.1.clone(), q.clone());
        let index = self.k as i64;
        self.k += 1;
        Some(Convergent { p, q, index })
    }
}

/// An exact nonnegative rational, always held in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rational {
    num: BigUint,
    den: BigUint,
}

impl Rational {
    /// Normalizes on construction so equality is structural.
    pub fn new(num: BigUint, den: BigUint) -> Self {
        assert!(!den.is_zero(), "rational denominator must be positive");
        let g = num.gcd(&den);
        Rational { num: &num / &g, den: &den / &g }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn denominator(&self) -> &BigUint {
        &self.den
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Expands √d for nonsquare d ≥ 2, closing the period at the first repeated
/// (P, Q) state rather than trusting the a_i = 2·a0 heuristic.
pub fn cf_expand_sqrt(d: &BigUint) -> Result<CfExpansion> {
    if *d <= BigUint::one() {
        return Err(Error::OutOfDomain(format!("d = {d} must be at least 2")));
    }
    let a0 = isqrt(d);
    if &(&a0 * &a0) == d {
        return Err(Error::PerfectSquare(d.clone()));
    }

    // State of index 1: P_1 = a_0·Q_0 − P_0 = a0, Q_1 = (d − P_1²)/Q_0.
    let mut p = a0.clone();
    let mut q = d - &a0 * &a0;
    let mut terms: Vec<BigUint> = Vec::new();
    let mut seen: HashMap<(BigUint, BigUint), usize> = HashMap::new();

    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            // √d has a purely periodic tail, so the first repeat closes at 1.
            debug_assert_eq!(start, 0);
            let period = terms.split_off(start);
            return Ok(CfExpansion { d: d.clone(), a0, period });
        }
        seen.insert((p.clone(), q.clone()), terms.len());

        let a = (&a0 + &p) / &q;
        let p_next = &a * &q - &p;
        let (q_next, rem) = (d - &p_next * &p_next).div_rem(&q);
        debug_assert!(rem.is_zero());
        terms.push(a);
        p = p_next;
        q = q_next;
    }
}

/// First `count` convergents (p_0, q_0), …, (p_{count−1}, q_{count−1}).
pub fn convergents(cf: &CfExpansion, count: usize) -> Vec<Convergent> {
    cf.convergents().take(count).collect()
}

/// Exact value of a finite continued fraction. The first term may be zero,
/// every later term must be positive.
pub fn evaluate_cf(terms: &[BigUint]) -> Rational {
    assert!(!terms.is_empty(), "a continued fraction needs at least one term");
    assert!(
        terms[1..].iter().all(|t| !t.is_zero()),
        "terms after the first must be positive"
    );
    // Fold back to front: v ← a + 1/v. Starting from t/1 keeps num and den
    // coprime throughout, but normalize anyway.
    let mut num = terms.last().unwrap().clone();
    let mut den = BigUint::one();
    for a in terms[..terms.len() - 1].iter().rev() {
        let folded = a * &num + &den;
        den = num;
        num = folded;
    }
    Rational::new(num, den)
}
