//! Brute-force ground truth for Pell solutions.
//!
//! Scans every y up to a bound and reports each exact hit. The only code
//! shared with the clever paths is the integer square root; continued
//! fractions and the solvers are deliberately off limits here, so disagreement
//! between the two always means a real bug.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::arith::exact_sqrt;
use crate::pell::{PellSolution, Reason, Verdict};

/// Search ceiling for the scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBound {
    pub y_max: u64,
}

impl SearchBound {
    pub fn new(y_max: u64) -> Self {
        assert!(y_max >= 1, "search bound must be at least 1");
        SearchBound { y_max }
    }
}

impl Default for SearchBound {
    /// The desk-scale default used throughout the test suite.
    fn default() -> Self {
        SearchBound { y_max: 10_000 }
    }
}

/// All positive solutions of x² − d·y² = N with y ≤ bound, ascending in y.
/// Parallel over y ranges; the indexed collect keeps the order.
pub fn brute_solve(d: &BigUint, n: &BigInt, bound: SearchBound) -> Vec<PellSolution> {
    (1..bound.y_max + 1)
        .into_par_iter()
        .filter_map(|y| check_y(d, n, y))
        .collect()
}

/// Stops at the first hit; an exhausted scan records the bound it used.
pub fn first_solution(d: &BigUint, n: &BigInt, bound: SearchBound) -> Verdict {
    for y in 1..=bound.y_max {
        if let Some(sol) = check_y(d, n, y) {
            return Verdict::Solvable { fundamental: sol, via: None };
        }
    }
    Verdict::Unsolvable { reason: Reason::SearchExhausted { y_max: bound.y_max } }
}

fn check_y(d: &BigUint, n: &BigInt, y: u64) -> Option<PellSolution> {
    let y = BigUint::from(y);
    let target = BigInt::from(d * &y * &y) + n;
    if !target.is_positive() {
        return None;
    }
    let x = exact_sqrt(target.magnitude())?;
    if x < BigUint::one() {
        return None;
    }
    Some(PellSolution { x, y })
}
