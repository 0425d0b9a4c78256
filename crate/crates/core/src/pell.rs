//! General solvers for x² − d·y² = N with N ∈ {1, −1, 4, −4} and nonsquare
//! d ≥ 2, built on the continued fraction expansion of √d.
//!
//! The fundamental solution of the unit equation comes from the convergent at
//! the period end: (p_{m−1}, q_{m−1}) for even period length m, and
//! (p_{2m−1}, q_{2m−1}) for odd m. N = −1 is solvable exactly when m is odd.
//! The ±4 equations reduce to the unit equations by congruence class of d,
//! with one genuinely new case: for d ≡ 5 (mod 8) a smaller solution with both
//! coordinates odd may exist and is found by a short, provably bounded scan.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::exact_sqrt;
use crate::cf::cf_expand_sqrt;
use crate::error::{Error, Result};

/// A pair of nonnegative integers with x² − d·y² = N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub x: BigUint,
    pub y: BigUint,
}

impl PellSolution {
    pub fn new(x: impl Into<BigUint>, y: impl Into<BigUint>) -> Self {
        PellSolution { x: x.into(), y: y.into() }
    }

    /// Direct check of the defining equation.
    pub fn satisfies(&self, d: &BigUint, n: i64) -> bool {
        verify(
            &BigInt::from(d.clone()),
            &BigInt::from(n),
            &BigInt::from(self.x.clone()),
            &BigInt::from(self.y.clone()),
        )
    }
}

impl fmt::Display for PellSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// How a verdict was reached, or why a search came up empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    /// The period of √d is even, which rules out x² − d·y² = −1.
    EvenPeriod,
    /// A congruence rules the equation out.
    ModularObstruction,
    /// Exhaustive search up to the recorded bound found nothing.
    SearchExhausted { y_max: u64 },
    /// Settled by reducing to another right-hand side.
    Reduction,
}

/// Solvability outcome for a (d, N) problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Solvable { fundamental: PellSolution, via: Option<Reason> },
    Unsolvable { reason: Reason },
}

impl Verdict {
    pub fn is_solvable(&self) -> bool {
        matches!(self, Verdict::Solvable { .. })
    }

    pub fn fundamental(&self) -> Option<&PellSolution> {
        match self {
            Verdict::Solvable { fundamental, .. } => Some(fundamental),
            Verdict::Unsolvable { .. } => None,
        }
    }
}

/// Minimal positive solution of x² − d·y² = 1.
pub fn fundamental_unit(d: &BigUint) -> Result<PellSolution> {
    let cf = cf_expand_sqrt(d)?;
    let m = cf.period_len();
    let take = if m % 2 == 0 { m } else { 2 * m };
    let c = cf.convergents().nth(take - 1).expect("convergent stream is infinite");
    let sol = PellSolution { x: c.p, y: c.q };
    debug_assert!(sol.satisfies(d, 1));
    Ok(sol)
}

/// Verdict for x² − d·y² = −1: solvable exactly when the period is odd.
pub fn fundamental_neg_one(d: &BigUint) -> Result<Verdict> {
    let cf = cf_expand_sqrt(d)?;
    let m = cf.period_len();
    if m % 2 == 0 {
        return Ok(Verdict::Unsolvable { reason: Reason::EvenPeriod });
    }
    let c = cf.convergents().nth(m - 1).expect("convergent stream is infinite");
    let sol = PellSolution { x: c.p, y: c.q };
    debug_assert!(sol.satisfies(d, -1));
    Ok(Verdict::Solvable { fundamental: sol, via: None })
}

/// Minimal positive solution of x² − d·y² = 4. Routed by d mod 4:
/// d ≡ 0 lifts the unit solution of d/4; d ≡ 2, 3 doubles the unit solution
/// of d; d ≡ 1 does the same unless a smaller odd-coordinate solution exists.
pub fn solve_four(d: &BigUint) -> Result<PellSolution> {
    let sol = match residue(d, 4) {
        0 => {
            let f = fundamental_unit(&(d >> 2u32))?;
            PellSolution { x: f.x * 2u32, y: f.y }
        }
        1 => {
            let f = fundamental_unit(d)?;
            // Both-odd solutions force d ≡ 5 (mod 8), and the smallest one
            // cubes to the unit fundamental, so d·y³ ≤ 2·y₁ bounds the scan.
            let odd = if residue(d, 8) == 5 {
                smallest_odd_solution(d, 4, &(&f.y * 2u32))
            } else {
                None
            };
            odd.unwrap_or(PellSolution { x: f.x * 2u32, y: f.y * 2u32 })
        }
        _ => {
            let f = fundamental_unit(d)?;
            PellSolution { x: f.x * 2u32, y: f.y * 2u32 }
        }
    };
    debug_assert!(sol.satisfies(d, 4));
    Ok(sol)
}

fn residue(d: &BigUint, m: u32) -> u32 {
    (d % m).to_u32().expect("residue fits in u32")
}

/// Verdict for x² − d·y² = −4, which is solvable exactly when the matching
/// −1 equation is: for d ≡ 0 (mod 4) that is the −1 equation of d/4 (every
/// solution has even x), otherwise the −1 equation of d itself.
pub fn solve_neg_four(d: &BigUint) -> Result<Verdict> {
    if residue(d, 4) == 0 {
        return Ok(match fundamental_neg_one(&(d >> 2u32))? {
            Verdict::Unsolvable { reason } => Verdict::Unsolvable { reason },
            Verdict::Solvable { fundamental, .. } => Verdict::Solvable {
                fundamental: PellSolution { x: fundamental.x * 2u32, y: fundamental.y },
                via: Some(Reason::Reduction),
            },
        });
    }
    match fundamental_neg_one(d)? {
        Verdict::Unsolvable { reason } => Ok(Verdict::Unsolvable { reason }),
        Verdict::Solvable { fundamental: f, .. } => {
            // As for +4: an odd-coordinate fundamental requires d ≡ 5 (mod 8)
            // and cubes to (x₋₁ + y₋₁√d), giving the bound d·y³ ≤ 8·y₋₁.
            let odd = if residue(d, 8) == 5 {
                smallest_odd_solution(d, -4, &(&f.y * 8u32))
            } else {
                None
            };
            let fundamental = odd.unwrap_or(PellSolution { x: f.x * 2u32, y: f.y * 2u32 });
            debug_assert!(fundamental.satisfies(d, -4));
            Ok(Verdict::Solvable { fundamental, via: Some(Reason::Reduction) })
        }
    }
}

/// Scans odd y with d·y³ ≤ cap for the smallest solution of x² − d·y² = ±4.
fn smallest_odd_solution(d: &BigUint, n: i64, cap: &BigUint) -> Option<PellSolution> {
    let mut y = BigUint::one();
    loop {
        let y_sq = &y * &y;
        if &(d * &y_sq * &y) > cap {
            return None;
        }
        let d_y_sq = d * &y_sq;
        let target = if n > 0 { d_y_sq + 4u32 } else { d_y_sq - 4u32 };
        if let Some(x) = exact_sqrt(&target) {
            debug_assert!(x.is_odd());
            return Some(PellSolution { x, y });
        }
        y += 2u32;
    }
}

/// Multiplication in pairs representing x + y√d: the exact arithmetic behind
/// solution iteration.
fn pair_mul(a: &(BigUint, BigUint), b: &(BigUint, BigUint), d: &BigUint) -> (BigUint, BigUint) {
    (&a.0 * &b.0 + d * &a.1 * &b.1, &a.0 * &b.1 + &b.0 * &a.1)
}

fn pair_pow(base: &(BigUint, BigUint), mut e: u64, d: &BigUint) -> (BigUint, BigUint) {
    let mut acc = (BigUint::one(), BigUint::zero());
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = pair_mul(&acc, &sq, d);
        }
        e >>= 1;
        if e > 0 {
            sq = pair_mul(&sq, &sq, d);
        }
    }
    acc
}

/// Exact division by 2^e; the iteration formulas guarantee divisibility and
/// this asserts it rather than rounding.
fn div_pow2_exact(v: BigUint, e: u64) -> BigUint {
    if e == 0 {
        return v;
    }
    let tz = v.trailing_zeros().expect("iterated solutions are nonzero");
    assert!(tz >= e, "power-of-two division must be exact");
    v >> e
}

/// The n-th positive solution (n starts at 1) of x² − d·y² = N in increasing
/// order: powers of the fundamental for N = 1, odd powers for N = −1, and the
/// same with exact division by 2ⁿ⁻¹ (resp. 2^{2n−2}) for N = 4 (resp. −4).
pub fn iterate_solutions(d: &BigUint, n: i64, index: u64) -> Result<PellSolution> {
    if index == 0 {
        return Err(Error::OutOfDomain("solution index starts at 1".into()));
    }
    let sol = match n {
        1 => {
            let f = fundamental_unit(d)?;
            let (x, y) = pair_pow(&(f.x, f.y), index, d);
            PellSolution { x, y }
        }
        -1 => {
            let f = match fundamental_neg_one(d)? {
                Verdict::Solvable { fundamental, .. } => fundamental,
                Verdict::Unsolvable { .. } => {
                    return Err(Error::NotSolvable { d: d.clone(), n });
                }
            };
            let (x, y) = pair_pow(&(f.x, f.y), 2 * index - 1, d);
            PellSolution { x, y }
        }
        4 => {
            let f = solve_four(d)?;
            let (x, y) = pair_pow(&(f.x, f.y), index, d);
            PellSolution {
                x: div_pow2_exact(x, index - 1),
                y: div_pow2_exact(y, index - 1),
            }
        }
        -4 => {
            let f = match solve_neg_four(d)? {
                Verdict::Solvable { fundamental, .. } => fundamental,
                Verdict::Unsolvable { .. } => {
                    return Err(Error::NotSolvable { d: d.clone(), n });
                }
            };
            let (x, y) = pair_pow(&(f.x, f.y), 2 * index - 1, d);
            PellSolution {
                x: div_pow2_exact(x, 2 * (index - 1)),
                y: div_pow2_exact(y, 2 * (index - 1)),
            }
        }
        other => return Err(Error::UnsupportedRhs(other)),
    };
    debug_assert!(sol.satisfies(d, n));
    Ok(sol)
}

/// Solvability verdict for any of the four supported right-hand sides.
pub fn solve(d: &BigUint, n: i64) -> Result<Verdict> {
    match n {
        1 => Ok(Verdict::Solvable { fundamental: fundamental_unit(d)?, via: None }),
        -1 => fundamental_neg_one(d),
        4 => Ok(Verdict::Solvable { fundamental: solve_four(d)?, via: None }),
        -4 => solve_neg_four(d),
        other => Err(Error::UnsupportedRhs(other)),
    }
}

/// Which sign to use in [`compose`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Combines a solution (g, h) of x² − d·y² = N with a unit (r, s) of
/// x² − d·y² = 1 into (g·r ± d·h·s, g·s ± h·r), another solution for the same
/// N, normalized to nonnegative coordinates.
pub fn compose(
    g: &BigInt,
    h: &BigInt,
    r: &BigInt,
    s: &BigInt,
    d: &BigUint,
    sign: Sign,
) -> Result<PellSolution> {
    let d_int = BigInt::from(d.clone());
    if r * r - &d_int * s * s != BigInt::one() {
        return Err(Error::BadUnit { r: r.clone(), s: s.clone() });
    }
    let (x, y) = match sign {
        Sign::Plus => (g * r + &d_int * h * s, g * s + h * r),
        Sign::Minus => (g * r - &d_int * h * s, g * s - h * r),
    };
    Ok(PellSolution {
        x: x.abs().to_biguint().expect("absolute value is nonnegative"),
        y: y.abs().to_biguint().expect("absolute value is nonnegative"),
    })
}

/// True exactly when x² − d·y² = N.
pub fn verify(d: &BigInt, n: &BigInt, x: &BigInt, y: &BigInt) -> bool {
    x * x - d * y * y == *n
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn sol(x: u64, y: u64) -> PellSolution {
        PellSolution::new(big(x), big(y))
    }

    #[test]
    fn unit_fundamentals() {
        assert_eq!(fundamental_unit(&big(3)).unwrap(), sol(2, 1));
        assert_eq!(fundamental_unit(&big(15)).unwrap(), sol(4, 1));
        assert_eq!(fundamental_unit(&big(2)).unwrap(), sol(3, 2));
        // Odd period of length > 1: √13 has period 5.
        assert_eq!(fundamental_unit(&big(13)).unwrap(), sol(649, 180));
    }

    #[test]
    fn unit_fundamental_rejects_bad_d() {
        assert_eq!(fundamental_unit(&big(9)), Err(Error::PerfectSquare(big(9))));
        assert!(matches!(fundamental_unit(&big(1)), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn neg_one_verdicts() {
        assert_eq!(
            fundamental_neg_one(&big(3)).unwrap(),
            Verdict::Unsolvable { reason: Reason::EvenPeriod }
        );
        assert_eq!(
            fundamental_neg_one(&big(2)).unwrap().fundamental(),
            Some(&sol(1, 1))
        );
        assert_eq!(
            fundamental_neg_one(&big(5)).unwrap().fundamental(),
            Some(&sol(2, 1))
        );
    }

    #[test]
    fn four_fundamentals() {
        assert_eq!(solve_four(&big(3)).unwrap(), sol(4, 2));
        assert_eq!(solve_four(&big(8)).unwrap(), sol(6, 2));
        // d ≡ 5 (mod 8): the doubled unit (18, 8) is beaten by (3, 1).
        assert_eq!(solve_four(&big(5)).unwrap(), sol(3, 1));
        assert_eq!(solve_four(&big(13)).unwrap(), sol(11, 3));
        // d ≡ 1 (mod 8): no odd-coordinate solutions exist.
        assert_eq!(solve_four(&big(17)).unwrap(), sol(66, 16));
    }

    #[test]
    fn neg_four_verdicts() {
        assert_eq!(
            solve_neg_four(&big(15)).unwrap(),
            Verdict::Unsolvable { reason: Reason::EvenPeriod }
        );
        assert_eq!(solve_neg_four(&big(8)).unwrap().fundamental(), Some(&sol(2, 1)));
        assert_eq!(solve_neg_four(&big(5)).unwrap().fundamental(), Some(&sol(1, 1)));
        // d ≡ 1 (mod 8): solvable only through doubled −1 solutions.
        assert_eq!(solve_neg_four(&big(17)).unwrap().fundamental(), Some(&sol(8, 2)));
    }

    #[test]
    fn iteration_matches_hand_values() {
        assert_eq!(iterate_solutions(&big(3), 1, 3).unwrap(), sol(26, 15));
        assert_eq!(iterate_solutions(&big(3), 4, 2).unwrap(), sol(14, 8));
        assert_eq!(iterate_solutions(&big(5), -4, 2).unwrap(), sol(4, 2));
        assert_eq!(iterate_solutions(&big(5), -1, 2).unwrap(), sol(38, 17));
    }

    #[test]
    fn iteration_at_one_is_the_fundamental() {
        for d in [2u64, 3, 5, 8, 13, 61] {
            let d = big(d);
            assert_eq!(
                iterate_solutions(&d, 1, 1).unwrap(),
                fundamental_unit(&d).unwrap()
            );
            assert_eq!(iterate_solutions(&d, 4, 1).unwrap(), solve_four(&d).unwrap());
        }
    }

    #[test]
    fn iteration_errors() {
        assert_eq!(
            iterate_solutions(&big(3), -1, 1),
            Err(Error::NotSolvable { d: big(3), n: -1 })
        );
        assert_eq!(iterate_solutions(&big(3), 5, 1), Err(Error::UnsupportedRhs(5)));
        assert!(matches!(
            iterate_solutions(&big(3), 1, 0),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn iteration_is_strictly_increasing() {
        for (d, n) in [(2u64, 1i64), (2, -1), (3, 1), (3, 4), (5, -4), (8, -4)] {
            let d = big(d);
            let mut prev = iterate_solutions(&d, n, 1).unwrap();
            for index in 2..=6 {
                let next = iterate_solutions(&d, n, index).unwrap();
                assert!(next.x > prev.x && next.y > prev.y, "d={d} n={n} index={index}");
                prev = next;
            }
        }
    }

    #[test]
    fn composition_examples() {
        let two = BigInt::from(2);
        let one = BigInt::from(1);
        assert_eq!(
            compose(&two, &one, &two, &one, &big(3), Sign::Plus).unwrap(),
            sol(7, 4)
        );
        assert_eq!(
            compose(&one, &one, &BigInt::from(9), &BigInt::from(4), &big(5), Sign::Plus)
                .unwrap(),
            sol(29, 13)
        );
        // The identity unit fixes any solution, with either sign.
        for sign in [Sign::Plus, Sign::Minus] {
            assert_eq!(
                compose(&two, &one, &one, &BigInt::zero(), &big(3), sign).unwrap(),
                sol(2, 1)
            );
        }
        // Composing with the minus sign steps down.
        assert_eq!(
            compose(&BigInt::from(7), &BigInt::from(4), &two, &one, &big(3), Sign::Minus)
                .unwrap(),
            sol(2, 1)
        );
    }

    #[test]
    fn composition_rejects_non_units() {
        assert_eq!(
            compose(
                &BigInt::from(2),
                &BigInt::from(1),
                &BigInt::from(3),
                &BigInt::from(1),
                &big(3),
                Sign::Plus
            ),
            Err(Error::BadUnit { r: BigInt::from(3), s: BigInt::from(1) })
        );
    }

    #[test]
    fn verify_examples() {
        let d3 = BigInt::from(3);
        assert!(verify(&d3, &BigInt::one(), &BigInt::from(7), &BigInt::from(4)));
        assert!(!verify(&d3, &BigInt::one(), &BigInt::from(2), &BigInt::from(2)));
        for x in 0i64..40 {
            for y in 0i64..40 {
                assert!(!verify(&d3, &BigInt::from(-1), &BigInt::from(x), &BigInt::from(y)));
            }
        }
    }

    #[test]
    fn closure_under_composition() {
        // Composing the fundamental with itself gives the second solution.
        for d in 2u64..=100 {
            let d = big(d);
            let Ok(f) = fundamental_unit(&d) else { continue };
            let g = BigInt::from(f.x.clone());
            let h = BigInt::from(f.y.clone());
            let composed = compose(&g, &h, &g, &h, &d, Sign::Plus).unwrap();
            assert_eq!(composed, iterate_solutions(&d, 1, 2).unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn fundamentals_verify(d in 2u64..400) {
            let d = big(d);
            if let Ok(f) = fundamental_unit(&d) {
                prop_assert!(f.satisfies(&d, 1));
                prop_assert!(!f.y.is_zero());
                let four = solve_four(&d).unwrap();
                prop_assert!(four.satisfies(&d, 4));
                if let Verdict::Solvable { fundamental, .. } = fundamental_neg_one(&d).unwrap() {
                    prop_assert!(fundamental.satisfies(&d, -1));
                }
                if let Verdict::Solvable { fundamental, .. } = solve_neg_four(&d).unwrap() {
                    prop_assert!(fundamental.satisfies(&d, -4));
                }
            }
        }
    }
}
