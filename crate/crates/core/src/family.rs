//! Closed forms for the family d = a² + 2a = (a+1)² − 1, a ≥ 1.
//!
//! For these d the expansion of √d is [a; (1, 2a)], the unit fundamental is
//! (a+1, 1), and the n-th solutions of the 1 and 4 equations are Lucas pairs
//! with parameters (2a+2, −1). The −1 equation is never solvable; the −4
//! equation is unsolvable for every a > 2 and is delegated to the general
//! solver for a ∈ {1, 2}, where that rule does not apply (a = 2 is solvable).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::arith::exact_sqrt;
use crate::cf::{evaluate_cf, CfExpansion};
use crate::error::{Error, Result};
use crate::lucas::{lucas_pair, SequenceParams};
use crate::pell::{solve_neg_four, PellSolution, Reason, Verdict};

/// The family parameter a ≥ 1 together with d = a² + 2a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParam {
    a: BigUint,
    d: BigUint,
}

impl FamilyParam {
    pub fn new(a: impl Into<BigUint>) -> Result<Self> {
        let a = a.into();
        if a < BigUint::one() {
            return Err(Error::OutOfDomain("family parameter a must be at least 1".into()));
        }
        let d = &a * &a + &a * 2u32;
        Ok(FamilyParam { a, d })
    }

    /// Recognizes d of the form a² + 2a, i.e. d + 1 a perfect square ≥ 4.
    pub fn detect(d: &BigUint) -> Option<FamilyParam> {
        let root = exact_sqrt(&(d + 1u32))?;
        if root < BigUint::from(2u32) {
            return None;
        }
        let a = root - 1u32;
        let param = FamilyParam { a, d: d.clone() };
        debug_assert_eq!(&param.a * &param.a + &param.a * 2u32, param.d);
        Some(param)
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    fn lucas_params(&self) -> SequenceParams {
        let k = BigInt::from(&self.a * 2u32 + 2u32);
        SequenceParams::new(k, BigInt::from(-1)).expect("k ≥ 4 and s = −1 are always valid")
    }
}

/// √(a²+2a) = [a; (1, 2a)].
pub fn family_cf(p: &FamilyParam) -> CfExpansion {
    CfExpansion::from_parts(p.d.clone(), p.a.clone(), vec![BigUint::one(), &p.a * 2u32])
}

/// Fundamental solution (a+1, 1) of the unit equation.
pub fn family_fundamental(p: &FamilyParam) -> PellSolution {
    let sol = PellSolution { x: &p.a + 1u32, y: BigUint::one() };
    debug_assert!(sol.satisfies(&p.d, 1));
    sol
}

/// n-th unit solution by the recurrence
/// (x, y) ← ((a+1)·x + (a²+2a)·y, x + (a+1)·y) from (a+1, 1).
pub fn family_nth_unit(p: &FamilyParam, n: u64) -> Result<PellSolution> {
    require_positive_index(n)?;
    let a_plus_1 = &p.a + 1u32;
    let mut x = a_plus_1.clone();
    let mut y = BigUint::one();
    for _ in 1..n {
        let next_x = &a_plus_1 * &x + &p.d * &y;
        y = x + &a_plus_1 * &y;
        x = next_x;
    }
    let sol = PellSolution { x, y };
    debug_assert!(sol.satisfies(&p.d, 1));
    Ok(sol)
}

/// n-th unit solution read off the finite continued fraction
/// [a; (1, 2a) repeated n−1 times, 1].
pub fn family_nth_unit_cf(p: &FamilyParam, n: u64) -> Result<PellSolution> {
    require_positive_index(n)?;
    let two_a = &p.a * 2u32;
    let mut terms = Vec::with_capacity(2 * n as usize);
    terms.push(p.a.clone());
    for _ in 1..n {
        terms.push(BigUint::one());
        terms.push(two_a.clone());
    }
    terms.push(BigUint::one());
    let value = evaluate_cf(&terms);
    let sol = PellSolution {
        x: value.numerator().clone(),
        y: value.denominator().clone(),
    };
    debug_assert!(sol.satisfies(&p.d, 1));
    Ok(sol)
}

/// n-th unit solution as the Lucas pair (V_n(2a+2, −1)/2, U_n(2a+2, −1)).
pub fn family_nth_unit_lucas(p: &FamilyParam, n: u64) -> Result<PellSolution> {
    require_positive_index(n)?;
    let (u, v) = lucas_pair(&p.lucas_params(), n);
    assert!(v.is_even(), "V_n(2a+2, -1) must be even");
    let sol = PellSolution {
        x: (v >> 1u32).to_biguint().expect("V_n is positive"),
        y: u.to_biguint().expect("U_n is positive"),
    };
    debug_assert!(sol.satisfies(&p.d, 1));
    Ok(sol)
}

/// The −1 equation has even period 2, hence no positive solutions, for any a.
pub fn family_neg_one(_p: &FamilyParam) -> Verdict {
    Verdict::Unsolvable { reason: Reason::EvenPeriod }
}

/// Fundamental solution (2a+2, 2) of the 4 equation.
pub fn family_four_fundamental(p: &FamilyParam) -> PellSolution {
    let sol = PellSolution { x: (&p.a + 1u32) * 2u32, y: BigUint::from(2u32) };
    debug_assert!(sol.satisfies(&p.d, 4));
    sol
}

/// n-th solution of the 4 equation: (V_n(2a+2, −1), 2·U_n(2a+2, −1)).
pub fn family_nth_four(p: &FamilyParam, n: u64) -> Result<PellSolution> {
    require_positive_index(n)?;
    let (u, v) = lucas_pair(&p.lucas_params(), n);
    let sol = PellSolution {
        x: v.to_biguint().expect("V_n is positive"),
        y: (u << 1u32).to_biguint().expect("U_n is positive"),
    };
    debug_assert!(sol.satisfies(&p.d, 4));
    Ok(sol)
}

/// Verdict for the −4 equation: unsolvable whenever a > 2 (odd a through the
/// −1 equation, even a through the k²+k reduction); a ∈ {1, 2} go to the
/// general solver since the a > 2 rule genuinely needs its hypothesis.
pub fn family_neg_four(p: &FamilyParam) -> Verdict {
    if p.a > BigUint::from(2u32) {
        return Verdict::Unsolvable { reason: Reason::EvenPeriod };
    }
    solve_neg_four(&p.d).expect("family d is nonsquare and at least 3")
}

/// √(k²+k) = [1; (2)] for k = 1 and [k; (2, 2k)] for k > 1.
pub fn cf_k_squared_plus_k(k: &BigUint) -> Result<CfExpansion> {
    if k < &BigUint::one() {
        return Err(Error::OutOfDomain("k must be at least 1".into()));
    }
    let d = k * k + k;
    let period = if k.is_one() {
        vec![BigUint::from(2u32)]
    } else {
        vec![BigUint::from(2u32), k * 2u32]
    };
    Ok(CfExpansion::from_parts(d, k.clone(), period))
}

fn require_positive_index(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::OutOfDomain("solution index starts at 1".into()))
    } else {
        Ok(())
    }
}
