//! Wider cross-checks between the solvers, the closed forms and the oracle.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rayon::prelude::*;

use pellfrac::family::{
    family_four_fundamental, family_fundamental, FamilyParam,
};
use pellfrac::oracle::{brute_solve, first_solution, SearchBound};
use pellfrac::pell::{
    fundamental_neg_one, fundamental_unit, iterate_solutions, solve, solve_four, Verdict,
};

const DESK_BOUND: u64 = 10_000;

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn is_square(d: u64) -> bool {
    let r = (d as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).any(|t| t * t == d)
}

/// Period parity decides −1 solvability; the oracle sees the same picture
/// wherever the fundamental is within its reach.
#[test]
fn neg_one_parity_rule_matches_brute_force_up_to_500() {
    (2u64..=500)
        .filter(|&d| !is_square(d))
        .collect::<Vec<_>>()
        .into_par_iter()
        .for_each(|d| {
            let d_big = big(d);
            match fundamental_neg_one(&d_big).unwrap() {
                Verdict::Unsolvable { .. } => {
                    assert!(
                        brute_solve(&d_big, &BigInt::from(-1), SearchBound::new(DESK_BOUND))
                            .is_empty(),
                        "d={d}: oracle found a solution the parity rule denies"
                    );
                }
                Verdict::Solvable { fundamental, .. } => {
                    assert!(fundamental.satisfies(&d_big, -1), "d={d}");
                    match fundamental.y.to_u64() {
                        Some(y) if y <= 1_000_000 => {
                            let bound = SearchBound::new(y.max(DESK_BOUND));
                            let found = brute_solve(&d_big, &BigInt::from(-1), bound);
                            assert_eq!(found.first(), Some(&fundamental), "d={d}");
                        }
                        _ => {
                            assert!(
                                brute_solve(
                                    &d_big,
                                    &BigInt::from(-1),
                                    SearchBound::new(DESK_BOUND)
                                )
                                .is_empty(),
                                "d={d}: a smaller solution than the fundamental exists"
                            );
                        }
                    }
                }
            }
        });
}

/// The closed forms and the general solver must agree on fundamentals
/// across the whole a ≤ 200 range.
#[test]
fn family_fundamentals_agree_with_engine_up_to_200() {
    (1u64..=200).into_par_iter().for_each(|a| {
        let p = FamilyParam::new(big(a)).unwrap();
        assert_eq!(family_fundamental(&p), fundamental_unit(p.d()).unwrap(), "a={a}");
        assert_eq!(family_four_fundamental(&p), solve_four(p.d()).unwrap(), "a={a}");
    });
}

/// Iterated solutions must be exactly the oracle's enumeration: nothing
/// skipped, nothing extra, same order.
#[test]
fn iterated_solutions_are_the_oracle_prefix() {
    (2u64..=40)
        .filter(|&d| !is_square(d))
        .collect::<Vec<_>>()
        .into_par_iter()
        .for_each(|d| {
            let d_big = big(d);
            for n in [1i64, -1, 4, -4] {
                let Ok(verdict) = solve(&d_big, n) else { continue };
                if !verdict.is_solvable() {
                    continue;
                }
                let mut expected = Vec::new();
                for index in 1.. {
                    let sol = iterate_solutions(&d_big, n, index).unwrap();
                    if sol.y.to_u64().is_none_or(|y| y > 30_000) {
                        break;
                    }
                    expected.push(sol);
                }
                if expected.is_empty() {
                    continue;
                }
                let bound = SearchBound::new(expected.last().unwrap().y.to_u64().unwrap());
                let found = brute_solve(&d_big, &BigInt::from(n), bound);
                assert_eq!(found, expected, "d={d} N={n}");
            }
        });
}

/// first_solution is brute_solve's early-exit twin.
#[test]
fn first_solution_agrees_with_brute_solve() {
    for d in [2u64, 3, 5, 8, 13, 15, 17] {
        let d_big = big(d);
        for n in [1i64, -1, 4, -4, 9] {
            let bound = SearchBound::new(500);
            let all = brute_solve(&d_big, &BigInt::from(n), bound);
            match first_solution(&d_big, &BigInt::from(n), bound) {
                Verdict::Solvable { fundamental, .. } => {
                    assert_eq!(Some(&fundamental), all.first(), "d={d} N={n}");
                }
                Verdict::Unsolvable { .. } => {
                    assert!(all.is_empty(), "d={d} N={n}");
                }
            }
        }
    }
}
