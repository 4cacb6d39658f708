//! Identities tying digit-sum moments of the Thue-Morse sign to elementary
//! symmetric polynomials, checked by brute force against their closed forms
//! and against coefficients of the two-dimensional F table.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Monomial, Var};
use crate::combinatorics::{binomial, elem_sym, factorial};
use crate::digitseq::{digit_sum, ptm_sign, SeqSpec};
use crate::report::{fail_params, VerificationReport};

use super::PtmContext;

/// sum_{i<2^n} (-1)^(s_2(i)) s_2(i)^r i^p, exactly.
fn moment_sum(n: u32, r: u32, p: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..(1u64 << n) {
        let s = BigInt::from(digit_sum(i, 2)).pow(r);
        let ip = BigInt::from(i).pow(p);
        let term = s * ip;
        if ptm_sign(i) == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Verify, for the given n and 0 <= r <= n:
/// - vanishing: sum (-1)^(s_2(i)) s_2(i)^r i^(m-r) = 0 for every r <= m < n;
/// - the closed form
///   sum (-1)^(s_2(i)) s_2(i)^r i^(n-r) = (-1)^n r! (n-r)! sigma_(n-r)(1, 2, ..., 2^(n-1));
/// - the same value read off the coefficient of v1^r v2^(n-r) in F_{n,n}
///   for the two-dimensional sequence u(n) = (s_2(n), n).
pub fn cor2_check(n: u32, r: u32) -> VerificationReport {
    assert!(r <= n, "r = {r} must not exceed n = {n}");
    let mut report = VerificationReport::new("cor2")
        .with_param("n", n)
        .with_param("r", r);
    for m in r..n {
        let value = moment_sum(n, r, m - r);
        report.case(
            value.is_zero(),
            || {
                fail_params(&[
                    ("n", n.to_string()),
                    ("r", r.to_string()),
                    ("m", m.to_string()),
                ])
            },
            || "0".to_string(),
            || value.to_string(),
        );
    }
    let lhs = BigRational::from_integer(moment_sum(n, r, n - r));
    let powers: Vec<BigRational> = (0..n)
        .map(|j| BigRational::from_integer(BigInt::from(1) << j))
        .collect();
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let rhs = BigRational::from_integer(BigInt::from(sign) * factorial(r) * factorial(n - r))
        * elem_sym(&powers, (n - r) as usize);
    report.case(
        lhs == rhs,
        || fail_params(&[("n", n.to_string()), ("r", r.to_string())]),
        || crate::algebra::render_rational(&rhs),
        || crate::algebra::render_rational(&lhs),
    );
    // cross-check through the F table of u(n) = (s_2(n), n)
    let ctx = PtmContext::primitive(SeqSpec::preset_digit_sum_and_n(2)).expect("valid preset");
    let f_nn = ctx.f_constant(n, n);
    let coeff = f_nn
        .coeff(&Monomial::from_pairs([(Var::V(1), r), (Var::V(2), n - r)]))
        .as_rational()
        .expect("rational scalars")
        .clone();
    let expected = BigRational::from_integer(binomial(n, r)) * &lhs;
    report.case(
        coeff == expected,
        || fail_params(&[("n", n.to_string()), ("r", r.to_string())]),
        || crate::algebra::render_rational(&expected),
        || crate::algebra::render_rational(&coeff),
    );
    report
}

/// Verify sum_{i<2^n} (-1)^(s_2(i)) (2^r s_2(i) - i)^m = 0 for 0 <= r <= n-1.
pub fn cor3_check(n: u32, m: u32, r: u32) -> VerificationReport {
    assert!(n >= 1 && r < n, "requires 0 <= r <= n-1");
    let mut report = VerificationReport::new("cor3")
        .with_param("n", n)
        .with_param("m", m)
        .with_param("r", r);
    let mut acc = BigInt::zero();
    for i in 0..(1u64 << n) {
        let base = (BigInt::from(1) << r) * BigInt::from(digit_sum(i, 2)) - BigInt::from(i);
        let term = base.pow(m);
        if ptm_sign(i) == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    report.case(
        acc.is_zero(),
        || {
            fail_params(&[
                ("n", n.to_string()),
                ("m", m.to_string()),
                ("r", r.to_string()),
            ])
        },
        || "0".to_string(),
        || acc.to_string(),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moment_examples() {
        // n=2, r=0: 0 - 1 - 4 + 9 = 4
        assert_eq!(moment_sum(2, 0, 2), BigInt::from(4));
        // n=2, r=1: 0 - 1 - 2 + 6 = 3
        assert_eq!(moment_sum(2, 1, 1), BigInt::from(3));
    }

    #[test]
    fn cor2_small() {
        for n in 0..=6u32 {
            for r in 0..=n {
                let report = cor2_check(n, r);
                assert!(
                    report.is_verified(),
                    "n={n} r={r}: {:?}",
                    report.first_failure
                );
            }
        }
    }

    #[test]
    fn cor2_case_count() {
        // n cases of vanishing minus r, plus closed form, plus table cross-check
        let report = cor2_check(6, 6);
        assert_eq!(report.cases_checked, 2);
        let report = cor2_check(6, 0);
        assert_eq!(report.cases_checked, 8);
    }

    #[test]
    fn cor3_examples() {
        assert!(cor3_check(2, 1, 0).is_verified());
        assert!(cor3_check(1, 5, 0).is_verified());
        assert!(cor3_check(3, 4, 2).is_verified());
    }

    #[test]
    fn cor3_range() {
        for n in 1..=6u32 {
            for r in 0..n {
                for m in 0..=4u32 {
                    assert!(cor3_check(n, m, r).is_verified(), "n={n} m={m} r={r}");
                }
            }
        }
    }
}
