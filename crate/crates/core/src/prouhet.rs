//! Digit-count machinery for even bases: the product identity linking digit
//! counts to polynomial coefficients, partitions of {0,..,k^n-1} with equal
//! power sums below n, and the closed form of the diagonal constant.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Cyclotomic, Monomial, MultiPoly, Var};
use crate::combinatorics::factorial;
use crate::digitseq::{count_digit, digits, nkv};
use crate::error::{Error, Result};
use crate::report::{fail_params, VerificationReport};

pub use crate::digitseq::DigitTuple;

/// A partition of {0,..,k^n-1} into the indices with even and odd digit-count
/// parity; both halves are stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub k: u32,
    pub n: u32,
    pub set_p: Vec<u64>,
    pub set_q: Vec<u64>,
}

fn check_budget(k: u32, n: u32, budget: u64) -> Result<u64> {
    let required = u128::from(k).checked_pow(n).unwrap_or(u128::MAX);
    if required > u128::from(budget) {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(required as u64)
}

/// Check the expansion identity
/// prod_{i<n} (sum_j t_j x^(j k^i)) = sum_{i<k^n} (prod_l t_l^(N_l(i))) x^i,
/// where N_l(i) counts the digit l in the n-digit zero-padded base-k
/// expansion of i (padding only affects l = 0).
///
/// With `symbolic` set, both sides are compared as polynomials in
/// t_0..t_(k-1) and x; otherwise the t_j are specialized to the integers
/// j + 2 first, a cheaper spot check.
pub fn product_identity_check(
    k: u32,
    n: u32,
    symbolic: bool,
    budget: u64,
) -> Result<VerificationReport> {
    if k < 2 || n < 1 {
        return Err(Error::InvalidParameter(
            "product identity requires k >= 2 and n >= 1".into(),
        ));
    }
    let total = check_budget(k, n, budget)?;
    let mut report = VerificationReport::new("product-identity")
        .with_param("k", k)
        .with_param("n", n)
        .with_param("symbolic", symbolic);

    let assignment: Option<BTreeMap<Var, Cyclotomic>> = if symbolic {
        None
    } else {
        Some(
            (0..k)
                .map(|j| (Var::Ti(j), Cyclotomic::from_integer(1, i64::from(j) + 2)))
                .collect(),
        )
    };

    // left side: product over digit positions
    let mut lhs = MultiPoly::one(1);
    for pos in 0..n {
        let mut factor = MultiPoly::zero(1);
        for j in 0..k {
            let exp = u64::from(j) * u64::from(k).pow(pos);
            let exp = u32::try_from(exp).map_err(|_| {
                Error::InvalidParameter("x-exponent does not fit in a machine word".into())
            })?;
            factor = factor.add(&MultiPoly::monomial(
                1,
                Monomial::from_pairs([(Var::Ti(j), 1), (Var::X, exp)]),
                Cyclotomic::one(1),
            ));
        }
        if let Some(assign) = &assignment {
            factor = factor.eval_subst(assign);
        }
        lhs = lhs.mul(&factor);
    }

    // right side, term by term
    let mut rhs = MultiPoly::zero(1);
    for i in 0..total {
        let used = digits(i, k).len() as u32;
        let mut pairs: Vec<(Var, u32)> = vec![(Var::X, i as u32)];
        for l in 0..k {
            let mut count = count_digit(k, l, i);
            if l == 0 {
                count += n - used; // leading zeros up to width n
            }
            if count > 0 {
                pairs.push((Var::Ti(l), count));
            }
        }
        let mut term = MultiPoly::monomial(1, Monomial::from_pairs(pairs), Cyclotomic::one(1));
        if let Some(assign) = &assignment {
            term = term.eval_subst(assign);
        }
        rhs = rhs.add(&term);
    }

    if lhs == rhs {
        report.cases_checked += total;
        return Ok(report);
    }
    // locate the first differing x-coefficient
    for i in 0..total {
        let l = lhs.coeff_of_power(Var::X, i as u32);
        let r = rhs.coeff_of_power(Var::X, i as u32);
        report.case(
            l == r,
            || {
                fail_params(&[
                    ("k", k.to_string()),
                    ("n", n.to_string()),
                    ("x_power", i.to_string()),
                ])
            },
            || r.render(),
            || l.render(),
        );
    }
    Ok(report)
}

/// Split {0,..,k^n-1} by the parity of the chosen-digit count N_{k,v}.
pub fn prouhet_partition(k: u32, n: u32, v: &DigitTuple, budget: u64) -> Result<Partition> {
    if v.base() != k {
        return Err(Error::InvalidDigitTuple(format!(
            "digit tuple has base {}, expected {k}",
            v.base()
        )));
    }
    let total = check_budget(k, n, budget)?;
    let mut set_p = Vec::new();
    let mut set_q = Vec::new();
    for i in 0..total {
        if nkv(v, i).is_multiple_of(2) {
            set_p.push(i);
        } else {
            set_q.push(i);
        }
    }
    Ok(Partition { k, n, set_p, set_q })
}

/// Exact power sum of a set of indices.
pub fn power_sum(values: &[u64], m: u32) -> BigInt {
    values
        .iter()
        .map(|&i| BigInt::from(i).pow(m))
        .fold(BigInt::zero(), |a, b| a + b)
}

/// Whether both halves of the partition have the same m-th power sum.
pub fn power_sum_equal(partition: &Partition, m: u32) -> bool {
    power_sum(&partition.set_p, m) == power_sum(&partition.set_q, m)
}

/// f_{m,n}(v, x) = sum_{i<k^n} (-1)^(N_{k,v}(i)) (x + i)^m, a univariate
/// polynomial in x with integer coefficients. Zero for m < n; degree at most
/// m - n otherwise.
///
/// Expanding binomially, the coefficient of x^p is C(m,p) times the signed
/// power sum sum_i (-1)^(N_{k,v}(i)) i^(m-p).
pub fn f_v(m: u32, n: u32, v: &DigitTuple, budget: u64) -> Result<MultiPoly> {
    let k = v.base();
    let total = check_budget(k, n, budget)?;
    let mut sums = vec![BigInt::zero(); m as usize + 1];
    for i in 0..total {
        let positive = nkv(v, i).is_multiple_of(2);
        let mut pw = BigInt::one();
        for sum in sums.iter_mut() {
            if positive {
                *sum += &pw;
            } else {
                *sum -= &pw;
            }
            pw *= i;
        }
    }
    let mut acc = MultiPoly::zero(1);
    for p in 0..=m {
        let c = crate::combinatorics::binomial(m, p) * &sums[(m - p) as usize];
        if !c.is_zero() {
            acc = acc.add(&MultiPoly::monomial(
                1,
                Monomial::from_pairs([(Var::X, p)]),
                Cyclotomic::from_rational(1, BigRational::from_integer(c)),
            ));
        }
    }
    Ok(acc)
}

/// Closed form of the constant f_{n,n}(v, x):
/// n! k^(n(n-1)/2) (sum of digits not chosen - sum of chosen digits)^n,
/// digits ranging over 0..k-1.
pub fn fnn_v_closed(n: u32, v: &DigitTuple) -> BigRational {
    let k = v.base();
    let mut diff = BigInt::zero();
    for j in 0..k {
        if v.contains(j) {
            diff -= BigInt::from(j);
        } else {
            diff += BigInt::from(j);
        }
    }
    let value = factorial(n) * BigInt::from(k).pow(n * n.saturating_sub(1) / 2) * diff.pow(n);
    BigRational::from_integer(value)
}
