//! Bounded verifiers for three conjectured multivariate generalizations of
//! the digit-sum identities. Each check expands the defining sum exactly and
//! compares it against the conjectured closed form (or divisibility claim),
//! reporting a witness polynomial on any mismatch.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Cyclotomic, Monomial, MultiPoly, Var};
use crate::combinatorics::factorial;
use crate::digitseq::{digit_sum, ptm_sign};
use crate::error::{Error, Result};

/// Number of witness terms shown in reports.
const WITNESS_TERMS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjStatus {
    Verified,
    Counterexample,
    SkippedBudget,
}

/// Outcome of one conjecture check at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjReport {
    pub conjecture: u8,
    pub params: BTreeMap<String, String>,
    pub status: ConjStatus,
    /// Difference polynomial (truncated rendering), present exactly when the
    /// status is a counterexample.
    pub witness: Option<String>,
    /// Extra information, e.g. the quotient of a verified divisibility check.
    pub detail: Option<String>,
}

impl ConjReport {
    fn new(conjecture: u8, params: BTreeMap<String, String>) -> Self {
        ConjReport {
            conjecture,
            params,
            status: ConjStatus::Verified,
            witness: None,
            detail: None,
        }
    }

    fn skipped(mut self) -> Self {
        self.status = ConjStatus::SkippedBudget;
        self
    }

    fn counterexample(mut self, witness: String) -> Self {
        self.status = ConjStatus::Counterexample;
        self.witness = Some(witness);
        self
    }

    pub fn is_verified(&self) -> bool {
        self.status == ConjStatus::Verified
    }
}

fn params_a(a: &[u32]) -> BTreeMap<String, String> {
    [("A".to_string(), format!("{a:?}"))].into_iter().collect()
}

/// G_A(X) = sum over 0 <= i_j < 2^(a_j) of
/// (-1)^(sum s_2(i_j)) (x + sum i_j x_j)^N with N = sum a_j,
/// conjectured equal to (-1)^N 2^(sum C(a_j,2)) N! prod x_j^(a_j).
pub fn conj1_check(a: &[u32], budget: u64) -> ConjReport {
    let report = ConjReport::new(1, params_a(a));
    let n_total: u32 = a.iter().sum();
    let bits = n_total; // prod 2^(a_j) = 2^N terms
    if u128::from(budget) < (1u128 << bits.min(127)) {
        return report.skipped();
    }
    let mut lhs = MultiPoly::zero(1);
    let mut slots: Vec<(Var, BigRational)> = Vec::with_capacity(a.len() + 1);
    for flat in 0..(1u64 << bits) {
        // the bit blocks of the flat index are the component indices, and
        // binary digit sums add up across blocks
        slots.clear();
        slots.push((Var::X, BigRational::one()));
        let mut offset = 0u32;
        for (j, &aj) in a.iter().enumerate() {
            let ij = (flat >> offset) & ((1u64 << aj) - 1);
            offset += aj;
            slots.push((Var::Xi(j as u32 + 1), BigRational::from_integer(ij.into())));
        }
        let expanded = MultiPoly::linear_power(1, &slots, n_total);
        if ptm_sign(flat) == 1 {
            lhs.add_assign(&expanded);
        } else {
            lhs.sub_assign(&expanded);
        }
    }
    let rhs = conj1_rhs(a);
    let diff = lhs.sub(&rhs);
    if diff.is_zero() {
        report
    } else {
        report.counterexample(diff.render_truncated(WITNESS_TERMS))
    }
}

fn conj1_rhs(a: &[u32]) -> MultiPoly {
    let n_total: u32 = a.iter().sum();
    let exp2: u32 = a.iter().map(|&aj| aj * aj.saturating_sub(1) / 2).sum();
    let sign = if n_total.is_multiple_of(2) { 1 } else { -1 };
    let scalar = BigRational::from_integer(
        BigInt::from(sign) * factorial(n_total) * (BigInt::one() << exp2),
    );
    let mono = Monomial::from_pairs(
        a.iter()
            .enumerate()
            .filter(|(_, aj)| **aj > 0)
            .map(|(j, &aj)| (Var::Xi(j as u32 + 1), aj)),
    );
    MultiPoly::monomial(1, mono, Cyclotomic::from_rational(1, scalar))
}

/// G_A(X, Y) = sum over 0 <= i_j < k^(a_j) of
/// zeta^(sum s_k(i_j)) (sum_j s_k(i_j) x_j + i_j y_j)^N with N = sum a_j.
///
/// For k = 2 the conjectured closed form is
/// (-1)^N N! prod_j prod_{i<a_j} (x_j + 2^i y_j); for k > 2 the product
/// prod_j prod_{i<a_j} (x_j + k^i y_j) is conjectured to divide G_A, and the
/// quotient is reported on success.
pub fn conj2_check(k: u32, d: u32, a: &[u32], budget: u64) -> Result<ConjReport> {
    if k < 2 {
        return Err(Error::InvalidParameter(
            "conjecture 2 requires k >= 2".into(),
        ));
    }
    if d <= 1 || !k.is_multiple_of(d) {
        return Err(Error::InvalidRootOrder { k, d });
    }
    let mut params = params_a(a);
    params.insert("k".into(), k.to_string());
    params.insert("d".into(), d.to_string());
    // the statement admits several index readings; every report carries the
    // one implemented
    params.insert(
        "reading".into(),
        "len(A) summation indices i_j < k^(a_j); exponent = sum(A); part (1) products over i < a_j"
            .into(),
    );
    let report = ConjReport::new(2, params);
    let n_total: u32 = a.iter().sum();
    let terms = u128::from(k).checked_pow(n_total).unwrap_or(u128::MAX);
    if terms > u128::from(budget) {
        return Ok(report.skipped());
    }
    let zeta = Cyclotomic::root(d);
    let zeta_pows: Vec<Cyclotomic> = (0..u64::from(d)).map(|e| zeta.pow(e)).collect();
    let mut lhs = MultiPoly::zero(d);
    let mut slots: Vec<(Var, BigRational)> = Vec::with_capacity(2 * a.len());
    for flat in 0..(terms as u64) {
        slots.clear();
        let mut rest = flat;
        let mut total_digit_sum = 0u64;
        for (j, &aj) in a.iter().enumerate() {
            let range = u64::from(k).pow(aj);
            let ij = rest % range;
            rest /= range;
            let s = digit_sum(ij, k);
            total_digit_sum += u64::from(s);
            slots.push((Var::Xi(j as u32 + 1), BigRational::from_integer(s.into())));
            slots.push((Var::Yi(j as u32 + 1), BigRational::from_integer(ij.into())));
        }
        let expanded = MultiPoly::linear_power(d, &slots, n_total);
        let scale = &zeta_pows[(total_digit_sum % u64::from(d)) as usize];
        lhs.add_scaled_assign(&expanded, scale);
    }
    if k == 2 {
        let sign = if n_total.is_multiple_of(2) { 1 } else { -1 };
        let mut rhs = MultiPoly::from_rational(
            d,
            BigRational::from_integer(BigInt::from(sign) * factorial(n_total)),
        );
        for (j, &aj) in a.iter().enumerate() {
            for i in 0..aj {
                rhs = rhs.mul(&linear_xy(d, j as u32 + 1, BigInt::one() << i));
            }
        }
        let diff = lhs.sub(&rhs);
        if diff.is_zero() {
            Ok(report)
        } else {
            Ok(report.counterexample(diff.render_truncated(WITNESS_TERMS)))
        }
    } else {
        let mut quotient = lhs;
        for (j, &aj) in a.iter().enumerate() {
            for i in 0..aj {
                let divisor = linear_xy(d, j as u32 + 1, BigInt::from(k).pow(i));
                match quotient.exact_divide_linear(&divisor) {
                    Ok(q) => quotient = q,
                    Err(Error::NotDivisible) => {
                        return Ok(report.counterexample(format!(
                            "not divisible by {}: remainder in {}",
                            divisor.render(),
                            quotient.render_truncated(WITNESS_TERMS)
                        )));
                    }
                    Err(other) => return Err(other),
                }
            }
        }
        let mut done = report;
        done.detail = Some(format!(
            "quotient = {}",
            quotient.render_truncated(WITNESS_TERMS)
        ));
        Ok(done)
    }
}

fn linear_xy(order: u32, j: u32, y_scale: BigInt) -> MultiPoly {
    MultiPoly::var(order, Var::Xi(j))
        .add(&MultiPoly::var(order, Var::Yi(j)).scale_rat(&BigRational::from_integer(y_scale)))
}

/// The m-fold sum sum over (i_1..i_m) in [0, 2^n)^m of
/// (-1)^(s_2(i_1 + ... + i_m)) (t + sum i_j x_j)^n.
///
/// Checked claims: the t-degree is m - 1; for m = 1 the sum equals
/// (-1)^n n! 2^(n(n-1)/2) x_1^n; for m = 2 it equals the displayed closed
/// form built from the divided differences (x_1^j - x_2^j)/(x_1 - x_2).
pub fn conj3_check(m: u32, n: u32, budget: u64) -> ConjReport {
    let params: BTreeMap<String, String> = [
        ("m".to_string(), m.to_string()),
        ("n".to_string(), n.to_string()),
    ]
    .into_iter()
    .collect();
    let report = ConjReport::new(3, params);
    assert!(m >= 1 && n >= 1, "conjecture 3 requires m, n >= 1");
    let bits = n.saturating_mul(m);
    if bits >= 64 || u128::from(budget) < (1u128 << bits) {
        return report.skipped();
    }
    let mut lhs = MultiPoly::zero(1);
    let mut slots: Vec<(Var, BigRational)> = Vec::with_capacity(m as usize + 1);
    let mask = (1u64 << n) - 1;
    for flat in 0..(1u64 << bits) {
        slots.clear();
        slots.push((Var::T, BigRational::one()));
        let mut index_sum = 0u64;
        for j in 0..m {
            let ij = (flat >> (n * j)) & mask;
            index_sum += ij;
            slots.push((Var::Xi(j + 1), BigRational::from_integer(ij.into())));
        }
        let expanded = MultiPoly::linear_power(1, &slots, n);
        if ptm_sign(index_sum) == 1 {
            lhs.add_assign(&expanded);
        } else {
            lhs.sub_assign(&expanded);
        }
    }
    let deg_t = lhs.degree_in(Var::T);
    if lhs.is_zero() || deg_t != m - 1 {
        return report.counterexample(format!(
            "t-degree is {} (expected {}): {}",
            deg_t,
            m - 1,
            lhs.render_truncated(WITNESS_TERMS)
        ));
    }
    let closed = match m {
        1 => Some(conj3_m1_closed(n)),
        2 => Some(conj3_m2_closed(n)),
        _ => None,
    };
    if let Some(rhs) = closed {
        let diff = lhs.sub(&rhs);
        if !diff.is_zero() {
            return report.counterexample(diff.render_truncated(WITNESS_TERMS));
        }
    }
    report
}

fn conj3_scale(n: u32) -> BigRational {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    BigRational::from_integer(
        BigInt::from(sign) * factorial(n) * (BigInt::one() << (n * n.saturating_sub(1) / 2)),
    )
}

fn conj3_m1_closed(n: u32) -> MultiPoly {
    MultiPoly::monomial(
        1,
        Monomial::from_pairs([(Var::Xi(1), n)]),
        Cyclotomic::from_rational(1, conj3_scale(n)),
    )
}

/// (x_1^j - x_2^j)/(x_1 - x_2) as the polynomial sum over a + b = j - 1 of
/// x_1^a x_2^b; zero for j = 0, so the formula stays exact at x_1 = x_2.
fn divided_difference(j: u32) -> MultiPoly {
    let mut out = MultiPoly::zero(1);
    if j == 0 {
        return out;
    }
    for a in 0..j {
        out = out.add(&MultiPoly::monomial(
            1,
            Monomial::from_pairs([(Var::Xi(1), a), (Var::Xi(2), j - 1 - a)]),
            Cyclotomic::one(1),
        ));
    }
    out
}

fn conj3_m2_closed(n: u32) -> MultiPoly {
    let t = MultiPoly::var(1, Var::T);
    let x1x2 = MultiPoly::var(1, Var::Xi(1)).mul(&MultiPoly::var(1, Var::Xi(2)));
    let two = BigRational::from_integer(2.into());
    let two_n = BigRational::from_integer(BigInt::one() << n);
    let two_n_minus_1 = BigRational::from_integer((BigInt::one() << n) - BigInt::one());
    let body = divided_difference(n)
        .scale_rat(&two)
        .mul(&t)
        .add(&divided_difference(n + 1).scale_rat(&two_n))
        .add(
            &x1x2
                .mul(&divided_difference(n - 1))
                .scale_rat(&two_n_minus_1),
        );
    body.scale_rat(&conj3_scale(n))
}

/// Nonnegative integer tuples with the given number of components and
/// bounded total, in lexicographic order.
fn tuples_with_bounded_sum(components: u32, max_total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; components as usize];
    fn rec(idx: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[idx] = v;
            rec(idx + 1, left - v, cur, out);
        }
    }
    rec(0, max_total, &mut cur, &mut out);
    out
}

/// Sweep conjecture 1 over all A with at most `max_components` components
/// and total at most `max_total`.
pub fn conj1_sweep(max_total: u32, max_components: u32, budget: u64) -> Vec<ConjReport> {
    let mut points = Vec::new();
    for c in 1..=max_components {
        points.extend(tuples_with_bounded_sum(c, max_total));
    }
    points.par_iter().map(|a| conj1_check(a, budget)).collect()
}

/// Sweep conjecture 2 at base k (root order d) over all A with at most
/// `max_components` components and total at most `max_total`.
pub fn conj2_sweep(
    k: u32,
    d: u32,
    max_total: u32,
    max_components: u32,
    budget: u64,
) -> Result<Vec<ConjReport>> {
    let mut points = Vec::new();
    for c in 1..=max_components {
        points.extend(tuples_with_bounded_sum(c, max_total));
    }
    points
        .par_iter()
        .map(|a| conj2_check(k, d, a, budget))
        .collect()
}

/// Sweep conjecture 3 over all (m, n) with m, n >= 1 and 2^(n m) within
/// `max_total` terms.
pub fn conj3_sweep(max_total: u64, budget: u64) -> Vec<ConjReport> {
    let mut points = Vec::new();
    for m in 1..=63u32 {
        if (1u128 << m) > u128::from(max_total) {
            break;
        }
        for n in 1..=63u32 {
            let bits = m.saturating_mul(n);
            if bits >= 128 || (1u128 << bits) > u128::from(max_total) {
                break;
            }
            points.push((m, n));
        }
    }
    points
        .par_iter()
        .map(|&(m, n)| conj3_check(m, n, budget))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUDGET: u64 = 1 << 20;

    #[test]
    fn conj1_single_components() {
        // A = (1): x - (x + x1) = -x1
        let r = conj1_check(&[1], BUDGET);
        assert!(r.is_verified(), "{:?}", r.witness);
        // A = (n) reduces to the one-variable diagonal identity
        for n in 0..=6 {
            assert!(conj1_check(&[n], BUDGET).is_verified(), "A=({n})");
        }
    }

    #[test]
    fn conj1_pairs() {
        assert!(conj1_check(&[1, 1], BUDGET).is_verified());
        assert!(conj1_check(&[2, 1], BUDGET).is_verified());
        assert!(conj1_check(&[2, 2], BUDGET).is_verified());
        assert!(conj1_check(&[0, 2], BUDGET).is_verified());
        assert!(conj1_check(&[1, 1, 1], BUDGET).is_verified());
    }

    #[test]
    fn conj1_budget_skip() {
        let r = conj1_check(&[5, 5], 16);
        assert_eq!(r.status, ConjStatus::SkippedBudget);
        assert!(r.witness.is_none());
    }

    #[test]
    fn conj2_k2() {
        assert!(conj2_check(2, 2, &[1], BUDGET).unwrap().is_verified());
        assert!(conj2_check(2, 2, &[3], BUDGET).unwrap().is_verified());
        assert!(conj2_check(2, 2, &[1, 1], BUDGET).unwrap().is_verified());
        assert!(conj2_check(2, 2, &[2, 1], BUDGET).unwrap().is_verified());
        assert!(conj2_check(2, 2, &[0], BUDGET).unwrap().is_verified());
    }

    #[test]
    fn conj2_k3_divisibility() {
        let r = conj2_check(3, 3, &[1], BUDGET).unwrap();
        assert!(r.is_verified(), "{:?}", r.witness);
        assert!(r.detail.as_deref().unwrap_or("").starts_with("quotient"));
        let r = conj2_check(3, 3, &[1, 1], BUDGET).unwrap();
        assert!(r.is_verified(), "{:?}", r.witness);
        let r = conj2_check(3, 3, &[2], BUDGET).unwrap();
        assert!(r.is_verified(), "{:?}", r.witness);
    }

    #[test]
    fn conj2_validation() {
        assert!(matches!(
            conj2_check(3, 2, &[1], BUDGET),
            Err(Error::InvalidRootOrder { .. })
        ));
    }

    #[test]
    fn conj3_small() {
        for n in 1..=5 {
            let r = conj3_check(1, n, BUDGET);
            assert!(r.is_verified(), "m=1 n={n}: {:?}", r.witness);
        }
        for n in 1..=4 {
            let r = conj3_check(2, n, BUDGET);
            assert!(r.is_verified(), "m=2 n={n}: {:?}", r.witness);
        }
        // m = 3: only the degree claim is checked
        assert!(conj3_check(3, 2, BUDGET).is_verified());
    }

    #[test]
    fn conj3_m2_n1_expansion() {
        // the four-term expansion -2t - 2x1 - 2x2
        let r = conj3_check(2, 1, BUDGET);
        assert!(r.is_verified(), "{:?}", r.witness);
    }

    #[test]
    fn sweep_enumeration() {
        let reports = conj3_sweep(64, BUDGET);
        // (m,n): m=1,n<=6; m=2,n<=3; m=3,n<=2; m=4..6,n=1
        assert_eq!(reports.len(), 6 + 3 + 2 + 1 + 1 + 1);
        // the t-degree claim caps at the total degree n, so points with
        // n < m - 1 are honest counterexamples to the literal statement
        for r in &reports {
            let m: u32 = r.params["m"].parse().unwrap();
            let n: u32 = r.params["n"].parse().unwrap();
            if n + 1 >= m {
                assert!(r.is_verified(), "m={m} n={n}: {:?}", r.witness);
            } else {
                assert_eq!(r.status, ConjStatus::Counterexample, "m={m} n={n}");
                assert!(r.witness.is_some());
            }
        }
        let reports = conj1_sweep(3, 2, BUDGET);
        assert!(reports.iter().all(|r| r.is_verified()));
        // 1-component tuples: 4; 2-component: C(3+2,2) = 10
        assert_eq!(reports.len(), 4 + 10);
    }

    #[test]
    fn conj_report_json() {
        let r = conj1_check(&[1], BUDGET);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["conjecture"], 1);
        assert_eq!(json["status"], "verified");
        assert_eq!(json["witness"], serde_json::Value::Null);
    }

    #[test]
    fn reports_are_reproducible() {
        assert_eq!(conj1_check(&[2, 1], BUDGET), conj1_check(&[2, 1], BUDGET));
        assert_eq!(
            conj2_check(3, 3, &[1, 1], BUDGET).unwrap(),
            conj2_check(3, 3, &[1, 1], BUDGET).unwrap()
        );
        assert_eq!(conj3_check(2, 3, BUDGET), conj3_check(2, 3, BUDGET));
        assert_eq!(conj3_check(3, 1, BUDGET), conj3_check(3, 1, BUDGET));
    }

    #[test]
    fn closed_forms_agree_with_the_one_variable_diagonal() {
        // the single-component closed forms carry the same scalar as the
        // diagonal constant f_{n,n} of u(n) = n
        use crate::digitseq::SeqSpec;
        use crate::ptm::PtmContext;
        let ctx = PtmContext::primitive(SeqSpec::preset_n(2)).unwrap();
        for n in 1..=6u32 {
            let diag = ctx.f_brute(n, n).unwrap();
            let expected = diag
                .coeff(&Monomial::from_pairs([(Var::V(1), n)]))
                .as_rational()
                .unwrap()
                .clone();
            let conj1_scalar = conj1_rhs(&[n])
                .coeff(&Monomial::from_pairs([(Var::Xi(1), n)]))
                .as_rational()
                .unwrap()
                .clone();
            assert_eq!(conj1_scalar, expected, "conjecture 1 scalar at n={n}");
            let conj3_scalar = conj3_m1_closed(n)
                .coeff(&Monomial::from_pairs([(Var::Xi(1), n)]))
                .as_rational()
                .unwrap()
                .clone();
            assert_eq!(conj3_scalar, expected, "conjecture 3 scalar at n={n}");
        }
    }
}
