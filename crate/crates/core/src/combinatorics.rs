//! Exact combinatorial quantities: factorials, binomials, Stirling numbers,
//! elementary symmetric polynomials and integer compositions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(m, r), zero when r > m.
pub fn binomial(m: u32, r: u32) -> BigInt {
    if r > m {
        return BigInt::zero();
    }
    let r = r.min(m - r);
    let mut acc = BigInt::one();
    for i in 0..u64::from(r) {
        acc = acc * (u64::from(m) - i) / (i + 1);
    }
    acc
}

/// Stirling number of the second kind S(m, n): partitions of an m-set into n
/// nonempty blocks. Computed by the triangular recurrence
/// S(m, n) = n S(m-1, n) + S(m-1, n-1).
pub fn stirling2(m: u32, n: u32) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    if m == 0 {
        return BigInt::one(); // S(0,0)
    }
    if n == 0 {
        return BigInt::zero();
    }
    let mut prev = vec![BigInt::zero(); n as usize + 1];
    prev[0] = BigInt::one();
    for i in 1..=m {
        let mut curr = vec![BigInt::zero(); n as usize + 1];
        let limit = n.min(i) as usize;
        for j in 1..=limit {
            curr[j] = &prev[j] * BigInt::from(j) + &prev[j - 1];
        }
        prev = curr;
    }
    prev[n as usize].clone()
}

/// Elementary symmetric polynomial sigma_j evaluated at the given values,
/// via the product expansion prod (1 + v_i z) accumulated degree by degree.
pub fn elem_sym(values: &[BigRational], j: usize) -> BigRational {
    if j > values.len() {
        return BigRational::zero();
    }
    let mut sigma = vec![BigRational::zero(); j + 1];
    sigma[0] = BigRational::one();
    for v in values {
        for d in (1..=j).rev() {
            let bump = &sigma[d - 1] * v;
            sigma[d] += bump;
        }
    }
    sigma[j].clone()
}

/// All compositions of m into positive parts, in a fixed deterministic order.
/// `compositions(0)` is the single empty composition; there are 2^(m-1)
/// compositions for m >= 1.
pub fn compositions(m: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![vec![]];
    }
    let gaps = m - 1;
    let mut out = Vec::with_capacity(1 << gaps.min(20));
    for mask in 0u64..(1u64 << gaps) {
        let mut parts = Vec::new();
        let mut cur = 1u32;
        for pos in 0..gaps {
            if mask >> pos & 1 == 1 {
                parts.push(cur);
                cur = 1;
            } else {
                cur += 1;
            }
        }
        parts.push(cur);
        out.push(parts);
    }
    out
}
