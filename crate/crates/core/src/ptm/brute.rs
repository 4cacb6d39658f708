//! Direct summation of the defining sums, the oracle every other path is
//! compared against.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{MultiPoly, Var};
use crate::digitseq::digit_sum;
use crate::error::Result;

use super::PtmContext;

impl PtmContext {
    /// f_{m,n}(x) = sum_{i < k^n} zeta^(s_k(i)) (x + u(i))^m by direct
    /// summation, expanding each power multinomially.
    pub fn f_brute(&self, m: u32, n: u32) -> Result<MultiPoly> {
        self.brute_sum(m, n, true)
    }

    /// F_{m,n} = f_{m,n}(0) by direct summation.
    pub fn f_constant_brute(&self, m: u32, n: u32) -> Result<MultiPoly> {
        self.brute_sum(m, n, false)
    }

    fn brute_sum(&self, m: u32, n: u32, include_x: bool) -> Result<MultiPoly> {
        let total = self.checked_terms(n)?;
        let k = self.spec().k();
        let dim = self.spec().dim();
        let order = self.order();
        let powers = self.spec().p_powers_q(n as usize);
        // partial sums per worker; exact addition commutes, so the reduce
        // order cannot affect the value
        let chunk = 1 + total / 64;
        let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
        let sum = starts
            .into_par_iter()
            .map(|start| {
                let stop = (start + chunk).min(total);
                let mut acc = MultiPoly::zero(order);
                let mut slots: Vec<(Var, BigRational)> = Vec::with_capacity(dim + 1);
                for i in start..stop {
                    slots.clear();
                    if include_x {
                        slots.push((Var::X, BigRational::one()));
                    }
                    for (j, c) in u_coords(i, k, &powers, dim).into_iter().enumerate() {
                        slots.push((Var::V(j as u32 + 1), c));
                    }
                    let expanded = MultiPoly::linear_power(order, &slots, m);
                    let sign = self.zeta_pow(u64::from(digit_sum(i, k)));
                    acc.add_scaled_assign(&expanded, &sign);
                }
                acc
            })
            .reduce(|| MultiPoly::zero(order), |a, b| a.add(&b));
        Ok(sum)
    }
}

/// u(i) from precomputed P^j(q) vectors; i must have at most powers.len() digits.
fn u_coords(mut i: u64, k: u32, powers: &[Vec<BigRational>], dim: usize) -> Vec<BigRational> {
    let mut acc = vec![BigRational::zero(); dim];
    let mut pos = 0usize;
    while i > 0 {
        let d = (i % u64::from(k)) as u32;
        i /= u64::from(k);
        if d > 0 {
            let scale = BigRational::from_integer(d.into());
            for (a, p) in acc.iter_mut().zip(&powers[pos]) {
                *a += p * &scale;
            }
        }
        pos += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Cyclotomic, Monomial};
    use crate::digitseq::SeqSpec;
    use crate::error::Error;

    fn mono(pairs: &[(Var, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn nieto_n2_value() {
        // expanding x^2 - (x+1)^2 - (x+2)^2 + (x+3)^2 gives the constant 4
        let ctx = PtmContext::primitive(SeqSpec::preset_n(2)).unwrap();
        let f = ctx.f_brute(2, 2).unwrap();
        assert_eq!(
            f,
            MultiPoly::monomial(2, mono(&[(Var::V(1), 2)]), Cyclotomic::from_integer(2, 4))
        );
        assert_eq!(f.degree_in(Var::X), 0);
    }

    #[test]
    fn vanishing_below_diagonal() {
        let ctx = PtmContext::primitive(SeqSpec::preset_digit_sum_and_n(2)).unwrap();
        for n in 1..=5u32 {
            for m in 0..n {
                assert!(ctx.f_brute(m, n).unwrap().is_zero(), "f_{m},{n} = 0");
            }
        }
    }

    #[test]
    fn trivial_corner() {
        let ctx = PtmContext::primitive(SeqSpec::preset_n(2)).unwrap();
        assert_eq!(ctx.f_brute(0, 0).unwrap(), MultiPoly::one(2));
        // f_{m,0}(x) = x^m: only i = 0 contributes
        assert_eq!(ctx.f_brute(3, 0).unwrap(), MultiPoly::var(2, Var::X).pow(3));
        assert!(ctx.f_constant_brute(3, 0).unwrap().is_zero());
    }

    #[test]
    fn digit_sum_spec_value() {
        // F_{3,2} for u = s_2: 0 - 1 - 1 + 8 = 6
        let ctx = PtmContext::primitive(SeqSpec::preset_digit_sum(2)).unwrap();
        let f = ctx.f_constant_brute(3, 2).unwrap();
        assert_eq!(
            f,
            MultiPoly::monomial(2, mono(&[(Var::V(1), 3)]), Cyclotomic::from_integer(2, 6))
        );
    }

    #[test]
    fn budget_error() {
        let ctx = PtmContext::primitive(SeqSpec::preset_n(2))
            .unwrap()
            .with_budget(4);
        assert!(matches!(
            ctx.f_brute(1, 3),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
