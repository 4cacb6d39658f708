//! Closed-form evaluation: H_{m,n} as a sum over compositions of m, its
//! rational specialization for k = 2 and u(n) = n, and the closed forms of
//! the diagonal constants F_{n,n} and F_{n+1,n}.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{Cyclotomic, MultiPoly};
use crate::combinatorics::{compositions, factorial};

use super::PtmContext;

impl PtmContext {
    /// H_{m,n} as the composition sum: over every composition
    /// m = nu_1 + ... + nu_t (t >= 0),
    /// prod_i a_(nu_i+1) (zeta-1) / (k (nu_i+1)!) times
    /// sum over 0 <= l_1 < ... < l_t <= n-1 of prod_i P^(l_i)(q)^(nu_i).
    /// The empty composition contributes 1, so H_{0,n} = 1.
    pub fn h_closed_form(&self, m: u32, n: u32) -> MultiPoly {
        let order = self.order();
        let k = self.spec().k();
        let zeta_minus_one = self.zeta_minus_one_pow(1);
        let mut pq_pow_cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut acc = MultiPoly::zero(order);
        for parts in compositions(m) {
            let mut coeff = Cyclotomic::one(order);
            for &nu in &parts {
                let denom = BigInt::from(k) * factorial(nu + 1);
                coeff = coeff.mul(
                    &self
                        .a_seq(nu + 1)
                        .mul(&zeta_minus_one)
                        .scale(&BigRational::new(1.into(), denom)),
                );
            }
            if coeff.is_zero() {
                continue;
            }
            let tuple_sum = self.increasing_tuple_sum(&parts, n, &mut pq_pow_cache);
            acc = acc.add(&tuple_sum.scale(&coeff));
        }
        acc
    }

    /// sum over start <= l_1 < ... < l_t <= n-1 of prod_i P^(l_i)(q)^(nu_i),
    /// by recursive descent on the parts with memoized P^l(q) powers.
    fn increasing_tuple_sum(
        &self,
        parts: &[u32],
        n: u32,
        cache: &mut HashMap<(usize, u32), MultiPoly>,
    ) -> MultiPoly {
        self.tuple_sum_from(parts, n, 0, cache)
    }

    fn tuple_sum_from(
        &self,
        parts: &[u32],
        n: u32,
        start: u32,
        cache: &mut HashMap<(usize, u32), MultiPoly>,
    ) -> MultiPoly {
        let Some((&head, rest)) = parts.split_first() else {
            return MultiPoly::one(self.order());
        };
        let mut acc = MultiPoly::zero(self.order());
        // leave room for the remaining strictly increasing positions
        let room = rest.len() as u32;
        if n < room + 1 {
            return acc;
        }
        for l in start..(n - room) {
            let pow = cache
                .entry((l as usize, head))
                .or_insert_with(|| self.p_power_q_poly(l as usize).pow(head))
                .clone();
            let tail = self.tuple_sum_from(rest, n, l + 1, cache);
            acc.add_assign(&pow.mul(&tail));
        }
        acc
    }

    /// Closed forms of the diagonal constants:
    /// F_{n,n}   = d n! prod_{i<n} P^i(q)           with d = k^n/(zeta-1)^n,
    /// F_{n+1,n} = e (n+1)! prod_{i<n} P^i(q) * sum_{j<n} P^j(q)
    ///                          with e = k^n ((k-2) zeta - k) / (2 (zeta-1)^(n+1)).
    pub fn diagonal_closed_forms(&self, n: u32) -> (MultiPoly, MultiPoly) {
        let order = self.order();
        let k = self.spec().k();
        let kn = BigRational::from_integer(BigInt::from(k).pow(n));
        let d_scalar = self
            .zeta_minus_one_pow(n)
            .inv()
            .expect("zeta != 1")
            .scale(&kn);
        let e_num = self
            .zeta()
            .scale(&BigRational::from_integer((i64::from(k) - 2).into()))
            .sub(&Cyclotomic::from_integer(order, i64::from(k)))
            .scale(&(kn * BigRational::new(1.into(), 2.into())));
        let e_scalar = e_num
            .div(&self.zeta_minus_one_pow(n + 1))
            .expect("zeta != 1");
        let mut prod = MultiPoly::one(order);
        let mut sum = MultiPoly::zero(order);
        for i in 0..n as usize {
            let pq = self.p_power_q_poly(i);
            prod = prod.mul(&pq);
            sum = sum.add(&pq);
        }
        let f_nn = prod
            .scale(&d_scalar)
            .scale_rat(&BigRational::from_integer(factorial(n)));
        let f_n1n = prod
            .mul(&sum)
            .scale(&e_scalar)
            .scale_rat(&BigRational::from_integer(factorial(n + 1)));
        (f_nn, f_n1n)
    }
}

/// The k = 2, u(n) = n specialization of the composition sum:
/// F_{m+n,n} = (-1)^n (n+m)! 2^(n(n-1)/2) *
///   sum over compositions of m of prod 1/(nu_i+1)! *
///   sum over 0 <= l_1 < ... < l_t <= n-1 of 2^(l_1 nu_1 + ... + l_t nu_t).
pub fn closed_f_value(m: u32, n: u32) -> BigRational {
    let mut total = BigRational::from_integer(0.into());
    for parts in compositions(m) {
        let mut coeff = BigRational::one();
        for &nu in &parts {
            coeff /= BigRational::from_integer(factorial(nu + 1));
        }
        total += coeff * tuple_power_sum(&parts, 0, n);
    }
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let scale = BigRational::from_integer(
        BigInt::from(sign) * factorial(n + m) * (BigInt::one() << (n * (n.max(1) - 1) / 2)),
    );
    scale * total
}

fn tuple_power_sum(parts: &[u32], start: u32, n: u32) -> BigRational {
    match parts {
        [] => BigRational::one(),
        [nu, rest @ ..] => {
            let mut acc = BigRational::from_integer(0.into());
            let remaining = rest.len() as u32;
            for l in start..n.saturating_sub(remaining) {
                let weight = BigRational::from_integer(BigInt::one() << (l * nu));
                acc += weight * tuple_power_sum(rest, l + 1, n);
            }
            acc
        }
    }
}
