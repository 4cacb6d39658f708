//! The f/F/H machinery: the digit-sum weighted polynomial family
//! f_{m,n}(x) = sum_{i < k^n} zeta^(s_k(i)) (x + u(i))^m, its constant terms
//! F_{m,n} and the normalized family H_{m,n}, each computed by independent
//! paths (direct summation, the F-recurrence, closed forms) that the
//! verification suites compare against each other.

mod brute;
mod chi;
mod closed;
mod corollaries;
mod tables;

pub use chi::{chi_poly, monomial_basis, sym_power_matrix};
pub use closed::closed_f_value;
pub use corollaries::{cor2_check, cor3_check};

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Cyclotomic, MultiPoly};
use crate::digitseq::{vector_poly, SeqSpec};
use crate::error::{Error, Result};

/// Default cap on the number of brute-force summation terms k^n.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Evaluation context: a sequence spec, a k-th root of unity zeta of order
/// d | k (d > 1), a term budget for the brute-force kernels, and memo tables
/// shared by the recurrence paths.
///
/// All cache entries are written once and never mutated; methods take
/// `&self` and the context can be shared across threads.
pub struct PtmContext {
    spec: SeqSpec,
    order: u32,
    zeta: Cyclotomic,
    zeta_powers: Vec<Cyclotomic>,
    budget: u64,
    caches: Caches,
}

impl std::fmt::Debug for PtmContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PtmContext")
            .field("spec", &self.spec)
            .field("order", &self.order)
            .field("budget", &self.budget)
            .finish_non_exhaustive()
    }
}

#[derive(Default)]
struct Caches {
    a: RwLock<HashMap<u32, Cyclotomic>>,
    pq: RwLock<Vec<Vec<BigRational>>>,
    q_pows: RwLock<Vec<MultiPoly>>,
    f_rec: RwLock<HashMap<(u32, u32), MultiPoly>>,
    h_step: RwLock<HashMap<(u32, u32), MultiPoly>>,
}

impl PtmContext {
    /// Context with zeta of the given order d, which must divide k and
    /// exceed 1. zeta^k = 1 follows from d | k.
    pub fn new(spec: SeqSpec, d: u32) -> Result<Self> {
        let k = spec.k();
        if d <= 1 || !k.is_multiple_of(d) {
            return Err(Error::InvalidRootOrder { k, d });
        }
        let zeta = Cyclotomic::root(d);
        let zeta_powers = (0..u64::from(d)).map(|e| zeta.pow(e)).collect();
        Ok(PtmContext {
            spec,
            order: d,
            zeta,
            zeta_powers,
            budget: DEFAULT_BUDGET,
            caches: Caches::default(),
        })
    }

    /// Context with the primitive k-th root of unity (d = k).
    pub fn primitive(spec: SeqSpec) -> Result<Self> {
        let k = spec.k();
        Self::new(spec, k)
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget.max(1);
        self
    }

    pub fn spec(&self) -> &SeqSpec {
        &self.spec
    }

    /// Field order d of the scalar coefficients.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zeta(&self) -> &Cyclotomic {
        &self.zeta
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// zeta^e, reduced by the multiplicative order.
    pub fn zeta_pow(&self, e: u64) -> Cyclotomic {
        self.zeta_powers[(e % u64::from(self.order)) as usize].clone()
    }

    /// Number of brute-force terms k^n, or a budget error.
    pub(crate) fn checked_terms(&self, n: u32) -> Result<u64> {
        let required = u128::from(self.spec.k())
            .checked_pow(n)
            .unwrap_or(u128::MAX);
        if required > u128::from(self.budget) {
            return Err(Error::BudgetExceeded {
                required,
                budget: self.budget,
            });
        }
        Ok(required as u64)
    }

    /// a_r = sum_{j=0}^{k-1} j^r zeta^j. In particular a_0 = 0.
    pub fn a_seq(&self, r: u32) -> Cyclotomic {
        if let Some(hit) = self.caches.a.read().unwrap().get(&r) {
            return hit.clone();
        }
        let mut acc = Cyclotomic::zero(self.order);
        for j in 0..u64::from(self.spec.k()) {
            let jr = BigInt::from(j).pow(r);
            if jr.is_zero() {
                continue;
            }
            acc = acc.add(&self.zeta_pow(j).scale(&BigRational::from_integer(jr)));
        }
        self.caches
            .a
            .write()
            .unwrap()
            .entry(r)
            .or_insert_with(|| acc.clone());
        acc
    }

    /// P^j(q) as a rational vector, memoized.
    pub fn p_power_q(&self, j: usize) -> Vec<BigRational> {
        {
            let pq = self.caches.pq.read().unwrap();
            if j < pq.len() {
                return pq[j].clone();
            }
        }
        let mut pq = self.caches.pq.write().unwrap();
        if pq.is_empty() {
            pq.push(self.spec.q().to_vec());
        }
        while pq.len() <= j {
            let next = self
                .spec
                .p()
                .mul_vec(pq.last().unwrap())
                .expect("dimensions agree");
            pq.push(next);
        }
        pq[j].clone()
    }

    /// P^j(q) as a linear polynomial in v1..v_nu.
    pub fn p_power_q_poly(&self, j: usize) -> MultiPoly {
        vector_poly(&self.p_power_q(j), self.order)
    }

    /// q as a linear polynomial.
    pub fn q_poly(&self) -> MultiPoly {
        self.p_power_q_poly(0)
    }

    /// q^r as a polynomial, memoized.
    pub(crate) fn q_poly_pow(&self, r: u32) -> MultiPoly {
        let r = r as usize;
        {
            let pows = self.caches.q_pows.read().unwrap();
            if r < pows.len() {
                return pows[r].clone();
            }
        }
        let mut pows = self.caches.q_pows.write().unwrap();
        if pows.is_empty() {
            pows.push(MultiPoly::one(self.order));
        }
        while pows.len() <= r {
            let next = pows.last().unwrap().mul(&self.q_poly());
            pows.push(next);
        }
        pows[r].clone()
    }

    pub(crate) fn f_rec_cached(&self, key: (u32, u32)) -> Option<MultiPoly> {
        self.caches.f_rec.read().unwrap().get(&key).cloned()
    }

    pub(crate) fn f_rec_store(&self, key: (u32, u32), value: MultiPoly) {
        self.caches
            .f_rec
            .write()
            .unwrap()
            .entry(key)
            .or_insert(value);
    }

    pub(crate) fn h_step_cached(&self, key: (u32, u32)) -> Option<MultiPoly> {
        self.caches.h_step.read().unwrap().get(&key).cloned()
    }

    pub(crate) fn h_step_store(&self, key: (u32, u32), value: MultiPoly) {
        self.caches
            .h_step
            .write()
            .unwrap()
            .entry(key)
            .or_insert(value);
    }

    /// (zeta - 1)^n as a scalar.
    pub(crate) fn zeta_minus_one_pow(&self, n: u32) -> Cyclotomic {
        self.zeta
            .sub(&Cyclotomic::one(self.order))
            .pow(u64::from(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_order_validation() {
        assert!(PtmContext::new(SeqSpec::preset_n(4), 2).is_ok());
        assert!(PtmContext::new(SeqSpec::preset_n(4), 4).is_ok());
        assert_eq!(
            PtmContext::new(SeqSpec::preset_n(4), 3).unwrap_err(),
            Error::InvalidRootOrder { k: 4, d: 3 }
        );
        assert_eq!(
            PtmContext::new(SeqSpec::preset_n(2), 1).unwrap_err(),
            Error::InvalidRootOrder { k: 2, d: 1 }
        );
    }

    #[test]
    fn a_seq_k2() {
        let ctx = PtmContext::primitive(SeqSpec::preset_n(2)).unwrap();
        assert!(ctx.a_seq(0).is_zero());
        for r in 1..=8 {
            assert_eq!(ctx.a_seq(r), Cyclotomic::from_integer(2, -1), "a_{r} = -1");
        }
    }

    #[test]
    fn a_seq_closed_forms() {
        for k in 2..=6u32 {
            let ctx = PtmContext::primitive(SeqSpec::preset_n(k)).unwrap();
            let zeta = ctx.zeta().clone();
            let one = Cyclotomic::one(k);
            assert!(ctx.a_seq(0).is_zero(), "a_0 = 0 for k={k}");
            // a_1 = k / (zeta - 1)
            let a1 = Cyclotomic::from_integer(k, i64::from(k))
                .div(&zeta.sub(&one))
                .unwrap();
            assert_eq!(ctx.a_seq(1), a1, "a_1 for k={k}");
            // a_2 = k((k-2) zeta - k) / (zeta - 1)^2
            let num = zeta
                .scale(&BigRational::from_integer((i64::from(k) - 2).into()))
                .sub(&Cyclotomic::from_integer(k, i64::from(k)))
                .scale(&BigRational::from_integer(i64::from(k).into()));
            let a2 = num.div(&zeta.sub(&one).pow(2)).unwrap();
            assert_eq!(ctx.a_seq(2), a2, "a_2 for k={k}");
        }
    }

    #[test]
    fn a_seq_matches_direct_sum_nonprimitive() {
        // non-primitive root: k = 4, d = 2
        let ctx = PtmContext::new(SeqSpec::preset_n(4), 2).unwrap();
        // a_1 = 0 - 1 + 2 - 3 = -2
        assert_eq!(ctx.a_seq(1), Cyclotomic::from_integer(2, -2));
        assert!(ctx.a_seq(0).is_zero());
    }

    #[test]
    fn p_power_q_values() {
        let ctx = PtmContext::primitive(SeqSpec::preset_n(2)).unwrap();
        for j in 0..6usize {
            assert_eq!(
                ctx.p_power_q(j),
                vec![BigRational::from_integer(BigInt::from(1) << j)]
            );
        }
    }

    #[test]
    fn budget_guard() {
        let ctx = PtmContext::primitive(SeqSpec::preset_n(2))
            .unwrap()
            .with_budget(8);
        assert_eq!(ctx.checked_terms(3).unwrap(), 8);
        assert_eq!(
            ctx.checked_terms(4).unwrap_err(),
            Error::BudgetExceeded {
                required: 16,
                budget: 8
            }
        );
    }
}
