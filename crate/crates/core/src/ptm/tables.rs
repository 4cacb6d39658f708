//! Recurrence-driven evaluation paths for F_{m,n}, H_{m,n} and the
//! reconstruction of f_{m,n}(x) from its constants by repeated integration.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::MultiPoly;
use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};

use super::PtmContext;

impl PtmContext {
    /// F_{m,n} by the recurrence
    /// F_{m,n} = sum_{r=1}^{m-n+1} a_r C(m,r) q^r P(F_{m-r,n-1}),
    /// with base row F_{m,0} = 1 if m = 0 else 0. Memoized.
    pub fn f_constant(&self, m: u32, n: u32) -> MultiPoly {
        if let Some(hit) = self.f_rec_cached((m, n)) {
            return hit;
        }
        let value = if n == 0 {
            if m == 0 {
                MultiPoly::one(self.order())
            } else {
                MultiPoly::zero(self.order())
            }
        } else if m < n {
            MultiPoly::zero(self.order())
        } else {
            let mut acc = MultiPoly::zero(self.order());
            for r in 1..=(m - n + 1) {
                let child = self.f_constant(m - r, n - 1);
                if child.is_zero() {
                    continue;
                }
                let image = child
                    .apply_linear(self.spec().p())
                    .expect("F lies in the v-basis");
                let scalar = self
                    .a_seq(r)
                    .scale(&BigRational::from_integer(binomial(m, r)));
                if scalar.is_zero() {
                    continue;
                }
                acc = acc.add(&image.mul(&self.q_poly_pow(r)).scale(&scalar));
            }
            acc
        };
        self.f_rec_store((m, n), value.clone());
        value
    }

    /// f_{m,n}(x) rebuilt from f_{0,n} and the constants F_{1,n}..F_{m,n}
    /// via f_{j+1,n}(x) = (j+1) * integral_0^x f_{j,n}(t) dt + F_{j+1,n}.
    pub fn f_integrated(&self, m: u32, n: u32) -> MultiPoly {
        let mut f = self.f_constant(0, n);
        for j in 1..=m {
            f = f
                .integrate_x()
                .scale_rat(&BigRational::from_integer(j.into()))
                .add(&self.f_constant(j, n));
        }
        f
    }

    /// H_{m,n}: divide F_{m+n,n} by P^0(q), ..., P^(n-1)(q) in turn, then
    /// scale by (zeta-1)^n / (k^n (n+m)!). Requires every P^i(q) != 0;
    /// a nonzero remainder in any division step is reported as
    /// [`Error::NotDivisible`].
    pub fn h_from_constants(&self, m: u32, n: u32) -> Result<MultiPoly> {
        let mut value = self.f_constant(m + n, n);
        for i in 0..n as usize {
            let divisor = self.p_power_q_poly(i);
            if divisor.is_zero() {
                return Err(Error::InvalidLinearDivisor);
            }
            value = value.exact_divide_linear(&divisor)?;
        }
        let denom = BigInt::from(self.spec().k()).pow(n) * factorial(n + m);
        let scalar = self
            .zeta_minus_one_pow(n)
            .scale(&BigRational::new(1.into(), denom));
        Ok(value.scale(&scalar))
    }

    /// H_{m,n} by its own recurrence
    /// H_{m,n} = P(H_{m,n-1})
    ///         + sum_{r=2}^{m+1} a_r (zeta-1) / (k r!) q^(r-1) P(H_{m+1-r,n-1}),
    /// with H_{m,0} = 1 if m = 0 else 0. Memoized.
    pub fn h_step(&self, m: u32, n: u32) -> MultiPoly {
        if let Some(hit) = self.h_step_cached((m, n)) {
            return hit;
        }
        let value = if n == 0 {
            if m == 0 {
                MultiPoly::one(self.order())
            } else {
                MultiPoly::zero(self.order())
            }
        } else {
            let p = self.spec().p();
            let mut acc = self
                .h_step(m, n - 1)
                .apply_linear(p)
                .expect("H lies in the v-basis");
            let zeta_minus_one = self.zeta_minus_one_pow(1);
            for r in 2..=(m + 1) {
                let child = self.h_step(m + 1 - r, n - 1);
                if child.is_zero() {
                    continue;
                }
                let image = child.apply_linear(p).expect("H lies in the v-basis");
                let denom = BigInt::from(self.spec().k()) * factorial(r);
                let scalar = self
                    .a_seq(r)
                    .mul(&zeta_minus_one)
                    .scale(&BigRational::new(1.into(), denom));
                if scalar.is_zero() {
                    continue;
                }
                acc = acc.add(&image.mul(&self.q_poly_pow(r - 1)).scale(&scalar));
            }
            acc
        };
        self.h_step_store((m, n), value.clone());
        value
    }

    /// F_{m,n} recovered from the closed form of H: zero for m < n, else
    /// k^n m! / (zeta-1)^n * prod_{i<n} P^i(q) * H_closed(m-n, n).
    pub fn f_constant_from_closed(&self, m: u32, n: u32) -> MultiPoly {
        if m < n {
            return MultiPoly::zero(self.order());
        }
        let h = self.h_closed_form(m - n, n);
        let mut prod = h;
        for i in 0..n as usize {
            prod = prod.mul(&self.p_power_q_poly(i));
        }
        let numer = BigInt::from(self.spec().k()).pow(n) * factorial(m);
        let scalar = self
            .zeta_minus_one_pow(n)
            .inv()
            .expect("zeta != 1")
            .scale(&BigRational::from_integer(numer));
        prod.scale(&scalar)
    }
}
