//! Exact scalars in cyclotomic fields Q(zeta_d).
//!
//! An element is stored by its coordinates in the power basis
//! 1, z, ..., z^(phi(d)-1) of `Q[z]/(Phi_d(z))`, where Phi_d is the d-th
//! cyclotomic polynomial. The representation is canonical, so equality is
//! coefficient-wise comparison. Rationals are the d = 1 case (and d = 2,
//! where z = -1).

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Euler totient of d, by trial division.
pub fn euler_phi(d: u32) -> u32 {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(d: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=d).filter(|e| d.is_multiple_of(*e)).collect();
    out.sort_unstable();
    out
}

/// Exact division of integer polynomials (ascending coefficients), used only
/// where the division is known to be exact.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let q = &rem[i] / &lead;
        quot[i - dd] = q.clone();
        for j in 0..=dd {
            let sub = &q * &den[j];
            rem[i - dd + j] -= sub;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    while quot.len() > 1 && quot.last().map(|c| c.is_zero()).unwrap_or(false) {
        quot.pop();
    }
    quot
}

fn compute_cyclotomic_polynomial(d: u32) -> Vec<BigInt> {
    if d == 1 {
        return vec![-BigInt::one(), BigInt::one()]; // z - 1
    }
    // (z^d - 1) / prod_{e | d, e < d} Phi_e
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = -BigInt::one();
    num[d as usize] = BigInt::one();
    let mut quot = num;
    for e in divisors(d) {
        if e < d {
            let phi_e = cyclotomic_polynomial(e);
            quot = int_poly_div_exact(&quot, &phi_e);
        }
    }
    quot
}

/// Coefficients of the d-th cyclotomic polynomial Phi_d, ascending, monic.
pub fn cyclotomic_polynomial(d: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = cache.read().unwrap().get(&d) {
        return hit.clone();
    }
    let value = compute_cyclotomic_polynomial(d);
    cache
        .write()
        .unwrap()
        .entry(d)
        .or_insert_with(|| value.clone());
    value
}

/// Arithmetic operation selector for [`Cyclotomic::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element of Q(zeta_d) in the power basis of `Q[z]/(Phi_d(z))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    fn degree(order: u32) -> usize {
        euler_phi(order) as usize
    }

    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Cyclotomic {
            order,
            coeffs: vec![BigRational::zero(); Self::degree(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u32, value: BigRational) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = value;
        out
    }

    pub fn from_integer(order: u32, value: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(value.into()))
    }

    /// zeta_d: the class of z in `Q[z]/(Phi_d)`. Satisfies zeta_d^d = 1 and
    /// zeta_d != 1 for d > 1.
    pub fn root(order: u32) -> Self {
        let mut coeffs = vec![BigRational::zero(); 1.max(Self::degree(order))];
        match order {
            1 => coeffs[0] = BigRational::one(),  // z = 1 mod (z - 1)
            2 => coeffs[0] = -BigRational::one(), // z = -1 mod (z + 1)
            _ => coeffs[1] = BigRational::one(),
        }
        Cyclotomic { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates, length phi(order).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Some(r) when the element lies in Q, i.e. all higher basis coordinates vanish.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Reduce an arbitrary-length coefficient vector modulo Phi_d.
    fn reduce(order: u32, mut v: Vec<BigRational>) -> Self {
        let deg = Self::degree(order);
        if v.len() > deg {
            let phi: Vec<BigRational> = cyclotomic_polynomial(order)
                .into_iter()
                .map(BigRational::from_integer)
                .collect();
            for i in (deg..v.len()).rev() {
                if v[i].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut v[i], BigRational::zero());
                for j in 0..deg {
                    let sub = &c * &phi[j];
                    v[i - deg + j] -= sub;
                }
            }
        }
        v.truncate(deg);
        v.resize(deg, BigRational::zero());
        Cyclotomic { order, coeffs: v }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("cyclotomic order mismatch")
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("cyclotomic order mismatch")
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("cyclotomic order mismatch")
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.order));
        }
        let mut prod = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Ok(Self::reduce(self.order, prod))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[z]`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.order, r.recip()));
        }
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.order)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let (g, s) = ext_gcd_bezout(&self.coeffs, &phi);
        // Phi_d is irreducible over Q, so gcd(a, Phi_d) is a nonzero constant.
        debug_assert_eq!(poly_deg(&g), 0);
        let ginv = g[0].recip();
        let coeffs = s.iter().map(|c| c * &ginv).collect();
        Ok(Self::reduce(self.order, coeffs))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&other.inv()?))
    }

    /// Checked binary field operation; reports order mismatch and division by
    /// zero as errors instead of panicking.
    pub fn arith(&self, other: &Self, op: CycOp) -> Result<Self> {
        match op {
            CycOp::Add => self.checked_add(other),
            CycOp::Sub => self.checked_sub(other),
            CycOp::Mul => self.checked_mul(other),
            CycOp::Div => {
                self.check_order(other)?;
                self.div(other)
            }
        }
    }

    /// Canonical text form: a rational string when the element lies in Q,
    /// otherwise an integer polynomial in z over a common denominator, e.g.
    /// "(1-z)/2".
    pub fn render(&self) -> String {
        if let Some(r) = self.as_rational() {
            return render_rational(r);
        }
        // common denominator
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut body = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let int = c.numer() * &den / c.denom();
            let mag = int.abs();
            let sign_neg = int.is_negative();
            let var_part = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            let coeff_part = if mag.is_one() && i > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let sep = if i > 0 && !coeff_part.is_empty() {
                "*"
            } else {
                ""
            };
            if body.is_empty() {
                if sign_neg {
                    body.push('-');
                }
            } else if sign_neg {
                body.push_str(" - ");
            } else {
                body.push_str(" + ");
            }
            body.push_str(&coeff_part);
            body.push_str(sep);
            body.push_str(&var_part);
        }
        if den.is_one() {
            format!("({body})")
        } else {
            format!("({body})/{den}")
        }
    }

    /// Rendering with the field order annotated, for standalone scalars.
    pub fn render_annotated(&self) -> String {
        if self.as_rational().is_some() {
            self.render()
        } else {
            format!("{} mod Phi_{}", self.render(), self.order)
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Render a rational without a trailing "/1".
pub fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn poly_deg(p: &[BigRational]) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn poly_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn poly_is_zero(p: &[BigRational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(out)
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = poly_deg(den);
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    let nd = poly_deg(&rem);
    if nd < dd || poly_is_zero(&rem) {
        return (vec![BigRational::zero()], poly_trim(rem));
    }
    let mut quot = vec![BigRational::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let q = &rem[i] / &lead;
        quot[i - dd] = q.clone();
        for j in 0..=dd {
            let sub = &q * &den[j];
            rem[i - dd + j] -= sub;
        }
    }
    (poly_trim(quot), poly_trim(rem))
}

/// Extended Euclid: returns (g, s) with s*a = g mod b and g = gcd(a, b).
fn ext_gcd_bezout(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = poly_trim(a.to_vec());
    let mut r1 = poly_trim(b.to_vec());
    let mut s0 = vec![BigRational::one()];
    let mut s1 = vec![BigRational::zero()];
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = next_s;
    }
    (r0, s0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn phi_values() {
        let expected = [
            (1, 1),
            (2, 1),
            (3, 2),
            (4, 2),
            (5, 4),
            (6, 2),
            (8, 4),
            (12, 4),
        ];
        for (d, phi) in expected {
            assert_eq!(euler_phi(d), phi, "phi({d})");
        }
    }

    #[test]
    fn cyclotomic_polynomials() {
        let to_i =
            |v: Vec<BigInt>| -> Vec<i64> { v.iter().map(|c| i64::try_from(c).unwrap()).collect() };
        assert_eq!(to_i(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity() {
        assert!(Cyclotomic::root(1).is_one());
        assert_eq!(Cyclotomic::root(2), Cyclotomic::from_integer(2, -1));
        for d in 1..=12u32 {
            let z = Cyclotomic::root(d);
            assert!(z.pow(u64::from(d)).is_one(), "zeta_{d}^{d} = 1");
            if d > 1 {
                assert!(!z.is_one(), "zeta_{d} != 1");
            }
            // Phi_d(zeta_d) = 0
            let phi = cyclotomic_polynomial(d);
            let mut acc = Cyclotomic::zero(d);
            for (e, c) in phi.iter().enumerate() {
                let term = z.pow(e as u64).scale(&BigRational::from_integer(c.clone()));
                acc = acc.add(&term);
            }
            assert!(acc.is_zero(), "Phi_{d}(zeta_{d}) = 0");
        }
    }

    #[test]
    fn zeta3_relation() {
        let z = Cyclotomic::root(3);
        let sum = Cyclotomic::one(3).add(&z).add(&z.mul(&z));
        assert!(sum.is_zero(), "1 + z + z^2 = 0 in Q(zeta_3)");
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Cyclotomic::root(4);
        assert_eq!(i.mul(&i), Cyclotomic::from_integer(4, -1));
    }

    #[test]
    fn inverse_of_zeta2_minus_one() {
        let z = Cyclotomic::root(2);
        let val = z.sub(&Cyclotomic::one(2));
        let inv = val.inv().unwrap();
        assert_eq!(inv, Cyclotomic::from_rational(2, rat(-1, 2)));
    }

    #[test]
    fn division_errors() {
        let z = Cyclotomic::root(4);
        assert_eq!(z.div(&Cyclotomic::zero(4)), Err(Error::DivisionByZero));
        let w = Cyclotomic::root(3);
        assert_eq!(
            z.arith(&w, CycOp::Add),
            Err(Error::OrderMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn inverse_round_trip() {
        for d in [3u32, 4, 5, 6, 8, 12] {
            let z = Cyclotomic::root(d);
            let a = z
                .scale(&rat(3, 2))
                .add(&Cyclotomic::from_rational(d, rat(-1, 5)));
            let inv = a.inv().unwrap();
            assert!(a.mul(&inv).is_one(), "a * a^-1 = 1 in Q(zeta_{d})");
        }
    }

    #[test]
    fn render_examples() {
        assert_eq!(Cyclotomic::from_rational(2, rat(-3, 2)).render(), "-3/2");
        assert_eq!(Cyclotomic::from_integer(1, 4).render(), "4");
        let z = Cyclotomic::root(4);
        let half_one_minus_z = Cyclotomic::one(4).sub(&z).scale(&rat(1, 2));
        assert_eq!(half_one_minus_z.render(), "(1 - z)/2");
        assert_eq!(half_one_minus_z.render_annotated(), "(1 - z)/2 mod Phi_4");
    }
}
