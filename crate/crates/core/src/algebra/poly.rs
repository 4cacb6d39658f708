//! Sparse multivariate polynomials over cyclotomic scalars.
//!
//! Monomials are maps from a fixed variable universe to positive exponents;
//! terms are kept in canonical sparse form (no zero coefficients) inside a
//! `BTreeMap` ordered by graded lexicographic order on the declared variable
//! order x < v1 < v2 < ... < t < x1 < ... < y1 < ... < y < t0 < t1 < ...

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::{render_rational, Cyclotomic};
use super::matrix::RationalMatrix;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// Variable identifiers. The declaration order of the variants fixes the
/// variable order used by monomial comparison and rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// The distinguished polynomial variable x.
    X,
    /// Basis variables v1..v_nu of the symmetric algebra.
    V(u32),
    /// Scalar variable t.
    T,
    /// Indexed variables x1, x2, ...
    Xi(u32),
    /// Indexed variables y1, y2, ...
    Yi(u32),
    /// Series variable y.
    Y,
    /// Indexed variables t0, t1, ... (digit tags).
    Ti(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => write!(f, "x"),
            Var::V(i) => write!(f, "v{i}"),
            Var::T => write!(f, "t"),
            Var::Xi(i) => write!(f, "x{i}"),
            Var::Yi(i) => write!(f, "y{i}"),
            Var::Y => write!(f, "y"),
            Var::Ti(i) => write!(f, "t{i}"),
        }
    }
}

/// A power product of variables; no zero exponents are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<Var, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial::from_pairs([(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut exps = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps.iter().map(|(v, e)| (*v, *e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            *exps.entry(*v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Remove `count` from the exponent of `v`; panics if the exponent is smaller.
    fn div_var(&self, v: Var, count: u32) -> Self {
        let mut exps = self.exps.clone();
        let e = exps.get_mut(&v).expect("variable not present in monomial");
        assert!(*e >= count);
        *e -= count;
        if *e == 0 {
            exps.remove(&v);
        }
        Monomial { exps }
    }

    fn without_var(&self, v: Var) -> Self {
        let mut exps = self.exps.clone();
        exps.remove(&v);
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // lexicographic tie-break: the first variable (in declared order)
        // with a larger exponent wins
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        let mut na = a.next();
        let mut nb = b.next();
        loop {
            match (na, nb) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            na = a.next();
                            nb = b.next();
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Binary ring operation selector for [`MultiPoly::checked_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Sparse multivariate polynomial with [`Cyclotomic`] coefficients of a fixed
/// field order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    order: u32,
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl MultiPoly {
    pub fn zero(order: u32) -> Self {
        MultiPoly {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_scalar(Cyclotomic::one(order))
    }

    pub fn from_rational(order: u32, value: BigRational) -> Self {
        Self::from_scalar(Cyclotomic::from_rational(order, value))
    }

    pub fn from_integer(order: u32, value: i64) -> Self {
        Self::from_scalar(Cyclotomic::from_integer(order, value))
    }

    pub fn from_scalar(value: Cyclotomic) -> Self {
        let order = value.order();
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(), value);
        }
        MultiPoly { order, terms }
    }

    pub fn var(order: u32, v: Var) -> Self {
        Self::monomial(order, Monomial::var(v), Cyclotomic::one(order))
    }

    pub fn monomial(order: u32, mono: Monomial, coeff: Cyclotomic) -> Self {
        assert_eq!(coeff.order(), order, "coefficient order mismatch");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        MultiPoly { order, terms }
    }

    pub fn from_terms(order: u32, items: impl IntoIterator<Item = (Monomial, Cyclotomic)>) -> Self {
        let mut out = Self::zero(order);
        for (m, c) in items {
            assert_eq!(c.order(), order, "coefficient order mismatch");
            out.insert_add(m, c);
        }
        out
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Cyclotomic {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.order))
    }

    /// Some(scalar) when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic::zero(self.order)),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.vars().map(|(v, _)| v))
            .collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// Largest exponent of `v`; 0 for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// True when every term has total degree `d` (vacuously for 0).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn insert_add(&mut self, mono: Monomial, coeff: Cyclotomic) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
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

    pub fn add(&self, other: &Self) -> Self {
        self.checked_arith(other, PolyOp::Add)
            .expect("order mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.checked_arith(other, PolyOp::Sub)
            .expect("order mismatch")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_arith(other, PolyOp::Mul)
            .expect("order mismatch")
    }

    /// Checked ring operation; reports order mismatch as an error.
    pub fn checked_arith(&self, other: &Self, op: PolyOp) -> Result<Self> {
        self.check_order(other)?;
        Ok(match op {
            PolyOp::Add => {
                let mut out = self.clone();
                for (m, c) in &other.terms {
                    out.insert_add(m.clone(), c.clone());
                }
                out
            }
            PolyOp::Sub => {
                let mut out = self.clone();
                for (m, c) in &other.terms {
                    out.insert_add(m.clone(), c.neg());
                }
                out
            }
            PolyOp::Mul => {
                let mut out = Self::zero(self.order);
                for (ma, ca) in &self.terms {
                    for (mb, cb) in &other.terms {
                        out.insert_add(ma.mul(mb), ca.mul(cb));
                    }
                }
                out
            }
        })
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    /// In-place `self += other`, avoiding the clone of the accumulator.
    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.order, other.order, "order mismatch");
        for (m, c) in &other.terms {
            self.insert_add(m.clone(), c.clone());
        }
    }

    /// In-place `self -= other`.
    pub fn sub_assign(&mut self, other: &Self) {
        assert_eq!(self.order, other.order, "order mismatch");
        for (m, c) in &other.terms {
            self.insert_add(m.clone(), c.neg());
        }
    }

    /// In-place `self += s * other`.
    pub fn add_scaled_assign(&mut self, other: &Self, s: &Cyclotomic) {
        assert_eq!(self.order, other.order, "order mismatch");
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.insert_add(m.clone(), c.mul(s));
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        assert_eq!(s.order(), self.order, "scalar order mismatch");
        if s.is_zero() {
            return Self::zero(self.order);
        }
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            out.insert_add(m.clone(), c.mul(s));
        }
        out
    }

    pub fn scale_rat(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(self.order);
        }
        MultiPoly {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.scale(r)))
                .collect(),
        }
    }

    /// Exponentiation by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Self {
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

    /// Multinomial expansion of (sum_i c_i * w_i)^m for distinct variables
    /// w_i with rational coefficients c_i. This is the workhorse of the
    /// brute-force kernels: it avoids repeated polynomial multiplication.
    /// Integer coefficient vectors take a plain big-integer path with no
    /// per-step gcd normalization.
    pub fn linear_power(order: u32, slots: &[(Var, BigRational)], m: u32) -> Self {
        let active: Vec<(Var, &BigRational)> = slots
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(v, c)| (*v, c))
            .collect();
        if m == 0 {
            return Self::one(order);
        }
        if active.is_empty() {
            return Self::zero(order);
        }
        let mut out = Self::zero(order);
        let mut exps = vec![0u32; active.len()];
        if active.iter().all(|(_, c)| c.denom().is_one()) {
            let pow_tables: Vec<Vec<num_bigint::BigInt>> = active
                .iter()
                .map(|(_, c)| {
                    let mut t = Vec::with_capacity(m as usize + 1);
                    t.push(num_bigint::BigInt::one());
                    for e in 1..=m as usize {
                        t.push(&t[e - 1] * c.numer());
                    }
                    t
                })
                .collect();
            fn rec_int(
                out: &mut MultiPoly,
                vars: &[Var],
                pow_tables: &[Vec<num_bigint::BigInt>],
                exps: &mut Vec<u32>,
                idx: usize,
                rem: u32,
                mult: num_bigint::BigInt,
            ) {
                if idx + 1 == vars.len() {
                    exps[idx] = rem;
                    let coeff = &mult * &pow_tables[idx][rem as usize];
                    let mono = Monomial::from_pairs(
                        vars.iter()
                            .zip(exps.iter())
                            .filter(|(_, e)| **e > 0)
                            .map(|(v, e)| (*v, *e)),
                    );
                    let order = out.order;
                    out.insert_add(
                        mono,
                        Cyclotomic::from_rational(order, BigRational::from_integer(coeff)),
                    );
                    return;
                }
                for e in 0..=rem {
                    exps[idx] = e;
                    let m2 = &mult * binomial(rem, e) * &pow_tables[idx][e as usize];
                    rec_int(out, vars, pow_tables, exps, idx + 1, rem - e, m2);
                }
            }
            let vars: Vec<Var> = active.iter().map(|(v, _)| *v).collect();
            rec_int(
                &mut out,
                &vars,
                &pow_tables,
                &mut exps,
                0,
                m,
                num_bigint::BigInt::one(),
            );
            return out;
        }
        let pow_tables: Vec<Vec<BigRational>> = active
            .iter()
            .map(|(_, c)| {
                let mut t = Vec::with_capacity(m as usize + 1);
                t.push(BigRational::one());
                for e in 1..=m as usize {
                    t.push(&t[e - 1] * *c);
                }
                t
            })
            .collect();
        fn rec(
            out: &mut MultiPoly,
            active: &[(Var, &BigRational)],
            pow_tables: &[Vec<BigRational>],
            exps: &mut Vec<u32>,
            idx: usize,
            rem: u32,
            mult: BigRational,
        ) {
            if idx + 1 == active.len() {
                exps[idx] = rem;
                let coeff = &mult * &pow_tables[idx][rem as usize];
                let mono = Monomial::from_pairs(
                    active
                        .iter()
                        .zip(exps.iter())
                        .filter(|(_, e)| **e > 0)
                        .map(|((v, _), e)| (*v, *e)),
                );
                let order = out.order;
                out.insert_add(mono, Cyclotomic::from_rational(order, coeff));
                return;
            }
            for e in 0..=rem {
                exps[idx] = e;
                let m2 = &mult
                    * BigRational::from_integer(binomial(rem, e))
                    * &pow_tables[idx][e as usize];
                rec(out, active, pow_tables, exps, idx + 1, rem - e, m2);
            }
        }
        rec(
            &mut out,
            &active,
            &pow_tables,
            &mut exps,
            0,
            m,
            BigRational::one(),
        );
        out
    }

    /// Substitute scalars for some variables, leaving the rest symbolic.
    pub fn eval_subst(&self, assign: &BTreeMap<Var, Cyclotomic>) -> Self {
        for value in assign.values() {
            assert_eq!(value.order(), self.order, "assignment order mismatch");
        }
        let mut out = Self::zero(self.order);
        for (mono, coeff) in &self.terms {
            let mut value = coeff.clone();
            let mut kept = Vec::new();
            for (v, e) in mono.vars() {
                match assign.get(&v) {
                    Some(s) => value = value.mul(&s.pow(u64::from(e))),
                    None => kept.push((v, e)),
                }
            }
            out.insert_add(Monomial::from_pairs(kept), value);
        }
        out
    }

    /// Apply the endomorphism induced by the matrix `p` on the basis
    /// variables: v_i is replaced by `sum_j p[j][i] * v_j` (column i holds
    /// the image of v_i). Errors when the polynomial mentions a variable
    /// outside v1..v_nu.
    pub fn apply_linear(&self, p: &RationalMatrix) -> Result<Self> {
        if !p.is_square() {
            return Err(Error::NotSquare {
                rows: p.rows(),
                cols: p.cols(),
            });
        }
        let dim = p.rows();
        for v in self.vars() {
            match v {
                Var::V(i) if (i as usize) >= 1 && (i as usize) <= dim => {}
                other => {
                    return Err(Error::VariableOutsideBasis {
                        var: other.to_string(),
                        dim,
                    })
                }
            }
        }
        // images of the basis variables as linear polynomials
        let images: Vec<MultiPoly> = (0..dim)
            .map(|i| {
                let mut img = Self::zero(self.order);
                for j in 0..dim {
                    let entry = p.get(j, i);
                    if !entry.is_zero() {
                        img.insert_add(
                            Monomial::var(Var::V(j as u32 + 1)),
                            Cyclotomic::from_rational(self.order, entry.clone()),
                        );
                    }
                }
                img
            })
            .collect();
        let mut pow_cache: HashMap<(u32, u32), MultiPoly> = HashMap::new();
        let mut out = Self::zero(self.order);
        for (mono, coeff) in &self.terms {
            let mut acc = Self::from_scalar(coeff.clone());
            for (v, e) in mono.vars() {
                let Var::V(i) = v else { unreachable!() };
                let img_pow = pow_cache
                    .entry((i, e))
                    .or_insert_with(|| images[i as usize - 1].pow(e))
                    .clone();
                acc = acc.mul(&img_pow);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Definite integral from 0 to x with respect to x:
    /// c * x^j * M  ->  c/(j+1) * x^(j+1) * M.
    pub fn integrate_x(&self) -> Self {
        let mut out = Self::zero(self.order);
        for (mono, coeff) in &self.terms {
            let j = mono.exponent(Var::X);
            let rest = mono.without_var(Var::X);
            let new_mono = rest.mul(&Monomial::from_pairs([(Var::X, j + 1)]));
            let new_coeff = coeff.scale(&BigRational::new(1.into(), (j as i64 + 1).into()));
            out.insert_add(new_mono, new_coeff);
        }
        out
    }

    /// The operator x d/dx: c * x^i * M -> i * c * x^i * M.
    pub fn theta(&self) -> Self {
        let mut out = Self::zero(self.order);
        for (mono, coeff) in &self.terms {
            let i = mono.exponent(Var::X);
            if i == 0 {
                continue;
            }
            out.insert_add(
                mono.clone(),
                coeff.scale(&BigRational::from_integer(i.into())),
            );
        }
        out
    }

    /// Coefficient of `v^e` as a polynomial in the remaining variables.
    pub fn coeff_of_power(&self, v: Var, e: u32) -> Self {
        let mut out = Self::zero(self.order);
        for (mono, coeff) in &self.terms {
            if mono.exponent(v) == e {
                out.insert_add(mono.without_var(v), coeff.clone());
            }
        }
        out
    }

    /// Exact division by a nonzero homogeneous degree-1 polynomial.
    ///
    /// Performed as univariate division with respect to the lowest variable
    /// carrying a nonzero coefficient in `l`; a nonzero remainder is an
    /// error.
    pub fn exact_divide_linear(&self, l: &Self) -> Result<Self> {
        self.check_order(l)?;
        if l.is_zero() || !l.is_homogeneous(1) {
            return Err(Error::InvalidLinearDivisor);
        }
        let pivot = l
            .vars()
            .into_iter()
            .next()
            .expect("nonzero polynomial has a variable");
        let pivot_coeff = l.coeff(&Monomial::var(pivot));
        debug_assert!(!pivot_coeff.is_zero());
        let pivot_inv = pivot_coeff.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.order);
        loop {
            if rem.is_zero() {
                return Ok(quot);
            }
            let d = rem.degree_in(pivot);
            if d == 0 {
                return Err(Error::NotDivisible);
            }
            // peel the top pivot-degree slice
            let mut step = Self::zero(self.order);
            for (mono, coeff) in &rem.terms {
                if mono.exponent(pivot) == d {
                    step.insert_add(mono.div_var(pivot, 1), coeff.mul(&pivot_inv));
                }
            }
            quot = quot.add(&step);
            rem = rem.sub(&step.mul(l));
        }
    }

    /// Canonical text form; terms in descending graded-lex order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.render_truncated(usize::MAX)
    }

    /// Rendering limited to the leading `max_terms` terms; appends a marker
    /// with the number of omitted terms when truncation applies.
    pub fn render_truncated(&self, max_terms: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let total = self.terms.len();
        for (idx, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            if idx == max_terms {
                out.push_str(&format!(" + [{} more terms]", total - idx));
                break;
            }
            let piece = render_term(mono, coeff);
            if idx == 0 {
                out.push_str(&piece);
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        out
    }
}

fn render_term(mono: &Monomial, coeff: &Cyclotomic) -> String {
    if mono.is_one() {
        return coeff.render();
    }
    match coeff.as_rational() {
        Some(r) if r.is_one() => mono.to_string(),
        Some(r) if (-r).is_one() => format!("-{mono}"),
        Some(r) => format!("{}*{mono}", render_rational(r)),
        None => format!("{}*{mono}", coeff.render()),
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}
