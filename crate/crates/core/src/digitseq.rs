//! Base-k digit functions and recurrence-defined sequences u(n) with values
//! in a rational vector space.
//!
//! A [`SeqSpec`] holds the data (k, P, q) of the recurrence
//! u(k*i + j) = P(u(i)) + j*q with u(0) = 0; unrolling the digits of i gives
//! the closed form u(i) = sum_j d_j P^j(q) used for evaluation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Cyclotomic, Monomial, MultiPoly, RationalMatrix, Var};
use crate::error::{Error, Result};

/// Base-k digits of i, least significant first; `digits(0, k)` is empty.
pub fn digits(mut i: u64, k: u32) -> Vec<u32> {
    assert!(k >= 2, "base must be at least 2");
    let mut out = Vec::new();
    while i > 0 {
        out.push((i % u64::from(k)) as u32);
        i /= u64::from(k);
    }
    out
}

/// Digit sum s_k(i).
pub fn digit_sum(i: u64, k: u32) -> u32 {
    digits(i, k).iter().sum()
}

/// N_k(l, i): occurrences of the digit l in the base-k expansion of i.
pub fn count_digit(k: u32, l: u32, i: u64) -> u32 {
    assert!(l < k, "digit {l} out of range for base {k}");
    digits(i, k).iter().filter(|&&d| d == l).count() as u32
}

/// The sign (-1)^(s_2(i)) of the Thue-Morse sequence.
pub fn ptm_sign(i: u64) -> i32 {
    if i.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A choice of b = k/2 pairwise distinct nonzero digits for an even base
/// k = 2b. Entries are kept sorted; membership is all that observable
/// behaviour depends on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitTuple {
    base: u32,
    entries: Vec<u32>,
}

impl DigitTuple {
    pub fn new(base: u32, mut entries: Vec<u32>) -> Result<Self> {
        if base < 2 || !base.is_multiple_of(2) {
            return Err(Error::InvalidDigitTuple(format!(
                "base {base} must be even and at least 2"
            )));
        }
        let b = base / 2;
        if entries.len() != b as usize {
            return Err(Error::InvalidDigitTuple(format!(
                "expected {b} digits for base {base}, got {}",
                entries.len()
            )));
        }
        entries.sort_unstable();
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDigitTuple(
                "digits must be pairwise distinct".into(),
            ));
        }
        if entries.iter().any(|&d| d == 0 || d >= base) {
            return Err(Error::InvalidDigitTuple(format!(
                "digits must lie in 1..={}",
                base - 1
            )));
        }
        Ok(DigitTuple { base, entries })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    /// b = base/2, the number of chosen digits.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sorted digit set.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn contains(&self, digit: u32) -> bool {
        self.entries.binary_search(&digit).is_ok()
    }
}

/// N_{k,v}(i) = sum over the chosen digits of their occurrence counts.
pub fn nkv(v: &DigitTuple, i: u64) -> u32 {
    v.entries()
        .iter()
        .map(|&l| count_digit(v.base(), l, i))
        .sum()
}

/// All digit tuples for base k, one per unordered b-subset of {1,..,k-1}.
pub fn all_digit_tuples(k: u32) -> Result<Vec<DigitTuple>> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::InvalidDigitTuple(format!(
            "base {k} must be even and at least 2"
        )));
    }
    let b = (k / 2) as usize;
    let pool: Vec<u32> = (1..k).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; b];
    fn rec(
        pool: &[u32],
        pick: &mut Vec<usize>,
        depth: usize,
        start: usize,
        k: u32,
        out: &mut Vec<DigitTuple>,
    ) {
        if depth == pick.len() {
            let entries: Vec<u32> = pick.iter().map(|&i| pool[i]).collect();
            out.push(DigitTuple::new(k, entries).expect("combination is valid"));
            return;
        }
        for i in start..pool.len() {
            pick[depth] = i;
            rec(pool, pick, depth + 1, i + 1, k, out);
        }
    }
    rec(&pool, &mut pick, 0, 0, k, &mut out);
    Ok(out)
}

/// The data (k, P, q) of the recurrence u(k*i + j) = P(u(i)) + j*q, u(0) = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct SeqSpec {
    k: u32,
    p: RationalMatrix,
    q: Vec<BigRational>,
}

impl SeqSpec {
    pub fn new(k: u32, p: RationalMatrix, q: Vec<BigRational>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidSpec(format!(
                "base k = {k} must be at least 2"
            )));
        }
        if !p.is_square() {
            return Err(Error::NotSquare {
                rows: p.rows(),
                cols: p.cols(),
            });
        }
        if q.len() != p.rows() {
            return Err(Error::InvalidSpec(format!(
                "q has length {} but P is {}x{}",
                q.len(),
                p.rows(),
                p.cols()
            )));
        }
        Ok(SeqSpec { k, p, q })
    }

    /// u(n) = n: one-dimensional with P = multiplication by k, q = 1.
    pub fn preset_n(k: u32) -> Self {
        SeqSpec::new(
            k,
            RationalMatrix::diag(&[BigRational::from_integer(k.into())]),
            vec![BigRational::one()],
        )
        .expect("preset is valid")
    }

    /// u(n) = s_k(n): one-dimensional with P = id, q = 1.
    pub fn preset_digit_sum(k: u32) -> Self {
        SeqSpec::new(k, RationalMatrix::identity(1), vec![BigRational::one()])
            .expect("preset is valid")
    }

    /// u(n) = (s_k(n), n): the direct sum of the two presets above.
    pub fn preset_digit_sum_and_n(k: u32) -> Self {
        Self::preset_digit_sum(k)
            .direct_sum(&Self::preset_n(k))
            .expect("presets share the base")
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.q.len()
    }

    pub fn p(&self) -> &RationalMatrix {
        &self.p
    }

    pub fn q(&self) -> &[BigRational] {
        &self.q
    }

    /// Component-wise direct sum: block-diagonal P and concatenated q.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::InvalidSpec(format!(
                "direct sum requires equal bases, got {} and {}",
                self.k, other.k
            )));
        }
        let p = self.p.block_diag(&other.p);
        let mut q = self.q.clone();
        q.extend(other.q.iter().cloned());
        SeqSpec::new(self.k, p, q)
    }

    /// P^j(q) for j = 0..count-1.
    pub fn p_powers_q(&self, count: usize) -> Vec<Vec<BigRational>> {
        let mut out = Vec::with_capacity(count);
        if count == 0 {
            return out;
        }
        out.push(self.q.clone());
        for j in 1..count {
            let next = self.p.mul_vec(&out[j - 1]).expect("dimensions agree");
            out.push(next);
        }
        out
    }

    /// u(i) as a rational coordinate vector, via the digit closed form.
    pub fn eval_u(&self, i: u64) -> Vec<BigRational> {
        let ds = digits(i, self.k);
        let powers = self.p_powers_q(ds.len());
        let mut acc = vec![BigRational::zero(); self.dim()];
        for (j, d) in ds.iter().enumerate() {
            if *d == 0 {
                continue;
            }
            let scale = BigRational::from_integer((*d).into());
            for (a, p) in acc.iter_mut().zip(&powers[j]) {
                *a += p * &scale;
            }
        }
        acc
    }

    /// u(i) as a degree-(at most)-1 polynomial sum of coordinates times v_j.
    pub fn u_poly(&self, i: u64, order: u32) -> MultiPoly {
        vector_poly(&self.eval_u(i), order)
    }

    /// Parse the JSON form {"k":2, "dim":2, "P":[["1","0"],["0","2"]],
    /// "q":["1","1"]} with entries as exact decimal or fraction strings.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::InvalidSpec(format!("invalid JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidSpec("expected a JSON object".into()))?;
        let k = obj
            .get("k")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::InvalidSpec("missing integer field \"k\"".into()))?;
        let k = u32::try_from(k).map_err(|_| Error::InvalidSpec("k out of range".into()))?;
        let rows = obj
            .get("P")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::InvalidSpec("missing matrix field \"P\"".into()))?;
        let mut p_rows = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::InvalidSpec("P must be an array of rows".into()))?;
            let mut out_row = Vec::with_capacity(row.len());
            for entry in row {
                out_row.push(parse_entry(entry)?);
            }
            p_rows.push(out_row);
        }
        let q_vals = obj
            .get("q")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::InvalidSpec("missing vector field \"q\"".into()))?;
        let mut q = Vec::with_capacity(q_vals.len());
        for entry in q_vals {
            q.push(parse_entry(entry)?);
        }
        if let Some(dim) = obj.get("dim").and_then(|v| v.as_u64()) {
            if dim as usize != q.len() {
                return Err(Error::InvalidSpec(format!(
                    "declared dim {dim} does not match q length {}",
                    q.len()
                )));
            }
        }
        let p = RationalMatrix::from_rows(p_rows)?;
        SeqSpec::new(k, p, q)
    }

    /// JSON rendering matching [`SeqSpec::from_json_str`].
    pub fn to_json(&self) -> serde_json::Value {
        let dim = self.dim();
        let p_rows: Vec<serde_json::Value> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        serde_json::Value::String(crate::algebra::render_rational(self.p.get(i, j)))
                    })
                    .collect()
            })
            .collect();
        let q: Vec<serde_json::Value> = self
            .q
            .iter()
            .map(|v| serde_json::Value::String(crate::algebra::render_rational(v)))
            .collect();
        serde_json::json!({
            "k": self.k,
            "dim": dim,
            "P": p_rows,
            "q": q,
        })
    }
}

fn parse_entry(value: &serde_json::Value) -> Result<BigRational> {
    match value {
        serde_json::Value::String(s) => parse_rational(s),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from_integer(i.into()))
            } else {
                Err(Error::InvalidSpec(format!(
                    "non-integer numeric entry {n}; use an exact string instead"
                )))
            }
        }
        other => Err(Error::InvalidSpec(format!("unsupported entry {other}"))),
    }
}

/// Parse an exact rational from "a", "a/b" or a finite decimal like "-0.25".
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = || Error::InvalidSpec(format!("cannot parse \"{s}\" as an exact rational"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = int_part.trim_start().starts_with('-');
        let int: BigInt = if int_part.is_empty() || int_part == "-" {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| err())?
        };
        let frac: BigInt = frac_part.parse().map_err(|_| err())?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mag = int.abs() * &den + frac;
        let signed = if negative { -mag } else { mag };
        return Ok(BigRational::new(signed, den));
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(BigRational::from_integer(n))
}

/// A rational vector as the linear polynomial sum of coordinates times v_j.
pub fn vector_poly(coords: &[BigRational], order: u32) -> MultiPoly {
    let mut out = MultiPoly::zero(order);
    for (j, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&MultiPoly::monomial(
                order,
                Monomial::var(Var::V(j as u32 + 1)),
                Cyclotomic::from_rational(order, c.clone()),
            ));
        }
    }
    out
}
