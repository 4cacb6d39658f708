//! The induced action of P on symmetric powers and the linear recurrence it
//! forces on n -> H_{m,n}.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Monomial, MultiPoly, RationalMatrix, Var};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::report::{fail_params, VerificationReport};

use super::PtmContext;

/// Monomials of total degree d in v1..v_dim, in descending lexicographic
/// order (e.g. v1^2, v1*v2, v2^2 for dim = 2, d = 2).
pub fn monomial_basis(dim: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; dim];
    fn rec(dim: usize, idx: usize, rem: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx + 1 == dim {
            exps[idx] = rem;
            out.push(Monomial::from_pairs(
                exps.iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| (Var::V(i as u32 + 1), *e)),
            ));
            return;
        }
        for e in (0..=rem).rev() {
            exps[idx] = e;
            rec(dim, idx + 1, rem - e, exps, out);
        }
    }
    rec(dim, 0, d, &mut exps, &mut out);
    out
}

/// Matrix of Sym^d(P) on the monomial basis of degree-d monomials; column j
/// holds the image of the j-th basis monomial.
pub fn sym_power_matrix(p: &RationalMatrix, d: u32) -> Result<RationalMatrix> {
    if !p.is_square() {
        return Err(Error::NotSquare {
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    let dim = p.rows();
    let basis = monomial_basis(dim, d);
    let index: std::collections::HashMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut out = RationalMatrix::zeros(basis.len(), basis.len());
    for (j, mono) in basis.iter().enumerate() {
        let image = MultiPoly::monomial(1, mono.clone(), crate::algebra::Cyclotomic::one(1))
            .apply_linear(p)?;
        for (m, c) in image.terms() {
            let i = index[m];
            *out.get_mut(i, j) = c.as_rational().expect("rational scalars").clone();
        }
    }
    Ok(out)
}

/// chi_{P,m}(y) = prod_{d=0}^m det(I - y Sym^d(P)), an exact polynomial in y
/// of degree at most C(m + dim, m).
pub fn chi_poly(p: &RationalMatrix, m: u32) -> Result<MultiPoly> {
    let mut out = MultiPoly::one(1);
    for d in 0..=m {
        out = out.mul(&sym_power_matrix(p, d)?.char_det()?);
    }
    Ok(out)
}

impl PtmContext {
    /// Check H_{m,n} = -sum_{j=1}^M b_j H_{m,n-j} for M <= n <= n_max, where
    /// the b_j are the coefficients of chi_{P,m} and M = C(m + dim, m).
    pub fn verify_h_linear_recurrence(&self, m: u32, n_max: u32) -> Result<VerificationReport> {
        let dim = self.spec().dim();
        let big_m: u32 = u32::try_from(binomial(m + dim as u32, m))
            .map_err(|_| Error::InvalidParameter("symmetric power dimension overflow".into()))?;
        if n_max < big_m {
            return Err(Error::InvalidParameter(format!(
                "n_max = {n_max} must be at least M = {big_m}"
            )));
        }
        let chi = chi_poly(self.spec().p(), m)?;
        debug_assert!(chi.degree_in(Var::Y) <= big_m);
        let coeffs: Vec<BigRational> = (0..=big_m)
            .map(|j| {
                chi.coeff(&Monomial::from_pairs([(Var::Y, j)]))
                    .as_rational()
                    .expect("rational coefficients")
                    .clone()
            })
            .collect();
        debug_assert!(coeffs[0].is_one());
        let mut report = VerificationReport::new("h-linear-recurrence")
            .with_param("m", m)
            .with_param("n_max", n_max)
            .with_param("M", big_m);
        for n in big_m..=n_max {
            let mut sum = MultiPoly::zero(self.order());
            for (j, b) in coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                sum = sum.add(&self.h_step(m, n - j as u32).scale_rat(b));
            }
            report.case(
                sum.is_zero(),
                || fail_params(&[("m", m.to_string()), ("n", n.to_string())]),
                || "0".to_string(),
                || sum.render(),
            );
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digitseq::SeqSpec;
    use num_traits::Zero;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn y_coeff(p: &MultiPoly, j: u32) -> BigRational {
        p.coeff(&Monomial::from_pairs([(Var::Y, j)]))
            .as_rational()
            .unwrap()
            .clone()
    }

    #[test]
    fn basis_order() {
        let basis = monomial_basis(2, 2);
        let expected: Vec<Monomial> = vec![
            Monomial::from_pairs([(Var::V(1), 2)]),
            Monomial::from_pairs([(Var::V(1), 1), (Var::V(2), 1)]),
            Monomial::from_pairs([(Var::V(2), 2)]),
        ];
        assert_eq!(basis, expected);
        assert_eq!(
            monomial_basis(1, 3),
            vec![Monomial::from_pairs([(Var::V(1), 3)])]
        );
        assert_eq!(monomial_basis(2, 0), vec![Monomial::one()]);
    }

    #[test]
    fn sym_power_of_diag() {
        let p = RationalMatrix::diag(&[rat(1), rat(2)]);
        let s2 = sym_power_matrix(&p, 2).unwrap();
        assert_eq!(s2, RationalMatrix::diag(&[rat(1), rat(2), rat(4)]));
        let s0 = sym_power_matrix(&p, 0).unwrap();
        assert_eq!(s0, RationalMatrix::identity(1));
    }

    #[test]
    fn sym_power_of_shear() {
        // v1 -> v1, v2 -> v1 + v2 (columns hold images), so on v1^2, v1v2,
        // v2^2 the images are v1^2, v1^2 + v1v2, v1^2 + 2v1v2 + v2^2
        let p = RationalMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let s2 = sym_power_matrix(&p, 2).unwrap();
        let expected = RationalMatrix::from_i64_rows(&[&[1, 1, 1], &[0, 1, 2], &[0, 0, 1]]);
        assert_eq!(s2, expected);
        // multiplicativity: Sym^2(P)^2 = Sym^2(P^2)
        let p2 = p.mul(&p).unwrap();
        assert_eq!(s2.mul(&s2).unwrap(), sym_power_matrix(&p2, 2).unwrap());
    }

    #[test]
    fn h_linear_recurrence_non_diagonal() {
        let spec = SeqSpec::new(
            2,
            RationalMatrix::from_i64_rows(&[&[1, 1], &[0, 2]]),
            vec![BigRational::one(), BigRational::one()],
        )
        .unwrap();
        let ctx = PtmContext::primitive(spec).unwrap();
        for m in 0..=2u32 {
            let big_m = (m + 1) * (m + 2) / 2;
            let report = ctx.verify_h_linear_recurrence(m, big_m + 4).unwrap();
            assert!(report.is_verified(), "m={m}: {:?}", report.first_failure);
        }
    }

    #[test]
    fn chi_poly_one_dimensional() {
        // chi = prod_{i=0}^{m} (1 - p^i y)
        let p = RationalMatrix::diag(&[rat(2)]);
        let chi = chi_poly(&p, 2).unwrap();
        // (1-y)(1-2y)(1-4y) = 1 - 7y + 14y^2 - 8y^3
        assert_eq!(y_coeff(&chi, 0), rat(1));
        assert_eq!(y_coeff(&chi, 1), rat(-7));
        assert_eq!(y_coeff(&chi, 2), rat(14));
        assert_eq!(y_coeff(&chi, 3), rat(-8));
    }

    #[test]
    fn chi_poly_m0_is_one_minus_y() {
        let p = RationalMatrix::diag(&[rat(3), rat(5)]);
        let chi = chi_poly(&p, 0).unwrap();
        assert_eq!(y_coeff(&chi, 0), rat(1));
        assert_eq!(y_coeff(&chi, 1), rat(-1));
        assert_eq!(chi.degree_in(Var::Y), 1);
    }

    #[test]
    fn h_linear_recurrence_scalar_preset() {
        // u(n) = n: chi_{P,1} = (1-y)(1-2y) gives H_{1,n} = 3H_{1,n-1} - 2H_{1,n-2}
        let ctx = PtmContext::primitive(SeqSpec::preset_n(2)).unwrap();
        let report = ctx.verify_h_linear_recurrence(1, 8).unwrap();
        assert!(report.is_verified(), "{:?}", report.first_failure);
        assert_eq!(report.cases_checked, 7);
        // m = 0: chi = 1 - y, recurrence H_{0,n} = H_{0,n-1}
        let report = ctx.verify_h_linear_recurrence(0, 5).unwrap();
        assert!(report.is_verified());
    }

    #[test]
    fn h_linear_recurrence_two_dimensional() {
        let ctx = PtmContext::primitive(SeqSpec::preset_digit_sum_and_n(2)).unwrap();
        let report = ctx.verify_h_linear_recurrence(1, 8).unwrap();
        assert!(report.is_verified(), "{:?}", report.first_failure);
        let err = ctx.verify_h_linear_recurrence(1, 2).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }

    #[test]
    fn singular_p_truncates_chi() {
        // P = 0 on a 1-dim space: Sym^d(P) = [0] for d >= 1, so
        // chi_{P,m} = (1 - y): degree < M.
        let p = RationalMatrix::diag(&[rat(0)]);
        let chi = chi_poly(&p, 2).unwrap();
        assert_eq!(chi.degree_in(Var::Y), 1);
        assert!(y_coeff(&chi, 2).is_zero());
    }
}
