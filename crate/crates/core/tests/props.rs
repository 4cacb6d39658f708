//! Property tests for the algebraic laws the rest of the crate leans on:
//! field axioms in Q(zeta_d), ring axioms for sparse polynomials, the
//! homomorphism laws of linear substitution, integration/differentiation,
//! and exact linear division.

use num_rational::BigRational;
use proptest::prelude::*;

use ptm_core::algebra::{euler_phi, Cyclotomic, Monomial, MultiPoly, RationalMatrix, Var};
use ptm_core::digitseq::SeqSpec;

const ORDERS: &[u32] = &[1, 2, 3, 4, 5, 6, 8, 12];

fn rat_strategy() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn cyclo_strategy(order: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(rat_strategy(), euler_phi(order) as usize).prop_map(move |coeffs| {
        let root = Cyclotomic::root(order);
        coeffs
            .iter()
            .enumerate()
            .fold(Cyclotomic::zero(order), |acc, (i, c)| {
                acc.add(&root.pow(i as u64).scale(c))
            })
    })
}

fn order_strategy() -> impl Strategy<Value = u32> {
    prop::sample::select(ORDERS.to_vec())
}

prop_compose! {
    fn cyclo_triple()(order in order_strategy())(
        a in cyclo_strategy(order),
        b in cyclo_strategy(order),
        c in cyclo_strategy(order),
    ) -> (Cyclotomic, Cyclotomic, Cyclotomic) {
        (a, b, c)
    }
}

proptest! {
    #[test]
    fn cyclotomic_field_axioms((a, b, c) in cyclo_triple()) {
        let order = a.order();
        let zero = Cyclotomic::zero(order);
        let one = Cyclotomic::one(order);
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&zero), a.clone());
        prop_assert_eq!(a.mul(&one), a.clone());
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn cyclotomic_pow_is_repeated_mul(order in order_strategy(), e in 0u64..8) {
        // exercised on the generator, whose powers cycle with order d
        let z = Cyclotomic::root(order);
        let mut expected = Cyclotomic::one(order);
        for _ in 0..e {
            expected = expected.mul(&z);
        }
        prop_assert_eq!(z.pow(e), expected);
    }
}

type TermSpec = Vec<(u8, u8, u8, BigRational)>;

fn poly_from_spec(order: u32, spec: &TermSpec) -> MultiPoly {
    MultiPoly::from_terms(
        order,
        spec.iter().map(|(x, v1, v2, c)| {
            (
                Monomial::from_pairs([
                    (Var::X, u32::from(*x)),
                    (Var::V(1), u32::from(*v1)),
                    (Var::V(2), u32::from(*v2)),
                ]),
                Cyclotomic::from_rational(order, c.clone()),
            )
        }),
    )
}

fn term_spec() -> impl Strategy<Value = TermSpec> {
    prop::collection::vec((0u8..4, 0u8..4, 0u8..4, rat_strategy()), 0..6)
}

prop_compose! {
    fn poly_triple()(order in order_strategy())(
        specs in (term_spec(), term_spec(), term_spec()),
        order in Just(order),
    ) -> (MultiPoly, MultiPoly, MultiPoly) {
        (
            poly_from_spec(order, &specs.0),
            poly_from_spec(order, &specs.1),
            poly_from_spec(order, &specs.2),
        )
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn poly_ring_axioms((a, b, c) in poly_triple()) {
        let order = a.order();
        let zero = MultiPoly::zero(order);
        let one = MultiPoly::one(order);
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&zero), a.clone());
        prop_assert_eq!(a.mul(&one), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn poly_pow_is_repeated_mul((a, _, _) in poly_triple(), e in 0u32..5) {
        let mut expected = MultiPoly::one(a.order());
        for _ in 0..e {
            expected = expected.mul(&a);
        }
        prop_assert_eq!(a.pow(e), expected);
    }

    #[test]
    fn derivative_inverts_integration((a, _, _) in poly_triple()) {
        // d/dx as theta followed by shifting the x-exponent down one
        let integrated = a.integrate_x();
        let derived = MultiPoly::from_terms(
            a.order(),
            integrated.theta().terms().map(|(mono, coeff)| {
                let pairs: Vec<(Var, u32)> = mono
                    .vars()
                    .map(|(v, e)| if v == Var::X { (v, e - 1) } else { (v, e) })
                    .collect();
                (Monomial::from_pairs(pairs), coeff.clone())
            }),
        );
        prop_assert_eq!(derived, a);
    }

    #[test]
    fn integration_has_no_constant_term((a, _, _) in poly_triple()) {
        let integrated = a.integrate_x();
        prop_assert!(integrated
            .terms()
            .all(|(mono, _)| mono.exponent(Var::X) >= 1));
    }
}

fn linear_form(order: u32, coeffs: &[i64]) -> MultiPoly {
    coeffs
        .iter()
        .enumerate()
        .fold(MultiPoly::zero(order), |acc, (i, c)| {
            acc.add(
                &MultiPoly::var(order, Var::V(i as u32 + 1))
                    .scale_rat(&BigRational::from_integer((*c).into())),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_division_round_trip(
        order in order_strategy(),
        l_coeffs in prop::collection::vec(-3i64..=3, 3),
        q_spec in term_spec(),
    ) {
        prop_assume!(l_coeffs.iter().any(|c| *c != 0));
        let l = linear_form(order, &l_coeffs);
        let q = poly_from_spec(order, &q_spec);
        let product = l.mul(&q);
        prop_assert_eq!(product.exact_divide_linear(&l).unwrap(), q);
    }

    #[test]
    fn apply_linear_is_a_ring_homomorphism(
        entries in prop::collection::vec(-3i64..=3, 4),
        a_spec in term_spec(),
        b_spec in term_spec(),
    ) {
        let p = RationalMatrix::from_i64_rows(&[&entries[0..2], &entries[2..4]]);
        // restrict to the v-basis: drop x from the generated terms
        let strip = |spec: &TermSpec| -> TermSpec {
            spec.iter().map(|(_, v1, v2, c)| (0, *v1, *v2, c.clone())).collect()
        };
        let a = poly_from_spec(4, &strip(&a_spec));
        let b = poly_from_spec(4, &strip(&b_spec));
        let lhs = a.mul(&b).apply_linear(&p).unwrap();
        let rhs = a.apply_linear(&p).unwrap().mul(&b.apply_linear(&p).unwrap());
        prop_assert_eq!(lhs, rhs);
        // additivity as well
        let lhs = a.add(&b).apply_linear(&p).unwrap();
        let rhs = a.apply_linear(&p).unwrap().add(&b.apply_linear(&p).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn apply_linear_composes(
        e1 in prop::collection::vec(-2i64..=2, 4),
        e2 in prop::collection::vec(-2i64..=2, 4),
        a_spec in term_spec(),
    ) {
        let p = RationalMatrix::from_i64_rows(&[&e1[0..2], &e1[2..4]]);
        let q = RationalMatrix::from_i64_rows(&[&e2[0..2], &e2[2..4]]);
        let strip: TermSpec = a_spec
            .iter()
            .map(|(_, v1, v2, c)| (0, *v1, *v2, c.clone()))
            .collect();
        let a = poly_from_spec(2, &strip);
        let composed = p.mul(&q).unwrap();
        let lhs = a.apply_linear(&composed).unwrap();
        let rhs = a.apply_linear(&q).unwrap().apply_linear(&p).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_u_satisfies_the_recurrence(
        k in 2u32..=4,
        dim in 1usize..=2,
        entries in prop::collection::vec(-2i64..=2, 4),
        q_entries in prop::collection::vec(-2i64..=2, 2),
        i in 0u64..10_000,
    ) {
        let rows: Vec<Vec<BigRational>> = (0..dim)
            .map(|r| (0..dim).map(|c| BigRational::from_integer(entries[r * dim + c].into())).collect())
            .collect();
        let q: Vec<BigRational> = q_entries[..dim]
            .iter()
            .map(|c| BigRational::from_integer((*c).into()))
            .collect();
        let spec = SeqSpec::new(k, RationalMatrix::from_rows(rows).unwrap(), q).unwrap();
        let ui = spec.eval_u(i);
        let pui = spec.p().mul_vec(&ui).unwrap();
        for j in 0..k {
            let got = spec.eval_u(u64::from(k) * i + u64::from(j));
            let expected: Vec<BigRational> = pui
                .iter()
                .zip(spec.q())
                .map(|(a, qc)| a + qc * BigRational::from_integer(j.into()))
                .collect();
            prop_assert_eq!(&got, &expected, "k={} i={} j={}", k, i, j);
        }
        prop_assert!(spec.eval_u(0).iter().all(num_traits::Zero::is_zero));
    }
}
