//! Randomized invariants for the exact arithmetic layers.

#![allow(clippy::needless_range_loop)]

use num_rational::BigRational;
use proptest::prelude::*;

use weyl_lifts::clifford::{pin_action_matrix, CliffordElement};
use weyl_lifts::exactmat::{monomial_compose, monomial_decompose, DForm, ExactMatrix, ThetaInvolution};
use weyl_lifts::quat::{hat_embedding, so3_lift, su2_to_so3, Quaternion};
use weyl_lifts::rootdata::{SignedPerm, TypeLabel};
use weyl_lifts::scalars::CycScalar;

fn scalar8() -> impl Strategy<Value = CycScalar> {
    prop::collection::vec((-6i64..=6, 1i64..=3), 4).prop_map(|c| {
        CycScalar::from_coeffs(8, c.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect())
    })
}

fn int_matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), n)
        .prop_map(|rows| ExactMatrix::from_ints(&rows).unwrap())
        .prop_filter("invertible", |m| !m.det().is_zero())
}

fn signed_perm(m: usize) -> impl Strategy<Value = SignedPerm> {
    (Just((0..m).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(prop::bool::ANY, m))
        .prop_map(|(perm, s)| SignedPerm {
            perm,
            signs: s.into_iter().map(|b| if b { -1 } else { 1 }).collect(),
        })
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9)
        .prop_map(|(a, b, c, d)| Quaternion::from_ints(a, b, c, d))
        .prop_filter("nonzero", |q| !q.is_zero())
}

/// q q̄^{-1} has norm 1 and rational coefficients.
fn unit_quaternion() -> impl Strategy<Value = Quaternion> {
    quaternion().prop_map(|q| &q * &q.conj().inv().unwrap())
}

fn theta_case() -> impl Strategy<Value = (TypeLabel, usize, DForm)> {
    prop_oneof![
        Just((TypeLabel::B, 1, DForm::Eta)),
        Just((TypeLabel::C, 2, DForm::Eta)),
        Just((TypeLabel::D, 2, DForm::Eta)),
        Just((TypeLabel::D, 2, DForm::Mirrored)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar8(), b in scalar8(), c in scalar8()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn theta_is_an_involutive_automorphism(
        ((t, l, form), g, h) in theta_case().prop_flat_map(|c| {
            let n = c.0.gl_dim(c.1);
            (Just(c), int_matrix(n), int_matrix(n))
        })
    ) {
        let th = ThetaInvolution::with_form(t, l, form).unwrap();
        prop_assert_eq!(th.apply(&th.apply(&g).unwrap()).unwrap(), g.clone());
        prop_assert_eq!(th.apply(&(&g * &h)).unwrap(), &th.apply(&g).unwrap() * &th.apply(&h).unwrap());
    }

    #[test]
    fn monomial_round_trip(p in signed_perm(5), d in prop::collection::vec(scalar8(), 5)) {
        let d: Vec<CycScalar> = d.into_iter().map(|x| if x.is_zero() { CycScalar::one() } else { x }).collect();
        let g = monomial_compose(&p.perm, &d).unwrap();
        let (perm, diag) = monomial_decompose(&g).unwrap();
        prop_assert_eq!(perm, p.perm);
        prop_assert_eq!(diag, d);
    }

    #[test]
    fn signed_perm_matches_matrix(a in signed_perm(4), b in signed_perm(4), v in prop::collection::vec(-5i64..=5, 4)) {
        let (ma, mb) = (ExactMatrix::from_signed_perm(&a), ExactMatrix::from_signed_perm(&b));
        prop_assert_eq!(ExactMatrix::from_signed_perm(&a.mul(&b)), &ma * &mb);
        prop_assert_eq!(ma.to_signed_perm(), Some(a.clone()));
        let v: Vec<BigRational> = v.into_iter().map(|x| BigRational::from_integer(x.into())).collect();
        let image = a.apply(&v);
        for i in 0..4 {
            let row: BigRational = (0..4).map(|j| ma.get(i, j).as_rational().unwrap() * &v[j]).sum();
            prop_assert_eq!(&image[i], &row);
        }
    }

    #[test]
    fn quaternion_norm_is_multiplicative(p in quaternion(), q in quaternion()) {
        prop_assert_eq!((&p * &q).norm(), p.norm() * q.norm());
        prop_assert_eq!(hat_embedding(&(&p * &q)), &hat_embedding(&p) * &hat_embedding(&q));
        prop_assert_eq!(hat_embedding(&p).det(), CycScalar::from_rational(p.norm()));
    }

    #[test]
    fn su2_to_so3_is_a_homomorphism(p in unit_quaternion(), q in unit_quaternion()) {
        let (rp, rq) = (su2_to_so3(&p).unwrap(), su2_to_so3(&q).unwrap());
        prop_assert_eq!(su2_to_so3(&(&p * &q)).unwrap(), &rp * &rq);
        prop_assert!(rp.det().is_one());
        let back = so3_lift(&rp).unwrap();
        prop_assert!(back == p || back == -&p);
    }

    #[test]
    fn pin_action_is_multiplicative(vs in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 2..=4)) {
        let vecs: Vec<CliffordElement> = vs
            .into_iter()
            .filter(|v| v.iter().any(|&x| x != 0))
            .map(|v| CliffordElement::vector(&v.into_iter().map(CycScalar::from_int).collect::<Vec<_>>()).unwrap())
            .collect();
        prop_assume!(vecs.len() >= 2);
        let mut x = CliffordElement::one(3).unwrap();
        let mut m = ExactMatrix::identity(3);
        for v in &vecs {
            let pv = pin_action_matrix(v).unwrap();
            prop_assert_eq!(pv.det(), CycScalar::from_int(-1));
            x = x.try_mul(v).unwrap();
            m = &m * &pv;
        }
        prop_assert_eq!(pin_action_matrix(&x).unwrap(), m);
    }
}
