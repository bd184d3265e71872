use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use quasihopf::exactnum::{parse_scalar, Scalar};
use quasihopf::families::{group_algebra, twisted_dual_group_algebra};
use quasihopf::multilinear::{tensor_multiply, Subspace, TensorElement};
use quasihopf::qha::{gauge, unit_inverse};

const CONDUCTORS: [u32; 6] = [1, 2, 3, 4, 6, 8];

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

fn scalar_in(n: u32) -> impl Strategy<Value = Scalar> {
    prop::collection::vec(rational(), 0..6).prop_map(move |c| Scalar::from_poly(n, c))
}

fn conductor_and_scalars(k: usize) -> impl Strategy<Value = (u32, Vec<Scalar>)> {
    prop::sample::select(CONDUCTORS.to_vec())
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(scalar_in(n), k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((_, v) in conductor_and_scalars(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert!((a - a).is_zero());
        if !a.is_zero() {
            prop_assert!((a * &a.inverse().unwrap()).is_one());
        } else {
            prop_assert!(a.inverse().is_err());
        }
    }

    #[test]
    fn zeta_powers(n in prop::sample::select(CONDUCTORS.to_vec()), k in -20i64..20) {
        let z = Scalar::zeta_power(n, k);
        prop_assert!((&z * &Scalar::zeta_power(n, -k)).is_one());
        prop_assert_eq!(z.inverse().unwrap(), Scalar::zeta_power(n, -k));
        prop_assert!(z.pow(n as u64).is_one());
        prop_assert_eq!(Scalar::zeta_power(n, k + n as i64), z);
    }

    #[test]
    fn literals_round_trip((n, v) in conductor_and_scalars(1)) {
        let lit = v[0].to_literal();
        prop_assert_eq!(parse_scalar(&lit, n).unwrap(), v[0].clone());
    }

    #[test]
    fn echelon_is_idempotent((_, v) in conductor_and_scalars(12)) {
        let vectors: Vec<TensorElement> = v
            .chunks(4)
            .map(|c| TensorElement::from_entries(vec![4], c.iter().cloned().enumerate().map(|(i, x)| (vec![i], x))).unwrap())
            .collect();
        let s = Subspace::from_vectors(vec![4], vectors.iter()).unwrap();
        let again = Subspace::from_vectors(vec![4], s.basis().iter()).unwrap();
        prop_assert_eq!(&again, &s);
        for x in &vectors {
            prop_assert!(s.contains(x).unwrap());
            prop_assert!(s.reduce(x).unwrap().is_zero());
        }
    }

    #[test]
    fn tensor_products_associate(
        s in 0usize..4,
        coeffs in prop::collection::vec(-3i64..=3, 48),
    ) {
        let h = twisted_dual_group_algebra(4, s).unwrap().algebra;
        let c = h.conductor();
        let make = |part: &[i64]| {
            TensorElement::from_entries(
                vec![4, 4],
                part.iter().enumerate().map(|(i, &x)| (vec![i / 4, i % 4], Scalar::from_int(x).embed(c).unwrap())),
            )
            .unwrap()
        };
        let (a, b, d) = (make(&coeffs[..16]), make(&coeffs[16..32]), make(&coeffs[32..]));
        let m = h.mult();
        let left = tensor_multiply(&tensor_multiply(&a, &b, m).unwrap(), &d, m).unwrap();
        let right = tensor_multiply(&a, &tensor_multiply(&b, &d, m).unwrap(), m).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn gauge_round_trip(values in prop::collection::vec(1i64..=5, 3), k in 0i64..3) {
        // a unit of k^{ℤ₃}: nonzero value at every point
        let q = twisted_dual_group_algebra(3, 1).unwrap();
        let c = q.algebra.conductor();
        let u = TensorElement::from_entries(
            vec![3],
            values.iter().enumerate().map(|(i, &x)| (vec![i], &Scalar::from_int(x).embed(c).unwrap() * &Scalar::zeta_power(c, k))),
        )
        .unwrap();
        let g = gauge(&q.algebra, &q.antipode, &u).unwrap();
        let back = gauge(&q.algebra, &g, &unit_inverse(&q.algebra, &u).unwrap()).unwrap();
        prop_assert_eq!(back, q.antipode.clone());

        // kℤ₃, where units are not diagonal in the basis
        let p = group_algebra(3).unwrap();
        let w = TensorElement::from_entries(vec![3], [(vec![0], Scalar::from_int(values[0] + 3)), (vec![1], Scalar::one(1))]).unwrap();
        let g = gauge(&p.algebra, &p.antipode, &w).unwrap();
        let back = gauge(&p.algebra, &g, &unit_inverse(&p.algebra, &w).unwrap()).unwrap();
        prop_assert_eq!(back, p.antipode.clone());
    }
}
