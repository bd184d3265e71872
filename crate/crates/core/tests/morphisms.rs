use quasihopf::families::{subgroup_quotient_ideal, twisted_dual_group_algebra};
use quasihopf::multilinear::{LinMap, TensorElement};
use quasihopf::qba::{check_morphism, trivial, QbaMorphism, QuasiBialgebra};
use quasihopf::quotient::build_quotient;

/// `ε` as a map into the one-dimensional algebra.
fn counit_map(h: &QuasiBialgebra) -> LinMap {
    LinMap::from_fn(vec![h.dim()], vec![1], |i| {
        Ok(TensorElement::monomial(vec![1], vec![0], h.epsilon_basis(i[0])))
    })
    .unwrap()
}

#[test]
fn restriction_to_a_subgroup_is_a_morphism() {
    // δ_a ↦ δ_{a/2} for even a, 0 otherwise: k^{ℤ₄}_{ω₁} → k^{ℤ₂}_{ω₁}
    let h = twisted_dual_group_algebra(4, 1).unwrap().algebra;
    let l = twisted_dual_group_algebra(2, 1).unwrap().with_conductor(4).unwrap().algebra;
    let map = LinMap::from_fn(vec![4], vec![2], |a| {
        Ok(if a[0] % 2 == 0 {
            TensorElement::basis(vec![2], vec![a[0] / 2])
        } else {
            TensorElement::zero(vec![2])
        })
    })
    .unwrap();
    let f = QbaMorphism::new(h.clone(), l, map).unwrap();
    let r = check_morphism(&f).unwrap();
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(r.facts["surjective"], true);
    assert_eq!(r.facts["injective"], false);

    // with the wrong cocycle on the target the associator condition fails
    let wrong = twisted_dual_group_algebra(2, 0).unwrap().with_conductor(4).unwrap().algebra;
    let g = QbaMorphism::new(h, wrong, f.map.clone()).unwrap();
    let r = check_morphism(&g).unwrap();
    assert!(!r.passed("associator_compatible"));
    assert!(r.passed("multiplicative"));
}

#[test]
fn counit_is_a_morphism_to_the_ground_field() {
    for (n, s) in [(2, 1), (3, 2), (4, 3)] {
        let h = twisted_dual_group_algebra(n, s).unwrap().algebra;
        let k = trivial(h.conductor());
        let eps = counit_map(&h);
        let f = QbaMorphism::new(h, k, eps).unwrap();
        assert!(check_morphism(&f).unwrap().all_passed());
    }
}

#[test]
fn morphisms_compose() {
    let h = twisted_dual_group_algebra(4, 1).unwrap().algebra;
    let p = build_quotient(&h, &subgroup_quotient_ideal(4, 2).unwrap()).unwrap();
    let q = &p.quotient;
    let eps = QbaMorphism::new(q.clone(), trivial(4), counit_map(q)).unwrap();
    let composite = eps.compose(&p.projection).unwrap();
    assert!(check_morphism(&composite).unwrap().all_passed());
    let direct = counit_map(&h);
    assert_eq!(composite.map, direct);
    let id = QbaMorphism::identity(&h);
    assert_eq!(p.projection.compose(&id).unwrap().map, p.projection.map);
}
