use quasihopf::families::{subgroup_quotient_ideal, twisted_dual_group_algebra};
use quasihopf::hopfmod::{
    check_hopf_module, divisibility_report, free_hopf_module, q_regular, regular_hopf_module,
    tensor_with_regular, Coaction, LeftModule,
};
use quasihopf::multilinear::LinMap;
use quasihopf::quotient::build_quotient;

fn swap01(d: usize) -> LinMap {
    LinMap::from_fn(vec![d], vec![d], |i| {
        let j = match i[0] {
            0 => 1,
            1 => 0,
            k => k,
        };
        Ok(quasihopf::multilinear::TensorElement::basis(vec![d], vec![j]))
    })
    .unwrap()
}

#[test]
fn right_hopf_modules_on_the_twisted_family() {
    for (n, s) in [(2, 1), (3, 1), (4, 1), (4, 2)] {
        let h = twisted_dual_group_algebra(n, s).unwrap().algebra;
        let r = check_hopf_module(&regular_hopf_module(&h)).unwrap();
        assert!(r.all_passed(), "regular n={n} s={s}: {:?}", r.failures().collect::<Vec<_>>());
        for v in [LeftModule::trivial(&h).unwrap(), LeftModule::regular(&h)] {
            let m = free_hopf_module(&h, &v).unwrap();
            let r = check_hopf_module(&m).unwrap();
            assert!(r.all_passed(), "free n={n} s={s} dimV={}: {:?}", v.dim, r.failures().collect::<Vec<_>>());
            assert!(divisibility_report(&m).all_passed());
        }
    }
}

#[test]
fn left_q_hopf_modules_over_quotients() {
    for (n, s, m) in [(2, 1, 2), (4, 1, 2), (4, 3, 2), (3, 1, 3)] {
        let h = twisted_dual_group_algebra(n, s).unwrap().algebra;
        let p = build_quotient(&h, &subgroup_quotient_ideal(n, m).unwrap()).unwrap();
        let q = q_regular(&p).unwrap();
        let r = check_hopf_module(&q).unwrap();
        assert!(r.all_passed(), "Q n={n} s={s}: {:?}", r.failures().collect::<Vec<_>>());
        let t = tensor_with_regular(&q).unwrap();
        let r = check_hopf_module(&t).unwrap();
        assert!(r.all_passed(), "Q⊗H n={n} s={s}: {:?}", r.failures().collect::<Vec<_>>());
        let d = divisibility_report(&t);
        assert!(d.all_passed());
        assert_eq!(d.facts["cotensor_dim_echo"], (n / m * m) as u64);
    }
}

#[test]
fn broken_coactions_fail() {
    let h = twisted_dual_group_algebra(4, 1).unwrap().algebra;
    let mut m = regular_hopf_module(&h);
    let Coaction::Right(rho) = &m.coaction else { unreachable!() };
    m.coaction = Coaction::Right(rho.compose(&swap01(4)).unwrap());
    let r = check_hopf_module(&m).unwrap();
    eprintln!("{:?}", r.failures().map(|c| &c.name).collect::<Vec<_>>());
    assert!(!r.passed("coassociativity"));
}

fn noncommutative() -> quasihopf::qha::QuasiHopf {
    let a = twisted_dual_group_algebra(2, 1).unwrap();
    let s3 = quasihopf::families::symmetric_group_s3(2).unwrap();
    a.tensor(&s3).unwrap()
}

#[test]
fn noncommutative_right_modules() {
    let h = noncommutative().algebra;
    assert!(!h.is_commutative());
    let r = check_hopf_module(&regular_hopf_module(&h)).unwrap();
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    let m = free_hopf_module(&h, &LeftModule::regular(&h)).unwrap();
    let r = check_hopf_module(&m).unwrap();
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

/// `k^{ℤ₂}_ω ⊗ kS₃` twisted by `F = 1⊗1 + (1⊗x)⊗(1⊗y)` with
/// `x = e − (12)`, `y = e − (01)`, which makes the associator non-central.
fn twisted_noncentral() -> quasihopf::qha::QuasiHopf {
    use quasihopf::exactnum::Scalar;
    use quasihopf::multilinear::TensorElement;
    let a = twisted_dual_group_algebra(2, 1).unwrap();
    let h = a.tensor(&quasihopf::families::symmetric_group_s3(2).unwrap()).unwrap();
    let one_a = a.algebra.unit().clone();
    let e = |k: usize| TensorElement::basis(vec![6], vec![k]).embed(2).unwrap();
    let x = one_a.tensor(&e(0).sub(&e(1)).unwrap()).reshape(vec![12]).unwrap();
    let y = one_a.tensor(&e(0).sub(&e(2)).unwrap()).reshape(vec![12]).unwrap();
    let mut f = h.algebra.ones(2);
    f.add_scaled(&Scalar::one(2), &x.tensor(&y)).unwrap();
    let t = quasihopf::qha::drinfeld_twist(&h, &f).unwrap();
    let phi = t.algebra.phi();
    let g = h.algebra.ones(2).tensor(&x);
    assert_ne!(t.algebra.mul(phi, &g).unwrap(), t.algebra.mul(&g, phi).unwrap());
    t
}

#[test]
fn drinfeld_twist_is_quasi_hopf() {
    let t = twisted_noncentral();
    let r = t.check().unwrap();
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn noncommutative_left_q_modules() {
    use quasihopf::multilinear::{Subspace, TensorElement};
    let h = twisted_noncentral().algebra;
    let ideal_a = subgroup_quotient_ideal(2, 1).unwrap();
    let vs: Vec<TensorElement> = ideal_a
        .basis()
        .iter()
        .flat_map(|x| (0..6).map(move |b| x.tensor(&TensorElement::basis(vec![6], vec![b]))))
        .map(|t| t.reshape(vec![12]).unwrap())
        .collect();
    let ideal = Subspace::from_vectors(vec![12], vs.iter()).unwrap();
    let p = build_quotient(&h, &ideal).unwrap();
    assert_eq!(p.quotient.dim(), 6);
    let q = q_regular(&p).unwrap();
    assert!(check_hopf_module(&q).unwrap().all_passed());
    let t = tensor_with_regular(&q).unwrap();
    let r = check_hopf_module(&t).unwrap();
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(divisibility_report(&t).facts["cotensor_dim_echo"], 12u64);
}
