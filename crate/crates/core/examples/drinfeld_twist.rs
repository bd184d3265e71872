//! A Drinfeld twist of `k^{ℤ₂}_ω ⊗ kS₃` by a non-central `F`, giving a
//! quasi-Hopf algebra whose associator does not commute with `H^{⊗3}`.

use quasihopf::exactnum::Scalar;
use quasihopf::families::{symmetric_group_s3, twisted_dual_group_algebra};
use quasihopf::multilinear::TensorElement;
use quasihopf::qha::drinfeld_twist;

fn main() -> quasihopf::Result<()> {
    let a = twisted_dual_group_algebra(2, 1)?;
    let h = a.tensor(&symmetric_group_s3(2)?)?;
    let e = |k: usize| TensorElement::basis(vec![6], vec![k]).embed(2);
    let one = a.algebra.unit();
    let x = one.tensor(&e(0)?.sub(&e(1)?)?).reshape(vec![12])?;
    let y = one.tensor(&e(0)?.sub(&e(2)?)?).reshape(vec![12])?;
    let mut f = h.algebra.ones(2);
    f.add_scaled(&Scalar::one(2), &x.tensor(&y))?;

    let t = drinfeld_twist(&h, &f)?;
    let report = t.check()?;
    println!("twisted algebra: {} checks, all pass = {}", report.checks.len(), report.all_passed());
    println!("phi has {} nonzero coefficients (was {})", t.algebra.phi().nnz(), h.algebra.phi().nnz());
    Ok(())
}
