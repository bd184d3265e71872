//! Gauge transformations `(uSu⁻¹, uα, βu⁻¹)` and their inverse.

use quasihopf::exactnum::Scalar;
use quasihopf::families::twisted_dual_group_algebra;
use quasihopf::multilinear::TensorElement;
use quasihopf::qha::{check_quasi_antipode, gauge, unit_inverse};

fn main() -> quasihopf::Result<()> {
    let q = twisted_dual_group_algebra(3, 1)?;
    let c = q.algebra.conductor();
    let u = TensorElement::from_entries(
        vec![3],
        [(vec![0], Scalar::one(c)), (vec![1], Scalar::zeta_power(c, 1)), (vec![2], Scalar::from_int(5).embed(c)?)],
    )?;
    let gauged = gauge(&q.algebra, &q.antipode, &u)?;
    println!("gauged triple passes: {}", check_quasi_antipode(&q.algebra, &gauged)?.all_passed());
    for (i, c) in gauged.alpha.entries() {
        println!("alpha[{}] = {}", i[0], c.to_literal());
    }
    let back = gauge(&q.algebra, &gauged, &unit_inverse(&q.algebra, &u)?)?;
    println!("gauging back recovers the original: {}", back == q.antipode);
    Ok(())
}
