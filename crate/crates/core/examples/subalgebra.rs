//! Subquasibialgebras and the antipode extracted for them, including the
//! gauge that breaks the membership condition.

use quasihopf::families::{coset_function_subalgebra, group_algebra, subgroup_subalgebra, twisted_dual_group_algebra};
use quasihopf::qha::gauge;
use quasihopf::subalg::{is_subquasibialgebra, subprop_condition, subprop_extract};

fn main() -> quasihopf::Result<()> {
    let q = group_algebra(4)?;
    let k = subgroup_subalgebra(4, 2)?;
    let (sub, a) = subprop_extract(&q.algebra, &q.antipode, &k)?;
    println!("K = span{{g0, g2}}: dim {}, S = {:?}", sub.induced.dim(), a.s.image(1).entries().map(|(i, c)| (i[0], c.to_literal())).collect::<Vec<_>>());

    let u = q.algebra.basis(1);
    let gauged = gauge(&q.algebra, &q.antipode, &u)?;
    let cond = subprop_condition(&q.algebra, &gauged, &k)?;
    println!("after gauging by g1: condition holds = {}", cond.all_passed());

    let t = twisted_dual_group_algebra(4, 1)?;
    let c = is_subquasibialgebra(&t.algebra, &coset_function_subalgebra(4, 2)?)?;
    for check in &c.checks {
        println!("coset functions, {}: {}", check.name, check.passed);
    }
    Ok(())
}
