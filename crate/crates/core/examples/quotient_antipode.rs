//! Quotient by a biideal and the quasi-antipode synthesized for it from the
//! canonical isomorphism.

use quasihopf::families::{restricted_class, subgroup_quotient_ideal, twisted_dual_group_algebra};
use quasihopf::qha::check_quasi_antipode;
use quasihopf::quotient::{build_quotient, check_biideal, check_s_stability, synthesize_quotient_antipode};

fn main() -> quasihopf::Result<()> {
    let (n, s, m) = (6, 1, 3);
    let h = twisted_dual_group_algebra(n, s)?;
    let ideal = subgroup_quotient_ideal(n, m)?;
    println!("biideal: {}", check_biideal(&h.algebra, &ideal)?.all_passed());
    println!("S(I) = I: {}", check_s_stability(&h.algebra, &h.antipode, &ideal)?.all_passed());

    let p = build_quotient(&h.algebra, &ideal)?;
    let a = synthesize_quotient_antipode(&h.algebra, &h.antipode, &p)?;
    println!("Q has basis {:?}", p.quotient.labels());
    println!("synthesized antipode passes: {}", check_quasi_antipode(&p.quotient, &a)?.all_passed());
    println!("alpha = {:?}", a.alpha.entries().map(|(i, c)| (i[0], c.to_literal())).collect::<Vec<_>>());
    println!("beta  = {:?}", a.beta.entries().map(|(i, c)| (i[0], c.to_literal())).collect::<Vec<_>>());
    println!("restricted cocycle class on Z{m}: {}", restricted_class(n, s, m)?);
    Ok(())
}
