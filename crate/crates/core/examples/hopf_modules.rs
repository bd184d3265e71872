//! Hopf modules in the category of bimodules, and the divisibility of
//! their dimensions.

use quasihopf::families::{subgroup_quotient_ideal, twisted_dual_group_algebra};
use quasihopf::hopfmod::{
    check_hopf_module, divisibility_report, free_hopf_module, q_regular, regular_hopf_module,
    tensor_with_regular, LeftModule,
};
use quasihopf::quotient::build_quotient;

fn main() -> quasihopf::Result<()> {
    let h = twisted_dual_group_algebra(4, 1)?.algebra;
    let regular = regular_hopf_module(&h);
    let free = free_hopf_module(&h, &LeftModule::trivial(&h)?)?;
    let p = build_quotient(&h, &subgroup_quotient_ideal(4, 2)?)?;
    let q = q_regular(&p)?;
    let qh = tensor_with_regular(&q)?;
    for (name, m) in [("H", &regular), ("k⊗H", &free), ("Q", &q), ("Q⊗H", &qh)] {
        let checks = check_hopf_module(m)?;
        let div = divisibility_report(m);
        println!(
            "{name:>4}: dim {:>2}, axioms {}, {}",
            m.dim,
            checks.all_passed(),
            div.checks[0].note.as_deref().unwrap_or("")
        );
    }
    Ok(())
}
