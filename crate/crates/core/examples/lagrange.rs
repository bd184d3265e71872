//! Dimension bookkeeping for quotients and the count of one-dimensional
//! representations.

use quasihopf::families::{subgroup_quotient_ideal, twisted_dual_group_algebra};
use quasihopf::quotient::{build_quotient, grouplike_count_report, lagrange_report};

fn main() -> quasihopf::Result<()> {
    for n in [2, 4, 6] {
        let h = twisted_dual_group_algebra(n, 1)?.algebra;
        for m in (1..=n).filter(|m| n % m == 0) {
            let p = build_quotient(&h, &subgroup_quotient_ideal(n, m)?)?;
            let r = lagrange_report(&h, &p);
            println!("n={n} m={m}: {}", serde_json::to_string(&r.facts).unwrap());
        }
        let chars = grouplike_count_report(&h)?;
        println!("n={n}: {} characters", chars.facts["characters"]);
    }
    Ok(())
}
