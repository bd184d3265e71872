//! Verify the quasibialgebra and quasi-antipode axioms on the twisted dual
//! group algebras, then break the pentagon by editing one cocycle value.
//!
//!     cargo run --example axioms -- 4

use quasihopf::exactnum::Scalar;
use quasihopf::families::{cocycle_verify, twisted_dual_from_cocycle, twisted_dual_group_algebra, CyclicCocycle};
use quasihopf::qba::check_quasibialgebra;

fn main() -> quasihopf::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for s in 0..n {
        let q = twisted_dual_group_algebra(n, s)?;
        let report = q.check()?;
        println!(
            "k^Z{n} with omega_{s}: {}/{} checks pass",
            report.checks.iter().filter(|c| c.passed).count(),
            report.checks.len()
        );
    }

    let mut omega = CyclicCocycle::new(n, 1)?;
    let v = omega.value(1, n - 1, 1).clone();
    omega.set(1, n - 1, 1, &v * &Scalar::from_int(2).embed(omega.conductor())?);
    println!("{}", serde_json::to_string_pretty(&cocycle_verify(&omega)?.to_json()).unwrap());
    let broken = check_quasibialgebra(&twisted_dual_from_cocycle(&omega)?)?;
    for c in broken.failures() {
        println!("fails {}: {:?}", c.name, c.witness);
    }
    Ok(())
}
