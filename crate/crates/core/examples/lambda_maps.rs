//! The maps `Λ(h⊗g) = h₍₁₎φ̄¹ ⊗ h₍₂₎φ̄²βS(φ̄³)g` and `Λ⁻¹`, their relation to
//! the canonical map of the op-cop algebra, and bijectivity of `S`.

use quasihopf::families::{group_algebra, twisted_dual_group_algebra};
use quasihopf::qha::{antipode_bijectivity, lambda_maps, lambda_opcop_relation};

fn main() -> quasihopf::Result<()> {
    let q = group_algebra(3)?;
    let (lambda, _) = lambda_maps(&q.algebra, &q.antipode)?;
    let img = lambda.image(3 + 2);
    println!("Λ(g1⊗g2) = {:?}", img.entries().map(|(i, _)| i.clone()).collect::<Vec<_>>());

    for n in 1..=4 {
        for s in 0..n {
            let t = twisted_dual_group_algebra(n, s)?;
            let rel = lambda_opcop_relation(&t.algebra, &t.antipode)?;
            let bij = antipode_bijectivity(&t.algebra, &t.antipode)?;
            println!("n={n} s={s}: Λ = τ∘can_opcop∘τ {}, rank S = {}", rel.all_passed(), bij.facts["rank"]);
        }
    }
    Ok(())
}
