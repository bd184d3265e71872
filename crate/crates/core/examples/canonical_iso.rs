//! Drinfeld's canonical map `g⊗h ↦ gS(φ̄¹)αφ̄²h₍₁₎ ⊗ φ̄³h₍₂₎` and its inverse.
//! On a group algebra it is the translation `g⊗h ↦ gh⊗h`.

use quasihopf::families::{group_algebra, twisted_dual_group_algebra};
use quasihopf::qha::{canonical_element, canonical_pair};

fn main() -> quasihopf::Result<()> {
    let n = 3;
    let q = group_algebra(n)?;
    let (can, _) = canonical_pair(&q.algebra, &q.antipode)?;
    for a in 0..n {
        for b in 0..n {
            let (idx, _) = can.image(a * n + b).entries().next().map(|(i, c)| (i.clone(), c.clone())).unwrap();
            println!("g{a}⊗g{b} ↦ g{}⊗g{}", idx[0], idx[1]);
        }
    }

    let t = twisted_dual_group_algebra(4, 1)?;
    let w = canonical_element(&t.algebra, &t.antipode)?;
    println!("canonical element of k^Z4_omega1 has {} terms", w.nnz());
    let (f, g) = canonical_pair(&t.algebra, &t.antipode)?;
    println!("can∘can⁻¹ = id: {}", f.compose(&g)?.is_identity());
    Ok(())
}
