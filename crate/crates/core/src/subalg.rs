//! Subquasibialgebras and quasi-antipodes extracted for them from the
//! canonical isomorphism.

use crate::error::{Error, Result};
use crate::multilinear::{tuples, BilinearTable, LinMap, Subspace, TensorElement};
use crate::qba::{QbaParts, QuasiBialgebra};
use crate::qha::{antipode_from_canonical, canonical_element, check_quasi_antipode, QuasiAntipode};
use crate::quotient::membership_witness;
use crate::report::Report;

fn check_ambient(h: &QuasiBialgebra, k: &Subspace) -> Result<()> {
    if k.ambient() != [h.dim()] {
        return Err(Error::shape([h.dim()], k.ambient()));
    }
    Ok(())
}

/// `1 ∈ K`, `K·K ⊆ K`, `Δ(K) ⊆ K⊗K` and `φ ∈ K⊗K⊗K`.
pub fn is_subquasibialgebra(h: &QuasiBialgebra, k: &Subspace) -> Result<Report> {
    check_ambient(h, k)?;
    let mut report = Report::new("subquasibialgebra");
    report.fact("dim_K", k.dim());
    report.push("unit_membership", membership_witness(k, h.unit(), &[])?);

    let basis: Vec<_> = k.pivots().into_iter().zip(k.basis()).collect();
    let mut closure = None;
    'outer: for (p, x) in &basis {
        for (q, y) in &basis {
            if let Some(w) = membership_witness(k, &h.mul(x, y)?, &[*p, *q])? {
                closure = Some(w);
                break 'outer;
            }
        }
    }
    report.push("multiplicative_closure", closure);

    let kk = k.tensor(k);
    let mut delta = None;
    for (p, x) in &basis {
        if let Some(w) = membership_witness(&kk, &h.delta_of(x)?, &[*p])? {
            delta = Some(w);
            break;
        }
    }
    report.push("delta_closure", delta);
    report.push("phi_membership", membership_witness(&kk.tensor(k), h.phi(), &[])?);
    Ok(report)
}

/// `S(φ̄¹)αφ̄² ⊗ φ̄³ ∈ K⊗K`.
pub fn subprop_condition(h: &QuasiBialgebra, a: &QuasiAntipode, k: &Subspace) -> Result<Report> {
    check_ambient(h, k)?;
    let mut report = Report::new("canonical element in K⊗K");
    let w = canonical_element(h, a)?;
    report.push("canonical_element_in_KxK", membership_witness(&k.tensor(k), &w, &[])?);
    Ok(report)
}

/// A subquasibialgebra `K ⊆ H` with its induced structure. The basis of `K`
/// is the echelon basis of the subspace.
#[derive(Clone, Debug)]
pub struct SubQba {
    pub ambient: QuasiBialgebra,
    pub space: Subspace,
    pub induced: QuasiBialgebra,
    pub inclusion: LinMap,
}

impl SubQba {
    /// Verify the subquasibialgebra conditions and restrict the structure.
    pub fn new(h: &QuasiBialgebra, k: &Subspace) -> Result<SubQba> {
        let report = is_subquasibialgebra(h, k)?;
        if let Some(c) = report.failures().next() {
            return Err(Error::Precondition(format!("not a subquasibialgebra: {} fails", c.name)));
        }
        let d = k.dim();
        let basis = k.basis();
        let (kk, kkk) = (k.tensor(k), k.tensor(k).tensor(k));
        let restrict = |t: &TensorElement, space: &Subspace| coordinates(t, space, k);
        let mult = BilinearTable::from_fn(d, d, d, |i, j| {
            Ok(restrict(&h.mul(&basis[i], &basis[j])?, k)?.flatten())
        })?;
        let induced = QuasiBialgebra::new(QbaParts {
            conductor: h.conductor(),
            labels: (0..d).map(|i| format!("k{i}")).collect(),
            mult,
            unit: restrict(h.unit(), k)?,
            delta: LinMap::from_fn(vec![d], vec![d, d], |i| restrict(&h.delta_of(&basis[i[0]])?, &kk))?,
            epsilon: LinMap::from_fn(vec![d], vec![], |i| {
                Ok(TensorElement::scalar(h.epsilon_of(&basis[i[0]])?))
            })?,
            phi: restrict(h.phi(), &kkk)?,
        })?
        .with_note("subalgebra_basis", "echelon basis of the subspace");
        let inclusion = LinMap::from_fn(vec![d], vec![h.dim()], |i| Ok(basis[i[0]].clone()))?;
        Ok(SubQba {
            ambient: h.clone(),
            space: k.clone(),
            induced,
            inclusion,
        })
    }

    /// Coordinates in `K^{⊗r}` of a tensor lying in it.
    pub fn restrict(&self, t: &TensorElement) -> Result<TensorElement> {
        let space = (1..t.arity()).fold(self.space.clone(), |acc, _| acc.tensor(&self.space));
        coordinates(t, &space, &self.space)
    }
}

/// Coordinates of `t ∈ K^{⊗r}` in the tensor basis built from the echelon
/// basis of `K`: the entries of `t` at tuples of pivot columns.
fn coordinates(t: &TensorElement, space: &Subspace, k: &Subspace) -> Result<TensorElement> {
    if !space.contains(t)? {
        return Err(Error::Precondition("element does not lie in the subspace".into()));
    }
    let pivots = k.pivots();
    let r = t.arity();
    let shape = vec![k.dim(); r];
    let entries = tuples(&shape).filter_map(|idx| {
        let amb: Vec<usize> = idx.iter().map(|&i| pivots[i]).collect();
        t.get(&amb).map(|c| (idx, c.clone()))
    });
    TensorElement::from_entries(shape, entries)
}

/// The quasi-antipode of `K`: restrict the canonical map to `K⊗K`, invert
/// it, and read off `β = (K⊗ε)φ′⁻¹(1⊗1)`, `S(x) = Σ w′·(K⊗ε)φ′⁻¹(1⊗x·w″)`
/// and `α = (K⊗ε)φ′(1⊗1)`. The result is checked against the quasi-antipode
/// axioms on `K` and against the ambient `(S, α, β)` under the inclusion.
pub fn subprop_extract(
    h: &QuasiBialgebra,
    a: &QuasiAntipode,
    k: &Subspace,
) -> Result<(SubQba, QuasiAntipode)> {
    let sub = SubQba::new(h, k)?;
    let cond = subprop_condition(h, a, k)?;
    if !cond.all_passed() {
        return Err(Error::Precondition(
            "S(φ̄¹)αφ̄²⊗φ̄³ does not lie in K⊗K".into(),
        ));
    }
    let kq = &sub.induced;
    let d = kq.dim();
    let basis = k.basis();
    let w = canonical_element(h, a)?;
    let kk = k.tensor(k);
    let restricted = LinMap::from_fn(vec![d, d], vec![d, d], |idx| {
        let img = h.mul3(&basis[idx[0]].tensor(h.unit()), &w, &h.delta_of(&basis[idx[1]])?)?;
        if !kk.contains(&img)? {
            return Err(Error::Precondition("canonical map does not preserve K⊗K".into()));
        }
        coordinates(&img, &kk, k)
    })?;
    let w_k = sub.restrict(&w)?;
    let (theta, s) = antipode_from_canonical(kq, &w_k, &restricted)?;
    let beta = theta.apply(kq.unit())?;
    let alpha = restricted
        .apply(&kq.ones(2))?
        .apply_to_leg(1, kq.epsilon())?;
    let extracted = QuasiAntipode::new(s, alpha, beta)?;

    let verdict = check_quasi_antipode(kq, &extracted)?;
    if let Some(c) = verdict.failures().next() {
        return Err(Error::InternalInconsistency(format!("extracted antipode fails {}", c.name)));
    }
    let i = &sub.inclusion;
    let agrees = i.compose(&extracted.s)? == a.s.compose(i)?
        && i.apply(&extracted.alpha)? == a.alpha
        && i.apply(&extracted.beta)? == a.beta;
    if !agrees {
        return Err(Error::InternalInconsistency(
            "extracted antipode disagrees with the ambient one".into(),
        ));
    }
    Ok((sub, extracted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{coset_function_subalgebra, group_algebra, subgroup_subalgebra, twisted_dual_group_algebra};
    use crate::qha::gauge;

    #[test]
    fn subgroup_of_z4() {
        let q = group_algebra(4).unwrap();
        let k = subgroup_subalgebra(4, 2).unwrap();
        assert!(is_subquasibialgebra(&q.algebra, &k).unwrap().all_passed());
        let (sub, ext) = subprop_extract(&q.algebra, &q.antipode, &k).unwrap();
        assert_eq!(sub.induced.dim(), 2);
        assert!(ext.alpha == *sub.induced.unit() && ext.beta == *sub.induced.unit());
    }

    #[test]
    fn coset_functions_miss_the_associator() {
        let q = twisted_dual_group_algebra(4, 1).unwrap();
        let k = coset_function_subalgebra(4, 2).unwrap();
        let r = is_subquasibialgebra(&q.algebra, &k).unwrap();
        assert!(r.passed("multiplicative_closure"));
        let phi = r.check("phi_membership").unwrap();
        assert!(!phi.passed && phi.witness.is_some());
    }

    #[test]
    fn gauge_outside_k_breaks_the_condition() {
        let q = group_algebra(4).unwrap();
        let k = subgroup_subalgebra(4, 2).unwrap();
        let g = q.algebra.basis(1);
        let gauged = gauge(&q.algebra, &q.antipode, &g).unwrap();
        assert!(!subprop_condition(&q.algebra, &gauged, &k).unwrap().all_passed());
        assert!(subprop_extract(&q.algebra, &gauged, &k).is_err());
    }
}
