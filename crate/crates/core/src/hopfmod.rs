//! Hopf modules inside the monoidal category of `H`-bimodules: right
//! `H`-comodules and left `Q`-comodules for a quotient `Q`, their axiom
//! checks, generators and the dimension divisibility report.
//!
//! The associativity constraint of bimodules is
//! `Φ(u⊗v⊗w) = φ¹uφ̄¹ ⊗ φ²vφ̄² ⊗ φ³wφ̄³`.

use crate::error::{Error, Result};
use crate::multilinear::{legwise_product, tuples, BilinearTable, LinMap, TensorElement};
use crate::qba::QuasiBialgebra;
use crate::quotient::QuotientPresentation;
use crate::report::{Report, Witness};

/// A left `H`-module given by its action table `H × V → V`.
#[derive(Clone, Debug)]
pub struct LeftModule {
    pub dim: usize,
    pub action: BilinearTable,
}

impl LeftModule {
    /// `k` with `h·1 = ε(h)`.
    pub fn trivial(h: &QuasiBialgebra) -> Result<Self> {
        let action = BilinearTable::from_fn(h.dim(), 1, 1, |i, _| {
            let e = h.epsilon_basis(i);
            Ok(if e.is_zero() { Default::default() } else { [(0, e)].into() })
        })?;
        Ok(LeftModule { dim: 1, action })
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(h: &QuasiBialgebra) -> Self {
        LeftModule {
            dim: h.dim(),
            action: h.mult().clone(),
        }
    }
}

/// Associativity and unitality of a left action.
pub fn check_left_module(h: &QuasiBialgebra, v: &LeftModule) -> Result<Report> {
    let (n, d) = (h.dim(), v.dim);
    if (v.action.left_dim(), v.action.right_dim(), v.action.out_dim()) != (n, d, d) {
        return Err(Error::shape((n, d, d), (v.action.left_dim(), v.action.right_dim(), v.action.out_dim())));
    }
    let mut report = Report::new("left module");
    let vb = |i: usize| TensorElement::basis(vec![d], vec![i]);
    let mut assoc = None;
    for t in tuples(&[n, n, d]) {
        let (x, y, m) = (h.basis(t[0]), h.basis(t[1]), vb(t[2]));
        let lhs = v.action.apply(&x, &v.action.apply(&y, &m)?)?;
        let rhs = v.action.apply(&h.mul(&x, &y)?, &m)?;
        if let Some(w) = Witness::compare(&t, &lhs, &rhs) {
            assoc = Some(w);
            break;
        }
    }
    report.push("associative", assoc);
    let mut unit = None;
    for i in 0..d {
        if let Some(w) = Witness::compare(&[i], &v.action.apply(h.unit(), &vb(i))?, &vb(i)) {
            unit = Some(w);
            break;
        }
    }
    report.push("unital", unit);
    Ok(report)
}

/// The comodule structure of a Hopf module.
#[derive(Clone, Debug)]
pub enum Coaction {
    /// `ρ: M → M⊗H`.
    Right(LinMap),
    /// `λ: M → Q⊗M`; `Q` is an `H`-bimodule through `ν`.
    LeftQ {
        map: LinMap,
        presentation: Box<QuotientPresentation>,
    },
}

/// An `H`-bimodule `M` with a comodule structure in the bimodule category.
#[derive(Clone, Debug)]
pub struct HopfModule {
    pub over: QuasiBialgebra,
    pub dim: usize,
    /// `H × M → M`.
    pub left: BilinearTable,
    /// `M × H → M`.
    pub right: BilinearTable,
    pub coaction: Coaction,
    /// `Some(dim V)` when `M = V⊗H` (or `V⊗H` over a quotient) by construction.
    pub free_factor: Option<usize>,
}

impl HopfModule {
    pub fn orientation(&self) -> &'static str {
        match self.coaction {
            Coaction::Right(_) => "right",
            Coaction::LeftQ { .. } => "left_q",
        }
    }
}

/// `Q` as an `H`-bimodule: `h·q·k = ν(h)qν(k)`.
fn quotient_actions(p: &QuotientPresentation) -> Result<(BilinearTable, BilinearTable)> {
    let (q, n) = (&p.quotient, p.ambient().dim());
    let dq = q.dim();
    let nu = p.nu();
    let left = BilinearTable::from_fn(n, dq, dq, |i, j| Ok(q.mul(&nu.image(i), &q.basis(j))?.flatten()))?;
    let right = BilinearTable::from_fn(dq, n, dq, |i, j| Ok(q.mul(&q.basis(i), &nu.image(j))?.flatten()))?;
    Ok((left, right))
}

/// `Φ(x) = φ¹x¹φ̄¹ ⊗ φ²x²φ̄² ⊗ φ³x³φ̄³` for `x` in a triple tensor product of
/// bimodules, given each leg's left and right action tables. With `inverse`
/// the roles of `φ` and `φ⁻¹` are exchanged, giving `Φ⁻¹`.
fn bimodule_associator(
    h: &QuasiBialgebra,
    x: &TensorElement,
    lefts: [&BilinearTable; 3],
    rights: [&BilinearTable; 3],
    inverse: bool,
) -> Result<TensorElement> {
    let (outer, inner) = if inverse {
        (h.phi_inv()?.clone(), h.phi().clone())
    } else {
        (h.phi().clone(), h.phi_inv()?.clone())
    };
    let acted = legwise_product(&outer, x, &lefts)?;
    legwise_product(&acted, &inner, &rights)
}

fn check_bimodule(h: &QuasiBialgebra, m: &HopfModule, report: &mut Report) -> Result<()> {
    let (n, d) = (h.dim(), m.dim);
    let mb = |i: usize| TensorElement::basis(vec![d], vec![i]);
    let mut left = None;
    let mut right = None;
    let mut commute = None;
    for t in tuples(&[n, n, d]) {
        let (x, y, v) = (h.basis(t[0]), h.basis(t[1]), mb(t[2]));
        if left.is_none() {
            let lhs = m.left.apply(&x, &m.left.apply(&y, &v)?)?;
            let rhs = m.left.apply(&h.mul(&x, &y)?, &v)?;
            left = Witness::compare(&t, &lhs, &rhs);
        }
        if right.is_none() {
            let lhs = m.right.apply(&m.right.apply(&v, &x)?, &y)?;
            let rhs = m.right.apply(&v, &h.mul(&x, &y)?)?;
            right = Witness::compare(&t, &lhs, &rhs);
        }
        if commute.is_none() {
            let lhs = m.right.apply(&m.left.apply(&x, &v)?, &y)?;
            let rhs = m.left.apply(&x, &m.right.apply(&v, &y)?)?;
            commute = Witness::compare(&t, &lhs, &rhs);
        }
    }
    let mut unital = None;
    for i in 0..d {
        let v = mb(i);
        for side in [m.left.apply(h.unit(), &v)?, m.right.apply(&v, h.unit())?] {
            if unital.is_none() {
                unital = Witness::compare(&[i], &side, &v);
            }
        }
    }
    report.push("left_action_associative", left);
    report.push("right_action_associative", right);
    report.push("actions_commute", commute);
    report.push("actions_unital", unital);
    Ok(())
}

/// Bimodule axioms, the coaction being a bimodule map, the counit law and
/// coassociativity twisted by the bimodule constraint:
///
/// * right coaction: `Φ_{M,H,H}∘(ρ⊗H)∘ρ = (M⊗Δ)∘ρ`;
/// * left `Q`-coaction: `(Δ_Q⊗M)∘λ = Φ⁻¹_{Q,Q,M}∘(Q⊗λ)∘λ`.
pub fn check_hopf_module(m: &HopfModule) -> Result<Report> {
    let h = &m.over;
    let (n, d) = (h.dim(), m.dim);
    let mut report = Report::new("Hopf module");
    report.fact("dim_M", d);
    report.convention("coaction_orientation", m.orientation());
    report.convention(
        "bimodule_associator",
        "phi^1 u phibar^1 (x) phi^2 v phibar^2 (x) phi^3 w phibar^3",
    );
    check_bimodule(h, m, &mut report)?;
    let mb = |i: usize| TensorElement::basis(vec![d], vec![i]);
    let mult = h.mult();

    match &m.coaction {
        Coaction::Right(rho) => {
            if rho.source_shape() != [d] || rho.target_shape() != [d, n] {
                return Err(Error::shape(([d], [d, n]), (rho.source_shape(), rho.target_shape())));
            }
            let mut lin = None;
            for t in tuples(&[n, d]) {
                let (x, v) = (h.basis(t[0]), mb(t[1]));
                let lhs = rho.apply(&m.left.apply(&x, &v)?)?;
                let rhs = legwise_product(&h.delta_of(&x)?, &rho.apply(&v)?, &[&m.left, mult])?;
                if let Some(w) = Witness::compare(&t, &lhs, &rhs) {
                    lin = Some(w);
                    break;
                }
                let lhs = rho.apply(&m.right.apply(&v, &x)?)?;
                let rhs = legwise_product(&rho.apply(&v)?, &h.delta_of(&x)?, &[&m.right, mult])?;
                if let Some(w) = Witness::compare(&t, &lhs, &rhs) {
                    lin = Some(w);
                    break;
                }
            }
            report.push("coaction_bimodule_map", lin);

            let mut counit = None;
            let mut coassoc = None;
            for i in 0..d {
                let r = rho.apply(&mb(i))?;
                if counit.is_none() {
                    counit = Witness::compare(&[i], &r.apply_to_leg(1, h.epsilon())?, &mb(i));
                }
                if coassoc.is_none() {
                    let twice = r.apply_to_leg(0, rho)?;
                    let lhs = bimodule_associator(h, &twice, [&m.left, mult, mult], [&m.right, mult, mult], false)?;
                    let rhs = r.apply_to_leg(1, h.delta())?;
                    coassoc = Witness::compare(&[i], &lhs, &rhs);
                }
            }
            report.push("counit", counit);
            report.push("coassociativity", coassoc);
        }
        Coaction::LeftQ { map: lambda, presentation: p } => {
            let q = &p.quotient;
            let dq = q.dim();
            if lambda.source_shape() != [d] || lambda.target_shape() != [dq, d] {
                return Err(Error::shape(([d], [dq, d]), (lambda.source_shape(), lambda.target_shape())));
            }
            let (ql, qr) = quotient_actions(p)?;
            let mut lin = None;
            for t in tuples(&[n, d]) {
                let (x, v) = (h.basis(t[0]), mb(t[1]));
                let lhs = lambda.apply(&m.left.apply(&x, &v)?)?;
                let rhs = legwise_product(&h.delta_of(&x)?, &lambda.apply(&v)?, &[&ql, &m.left])?;
                if let Some(w) = Witness::compare(&t, &lhs, &rhs) {
                    lin = Some(w);
                    break;
                }
                let lhs = lambda.apply(&m.right.apply(&v, &x)?)?;
                let rhs = legwise_product(&lambda.apply(&v)?, &h.delta_of(&x)?, &[&qr, &m.right])?;
                if let Some(w) = Witness::compare(&t, &lhs, &rhs) {
                    lin = Some(w);
                    break;
                }
            }
            report.push("coaction_bimodule_map", lin);

            let mut counit = None;
            let mut coassoc = None;
            for i in 0..d {
                let l = lambda.apply(&mb(i))?;
                if counit.is_none() {
                    counit = Witness::compare(&[i], &l.apply_to_leg(0, q.epsilon())?, &mb(i));
                }
                if coassoc.is_none() {
                    let lhs = l.apply_to_leg(0, q.delta())?;
                    let twice = l.apply_to_leg(1, lambda)?;
                    let rhs = bimodule_associator(h, &twice, [&ql, &ql, &m.left], [&qr, &qr, &m.right], true)?;
                    coassoc = Witness::compare(&[i], &lhs, &rhs);
                }
            }
            report.push("counit", counit);
            report.push("coassociativity", coassoc);
        }
    }
    Ok(report)
}

/// `H` itself: regular actions, `ρ = Δ`.
pub fn regular_hopf_module(h: &QuasiBialgebra) -> HopfModule {
    HopfModule {
        over: h.clone(),
        dim: h.dim(),
        left: h.mult().clone(),
        right: h.mult().clone(),
        coaction: Coaction::Right(h.delta().clone()),
        free_factor: Some(1),
    }
}

/// `M = V⊗H` with `h·(v⊗g) = h₍₁₎v ⊗ h₍₂₎g`, `(v⊗g)·h = v ⊗ gh` and
/// `ρ(v⊗g) = φ̄¹v ⊗ φ̄²g₍₁₎ ⊗ φ̄³g₍₂₎`, the image of `V⊗Δ` under the inverse
/// bimodule constraint once `V`'s trivial right action is collapsed with
/// `(ε⊗H⊗H)(φ) = 1⊗1`; that identity is checked for the given `H`.
pub fn free_hopf_module(h: &QuasiBialgebra, v: &LeftModule) -> Result<HopfModule> {
    let vr = check_left_module(h, v)?;
    if let Some(c) = vr.failures().next() {
        return Err(Error::Precondition(format!("not a left module: {} fails", c.name)));
    }
    if h.phi().apply_to_leg(0, h.epsilon())? != h.ones(2) {
        return Err(Error::Precondition("(ε⊗H⊗H)(φ) differs from 1⊗1".into()));
    }
    let (n, dv) = (h.dim(), v.dim);
    let d = dv * n;
    let mult = h.mult();
    let split = |x: usize| (x / n, x % n);
    let left = BilinearTable::from_fn(n, d, d, |i, x| {
        let (a, g) = split(x);
        let vg = TensorElement::basis(vec![dv, n], vec![a, g]);
        let out = legwise_product(&h.delta().image(i), &vg, &[&v.action, mult])?;
        Ok(out.reshape(vec![d])?.flatten())
    })?;
    let right = BilinearTable::from_fn(d, n, d, |x, i| {
        let (a, g) = split(x);
        let gh = mult.basis_product(g, i);
        Ok(TensorElement::basis(vec![dv], vec![a]).tensor(&gh).reshape(vec![d])?.flatten())
    })?;
    let inv = h.phi_inv()?;
    let rho = LinMap::from_fn(vec![d], vec![d, n], |x| {
        let (a, g) = split(x[0]);
        let vd = TensorElement::basis(vec![dv], vec![a]).tensor(&h.delta().image(g));
        legwise_product(inv, &vd, &[&v.action, mult, mult])?.reshape(vec![d, n])
    })?;
    Ok(HopfModule {
        over: h.clone(),
        dim: d,
        left,
        right,
        coaction: Coaction::Right(rho),
        free_factor: Some(dv),
    })
}

/// `Q` as a left `Q`-comodule in `H`-bimodules: actions through `ν`,
/// `λ = Δ_Q`.
pub fn q_regular(p: &QuotientPresentation) -> Result<HopfModule> {
    let (left, right) = quotient_actions(p)?;
    Ok(HopfModule {
        over: p.ambient().clone(),
        dim: p.quotient.dim(),
        left,
        right,
        coaction: Coaction::LeftQ {
            map: p.quotient.delta().clone(),
            presentation: Box::new(p.clone()),
        },
        free_factor: None,
    })
}

/// `M⊗H` for a left `Q`-Hopf module `M`, with diagonal actions
/// `h·(m⊗g)·k = h₍₁₎mk₍₁₎ ⊗ h₍₂₎gk₍₂₎` and `λ = Φ_{Q,M,H}∘(λ_M⊗H)`.
pub fn tensor_with_regular(m: &HopfModule) -> Result<HopfModule> {
    let Coaction::LeftQ { map: lambda, presentation: p } = &m.coaction else {
        return Err(Error::Precondition("tensor_with_regular needs a left Q-coaction".into()));
    };
    let h = &m.over;
    let (n, dm) = (h.dim(), m.dim);
    let d = dm * n;
    let mult = h.mult();
    let (ql, qr) = quotient_actions(p)?;
    let split = |x: usize| (x / n, x % n);
    let left = BilinearTable::from_fn(n, d, d, |i, x| {
        let (a, g) = split(x);
        let mg = TensorElement::basis(vec![dm, n], vec![a, g]);
        Ok(legwise_product(&h.delta().image(i), &mg, &[&m.left, mult])?.reshape(vec![d])?.flatten())
    })?;
    let right = BilinearTable::from_fn(d, n, d, |x, i| {
        let (a, g) = split(x);
        let mg = TensorElement::basis(vec![dm, n], vec![a, g]);
        Ok(legwise_product(&mg, &h.delta().image(i), &[&m.right, mult])?.reshape(vec![d])?.flatten())
    })?;
    let dq = p.quotient.dim();
    let lam = LinMap::from_fn(vec![d], vec![dq, d], |x| {
        let (a, g) = split(x[0]);
        let first = lambda.image(a).tensor(&h.basis(g));
        bimodule_associator(h, &first, [&ql, &m.left, mult], [&qr, &m.right, mult], false)?
            .reshape(vec![dq, d])
    })?;
    Ok(HopfModule {
        over: h.clone(),
        dim: d,
        left,
        right,
        coaction: Coaction::LeftQ {
            map: lam,
            presentation: p.clone(),
        },
        free_factor: Some(dm),
    })
}

/// `dim Q | dim M` for a left `Q`-Hopf module (or `dim H | dim M` for a
/// right `H`-Hopf module). For modules built as `V⊗H` the report also echoes
/// `(dim H / dim Q)·dim V`.
pub fn divisibility_report(m: &HopfModule) -> Report {
    let dh = m.over.dim();
    let dc = match &m.coaction {
        Coaction::Right(_) => dh,
        Coaction::LeftQ { presentation, .. } => presentation.quotient.dim(),
    };
    let mut report = Report::new("Hopf module divisibility");
    report.fact("dim_M", m.dim);
    report.fact("dim_coalgebra", dc);
    report.convention("coaction_orientation", m.orientation());
    report.push_verdict(
        "dim_coalgebra_divides_dim_M",
        m.dim.is_multiple_of(dc),
        Some(format!("{dc} | {}", m.dim)),
    );
    if let (Some(dv), true) = (m.free_factor, dh.is_multiple_of(dc)) {
        report.fact("free_factor_dim", dv);
        report.fact("cotensor_dim_echo", dh / dc * dv);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{group_algebra, twisted_dual_group_algebra};

    #[test]
    fn regular_module_of_group_algebra() {
        let h = group_algebra(2).unwrap().algebra;
        let r = check_hopf_module(&regular_hopf_module(&h)).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn trivial_module_is_a_module() {
        let h = twisted_dual_group_algebra(2, 1).unwrap().algebra;
        let v = LeftModule::trivial(&h).unwrap();
        assert!(check_left_module(&h, &v).unwrap().all_passed());
    }
}
