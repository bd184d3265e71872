//! Quasibialgebras given by structure constants: the axiom checker,
//! associator inversion, opposite/coopposite/tensor constructions and
//! morphisms.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactnum::{common_conductor, Scalar};
use crate::multilinear::{tensor_multiply, tuples, BilinearTable, LinMap, SparseVec, TensorElement};
use crate::report::{Report, Witness};

/// A finite-dimensional quasibialgebra `(H, Δ, ε, φ)` over ℚ(ζ_N).
///
/// The basis is `e_0, …, e_{n-1}`. Multiplication is a [`BilinearTable`],
/// `Δ: H → H⊗H` and `ε: H → k` are [`LinMap`]s and `φ ∈ H^{⊗3}` is a
/// [`TensorElement`]. The inverse associator is computed on first use and
/// cached.
#[derive(Clone, Debug)]
pub struct QuasiBialgebra {
    conductor: u32,
    labels: Vec<String>,
    mult: BilinearTable,
    unit: TensorElement,
    delta: LinMap,
    epsilon: LinMap,
    phi: TensorElement,
    phi_inv: OnceLock<TensorElement>,
    notes: BTreeMap<String, String>,
}

/// Raw parts of a quasibialgebra, validated by [`QuasiBialgebra::new`].
#[derive(Clone, Debug)]
pub struct QbaParts {
    pub conductor: u32,
    pub labels: Vec<String>,
    pub mult: BilinearTable,
    pub unit: TensorElement,
    pub delta: LinMap,
    pub epsilon: LinMap,
    pub phi: TensorElement,
}

impl QuasiBialgebra {
    /// Validate dimensions only; axioms are checked by [`check_quasibialgebra`].
    pub fn new(parts: QbaParts) -> Result<Self> {
        let n = parts.labels.len();
        if n == 0 {
            return Err(Error::Precondition("dimension must be positive".into()));
        }
        let mult_dims = (parts.mult.left_dim(), parts.mult.right_dim(), parts.mult.out_dim());
        if mult_dims != (n, n, n) {
            return Err(Error::shape((n, n, n), mult_dims));
        }
        if parts.unit.shape() != [n] {
            return Err(Error::shape([n], parts.unit.shape()));
        }
        if parts.delta.source_shape() != [n] || parts.delta.target_shape() != [n, n] {
            return Err(Error::shape(
                ([n], [n, n]),
                (parts.delta.source_shape(), parts.delta.target_shape()),
            ));
        }
        if parts.epsilon.source_shape() != [n] || !parts.epsilon.target_shape().is_empty() {
            return Err(Error::shape(
                ([n], [0usize; 0]),
                (parts.epsilon.source_shape(), parts.epsilon.target_shape()),
            ));
        }
        if parts.phi.shape() != [n, n, n] {
            return Err(Error::shape([n, n, n], parts.phi.shape()));
        }
        Ok(QuasiBialgebra {
            conductor: parts.conductor,
            labels: parts.labels,
            mult: parts.mult,
            unit: parts.unit,
            delta: parts.delta,
            epsilon: parts.epsilon,
            phi: parts.phi,
            phi_inv: OnceLock::new(),
            notes: BTreeMap::new(),
        })
    }

    pub fn parts(&self) -> QbaParts {
        QbaParts {
            conductor: self.conductor,
            labels: self.labels.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            delta: self.delta.clone(),
            epsilon: self.epsilon.clone(),
            phi: self.phi.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &BilinearTable {
        &self.mult
    }

    pub fn unit(&self) -> &TensorElement {
        &self.unit
    }

    pub fn delta(&self) -> &LinMap {
        &self.delta
    }

    pub fn epsilon(&self) -> &LinMap {
        &self.epsilon
    }

    pub fn phi(&self) -> &TensorElement {
        &self.phi
    }

    /// Free-form conventions attached to this instance (for example which
    /// associator an opposite was built with).
    pub fn notes(&self) -> &BTreeMap<String, String> {
        &self.notes
    }

    pub fn with_note(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.notes.insert(key.into(), value.into());
        self
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.conductor)
    }

    pub fn basis(&self, i: usize) -> TensorElement {
        TensorElement::basis(vec![self.dim()], vec![i])
    }

    /// `1 ⊗ … ⊗ 1` with `k` factors.
    pub fn ones(&self, k: usize) -> TensorElement {
        (0..k).fold(TensorElement::scalar(Scalar::one(self.conductor)), |acc, _| {
            acc.tensor(&self.unit)
        })
    }

    /// Product in `H^{⊗k}`.
    pub fn mul(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        tensor_multiply(a, b, &self.mult)
    }

    pub fn mul3(&self, a: &TensorElement, b: &TensorElement, c: &TensorElement) -> Result<TensorElement> {
        self.mul(&self.mul(a, b)?, c)
    }

    pub fn delta_of(&self, x: &TensorElement) -> Result<TensorElement> {
        self.delta.apply(x)
    }

    pub fn epsilon_of(&self, x: &TensorElement) -> Result<Scalar> {
        Ok(self.epsilon.apply(x)?.scalar_value())
    }

    pub fn epsilon_basis(&self, i: usize) -> Scalar {
        self.epsilon.entry(0, i)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.mult.get(i, j) == self.mult.get(j, i)))
    }

    /// The inverse associator, computed (and cached) on first call.
    pub fn phi_inv(&self) -> Result<&TensorElement> {
        if let Some(inv) = self.phi_inv.get() {
            return Ok(inv);
        }
        let inv = invert_associator(self)?;
        Ok(self.phi_inv.get_or_init(|| inv))
    }

    /// Re-express every structure constant in ℚ(ζ_M) for a multiple `M` of
    /// the current conductor.
    pub fn with_conductor(&self, conductor: u32) -> Result<QuasiBialgebra> {
        if conductor == self.conductor {
            return Ok(self.clone());
        }
        if !conductor.is_multiple_of(self.conductor) {
            return Err(Error::ConductorMismatch(self.conductor, conductor));
        }
        let mut out = QuasiBialgebra::new(QbaParts {
            conductor,
            labels: self.labels.clone(),
            mult: self.mult.embed(conductor)?,
            unit: self.unit.embed(conductor)?,
            delta: self.delta.embed(conductor)?,
            epsilon: self.epsilon.embed(conductor)?,
            phi: self.phi.embed(conductor)?,
        })?;
        out.notes = self.notes.clone();
        Ok(out)
    }

    /// Left multiplication by `x ∈ H^{⊗k}` as a linear map on `H^{⊗k}`.
    pub fn left_multiplication(&self, x: &TensorElement) -> Result<LinMap> {
        let shape = x.shape().to_vec();
        LinMap::from_fn(shape.clone(), shape.clone(), |idx| {
            self.mul(x, &TensorElement::basis(shape.clone(), idx.to_vec()))
        })
    }
}

/// `φ⁻¹`, obtained by exactly inverting left multiplication by `φ` on
/// `H^{⊗3}` and applying the inverse to `1⊗1⊗1`. Both one-sided products are
/// verified.
pub fn invert_associator(h: &QuasiBialgebra) -> Result<TensorElement> {
    let left = h.left_multiplication(&h.phi)?;
    let ones = h.ones(3);
    let inv = left.solve(&ones)?;
    let right_ok = h.mul(&inv, &h.phi)? == ones;
    let left_ok = h.mul(&h.phi, &inv)? == ones;
    if !(left_ok && right_ok) {
        return Err(Error::InternalInconsistency(
            "computed associator inverse is not two-sided".into(),
        ));
    }
    Ok(inv)
}

fn first_witness(
    cases: impl IntoIterator<Item = Result<(Vec<usize>, TensorElement, TensorElement)>>,
) -> Result<Option<Witness>> {
    for case in cases {
        let (input, lhs, rhs) = case?;
        if let Some(w) = Witness::compare(&input, &lhs, &rhs) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Verify every quasibialgebra axiom on basis tuples:
/// associativity and unit, `Δ` and `ε` algebra maps, the counit law,
/// quasi-coassociativity `(H⊗Δ)Δ(h)·φ = φ·(Δ⊗H)Δ(h)`, the pentagon
/// `(H⊗H⊗Δ)(φ)·(Δ⊗H⊗H)(φ) = (1⊗φ)·(H⊗Δ⊗H)(φ)·(φ⊗1)`, normalization
/// `(H⊗ε⊗H)(φ) = 1⊗1`, and invertibility of `φ`.
pub fn check_quasibialgebra(h: &QuasiBialgebra) -> Result<Report> {
    let n = h.dim();
    let mut report = Report::new("quasibialgebra");
    report.fact("dim", n);
    report.fact("conductor", h.conductor());
    for (k, v) in h.notes() {
        report.convention(k.clone(), v.clone());
    }
    let e = |i: usize| h.basis(i);

    let assoc = first_witness(tuples(&[n, n, n]).map(|t| {
        let (a, b, c) = (e(t[0]), e(t[1]), e(t[2]));
        Ok((t, h.mul(&h.mul(&a, &b)?, &c)?, h.mul(&a, &h.mul(&b, &c)?)?))
    }))?;
    report.push("associativity", assoc);

    let unit = first_witness((0..n).flat_map(|i| {
        let x = e(i);
        [
            h.mul(&h.unit, &x).map(|l| (vec![i], l, x.clone())),
            h.mul(&x, &h.unit).map(|r| (vec![i], r, x.clone())),
        ]
    }))?;
    report.push("unit", unit);

    let delta_unit = std::iter::once(h.delta_of(&h.unit).map(|d| (Vec::new(), d, h.ones(2))));
    let delta_mult = tuples(&[n, n]).map(|t| {
        let lhs = h.delta_of(&h.mul(&e(t[0]), &e(t[1]))?)?;
        let rhs = h.mul(&h.delta_of(&e(t[0]))?, &h.delta_of(&e(t[1]))?)?;
        Ok((t, lhs, rhs))
    });
    report.push("delta_algebra_map", first_witness(delta_unit.chain(delta_mult))?);

    let scalar = |c: Scalar| TensorElement::scalar(c);
    let eps_unit = std::iter::once(
        h.epsilon_of(&h.unit)
            .map(|c| (Vec::new(), scalar(c), scalar(Scalar::one(h.conductor())))),
    );
    let eps_mult = tuples(&[n, n]).map(|t| {
        let lhs = h.epsilon_of(&h.mul(&e(t[0]), &e(t[1]))?)?;
        let rhs = h.epsilon_basis(t[0]) * h.epsilon_basis(t[1]);
        Ok((t, scalar(lhs), scalar(rhs)))
    });
    report.push("epsilon_algebra_map", first_witness(eps_unit.chain(eps_mult))?);

    let counit = first_witness((0..n).flat_map(|i| {
        let d = h.delta_of(&e(i));
        [0usize, 1].map(|leg| {
            let d = d.clone()?;
            Ok((vec![i], d.apply_to_leg(leg, &h.epsilon)?, e(i)))
        })
    }))?;
    report.push("counit", counit);

    let quasi_coassoc = first_witness((0..n).map(|i| {
        let d = h.delta_of(&e(i))?;
        let right = d.apply_to_leg(1, &h.delta)?;
        let left = d.apply_to_leg(0, &h.delta)?;
        Ok((vec![i], h.mul(&right, &h.phi)?, h.mul(&h.phi, &left)?))
    }))?;
    report.push("quasi_coassociativity", quasi_coassoc);

    let phi = &h.phi;
    let lhs = h.mul(&phi.apply_to_leg(2, &h.delta)?, &phi.apply_to_leg(0, &h.delta)?)?;
    let rhs = h.mul3(
        &h.unit.tensor(phi),
        &phi.apply_to_leg(1, &h.delta)?,
        &phi.tensor(&h.unit),
    )?;
    report.push("pentagon", Witness::compare(&[], &lhs, &rhs));

    let normalized = phi.apply_to_leg(1, &h.epsilon)?;
    report.push("normalization", Witness::compare(&[], &normalized, &h.ones(2)));

    match h.phi_inv() {
        Ok(_) => report.push_verdict("associator_invertible", true, None),
        Err(Error::NotInvertible { kernel_dim }) => report.push_verdict(
            "associator_invertible",
            false,
            Some(format!("left multiplication by the associator has kernel dimension {kernel_dim}")),
        ),
        Err(e) => return Err(e),
    }
    report.convention(
        "pivot_rule",
        "reduced row echelon form, lexicographically smallest pivot column",
    );
    Ok(report)
}

/// The one-dimensional quasibialgebra `k`.
pub fn trivial(conductor: u32) -> QuasiBialgebra {
    let one = Scalar::one(conductor);
    let mut mult = BilinearTable::zero(1, 1, 1);
    mult.add(0, 0, 0, one.clone()).expect("in range");
    QuasiBialgebra::new(QbaParts {
        conductor,
        labels: vec!["1".into()],
        mult,
        unit: TensorElement::basis(vec![1], vec![0]),
        delta: LinMap::from_columns(vec![1], vec![1, 1], vec![SparseVec::from([(0, one.clone())])]),
        epsilon: LinMap::from_columns(vec![1], vec![], vec![SparseVec::from([(0, one)])]),
        phi: TensorElement::basis(vec![1, 1, 1], vec![0, 0, 0]),
    })
    .expect("trivial quasibialgebra is well formed")
}

/// Which derived quasibialgebra [`op_cop_tensor`] builds.
#[derive(Clone, Copy, Debug)]
pub enum Construction<'a> {
    Opposite,
    Coopposite,
    Tensor(&'a QuasiBialgebra),
}

/// Opposite, coopposite or tensor-product quasibialgebra.
///
/// Associator conventions: the opposite algebra uses `φ⁻¹`, the coopposite
/// uses `(φ⁻¹)₃₂₁`, and the tensor product interleaves the two associators
/// leg by leg. Each output records its convention in [`QuasiBialgebra::notes`].
pub fn op_cop_tensor(h: &QuasiBialgebra, which: Construction<'_>) -> Result<QuasiBialgebra> {
    match which {
        Construction::Opposite => opposite(h),
        Construction::Coopposite => coopposite(h),
        Construction::Tensor(k) => tensor_product(h, k),
    }
}

pub fn opposite(h: &QuasiBialgebra) -> Result<QuasiBialgebra> {
    let mut parts = h.parts();
    parts.mult = h.mult.transposed();
    parts.phi = h.phi_inv()?.clone();
    Ok(QuasiBialgebra::new(parts)?.with_note("opposite_associator", "phi^-1"))
}

pub fn coopposite(h: &QuasiBialgebra) -> Result<QuasiBialgebra> {
    let n = h.dim();
    let mut parts = h.parts();
    parts.delta = LinMap::from_fn(vec![n], vec![n, n], |i| h.delta.image(i[0]).permute_legs(&[1, 0]))?;
    parts.phi = h.phi_inv()?.reverse_legs();
    Ok(QuasiBialgebra::new(parts)?.with_note("coopposite_associator", "(phi^-1)_321"))
}

pub fn tensor_product(h: &QuasiBialgebra, k: &QuasiBialgebra) -> Result<QuasiBialgebra> {
    let conductor = common_conductor(h.conductor(), k.conductor());
    let h = h.with_conductor(conductor)?;
    let k = k.with_conductor(conductor)?;
    let (n, m) = (h.dim(), k.dim());
    let nm = n * m;
    let labels = h
        .labels
        .iter()
        .flat_map(|a| k.labels.iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    let mult = BilinearTable::from_fn(nm, nm, nm, |x, y| {
        let prod = h
            .mult
            .basis_product(x / m, y / m)
            .tensor(&k.mult.basis_product(x % m, y % m));
        Ok(prod.reshape(vec![nm])?.flatten())
    })?;
    let unit = h.unit.tensor(&k.unit).reshape(vec![nm])?;
    let delta = LinMap::from_fn(vec![nm], vec![nm, nm], |x| {
        h.delta
            .image(x[0] / m)
            .tensor(&k.delta.image(x[0] % m))
            .permute_legs(&[0, 2, 1, 3])?
            .reshape(vec![nm, nm])
    })?;
    let epsilon = LinMap::from_fn(vec![nm], vec![], |x| {
        Ok(TensorElement::scalar(
            h.epsilon_basis(x[0] / m) * k.epsilon_basis(x[0] % m),
        ))
    })?;
    let phi = h
        .phi
        .tensor(&k.phi)
        .permute_legs(&[0, 3, 1, 4, 2, 5])?
        .reshape(vec![nm, nm, nm])?;
    Ok(QuasiBialgebra::new(QbaParts {
        conductor,
        labels,
        mult,
        unit,
        delta,
        epsilon,
        phi,
    })?
    .with_note("tensor_associator", "legwise interleaving of the factor associators"))
}

/// A linear map between two quasibialgebras, to be checked for being a
/// morphism.
#[derive(Clone, Debug)]
pub struct QbaMorphism {
    pub source: QuasiBialgebra,
    pub target: QuasiBialgebra,
    pub map: LinMap,
}

impl QbaMorphism {
    pub fn new(source: QuasiBialgebra, target: QuasiBialgebra, map: LinMap) -> Result<Self> {
        if map.source_shape() != [source.dim()] || map.target_shape() != [target.dim()] {
            return Err(Error::shape(
                ([source.dim()], [target.dim()]),
                (map.source_shape(), map.target_shape()),
            ));
        }
        Ok(QbaMorphism { source, target, map })
    }

    pub fn identity(h: &QuasiBialgebra) -> Self {
        QbaMorphism {
            source: h.clone(),
            target: h.clone(),
            map: LinMap::identity(vec![h.dim()]),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &QbaMorphism) -> Result<QbaMorphism> {
        QbaMorphism::new(inner.source.clone(), self.target.clone(), self.map.compose(&inner.map)?)
    }

    pub fn apply(&self, x: &TensorElement) -> Result<TensorElement> {
        self.map.apply(x)
    }

    /// Apply the map to every leg of a tensor.
    pub fn apply_all_legs(&self, t: &TensorElement) -> Result<TensorElement> {
        (0..t.arity()).try_fold(t.clone(), |acc, leg| acc.apply_to_leg(leg, &self.map))
    }
}

/// Verdicts for multiplicativity, unitality, compatibility with `Δ`, `ε` and
/// the associators; facts record the rank and whether the map is
/// injective/surjective.
pub fn check_morphism(f: &QbaMorphism) -> Result<Report> {
    let (h, l) = (&f.source, &f.target);
    let n = h.dim();
    let mut report = Report::new("quasibialgebra morphism");
    let fm = |x: &TensorElement| f.apply(x);

    let mult = first_witness(tuples(&[n, n]).map(|t| {
        let (a, b) = (h.basis(t[0]), h.basis(t[1]));
        Ok((t, fm(&h.mul(&a, &b)?)?, l.mul(&fm(&a)?, &fm(&b)?)?))
    }))?;
    report.push("multiplicative", mult);
    report.push("unital", Witness::compare(&[], &fm(h.unit())?, l.unit()));

    let delta = first_witness((0..n).map(|i| {
        let x = h.basis(i);
        Ok((vec![i], l.delta_of(&fm(&x)?)?, f.apply_all_legs(&h.delta_of(&x)?)?))
    }))?;
    report.push("delta_compatible", delta);

    let eps = first_witness((0..n).map(|i| {
        let x = h.basis(i);
        Ok((
            vec![i],
            TensorElement::scalar(l.epsilon_of(&fm(&x)?)?),
            TensorElement::scalar(h.epsilon_basis(i)),
        ))
    }))?;
    report.push("epsilon_compatible", eps);
    report.push(
        "associator_compatible",
        Witness::compare(&[], &f.apply_all_legs(h.phi())?, l.phi()),
    );

    let rank = f.map.rank();
    report.fact("rank", rank);
    report.fact("injective", rank == n);
    report.fact("surjective", rank == l.dim());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_algebra_passes() {
        let k = trivial(1);
        let r = check_quasibialgebra(&k).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn malformed_dimensions_are_errors() {
        let mut parts = trivial(1).parts();
        parts.phi = TensorElement::basis(vec![1, 1], vec![0, 0]);
        assert!(matches!(QuasiBialgebra::new(parts), Err(Error::ShapeMismatch { .. })));
    }
}
