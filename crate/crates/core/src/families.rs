//! Instance generators: cyclic group algebras, dual group algebras twisted by
//! a 3-cocycle, subgroup ideals and subgroup subalgebras.

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::multilinear::{tuples, BilinearTable, LinMap, SparseVec, Subspace, TensorElement};
use crate::qba::{check_quasibialgebra, QbaParts, QuasiBialgebra};
use crate::qha::{check_quasi_antipode, QuasiAntipode, QuasiHopf};
use crate::report::{Report, Witness};

fn modn(a: i64, n: usize) -> usize {
    a.rem_euclid(n as i64) as usize
}

/// The group algebra `kℤ_n` with basis `g⁰, …, g^{n−1}`, `Δ(g) = g⊗g`,
/// trivial associator and `S(g) = g⁻¹`, `α = β = 1`.
pub fn group_algebra(n: usize) -> Result<QuasiHopf> {
    group_algebra_over(n, 1)
}

/// [`group_algebra`] with scalars in ℚ(ζ_N).
pub fn group_algebra_over(n: usize, conductor: u32) -> Result<QuasiHopf> {
    if n == 0 {
        return Err(Error::Precondition("group order must be positive".into()));
    }
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    finite_group_algebra(&table, conductor)
}

/// The group algebra of a finite group given by its Cayley table, with the
/// identity at index 0. Basis labels are `g{index}`.
pub fn finite_group_algebra(table: &[Vec<usize>], conductor: u32) -> Result<QuasiHopf> {
    let n = table.len();
    if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) {
        return Err(Error::Precondition("not a square Cayley table".into()));
    }
    if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
        return Err(Error::Precondition("index 0 is not the identity".into()));
    }
    let assoc = tuples(&[n, n, n]).all(|t| table[table[t[0]][t[1]]][t[2]] == table[t[0]][table[t[1]][t[2]]]);
    if !assoc {
        return Err(Error::Precondition("Cayley table is not associative".into()));
    }
    let inverse = (0..n)
        .map(|a| (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Precondition("Cayley table has an element without inverse".into()))?;
    let one = Scalar::one(conductor);
    let single = |k: usize| SparseVec::from([(k, one.clone())]);
    let mult = BilinearTable::from_fn(n, n, n, |a, b| Ok(single(table[a][b])))?;
    let unit = TensorElement::basis(vec![n], vec![0]);
    let delta = LinMap::from_fn(vec![n], vec![n, n], |a| {
        Ok(TensorElement::basis(vec![n, n], vec![a[0], a[0]]))
    })?;
    let epsilon = LinMap::from_fn(vec![n], vec![], |_| Ok(TensorElement::scalar(one.clone())))?;
    let algebra = QuasiBialgebra::new(QbaParts {
        conductor,
        labels: (0..n).map(|a| format!("g{a}")).collect(),
        mult,
        unit: unit.clone(),
        delta,
        epsilon,
        phi: TensorElement::basis(vec![n, n, n], vec![0, 0, 0]),
    })?;
    let s = LinMap::from_fn(vec![n], vec![n], |a| Ok(TensorElement::basis(vec![n], vec![inverse[a[0]]])))?;
    QuasiHopf::new(algebra, QuasiAntipode::new(s, unit.clone(), unit)?)
}

/// `kS₃` with the permutations of `{0,1,2}` in lexicographic order of their
/// one-line notation, composed as functions: `(στ)(i) = σ(τ(i))`.
pub fn symmetric_group_s3(conductor: u32) -> Result<QuasiHopf> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("closed under composition");
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect();
    finite_group_algebra(&table, conductor)
}

/// A normalized 3-cocycle on `ℤ_n` with values in ℚ(ζ_n), stored as a full
/// value table so that individual values can be altered for negative tests.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicCocycle {
    pub n: usize,
    pub s: usize,
    values: Vec<Scalar>,
}

impl CyclicCocycle {
    /// `ω_s(a, b, c) = ζ_n^{s·a·⌊(b+c)/n⌋}`.
    pub fn new(n: usize, s: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("group order must be positive".into()));
        }
        let values = tuples(&[n, n, n])
            .map(|t| {
                let carry = (t[1] + t[2]) / n;
                Scalar::zeta_power(n as u32, (s % n * t[0] * carry) as i64)
            })
            .collect();
        Ok(CyclicCocycle { n, s: s % n, values })
    }

    pub fn conductor(&self) -> u32 {
        self.n as u32
    }

    pub fn value(&self, a: usize, b: usize, c: usize) -> &Scalar {
        let n = self.n;
        &self.values[(a % n * n + b % n) * n + c % n]
    }

    /// Overwrite one value (used to build corrupted instances).
    pub fn set(&mut self, a: usize, b: usize, c: usize, v: Scalar) {
        let n = self.n;
        self.values[(a * n + b) * n + c] = v;
    }

    /// The diagonal associator `Σ ω(a,b,c) δ_a⊗δ_b⊗δ_c`.
    pub fn associator(&self) -> TensorElement {
        let n = self.n;
        let mut phi = TensorElement::zero(vec![n, n, n]);
        for t in tuples(&[n, n, n]) {
            let v = self.value(t[0], t[1], t[2]).clone();
            phi.add_term(t, v);
        }
        phi
    }
}

/// `k^{ℤ_n}` with pointwise multiplication on the idempotents `δ_a`,
/// `Δ(δ_a) = Σ_b δ_b⊗δ_{a−b}`, `ε(δ_a) = [a = 0]` and the diagonal associator
/// of `ω`. No antipode is attached.
pub fn twisted_dual_from_cocycle(omega: &CyclicCocycle) -> Result<QuasiBialgebra> {
    let n = omega.n;
    let conductor = omega.conductor();
    let one = Scalar::one(conductor);
    let mult = BilinearTable::from_fn(n, n, n, |a, b| {
        Ok(if a == b {
            SparseVec::from([(a, one.clone())])
        } else {
            SparseVec::new()
        })
    })?;
    let unit = TensorElement::from_entries(vec![n], (0..n).map(|a| (vec![a], one.clone())))?;
    let delta = LinMap::from_fn(vec![n], vec![n, n], |a| {
        TensorElement::from_entries(
            vec![n, n],
            (0..n).map(|b| (vec![b, modn(a[0] as i64 - b as i64, n)], one.clone())),
        )
    })?;
    let epsilon = LinMap::from_fn(vec![n], vec![], |a| {
        Ok(TensorElement::scalar(if a[0] == 0 { one.clone() } else { Scalar::zero(conductor) }))
    })?;
    QuasiBialgebra::new(QbaParts {
        conductor,
        labels: (0..n).map(|a| format!("d{a}")).collect(),
        mult,
        unit,
        delta,
        epsilon,
        phi: omega.associator(),
    })
}

/// `k^{ℤ_n}_{ω_s}` with `S(δ_a) = δ_{−a}`, `α = 1` and diagonal `β`.
///
/// Two diagonal normalizations for `β` are tried, `β_a = ω(a,−a,a)⁻¹` and
/// `β_a = ω(a,−a,a)`; the first one passing every quasi-antipode identity is
/// shipped and named in the instance notes. The whole instance is checked
/// before it is returned.
pub fn twisted_dual_group_algebra(n: usize, s: usize) -> Result<QuasiHopf> {
    let omega = CyclicCocycle::new(n, s)?;
    let algebra = twisted_dual_from_cocycle(&omega)?;
    let axioms = check_quasibialgebra(&algebra)?;
    if !axioms.all_passed() {
        return Err(Error::InternalInconsistency(format!(
            "generated k^Z{n} twisted by s={s} fails the quasibialgebra axioms"
        )));
    }
    let antipode_map = LinMap::from_fn(vec![n], vec![n], |a| {
        Ok(TensorElement::basis(vec![n], vec![(n - a[0]) % n]))
    })?;
    let candidates = [
        ("alpha = 1, beta_a = omega(a,-a,a)^-1", true),
        ("alpha = 1, beta_a = omega(a,-a,a)", false),
    ];
    for (name, inverted) in candidates {
        let mut beta = TensorElement::zero(vec![n]);
        for a in 0..n {
            let w = omega.value(a, (n - a) % n, a);
            beta.add_term(vec![a], if inverted { w.inverse()? } else { w.clone() });
        }
        let antipode = QuasiAntipode::new(antipode_map.clone(), algebra.unit().clone(), beta)?;
        if check_quasi_antipode(&algebra, &antipode)?.all_passed() {
            let algebra = algebra
                .with_note("cocycle", format!("omega_{s}(a,b,c) = z^(s*a*floor((b+c)/{n}))"))
                .with_note("alpha_beta_normalization", name);
            return QuasiHopf::new(algebra, antipode);
        }
    }
    Err(Error::InternalInconsistency(format!(
        "no diagonal quasi-antipode candidate passes for n={n}, s={s}"
    )))
}

/// The 3-cocycle identity on all `n⁴` tuples, normalization on every tuple
/// containing 0, and the pentagon of the induced diagonal associator; the two
/// routes must agree.
pub fn cocycle_verify(omega: &CyclicCocycle) -> Result<Report> {
    let n = omega.n;
    let mut report = Report::new("3-cocycle");
    report.fact("n", n);
    report.fact("s", omega.s);
    let w = |a: usize, b: usize, c: usize| omega.value(a, b, c);
    let mut cocycle = None;
    for t in tuples(&[n, n, n, n]) {
        let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
        let lhs = w(b, c, d) * w(a, (b + c) % n, d) * w(a, b, c).clone();
        let rhs = w((a + b) % n, c, d) * w(a, b, (c + d) % n);
        if lhs != rhs {
            cocycle = Some(Witness::new(t, Vec::new(), &lhs, &rhs));
            break;
        }
    }
    let cocycle_ok = cocycle.is_none();
    report.push("cocycle_identity", cocycle);
    let mut normalized = None;
    for t in tuples(&[n, n, n]) {
        if t.contains(&0) && !w(t[0], t[1], t[2]).is_one() {
            let one = Scalar::one(omega.conductor());
            normalized = Some(Witness::new(t.clone(), Vec::new(), w(t[0], t[1], t[2]), &one));
            break;
        }
    }
    report.push("normalized", normalized);
    let h = twisted_dual_from_cocycle(omega)?;
    let pentagon_ok = check_quasibialgebra(&h)?.passed("pentagon");
    report.fact("pentagon_passes", pentagon_ok);
    report.push_verdict(
        "routes_agree",
        pentagon_ok == cocycle_ok,
        Some("cocycle identity and pentagon of the diagonal associator".into()),
    );
    Ok(report)
}

fn check_subgroup(n: usize, m: usize) -> Result<usize> {
    if m == 0 || !n.is_multiple_of(m) {
        return Err(Error::Precondition(format!("subgroup order {m} does not divide {n}")));
    }
    Ok(n / m)
}

/// `span{δ_a : a ∉ L}` in `k^{ℤ_n}` for the subgroup `L` of order `m`.
pub fn subgroup_quotient_ideal(n: usize, m: usize) -> Result<Subspace> {
    let step = check_subgroup(n, m)?;
    let vs: Vec<_> = (0..n)
        .filter(|a| a % step != 0)
        .map(|a| TensorElement::basis(vec![n], vec![a]))
        .collect();
    Subspace::from_vectors(vec![n], vs.iter())
}

/// The class `s'` with `ω_s` restricted to the order-`m` subgroup equal to
/// `ω_{s'}` on `ℤ_m`.
pub fn restricted_class(n: usize, s: usize, m: usize) -> Result<usize> {
    check_subgroup(n, m)?;
    Ok(s % m)
}

/// `span{g^a : a ∈ L}` in `kℤ_n` for the subgroup `L` of order `m`.
pub fn subgroup_subalgebra(n: usize, m: usize) -> Result<Subspace> {
    let step = check_subgroup(n, m)?;
    let vs: Vec<_> = (0..n)
        .step_by(step)
        .map(|a| TensorElement::basis(vec![n], vec![a]))
        .collect();
    Subspace::from_vectors(vec![n], vs.iter())
}

/// Functions on `ℤ_n` constant on the cosets of the order-`m` subgroup:
/// `span{Σ_{b ∈ a+L} δ_b}`.
pub fn coset_function_subalgebra(n: usize, m: usize) -> Result<Subspace> {
    let step = check_subgroup(n, m)?;
    let vs = (0..step)
        .map(|r| {
            TensorElement::from_entries(
                vec![n],
                (r..n).step_by(step).map(|b| (vec![b], Scalar::from_int(1))),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Subspace::from_vectors(vec![n], vs.iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cocycle_is_normalized_and_closed() {
        for n in 1..=4 {
            for s in 0..n {
                let r = cocycle_verify(&CyclicCocycle::new(n, s).unwrap()).unwrap();
                assert!(r.all_passed(), "n={n} s={s}: {r:?}");
            }
        }
    }

    #[test]
    fn corrupted_cocycle_fails_with_witness() {
        let mut omega = CyclicCocycle::new(2, 1).unwrap();
        omega.set(1, 1, 1, Scalar::from_int(2));
        let r = cocycle_verify(&omega).unwrap();
        let c = r.check("cocycle_identity").unwrap();
        assert!(!c.passed);
        assert!(c.witness.is_some());
        assert!(r.passed("routes_agree"));
    }

    #[test]
    fn z2_twisted_value() {
        let omega = CyclicCocycle::new(2, 1).unwrap();
        assert_eq!(*omega.value(1, 1, 1), Scalar::from_int(-1));
        assert!(omega.value(0, 1, 1).is_one());
    }

    #[test]
    fn subgroup_order_must_divide() {
        assert!(subgroup_quotient_ideal(4, 3).is_err());
        assert_eq!(subgroup_quotient_ideal(4, 2).unwrap().dim(), 2);
        assert_eq!(subgroup_quotient_ideal(4, 4).unwrap().dim(), 0);
    }
}
