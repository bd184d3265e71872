use std::collections::BTreeMap;
use std::fmt;

use super::sparse::SparseVec;
use super::{BilinearTable, LinMap};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Row-major flat index of a basis tuple.
pub fn flat_index(shape: &[usize], idx: &[usize]) -> usize {
    idx.iter().zip(shape).fold(0, |acc, (i, d)| acc * d + i)
}

/// Inverse of [`flat_index`].
pub fn unflatten(shape: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for (slot, d) in idx.iter_mut().zip(shape).rev() {
        *slot = flat % d;
        flat /= d;
    }
    idx
}

/// All basis tuples of a shape, in lexicographic order.
pub fn tuples(shape: &[usize]) -> impl Iterator<Item = Vec<usize>> + 'static {
    let shape = shape.to_vec();
    let total: usize = shape.iter().product();
    (0..total).map(move |f| unflatten(&shape, f))
}

/// An element of a tensor product `V_1 ⊗ … ⊗ V_k` of based spaces, stored as a
/// sparse map from basis tuples to coefficients.
///
/// For `H^{⊗k}` every leg has the same dimension. Arity 0 is allowed and
/// represents a scalar (the empty tuple).
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    shape: Vec<usize>,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl TensorElement {
    pub fn zero(shape: Vec<usize>) -> Self {
        TensorElement {
            shape,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis(shape: Vec<usize>, idx: Vec<usize>) -> Self {
        Self::monomial(shape, idx, Scalar::from_int(1))
    }

    pub fn monomial(shape: Vec<usize>, idx: Vec<usize>, c: Scalar) -> Self {
        let mut t = TensorElement::zero(shape);
        t.add_term(idx, c);
        t
    }

    /// An arity-0 tensor.
    pub fn scalar(c: Scalar) -> Self {
        Self::monomial(Vec::new(), Vec::new(), c)
    }

    pub fn from_entries(
        shape: Vec<usize>,
        entries: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<Self> {
        let mut t = TensorElement::zero(shape);
        for (idx, c) in entries {
            if idx.len() != t.shape.len() || idx.iter().zip(&t.shape).any(|(i, d)| i >= d) {
                return Err(Error::shape(&t.shape, &idx));
            }
            t.add_term(idx, c);
        }
        Ok(t)
    }

    pub fn from_flat(shape: Vec<usize>, v: &SparseVec) -> Self {
        let entries = v
            .iter()
            .map(|(f, c)| (unflatten(&shape, *f), c.clone()))
            .collect();
        TensorElement { shape, entries }
    }

    /// Re-express every coefficient in ℚ(ζ_M).
    pub fn embed(&self, conductor: u32) -> Result<TensorElement> {
        let entries = self
            .entries
            .iter()
            .map(|(i, x)| Ok((i.clone(), x.embed(conductor)?)))
            .collect::<Result<_>>()?;
        Ok(TensorElement {
            shape: self.shape.clone(),
            entries,
        })
    }

    pub fn flatten(&self) -> SparseVec {
        self.entries
            .iter()
            .map(|(idx, c)| (flat_index(&self.shape, idx), c.clone()))
            .collect()
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn arity(&self) -> usize {
        self.shape.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, idx: &[usize]) -> Option<&Scalar> {
        self.entries.get(idx)
    }

    /// Coefficient at a basis tuple (zero if absent).
    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        self.entries.get(idx).cloned().unwrap_or_else(|| Scalar::from_int(0))
    }

    /// The value of an arity-0 tensor.
    pub fn scalar_value(&self) -> Scalar {
        debug_assert!(self.shape.is_empty());
        self.coeff(&[])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_shape(&self, other: &TensorElement) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::shape(&self.shape, &other.shape))
        }
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.entries {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.entries {
            out.add_term(idx.clone(), -c);
        }
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &TensorElement) -> Result<()> {
        self.same_shape(other)?;
        for (idx, c) in &other.entries {
            self.add_term(idx.clone(), c.clone());
        }
        Ok(())
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &TensorElement) -> Result<()> {
        self.same_shape(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (idx, x) in &other.entries {
            self.add_term(idx.clone(), c * x);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero(self.shape.clone());
        for (idx, x) in &self.entries {
            out.add_term(idx.clone(), x * c);
        }
        out
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        let mut shape = self.shape.clone();
        shape.extend_from_slice(&other.shape);
        let mut out = TensorElement::zero(shape);
        for (a, x) in &self.entries {
            for (b, y) in &other.entries {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(idx, x * y);
            }
        }
        out
    }

    /// Reorder legs: leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute_legs(&self, perm: &[usize]) -> Result<TensorElement> {
        let k = self.arity();
        let mut seen = vec![false; k];
        if perm.len() != k || perm.iter().any(|&p| p >= k || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::shape(format!("permutation of {k} legs"), perm));
        }
        let shape = perm.iter().map(|&p| self.shape[p]).collect();
        let entries = self
            .entries
            .iter()
            .map(|(idx, c)| (perm.iter().map(|&p| idx[p]).collect(), c.clone()))
            .collect();
        Ok(TensorElement { shape, entries })
    }

    /// Reverse the order of all legs.
    pub fn reverse_legs(&self) -> TensorElement {
        let perm: Vec<usize> = (0..self.arity()).rev().collect();
        self.permute_legs(&perm).expect("reversal is a permutation")
    }

    /// Reinterpret under another shape with the same total dimension,
    /// keeping flat (row-major) indices fixed.
    pub fn reshape(&self, shape: Vec<usize>) -> Result<TensorElement> {
        if shape.iter().product::<usize>() != self.shape.iter().product::<usize>() {
            return Err(Error::shape(&self.shape, &shape));
        }
        Ok(TensorElement::from_flat(shape, &self.flatten()))
    }

    /// Apply a linear map out of one leg, splicing its target legs in place.
    /// `Δ` adds a leg, `ε` removes one, `S` keeps the arity.
    pub fn apply_to_leg(&self, leg: usize, map: &LinMap) -> Result<TensorElement> {
        if leg >= self.arity() {
            return Err(Error::LegOutOfRange {
                leg,
                arity: self.arity(),
            });
        }
        if map.source_shape() != [self.shape[leg]] {
            return Err(Error::shape([self.shape[leg]], map.source_shape()));
        }
        let mut shape = self.shape[..leg].to_vec();
        shape.extend_from_slice(map.target_shape());
        shape.extend_from_slice(&self.shape[leg + 1..]);
        let images: Vec<TensorElement> = (0..self.shape[leg]).map(|j| map.image(j)).collect();
        let mut out = TensorElement::zero(shape);
        for (idx, c) in &self.entries {
            for (img_idx, x) in &images[idx[leg]].entries {
                let mut new_idx = idx[..leg].to_vec();
                new_idx.extend_from_slice(img_idx);
                new_idx.extend_from_slice(&idx[leg + 1..]);
                out.add_term(new_idx, c * x);
            }
        }
        Ok(out)
    }

    /// First basis tuple (lexicographically) where two tensors differ,
    /// with both coefficients.
    pub fn first_difference(&self, other: &TensorElement) -> Option<(Vec<usize>, Scalar, Scalar)> {
        let mut keys: Vec<&Vec<usize>> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.coeff(k), other.coeff(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0{:?}", self.shape);
        }
        let terms: Vec<String> = self
            .entries
            .iter()
            .map(|(idx, c)| format!("({}){:?}", c, idx))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Multiply two tensors leg by leg: leg `l` of the result is
/// `tables[l](a_l, b_l)`.
///
/// With every table equal to an algebra's multiplication this is the product
/// in the tensor-power algebra; with module actions in some legs it evaluates
/// diagonal actions such as `h·(m⊗g) = h₍₁₎m ⊗ h₍₂₎g`.
pub fn legwise_product(
    a: &TensorElement,
    b: &TensorElement,
    tables: &[&BilinearTable],
) -> Result<TensorElement> {
    let k = tables.len();
    if a.arity() != k || b.arity() != k {
        return Err(Error::shape(
            format!("arity {k}"),
            format!("arities {} and {}", a.arity(), b.arity()),
        ));
    }
    for (l, t) in tables.iter().enumerate() {
        if t.left_dim() != a.shape[l] || t.right_dim() != b.shape[l] {
            return Err(Error::shape(
                (t.left_dim(), t.right_dim()),
                (a.shape[l], b.shape[l]),
            ));
        }
    }
    let shape: Vec<usize> = tables.iter().map(|t| t.out_dim()).collect();
    let mut out = TensorElement::zero(shape);
    let mut legs: Vec<&SparseVec> = Vec::with_capacity(k);
    for (ia, x) in &a.entries {
        for (ib, y) in &b.entries {
            legs.clear();
            let mut vanishes = false;
            for l in 0..k {
                let v = tables[l].get(ia[l], ib[l]);
                if v.is_empty() {
                    vanishes = true;
                    break;
                }
                legs.push(v);
            }
            if vanishes {
                continue;
            }
            let c = x * y;
            expand_product(&mut out, &legs, &c);
        }
    }
    Ok(out)
}

fn expand_product(out: &mut TensorElement, legs: &[&SparseVec], c: &Scalar) {
    // fast path: every leg a single basis element
    if legs.iter().all(|v| v.len() == 1) {
        let mut coeff = c.clone();
        let mut idx = Vec::with_capacity(legs.len());
        for v in legs {
            let (k, x) = v.iter().next().expect("nonempty");
            idx.push(*k);
            if !x.is_one() {
                coeff = &coeff * x;
            }
        }
        out.add_term(idx, coeff);
        return;
    }
    let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::with_capacity(legs.len()), c.clone())];
    for v in legs {
        let mut next = Vec::with_capacity(partial.len() * v.len());
        for (idx, coeff) in &partial {
            for (k, x) in v.iter() {
                let mut i = idx.clone();
                i.push(*k);
                next.push((i, coeff * x));
            }
        }
        partial = next;
    }
    for (idx, coeff) in partial {
        out.add_term(idx, coeff);
    }
}

/// Product in the tensor-power algebra `H^{⊗k}` with multiplication `mult` in every leg.
pub fn tensor_multiply(
    a: &TensorElement,
    b: &TensorElement,
    mult: &BilinearTable,
) -> Result<TensorElement> {
    if a.shape != b.shape {
        return Err(Error::shape(&a.shape, &b.shape));
    }
    let tables = vec![mult; a.arity()];
    legwise_product(a, b, &tables)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_index_round_trip() {
        let shape = [2, 3, 4];
        for f in 0..24 {
            assert_eq!(flat_index(&shape, &unflatten(&shape, f)), f);
        }
        assert_eq!(flat_index(&shape, &[1, 2, 3]), 23);
    }

    #[test]
    fn permute_and_reshape() {
        let t = TensorElement::basis(vec![2, 3], vec![1, 2]);
        let p = t.permute_legs(&[1, 0]).unwrap();
        assert_eq!(p, TensorElement::basis(vec![3, 2], vec![2, 1]));
        let r = t.reshape(vec![6]).unwrap();
        assert_eq!(r, TensorElement::basis(vec![6], vec![5]));
        assert!(t.permute_legs(&[0, 0]).is_err());
    }

    #[test]
    fn leg_out_of_range() {
        let t = TensorElement::basis(vec![2, 2], vec![0, 0]);
        let id = LinMap::identity(vec![2]);
        assert_eq!(
            t.apply_to_leg(2, &id),
            Err(Error::LegOutOfRange { leg: 2, arity: 2 })
        );
    }
}
