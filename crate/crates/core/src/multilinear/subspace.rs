use super::sparse::{Echelon, SparseVec};
use super::tensor::flat_index;
use super::{BilinearTable, LinMap, TensorElement};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// A subspace of a tensor product of based spaces, held as its reduced row
/// echelon basis. Two subspaces are equal exactly when their echelon bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: Vec<usize>,
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(ambient: Vec<usize>) -> Self {
        Subspace {
            ambient,
            echelon: Echelon::default(),
        }
    }

    pub fn full(ambient: Vec<usize>) -> Self {
        let n: usize = ambient.iter().product();
        Subspace::from_flat_vectors(
            ambient,
            (0..n).map(|j| SparseVec::from([(j, Scalar::from_int(1))])).collect(),
        )
    }

    pub fn from_flat_vectors(ambient: Vec<usize>, vectors: Vec<SparseVec>) -> Self {
        let mut echelon = Echelon::default();
        for v in &vectors {
            echelon.insert(v);
        }
        Subspace { ambient, echelon }
    }

    pub fn from_vectors<'a>(
        ambient: Vec<usize>,
        vectors: impl IntoIterator<Item = &'a TensorElement>,
    ) -> Result<Self> {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    fn check_ambient(&self, t: &TensorElement) -> Result<()> {
        if t.shape() == self.ambient.as_slice() {
            Ok(())
        } else {
            Err(Error::shape(&self.ambient, t.shape()))
        }
    }

    /// Add a vector to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &TensorElement) -> Result<bool> {
        self.check_ambient(v)?;
        Ok(self.echelon.insert(&v.flatten()))
    }

    pub fn ambient(&self) -> &[usize] {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Pivot columns as flat indices, ascending.
    pub fn pivots(&self) -> Vec<usize> {
        self.echelon.rows.keys().copied().collect()
    }

    /// Echelon basis vectors, ordered by pivot.
    pub fn basis(&self) -> Vec<TensorElement> {
        self.echelon
            .rows
            .values()
            .map(|r| TensorElement::from_flat(self.ambient.clone(), r))
            .collect()
    }

    /// Remainder of `v` after eliminating every pivot of the subspace.
    pub fn reduce(&self, v: &TensorElement) -> Result<TensorElement> {
        self.check_ambient(v)?;
        Ok(TensorElement::from_flat(
            self.ambient.clone(),
            &self.echelon.reduce(&v.flatten()),
        ))
    }

    pub fn contains(&self, v: &TensorElement) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        if other.ambient != self.ambient {
            return Err(Error::shape(&self.ambient, &other.ambient));
        }
        Ok(other
            .echelon
            .rows
            .values()
            .all(|r| self.echelon.reduce(r).is_empty()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if other.ambient != self.ambient {
            return Err(Error::shape(&self.ambient, &other.ambient));
        }
        let mut out = self.clone();
        for r in other.echelon.rows.values() {
            out.echelon.insert(r);
        }
        Ok(out)
    }

    /// `self ⊗ other` inside the product of the ambient spaces.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let mut ambient = self.ambient.clone();
        ambient.extend_from_slice(&other.ambient);
        let mut echelon = Echelon::default();
        for a in self.basis() {
            for b in other.basis() {
                echelon.insert(&a.tensor(&b).flatten());
            }
        }
        Subspace { ambient, echelon }
    }

    /// Coefficients of `v` with respect to the echelon basis, if `v` lies in
    /// the subspace. In reduced echelon form these are the entries of `v` at
    /// the pivot columns.
    pub fn coordinates(&self, v: &TensorElement) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        let flat = v.flatten();
        Ok(Some(
            self.pivots()
                .iter()
                .map(|p| flat.get(p).cloned().unwrap_or_else(|| Scalar::from_int(0)))
                .collect(),
        ))
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, map: &LinMap) -> Result<Subspace> {
        if map.source_shape() != self.ambient.as_slice() {
            return Err(Error::shape(&self.ambient, map.source_shape()));
        }
        let mut echelon = Echelon::default();
        for r in self.echelon.rows.values() {
            echelon.insert(&map.apply_flat(r));
        }
        Ok(Subspace {
            ambient: map.target_shape().to_vec(),
            echelon,
        })
    }

    /// Smallest two-sided ideal containing the subspace, by multiplying with
    /// every basis element on both sides until the span is stable. Returns the
    /// ideal and the number of passes that were needed to reach the fixed
    /// point (1 when the input already is an ideal).
    pub fn ideal_closure(&self, mult: &BilinearTable) -> Result<(Subspace, usize)> {
        let n = mult.out_dim();
        if self.ambient != [n] || mult.left_dim() != n || mult.right_dim() != n {
            return Err(Error::shape([n], &self.ambient));
        }
        let mut current = self.clone();
        let mut passes = 0;
        loop {
            passes += 1;
            let mut next = current.clone();
            for v in current.basis() {
                for i in 0..n {
                    let e = TensorElement::basis(vec![n], vec![i]);
                    next.insert(&mult.apply(&e, &v)?)?;
                    next.insert(&mult.apply(&v, &e)?)?;
                }
            }
            if next.dim() == current.dim() {
                return Ok((current, passes));
            }
            current = next;
        }
    }

    /// Flat index of a basis tuple in the ambient space.
    pub fn flat(&self, idx: &[usize]) -> usize {
        flat_index(&self.ambient, idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta(n: usize, i: usize) -> TensorElement {
        TensorElement::basis(vec![n], vec![i])
    }

    #[test]
    fn membership_in_function_subspace() {
        let s = Subspace::from_vectors(vec![4], [&delta(4, 1), &delta(4, 3)]).unwrap();
        let v = delta(4, 1).add(&delta(4, 3)).unwrap();
        assert!(s.contains(&v).unwrap());
        assert!(!s.contains(&delta(4, 0)).unwrap());
    }

    #[test]
    fn sum_of_tensor_subspaces_has_dimension_three() {
        let i = Subspace::from_vectors(vec![2], [&delta(2, 1)]).unwrap();
        let h = Subspace::full(vec![2]);
        let sum = i.tensor(&h).sum(&h.tensor(&i)).unwrap();
        assert_eq!(sum.dim(), 3);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let s = Subspace::zero(vec![2]);
        assert!(s.contains(&delta(3, 0)).is_err());
        assert!(s.sum(&Subspace::zero(vec![3])).is_err());
    }

    #[test]
    fn echelon_basis_is_canonical() {
        let a = delta(3, 0).add(&delta(3, 1)).unwrap();
        let b = delta(3, 1).add(&delta(3, 2)).unwrap();
        let s1 = Subspace::from_vectors(vec![3], [&a, &b]).unwrap();
        let s2 = Subspace::from_vectors(vec![3], [&b, &a.add(&b).unwrap()]).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1.pivots(), vec![0, 1]);
        let again = Subspace::from_vectors(vec![3], s1.basis().iter()).unwrap();
        assert_eq!(again, s1);
    }
}
