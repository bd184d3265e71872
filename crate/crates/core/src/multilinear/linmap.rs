use std::borrow::Cow;
use std::fmt;

use super::sparse::{add_entry, axpy, Echelon, SparseVec};
use super::tensor::{tuples, unflatten};
use super::{Subspace, TensorElement};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Fill ratio above which a map is stored densely.
pub const DENSE_FILL_THRESHOLD: f64 = 0.25;

#[derive(Clone)]
enum Storage {
    /// One sparse column per source basis element.
    Sparse(Vec<SparseVec>),
    /// Column-major dense storage.
    Dense(Vec<Vec<Scalar>>),
}

/// A linear map between tensor products of based spaces, as an exact matrix.
///
/// Columns are indexed by source basis tuples and rows by target basis
/// tuples, both flattened row-major. Storage switches to dense when more than
/// [`DENSE_FILL_THRESHOLD`] of the entries are nonzero.
#[derive(Clone)]
pub struct LinMap {
    source: Vec<usize>,
    target: Vec<usize>,
    storage: Storage,
}

impl LinMap {
    pub fn from_columns(source: Vec<usize>, target: Vec<usize>, columns: Vec<SparseVec>) -> Self {
        let rows: usize = target.iter().product();
        let cols: usize = source.iter().product();
        assert_eq!(columns.len(), cols, "column count must match the source dimension");
        let nnz: usize = columns.iter().map(|c| c.len()).sum();
        let cells = rows * cols;
        let storage = if cells > 0 && nnz as f64 > DENSE_FILL_THRESHOLD * cells as f64 {
            Storage::Dense(
                columns
                    .into_iter()
                    .map(|c| {
                        let mut d = vec![Scalar::from_int(0); rows];
                        for (k, x) in c {
                            d[k] = x;
                        }
                        d
                    })
                    .collect(),
            )
        } else {
            Storage::Sparse(columns)
        };
        LinMap {
            source,
            target,
            storage,
        }
    }

    /// Build a map from the images of the source basis tuples.
    pub fn from_fn(
        source: Vec<usize>,
        target: Vec<usize>,
        mut f: impl FnMut(&[usize]) -> Result<TensorElement>,
    ) -> Result<Self> {
        let mut columns = Vec::with_capacity(source.iter().product());
        for idx in tuples(&source) {
            let img = f(&idx)?;
            if img.shape() != target.as_slice() {
                return Err(Error::shape(&target, img.shape()));
            }
            columns.push(img.flatten());
        }
        Ok(LinMap::from_columns(source, target, columns))
    }

    pub fn identity(shape: Vec<usize>) -> Self {
        let n: usize = shape.iter().product();
        let columns = (0..n)
            .map(|j| SparseVec::from([(j, Scalar::from_int(1))]))
            .collect();
        LinMap::from_columns(shape.clone(), shape, columns)
    }

    /// Re-express every entry in ℚ(ζ_M).
    pub fn embed(&self, conductor: u32) -> Result<LinMap> {
        let cols = (0..self.cols())
            .map(|j| super::sparse::embed(&self.column(j), conductor))
            .collect::<Result<_>>()?;
        Ok(LinMap::from_columns(self.source.clone(), self.target.clone(), cols))
    }

    pub fn source_shape(&self) -> &[usize] {
        &self.source
    }

    pub fn target_shape(&self) -> &[usize] {
        &self.target
    }

    pub fn rows(&self) -> usize {
        self.target.iter().product()
    }

    pub fn cols(&self) -> usize {
        self.source.iter().product()
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.storage, Storage::Dense(_))
    }

    pub fn column(&self, j: usize) -> Cow<'_, SparseVec> {
        match &self.storage {
            Storage::Sparse(cols) => Cow::Borrowed(&cols[j]),
            Storage::Dense(cols) => Cow::Owned(
                cols[j]
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (k, x.clone()))
                    .collect(),
            ),
        }
    }

    /// Image of the `j`-th (flattened) source basis vector.
    pub fn image(&self, j: usize) -> TensorElement {
        TensorElement::from_flat(self.target.clone(), &self.column(j))
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        match &self.storage {
            Storage::Sparse(cols) => cols[col].get(&row).cloned().unwrap_or_else(|| Scalar::from_int(0)),
            Storage::Dense(cols) => cols[col][row].clone(),
        }
    }

    pub fn apply_flat(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v {
            match &self.storage {
                Storage::Sparse(cols) => axpy(&mut out, x, &cols[*j]),
                Storage::Dense(cols) => {
                    for (k, y) in cols[*j].iter().enumerate() {
                        if !y.is_zero() {
                            add_entry(&mut out, k, x * y);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, t: &TensorElement) -> Result<TensorElement> {
        if t.shape() != self.source.as_slice() {
            return Err(Error::shape(&self.source, t.shape()));
        }
        Ok(TensorElement::from_flat(self.target.clone(), &self.apply_flat(&t.flatten())))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinMap) -> Result<LinMap> {
        if inner.target != self.source {
            return Err(Error::shape(&self.source, &inner.target));
        }
        let columns = (0..inner.cols())
            .map(|j| self.apply_flat(&inner.column(j)))
            .collect();
        Ok(LinMap::from_columns(inner.source.clone(), self.target.clone(), columns))
    }

    /// Rows as sparse vectors over the flattened source basis.
    pub fn to_rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![SparseVec::new(); self.rows()];
        for j in 0..self.cols() {
            for (i, x) in self.column(j).iter() {
                rows[*i].insert(j, x.clone());
            }
        }
        rows
    }

    fn row_echelon(&self) -> Echelon {
        let mut ech = Echelon::default();
        for row in self.to_rows() {
            ech.insert(&row);
        }
        ech
    }

    pub fn rank(&self) -> usize {
        // column rank equals row rank; build from whichever side is smaller
        if self.cols() <= self.rows() {
            let mut ech = Echelon::default();
            for j in 0..self.cols() {
                ech.insert(&self.column(j));
            }
            ech.rank()
        } else {
            self.row_echelon().rank()
        }
    }

    pub fn kernel(&self) -> Subspace {
        let ech = self.row_echelon();
        let pivots: Vec<usize> = ech.rows.keys().copied().collect();
        let mut vectors = Vec::new();
        for free in (0..self.cols()).filter(|c| !ech.rows.contains_key(c)) {
            let mut v = SparseVec::from([(free, Scalar::from_int(1))]);
            for p in &pivots {
                if let Some(x) = ech.rows[p].get(&free) {
                    v.insert(*p, -x);
                }
            }
            vectors.push(v);
        }
        Subspace::from_flat_vectors(self.source.clone(), vectors)
    }

    /// Image subspace of the map.
    pub fn image_space(&self) -> Subspace {
        Subspace::from_flat_vectors(
            self.target.clone(),
            (0..self.cols()).map(|j| self.column(j).into_owned()).collect(),
        )
    }

    /// Exact inverse by Gauss–Jordan elimination of `[M | I]`.
    pub fn invert(&self) -> Result<LinMap> {
        let n = self.cols();
        if self.rows() != n {
            return Err(Error::shape(
                format!("square map ({} x {})", self.rows(), self.rows()),
                format!("{} x {}", self.rows(), n),
            ));
        }
        let mut ech = Echelon::default();
        for (i, mut row) in self.to_rows().into_iter().enumerate() {
            row.insert(n + i, Scalar::from_int(1));
            ech.insert(&row);
        }
        let full_rank = (0..n).filter(|c| ech.rows.contains_key(c)).count();
        if full_rank < n {
            return Err(Error::NotInvertible {
                kernel_dim: n - full_rank,
            });
        }
        // row i of the inverse is the augmented part of pivot row i
        let mut columns = vec![SparseVec::new(); n];
        for (i, row) in ech.rows.range(..n) {
            for (c, x) in row.range(n..) {
                columns[c - n].insert(*i, x.clone());
            }
        }
        Ok(LinMap::from_columns(self.target.clone(), self.source.clone(), columns))
    }

    /// Solve `self · x = b` for a square invertible map.
    pub fn solve(&self, b: &TensorElement) -> Result<TensorElement> {
        self.invert()?.apply(b)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.first_difference(&LinMap::identity(self.source.clone())).is_none()
    }

    /// First `(row tuple, column tuple)` where two maps of equal shape differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<(Vec<usize>, Vec<usize>, Scalar, Scalar)> {
        if self.source != other.source || self.target != other.target {
            return Some((Vec::new(), Vec::new(), Scalar::from_int(0), Scalar::from_int(0)));
        }
        for j in 0..self.cols() {
            let (a, b) = (self.column(j), other.column(j));
            if a != b {
                let col = unflatten(&self.source, j);
                let a_img = TensorElement::from_flat(self.target.clone(), &a);
                let b_img = TensorElement::from_flat(self.target.clone(), &b);
                let (row, x, y) = a_img.first_difference(&b_img).expect("columns differ");
                return Some((row, col, x, y));
            }
        }
        None
    }
}

impl PartialEq for LinMap {
    fn eq(&self, other: &LinMap) -> bool {
        self.first_difference(other).is_none()
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {:?} -> {:?}", self.source, self.target)?;
        for j in 0..self.cols() {
            writeln!(f, "  {:?} -> {:?}", unflatten(&self.source, j), self.image(j))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn identity_inverts_to_identity() {
        let id = LinMap::identity(vec![2, 2]);
        assert!(id.invert().unwrap().is_identity());
    }

    #[test]
    fn singular_map_reports_kernel_dimension() {
        // [[1, 1], [1, 1]]
        let col = SparseVec::from([(0, s(1)), (1, s(1))]);
        let m = LinMap::from_columns(vec![2], vec![2], vec![col.clone(), col]);
        assert_eq!(m.invert().unwrap_err(), Error::NotInvertible { kernel_dim: 1 });
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel().dim(), 1);
    }

    #[test]
    fn non_square_is_rejected() {
        // counit of a 4-dim space as a 1 x 4 map
        let cols = (0..4).map(|_| SparseVec::from([(0, s(1))])).collect();
        let m = LinMap::from_columns(vec![4], vec![1], cols);
        assert!(matches!(m.invert(), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn inverse_composes_to_identity() {
        // [[2, 1], [1, 1]]
        let m = LinMap::from_columns(
            vec![2],
            vec![2],
            vec![
                SparseVec::from([(0, s(2)), (1, s(1))]),
                SparseVec::from([(0, s(1)), (1, s(1))]),
            ],
        );
        assert!(m.is_dense());
        let inv = m.invert().unwrap();
        assert!(m.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&m).unwrap().is_identity());
        assert_eq!(inv.entry(0, 1), s(-1));
    }
}
