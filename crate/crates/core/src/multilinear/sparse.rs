use std::collections::BTreeMap;

use crate::exactnum::Scalar;

/// A sparse coordinate vector over a flattened basis. Zero entries are never stored.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// `v += c * w`.
pub(crate) fn axpy(v: &mut SparseVec, c: &Scalar, w: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        add_entry(v, *k, c * x);
    }
}

pub(crate) fn add_entry(v: &mut SparseVec, k: usize, x: Scalar) {
    if x.is_zero() {
        return;
    }
    match v.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(x);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &x;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Reduced row echelon basis of a subspace, keyed by pivot column.
///
/// Each row has a leading 1 at its pivot and is zero at every other pivot, so
/// the basis is canonical for the subspace: the lexicographically smallest
/// available column always becomes the pivot.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Echelon {
    pub(crate) rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub(crate) fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                axpy(&mut v, &(-c), row);
            }
        }
        v
    }

    /// Insert a vector; returns whether the span grew.
    pub(crate) fn insert(&mut self, v: &SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero leading entry");
        for x in v.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &(-c), &v);
            }
        }
        self.rows.insert(pivot, v);
        true
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub(crate) fn embed(v: &SparseVec, conductor: u32) -> crate::error::Result<SparseVec> {
    v.iter().map(|(k, x)| Ok((*k, x.embed(conductor)?))).collect()
}
