use super::sparse::{add_entry, SparseVec};
use super::TensorElement;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Structure constants of a bilinear map `U × V → W` on based spaces:
/// `table(x, y)` is the image of the basis pair `(u_x, v_y)`.
///
/// Algebra multiplications, module actions and bimodule actions are all
/// stored this way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearTable {
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    table: Vec<SparseVec>,
}

impl BilinearTable {
    pub fn zero(left_dim: usize, right_dim: usize, out_dim: usize) -> Self {
        BilinearTable {
            left_dim,
            right_dim,
            out_dim,
            table: vec![SparseVec::new(); left_dim * right_dim],
        }
    }

    pub fn from_fn(
        left_dim: usize,
        right_dim: usize,
        out_dim: usize,
        mut f: impl FnMut(usize, usize) -> Result<SparseVec>,
    ) -> Result<Self> {
        let mut t = BilinearTable::zero(left_dim, right_dim, out_dim);
        for x in 0..left_dim {
            for y in 0..right_dim {
                let v = f(x, y)?;
                if let Some((&k, _)) = v.iter().next_back() {
                    if k >= out_dim {
                        return Err(Error::shape(out_dim, k + 1));
                    }
                }
                t.table[x * right_dim + y] = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
        Ok(t)
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn get(&self, x: usize, y: usize) -> &SparseVec {
        &self.table[x * self.right_dim + y]
    }

    pub fn add(&mut self, x: usize, y: usize, z: usize, c: Scalar) -> Result<()> {
        if x >= self.left_dim || y >= self.right_dim || z >= self.out_dim {
            return Err(Error::shape(
                (self.left_dim, self.right_dim, self.out_dim),
                (x, y, z),
            ));
        }
        add_entry(&mut self.table[x * self.right_dim + y], z, c);
        Ok(())
    }

    /// Re-express every structure constant in ℚ(ζ_M).
    pub fn embed(&self, conductor: u32) -> Result<BilinearTable> {
        let table = self
            .table
            .iter()
            .map(|v| super::sparse::embed(v, conductor))
            .collect::<Result<_>>()?;
        Ok(BilinearTable { table, ..*self })
    }

    /// `(x, y) ↦ table(y, x)`; the opposite multiplication when square.
    pub fn transposed(&self) -> BilinearTable {
        let mut t = BilinearTable::zero(self.right_dim, self.left_dim, self.out_dim);
        for x in 0..self.left_dim {
            for y in 0..self.right_dim {
                t.table[y * self.left_dim + x] = self.get(x, y).clone();
            }
        }
        t
    }

    /// Image of a pair of basis vectors, as a tensor of arity 1.
    pub fn basis_product(&self, x: usize, y: usize) -> TensorElement {
        TensorElement::from_flat(vec![self.out_dim], self.get(x, y))
    }

    /// Bilinear extension to arbitrary vectors of arity 1.
    pub fn apply(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        super::legwise_product(a, b, &[self])
    }

    /// Nonzero entries as `(x, y, z, c)`, in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.table.iter().enumerate().flat_map(move |(xy, v)| {
            let (x, y) = (xy / self.right_dim, xy % self.right_dim);
            v.iter().map(move |(z, c)| (x, y, *z, c))
        })
    }
}
