//! Tensor powers, exact linear maps and subspaces: the substrate for every
//! axiom evaluation.

mod bilinear;
mod linmap;
mod sparse;
mod subspace;
mod tensor;

pub use bilinear::BilinearTable;
pub use linmap::{LinMap, DENSE_FILL_THRESHOLD};
pub use sparse::SparseVec;
pub use subspace::Subspace;
pub use tensor::{flat_index, legwise_product, tensor_multiply, tuples, unflatten, TensorElement};
