//! Exact computations with finite-dimensional quasibialgebras and quasi-Hopf
//! algebras given by structure constants over cyclotomic fields.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod families;
pub mod hopfmod;
pub mod multilinear;
pub mod qba;
pub mod qha;
pub mod quotient;
pub mod report;
pub mod subalg;

pub use error::{Error, Result};
