//! Exact dense linear algebra over a prime field.
//!
//! Every Hom, Ext and resolution computation in the crate bottoms out here.
//! Basis-producing routines use the leftmost-pivot convention so results are
//! reproducible for a fixed input.

mod field;
mod matrix;
pub mod poly;

pub use field::{Fp, PrimeField};
pub use matrix::{extend_basis, Echelon, Matrix, Rref};
