//! Exact computations with bound quiver algebras over prime fields: modules, Auslander–Reiten
//! translates, indecomposable catalogs and shod-type classification, silting objects in the
//! derived category of a Dynkin path algebra, Gabriel presentations and τ-tilting reduction.

pub mod algebra;
pub mod assoc;
pub mod classifier;
pub mod derived;
pub mod error;
pub mod exactla;
pub mod families;
pub mod harness;
pub mod io;
pub mod module;
pub mod presenter;
pub mod quiver;
pub mod taured;

pub use algebra::{build_algebra, Algebra, BoundQuiverAlgebra};
pub use assoc::AssociativeAlgebra;
pub use error::{Error, Result};
pub use exactla::{Fp, Matrix, PrimeField};
pub use quiver::{Arrow, Path, Quiver, Relation};
