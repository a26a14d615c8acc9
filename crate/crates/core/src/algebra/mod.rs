pub mod fdalg;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod solve;

pub use fdalg::FiniteDimAlgebra;
pub use field::{Field, FieldElement};
pub use linalg::{FieldMatrix, SolveMode, SolveOutput, SparseEchelon};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
