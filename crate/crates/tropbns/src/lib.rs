//! Exact-arithmetic computation of tropicalized characteristic varieties
//! of finitely presented groups, and the resulting upper bounds on
//! Bieri--Neumann--Strebel invariants, cross-checked against Brown's
//! algorithm for one-relator groups.

pub mod linalg;
pub mod presentation;
pub mod cyclotomic;
pub mod laurent;
pub mod gcd;
pub mod alexander;
pub mod polyhedra;
pub mod tropical;
pub mod sigma;
pub mod report;
pub mod svg;

pub use presentation::{FreeWord, GroupPresentation, AbelianizationData};
pub use laurent::LaurentPoly;
pub use sigma::{Direction, SphereBound};
pub use tropical::TropSet;
