//! Dyck paths ending at arbitrary height, their statistics, admissibility
//! with respect to `A(m, n)`, pruned enumeration, and the structural
//! bijections used by the recursions.

mod admissible;
mod bijections;
mod dyck;
mod enumerate;
mod extremal;

pub use admissible::{admissible_set, admissible_set_explicit, is_admissible, AdmissiblePairSet};
pub use bijections::{eta, psi, psi_inverse, tau, to_syt, zeta, TwoRowTableau};
pub use dyck::{DyckPath, Point};
pub use enumerate::{PathQuery, Paths};
pub use extremal::{extremal_comaj, Extremal};
