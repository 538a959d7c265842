//! Independent formulas that must reproduce the flag polynomials: a
//! determinant sum, bounded partitions, Chebyshev quotients, the principal
//! specialization of two-row Schur functions, mock theta series, and a
//! dimension count.

mod audit;
mod chebyshev;
mod km;
mod mock;
mod partitions;
mod schur;

pub use audit::{demazure_dimension, dimension_audit, DimensionAudit};
pub use chebyshev::chebyshev_gf;
pub use km::km_determinant_poly;
pub use mock::{mock_theta_from_paths, mock_theta_series, MockReading, MockThetaSelector};
pub use partitions::{bounded_partition_count, lpart_poly};
pub use schur::{schur_check, schur_principal_trunc, HookShape};
