//! Graded multiplicity polynomials `V^{xi->m}_n(q)` of level-`m` Demazure
//! flags, from path enumeration, linear algebra over the Weyl case, chain
//! sums for general partitions, and the hook recursion.

mod memo;
mod partition;
mod polys;
mod query;

pub use partition::Partition;
pub use polys::{
    cache_size, demazure, demazure_inclusion_exclusion, demazure_table, flag_transitivity_check,
    fusion, generating_series, hook, ses_recursion, weyl, IdentityCheck, TableCell,
};
pub use query::{FlagQuery, FlagSource};
