//! Graded multiplicities in Demazure flags of `sl2[t]` fusion products,
//! computed exactly from admissible Dyck paths and cross-checked against
//! closed formulas.
//!
//! ```
//! use demflag::flags::weyl;
//! use demflag::qseries::QPolynomial;
//!
//! assert_eq!(weyl(5, 3, 2), QPolynomial::from_terms([(3, 1), (4, 1)]));
//! ```

pub mod flags;
pub mod oracles;
pub mod paths;
pub mod qseries;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree of the zero polynomial")]
    EmptyPolynomial,
    #[error("negative product length {0}")]
    InvalidLength(i64),
    #[error("invalid denominator: {0}")]
    InvalidDenominator(String),
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no level-{m} flag exists for a source of level {m_prime}")]
    NoFlag { m: usize, m_prime: usize },
    #[error("outside the formula's hypothesis: {0}")]
    OutOfHypothesis(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
