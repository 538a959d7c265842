//! Exact q-series arithmetic: Laurent polynomials in `q`, Gaussian binomials,
//! q-Pochhammer products, and truncated series in `x` over `Z[q, q^-1]`.

mod qbinomial;
mod qpoly;
mod xseries;

pub use qbinomial::{q_binomial, q_pochhammer, Sign};
pub use qpoly::QPolynomial;
pub use xseries::{chebyshev_p, expand_rational, XPolynomial, XSeries};
