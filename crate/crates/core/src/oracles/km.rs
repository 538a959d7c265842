use crate::qseries::{q_binomial, QPolynomial};
use crate::{Error, Result};

/// Weyl flag `V^{1->m}_{n+2k, n}` for `n < m` from the two-by-two
/// q-binomial determinant sum for bounded-height paths.
pub fn km_determinant_poly(k: usize, n: usize, m: usize) -> Result<QPolynomial> {
    if n >= m {
        return Err(Error::OutOfHypothesis(format!(
            "determinant formula needs n < m, got n={n}, m={m}"
        )));
    }
    let (k, n, m) = (k as i64, n as i64, m as i64);
    let mut total = QPolynomial::zero();
    for l in 0..=k {
        for s in -l..=l {
            let a = q_binomial(k - s * (m - 1), l + s);
            let b = q_binomial(k + s * (m - 1) - 1, l - s);
            let c = q_binomial(n + 1 + k - s * (m - 1), l + s).shift(-2 * s * (n + 1));
            let d = q_binomial(n + k + s * (m - 1), l - s);
            let det = &(&a * &d) - &(&b * &c);
            if !det.is_zero() {
                total += &det.shift(l * l + s * (s * m + n + 1));
            }
        }
    }
    Ok(total)
}
