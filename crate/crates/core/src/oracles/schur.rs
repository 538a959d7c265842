use serde::{Deserialize, Serialize};

use crate::flags::{weyl, IdentityCheck};
use crate::qseries::{q_pochhammer, QPolynomial, Sign};
use crate::{Error, Result};

/// Two-row shape `lambda = (n + k, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookShape {
    pub n: usize,
    pub k: usize,
}

impl HookShape {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, k }
    }

    /// `|lambda| = n + 2k`.
    pub fn size(&self) -> usize {
        self.n + 2 * self.k
    }

    /// `n(lambda) = sum (i - 1) lambda_i`.
    pub fn n_lambda(&self) -> usize {
        self.k
    }

    /// Hook lengths of all cells.
    pub fn hooks(&self) -> Vec<usize> {
        let (n, k) = (self.n, self.k);
        let first = (1..=n + k).map(|j| n + k - j + 1 + usize::from(j <= k));
        let second = (1..=k).map(|j| k - j + 1);
        first.chain(second).collect()
    }
}

/// `s_lambda(1, q, q^2, ...)` through `q^order`, from the hook-content product
/// `q^{n(lambda)} / prod (1 - q^h)`.
pub fn schur_principal_trunc(shape: HookShape, order: usize) -> QPolynomial {
    let den = shape
        .hooks()
        .into_iter()
        .fold(QPolynomial::one(), |acc, h| {
            acc.mul_truncated(
                &QPolynomial::from_terms([(0, 1), (h as i64, -1)]),
                order as i64,
            )
        });
    QPolynomial::q_pow(shape.n_lambda() as i64)
        .series_quotient(&den, order as i64)
        .expect("denominator has constant term 1")
}

/// `(q;q)_{n+2k} s_lambda(1, q, ...)` against the level-`m` Weyl flag, through
/// its top degree `k (n + k)`. Needs `m >= n + 2k`.
pub fn schur_check(shape: HookShape, m: usize) -> Result<IdentityCheck> {
    let s = shape.size();
    if m < s {
        return Err(Error::OutOfHypothesis(format!(
            "needs m >= n + 2k = {s}, got m={m}"
        )));
    }
    let order = (shape.k * (shape.n + shape.k)) as i64;
    let pochhammer = q_pochhammer(Sign::Plus, 1, 1, s as i64, Some(order))?;
    let lhs = pochhammer.mul_truncated(&schur_principal_trunc(shape, order as usize), order);
    let rhs = weyl(s as i64, shape.n as i64, m).truncate(order);
    Ok(IdentityCheck { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let shape = HookShape::new(0, 2);
        let mut hooks = shape.hooks();
        hooks.sort();
        assert_eq!(hooks, [1, 2, 2, 3]);
        let c = schur_check(shape, 4).unwrap();
        assert_eq!(c.lhs, QPolynomial::from_terms([(2, 1), (4, 1)]));
        assert!(c.holds());
    }

    #[test]
    fn single_row_is_geometric() {
        // s_(n)(1, q, ...) = 1 / (q;q)_n
        let s = schur_principal_trunc(HookShape::new(3, 0), 6);
        assert_eq!(s, QPolynomial::from_coeffs([1, 1, 2, 3, 4, 5, 7]));
        assert!(schur_check(HookShape::new(5, 0), 5).unwrap().lhs.is_one());
    }

    #[test]
    fn three_one() {
        assert!(schur_check(HookShape::new(2, 1), 4).unwrap().holds());
        assert!(schur_check(HookShape::new(2, 1), 3).is_err());
    }
}
