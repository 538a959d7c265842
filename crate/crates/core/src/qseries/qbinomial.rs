//! Gaussian binomials and q-Pochhammer products.

use crate::qseries::QPolynomial;
use crate::{Error, Result};

/// Gaussian binomial `[n choose m]_q`.
///
/// For `n >= m > 0` this is the quotient of `(1-q^n)...(1-q^{n-m+1})` by
/// `(1-q)...(1-q^m)`, `[n choose 0]_q = 1` for `n >= 0`, and every other
/// argument pair gives `0` (so `[-1 choose 0]_q = 0`).
pub fn q_binomial(n: i64, m: i64) -> QPolynomial {
    if m == 0 && n >= 0 {
        return QPolynomial::one();
    }
    if !(n >= m && m > 0) {
        return QPolynomial::zero();
    }
    // [n, i+1] = [n, i] (1 - q^{n-i}) / (1 - q^{i+1}), exact at every step.
    let mut acc = QPolynomial::one();
    for i in 0..m {
        let up = one_minus_q_pow(n - i);
        let down = one_minus_q_pow(i + 1);
        acc = (&acc * &up)
            .div_exact(&down)
            .expect("partial Gaussian product is a polynomial");
    }
    acc
}

fn one_minus_q_pow(e: i64) -> QPolynomial {
    QPolynomial::from_terms([(0, 1), (e, -1)])
}

/// Sign `a` of the factors `1 - a q^e` in [`q_pochhammer`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `prod_{i=0}^{n-1} (1 - a q^{base + step i})` with `a = +1` or `-1`,
/// truncated above `q^order` when an order is given.
///
/// `(-q; q^2)_n` is `q_pochhammer(Sign::Minus, 1, 2, n, None)`.
pub fn q_pochhammer(
    sign: Sign,
    base_exponent: i64,
    step: i64,
    n: i64,
    order: Option<i64>,
) -> Result<QPolynomial> {
    if n < 0 {
        return Err(Error::InvalidLength(n));
    }
    let a: i64 = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let mut acc = QPolynomial::one();
    for i in 0..n {
        let factor = QPolynomial::from_terms([(0, 1), (base_exponent + step * i, -a)]);
        acc = match order {
            Some(o) => acc.mul_truncated(&factor, o),
            None => &acc * &factor,
        };
    }
    Ok(match order {
        Some(o) => acc.truncate(o),
        None => acc,
    })
}
