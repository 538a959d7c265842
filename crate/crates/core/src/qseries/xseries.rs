//! Polynomials and truncated power series in `x` over [`QPolynomial`] coefficients.

use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::qseries::QPolynomial;
use crate::{Error, Result};

/// `sum_i c_i(q) x^i`, trailing zero coefficients trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XPolynomial {
    coeffs: Vec<QPolynomial>,
}

impl XPolynomial {
    pub fn new(mut coeffs: Vec<QPolynomial>) -> Self {
        while coeffs.last().is_some_and(QPolynomial::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Polynomial in `x` with constant (q-free) integer coefficients.
    pub fn from_integers<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| QPolynomial::from(c.into()))
                .collect(),
        )
    }

    pub fn one() -> Self {
        Self::new(vec![QPolynomial::one()])
    }

    pub fn coeffs(&self) -> &[QPolynomial] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> QPolynomial {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Mul<&XPolynomial> for &XPolynomial {
    type Output = XPolynomial;
    fn mul(self, rhs: &XPolynomial) -> XPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return XPolynomial::default();
        }
        let mut out = vec![QPolynomial::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        XPolynomial::new(out)
    }
}

/// `sum_{k=0}^{order} c_k(q) x^k`, the truncation of a power series in `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "XSeriesRepr", into = "XSeriesRepr")]
pub struct XSeries {
    order: usize,
    coeffs: Vec<QPolynomial>,
}

#[derive(Serialize, Deserialize)]
struct XSeriesRepr {
    order: usize,
    x_coeffs: Vec<QPolynomial>,
}

impl TryFrom<XSeriesRepr> for XSeries {
    type Error = String;
    fn try_from(r: XSeriesRepr) -> std::result::Result<Self, String> {
        if r.x_coeffs.len() != r.order + 1 {
            return Err(format!(
                "x_coeffs has {} entries, order {} needs {}",
                r.x_coeffs.len(),
                r.order,
                r.order + 1
            ));
        }
        Ok(XSeries {
            order: r.order,
            coeffs: r.x_coeffs,
        })
    }
}

impl From<XSeries> for XSeriesRepr {
    fn from(s: XSeries) -> Self {
        XSeriesRepr {
            order: s.order,
            x_coeffs: s.coeffs,
        }
    }
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![QPolynomial::zero(); order + 1],
        }
    }

    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<QPolynomial>) -> Self {
        coeffs.resize(order + 1, QPolynomial::zero());
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[QPolynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &QPolynomial {
        &self.coeffs[k]
    }

    /// Product with another polynomial, truncated to this series' order.
    pub fn mul_poly(&self, p: &XPolynomial) -> XSeries {
        let mut out = vec![QPolynomial::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in p.coeffs().iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                out[i + j] += &(a * b);
            }
        }
        XSeries {
            order: self.order,
            coeffs: out,
        }
    }

    /// Specialization `q = 1` of every coefficient.
    pub fn eval_q_at_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(QPolynomial::eval_at_one).collect()
    }

    /// True when the series agrees with `p` through `x^order`.
    pub fn agrees_with(&self, p: &XPolynomial) -> bool {
        (0..=self.order).all(|k| self.coeffs[k] == p.coeff(k))
    }
}

/// Rescaled Chebyshev polynomial of the second kind, `p_n(x) = x^{n/2} U_n(1/(2 sqrt x))`.
///
/// Computed from `p_n = p_{n-1} - x p_{n-2}` with `p_0 = p_1 = 1`.
pub fn chebyshev_p(n: usize) -> XPolynomial {
    let mut prev = XPolynomial::one();
    let mut cur = XPolynomial::one();
    if n == 0 {
        return prev;
    }
    let minus_x = XPolynomial::from_integers([0, -1]);
    for _ in 2..=n {
        let next_coeffs = {
            let shifted = &minus_x * &prev;
            let len = cur.coeffs.len().max(shifted.coeffs.len());
            (0..len)
                .map(|i| &cur.coeff(i) + &shifted.coeff(i))
                .collect::<Vec<_>>()
        };
        prev = cur;
        cur = XPolynomial::new(next_coeffs);
    }
    cur
}

/// Power series `numerator / denominator` through `x^order` by exact long division.
///
/// The constant term of the denominator must be a unit of `Z[q, q^-1]`,
/// i.e. `+q^e` or `-q^e`.
pub fn expand_rational(
    numerator: &XPolynomial,
    denominator: &XPolynomial,
    order: usize,
) -> Result<XSeries> {
    let lead = denominator.coeff(0);
    let (unit_exp, unit_coeff) = match (lead.num_terms(), lead.terms().next()) {
        (1, Some((e, c))) if c.abs().is_one() => (e, c.clone()),
        _ => {
            return Err(Error::InvalidDenominator(format!(
                "constant term {lead} is not a unit"
            )))
        }
    };
    // 1/(c q^e) = c q^{-e} for c = +-1.
    let inverse = QPolynomial::monomial(unit_coeff, -unit_exp);
    let mut out: Vec<QPolynomial> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = numerator.coeff(k);
        for j in 1..=k.min(denominator.degree().unwrap_or(0)) {
            let d = &denominator.coeffs()[j];
            if !d.is_zero() {
                acc -= &(d * &out[k - j]);
            }
        }
        out.push(&acc * &inverse);
    }
    Ok(XSeries { order, coeffs: out })
}
