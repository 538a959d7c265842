//! Sparse Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A Laurent polynomial `sum c_e q^e` with `e` ranging over all integers.
///
/// Zero coefficients are never stored, so the zero polynomial has an empty
/// term map and structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * q^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds `sum coeffs[i] q^i`.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (i as i64, c)))
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `true` when `self` is the polynomial `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Result<i64> {
        self.terms
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::EmptyPolynomial)
    }

    pub fn mindeg(&self) -> Result<i64> {
        self.terms
            .keys()
            .next()
            .copied()
            .ok_or(Error::EmptyPolynomial)
    }

    /// Leading coefficient equals one. The zero polynomial is not monic.
    pub fn is_monic(&self) -> bool {
        self.terms.values().next_back().is_some_and(|c| c.is_one())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Drops every term with exponent above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        Self {
            terms: self
                .terms
                .range(..=order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Product with all terms above `order` discarded.
    pub fn mul_truncated(&self, other: &Self, order: i64) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                if ea + eb > order {
                    break;
                }
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    /// Nonzero exponents form one run of consecutive integers.
    pub fn has_contiguous_support(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize == self.terms.len(),
            _ => true,
        }
    }

    /// Power-series quotient `self / den` through `q^order`.
    ///
    /// Both operands are read as power series (no negative exponents) and the
    /// constant term of `den` must be `1` or `-1`.
    pub fn series_quotient(&self, den: &Self, order: i64) -> Result<Self> {
        let unit = den.coeff(0);
        if !unit.abs().is_one() || den.mindeg().map_or(true, |d| d < 0) {
            return Err(Error::InvalidDenominator(
                "power-series denominator needs constant term +1 or -1".into(),
            ));
        }
        if self.mindeg().is_ok_and(|d| d < 0) {
            return Err(Error::InvalidDenominator(
                "power-series numerator has negative exponents".into(),
            ));
        }
        if order < 0 {
            return Ok(Self::zero());
        }
        let len = order as usize + 1;
        let dense_den: Vec<(usize, &BigInt)> = den
            .terms
            .iter()
            .filter(|(e, _)| (1..=order).contains(*e))
            .map(|(e, c)| (*e as usize, c))
            .collect();
        let mut out: Vec<BigInt> = vec![BigInt::zero(); len];
        for i in 0..len {
            let mut acc = self.coeff(i as i64);
            for &(e, c) in &dense_den {
                if e > i {
                    break;
                }
                if !out[i - e].is_zero() {
                    acc -= c * &out[i - e];
                }
            }
            out[i] = &acc * &unit;
        }
        Ok(Self::from_coeffs(out))
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide
    /// `self` in `Z[q, q^-1]`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let (lead_exp, lead) = other
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (*e, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let Ok(self_min) = self.mindeg() else {
            return Some(Self::zero());
        };
        // Any quotient term lies at or above this exponent.
        let lowest_shift = self_min - other.mindeg().ok()?;
        while let Some((&top, top_coeff)) = rem.terms.iter().next_back() {
            if top - lead_exp < lowest_shift {
                return None;
            }
            if !(top_coeff % &lead).is_zero() {
                return None;
            }
            let factor = top_coeff / &lead;
            let shift = top - lead_exp;
            for (e, c) in &other.terms {
                rem.add_term(e + shift, -(c * &factor));
            }
            quot.add_term(shift, factor);
        }
        Some(quot)
    }

    /// Human-readable rendering, e.g. `q^3 + q^4` or `1 - 2q`.
    pub fn to_text(&self) -> String {
        self.render(|e| match e {
            1 => "q".to_string(),
            _ => format!("q^{e}"),
        })
    }

    /// LaTeX rendering with braced exponents, e.g. `q^{3} + q^{4}`.
    pub fn to_latex(&self) -> String {
        self.render(|e| match e {
            1 => "q".to_string(),
            _ => format!("q^{{{e}}}"),
        })
    }

    fn render(&self, var: impl Fn(i64) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if *e == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&var(*e));
            }
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({})", self.to_text())
    }
}

impl From<i64> for QPolynomial {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl From<BigInt> for QPolynomial {
    fn from(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&QPolynomial> for QPolynomial {
    fn sub_assign(&mut self, rhs: &QPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;
    fn add(mut self, rhs: QPolynomial) -> QPolynomial {
        self += &rhs;
        self
    }
}

impl Sub<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;
    fn sub(mut self, rhs: QPolynomial) -> QPolynomial {
        self -= &rhs;
        self
    }
}

impl Mul<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |acc, p| acc + p)
    }
}

// {"coeffs": {"<exponent>": "<decimal integer>"}} with exponents in numeric order.
impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a BTreeMap<i64, BigInt>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (e, c) in self.0 {
                    map.serialize_entry(&e.to_string(), &c.to_string())?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("coeffs", &Coeffs(&self.terms))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffMap(BTreeMap<i64, BigInt>);

        impl<'de> Deserialize<'de> for CoeffMap {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                struct V;
                impl<'de> Visitor<'de> for V {
                    type Value = CoeffMap;
                    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                        f.write_str("a map from exponent strings to integer strings")
                    }
                    fn visit_map<A: MapAccess<'de>>(
                        self,
                        mut access: A,
                    ) -> std::result::Result<CoeffMap, A::Error> {
                        let mut terms = BTreeMap::new();
                        while let Some((k, v)) = access.next_entry::<String, String>()? {
                            let e: i64 = k.parse().map_err(de::Error::custom)?;
                            let c: BigInt = v.parse().map_err(de::Error::custom)?;
                            if c.is_zero() {
                                continue;
                            }
                            if terms.insert(e, c).is_some() {
                                return Err(de::Error::custom(format!("duplicate exponent {e}")));
                            }
                        }
                        Ok(CoeffMap(terms))
                    }
                }
                d.deserialize_map(V)
            }
        }

        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            coeffs: CoeffMap,
        }

        let repr = Repr::deserialize(deserializer)?;
        Ok(QPolynomial {
            terms: repr.coeffs.0,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.iter().copied())
    }

    #[test]
    fn worked_example_evaluates_to_two() {
        let v = QPolynomial::from_terms([(3, 1), (4, 1)]);
        assert_eq!(v.eval_at_one(), BigInt::from(2));
        assert_eq!(v.degree().unwrap(), 4);
        assert_eq!(v.mindeg().unwrap(), 3);
        assert!(v.is_monic());
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
    }

    #[test]
    fn zero_is_additive_identity() {
        let a = QPolynomial::from_terms([(-3, 2), (5, -7)]);
        assert_eq!(&QPolynomial::zero() + &a, a);
    }

    #[test]
    fn degree_of_zero_is_an_error() {
        assert!(matches!(
            QPolynomial::zero().degree(),
            Err(Error::EmptyPolynomial)
        ));
        assert!(matches!(
            QPolynomial::zero().mindeg(),
            Err(Error::EmptyPolynomial)
        ));
        assert!(!QPolynomial::zero().is_monic());
    }

    #[test]
    fn laurent_shift_and_cancellation() {
        let a = QPolynomial::from_terms([(2, 1), (3, 4)]).shift(-5);
        assert_eq!(a.mindeg().unwrap(), -3);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division() {
        let num = p(&[1, 0, 0, -1]);
        let den = p(&[1, -1]);
        assert_eq!(num.div_exact(&den), Some(p(&[1, 1, 1])));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[1, 0, 1])), None);
    }

    #[test]
    fn series_division_geometric() {
        let s = QPolynomial::one().series_quotient(&p(&[1, -1]), 5).unwrap();
        assert_eq!(s, p(&[1, 1, 1, 1, 1, 1]));
        assert!(QPolynomial::one().series_quotient(&p(&[2, 1]), 3).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            QPolynomial::from_terms([(3, 1), (4, 1)]).to_text(),
            "q^3 + q^4"
        );
        assert_eq!(p(&[1, -2]).to_text(), "1 - 2q");
        assert_eq!(QPolynomial::zero().to_text(), "0");
        assert_eq!(
            QPolynomial::from_terms([(3, 1), (10, 2)]).to_latex(),
            "q^{3} + 2q^{10}"
        );
    }

    #[test]
    fn json_shape_is_numeric_ordered() {
        let v = QPolynomial::from_terms([(10, 1), (3, 1), (-2, -5)]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"coeffs":{"-2":"-5","3":"1","10":"1"}}"#);
        let back: QPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
