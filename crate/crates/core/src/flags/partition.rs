use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A partition `xi_1 >= xi_2 >= ... >= xi_l > 0` indexing a fusion product.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    /// `(1^s)`.
    pub fn ones(s: usize) -> Self {
        Self { parts: vec![1; s] }
    }

    /// `(m', 1^s)`.
    ///
    /// # Panics
    ///
    /// Panics when `m_prime == 0`.
    pub fn hook(m_prime: usize, s: usize) -> Self {
        assert!(m_prime >= 1, "hook arm must be positive");
        let mut parts = vec![m_prime];
        parts.extend(std::iter::repeat_n(1, s));
        Self { parts }
    }

    /// `xi(m, n) = (m^{n1}, n0)` with `n = m n1 + n0`; its fusion product is `D(m, n)`.
    pub fn demazure(m: usize, n: usize) -> Self {
        assert!(m >= 1, "level must be positive");
        let mut parts = vec![m; n / m];
        if !n.is_multiple_of(m) {
            parts.push(n % m);
        }
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|xi|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `|xi|_i = sum_{j >= i} xi_j` for 1-based `i`; zero past the end.
    pub fn tail_sum(&self, i: usize) -> usize {
        assert!(i >= 1, "tail sums are 1-based");
        self.parts.iter().skip(i - 1).sum()
    }

    /// Largest part, `0` for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The partition with its largest part removed.
    pub fn without_first(&self) -> Self {
        Self {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Comma-separated parts, optionally parenthesized: `3,1,1` or `(3,1,1)`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if inner.is_empty() {
            return Ok(Self::default());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Partition::new(vec![3, 1, 1]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("(2,1)".parse::<Partition>().is_ok());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::default());
    }

    #[test]
    fn tail_sums_and_shapes() {
        let xi: Partition = "4,2,2,1".parse().unwrap();
        assert_eq!(xi.size(), 9);
        assert_eq!(
            (1..=5).map(|i| xi.tail_sum(i)).collect::<Vec<_>>(),
            [9, 5, 3, 1, 0]
        );
        assert_eq!(Partition::demazure(3, 7).parts(), &[3, 3, 1]);
        assert_eq!(Partition::demazure(3, 6).parts(), &[3, 3]);
        assert_eq!(Partition::hook(2, 3).parts(), &[2, 1, 1, 1]);
        assert_eq!(xi.to_string(), "(4,2,2,1)");
    }

    #[test]
    fn serde_as_list() {
        let xi = Partition::hook(3, 2);
        assert_eq!(serde_json::to_string(&xi).unwrap(), "[3,1,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
