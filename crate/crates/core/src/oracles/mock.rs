//! Fifth-order mock theta functions `phi_0, phi_1, psi_0, psi_1`, as
//! q-series and as counts of Dyck paths of height at most two.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::paths::PathQuery;
use crate::qseries::{q_pochhammer, QPolynomial, Sign};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MockThetaSelector {
    Phi0,
    Phi1,
    Psi0,
    Psi1,
}

impl MockThetaSelector {
    pub const ALL: [MockThetaSelector; 4] = [Self::Phi0, Self::Phi1, Self::Psi0, Self::Psi1];

    pub fn name(self) -> &'static str {
        match self {
            Self::Phi0 => "phi0",
            Self::Phi1 => "phi1",
            Self::Psi0 => "psi0",
            Self::Psi1 => "psi1",
        }
    }
}

impl fmt::Display for MockThetaSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MockThetaSelector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|sel| sel.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown mock theta function {s:?}")))
    }
}

/// How the `phi` path counts index their target statistic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MockReading {
    /// The coefficient of `q^N` matches the statistic against `N` itself.
    #[default]
    Literal,
    /// The `phi` statistics are matched against `floor(N / 2)`, with the
    /// parity of `N` selecting the end height. The `psi` counts are unchanged.
    HalfIndex,
}

/// Truncation through `q^order` of the defining sums, e.g.
/// `psi_1 = sum q^{n(n+1)/2} (-q; q)_n`.
pub fn mock_theta_series(sel: MockThetaSelector, order: usize) -> QPolynomial {
    let order = order as i64;
    let mut total = QPolynomial::zero();
    for n in 0i64.. {
        let lead = match sel {
            MockThetaSelector::Phi0 => n * n,
            MockThetaSelector::Phi1 => (n + 1) * (n + 1),
            MockThetaSelector::Psi0 => (n + 1) * (n + 2) / 2,
            MockThetaSelector::Psi1 => n * (n + 1) / 2,
        };
        if lead > order {
            break;
        }
        let step = match sel {
            MockThetaSelector::Phi0 | MockThetaSelector::Phi1 => 2,
            MockThetaSelector::Psi0 | MockThetaSelector::Psi1 => 1,
        };
        let product =
            q_pochhammer(Sign::Minus, 1, step, n, Some(order - lead)).expect("non-negative length");
        total += &product.shift(lead);
    }
    total
}

/// Counts `c[e][s][comaj]` of paths of height at most 2 ending at `e`, with
/// length `s` up to the point where no later length can reach `max_comaj`.
fn height_two_counts(max_comaj: u64) -> Vec<Vec<Vec<u64>>> {
    // A length-s path to height e has d = (s - e) / 2 down-steps in runs of
    // length <= 2, so at least ceil(d / 2) descents with distinct positive
    // contributions: comaj >= t (t + 1) / 2 for t = ceil(d / 2).
    let lower_bound = |d: usize| {
        let t = d.div_ceil(2) as u64;
        t * (t + 1) / 2
    };
    let mut max_d = 0;
    while lower_bound(max_d + 1) <= max_comaj {
        max_d += 1;
    }
    let max_len = 2 * max_d + 2;
    (0..=2)
        .map(|e| {
            (0..=max_len)
                .map(|s| {
                    if s < e || (s - e) / 2 > max_d {
                        Vec::new()
                    } else {
                        PathQuery::new(s, e).height_bound(2).comaj_histogram()
                    }
                })
                .collect()
        })
        .collect()
}

/// The same truncation as [`mock_theta_series`], from path counts:
///
/// * `psi_1`: end height 1, `comaj = N`;
/// * `psi_0`: end height 1, `comaj + ceil(len / 2) = N`;
/// * `phi_0`: end height `2 (N mod 2)`, `comaj = N`;
/// * `phi_1`: end height `2 (1 - N mod 2)`, `comaj + ceil(len / 2) + 1 - N mod 2 = N`.
///
/// [`MockReading::HalfIndex`] replaces the right-hand `N` by `floor(N / 2)` in
/// the two `phi` rules.
pub fn mock_theta_from_paths(
    sel: MockThetaSelector,
    order: usize,
    reading: MockReading,
) -> QPolynomial {
    let counts = height_two_counts(order as u64);
    let mut out = QPolynomial::zero();
    for target in 0..=order {
        let parity = target % 2;
        let goal = match (sel, reading) {
            (MockThetaSelector::Phi0 | MockThetaSelector::Phi1, MockReading::HalfIndex) => {
                target / 2
            }
            _ => target,
        };
        let (end, offset): (usize, Box<dyn Fn(usize) -> usize>) = match sel {
            MockThetaSelector::Psi1 => (1, Box::new(|_| 0)),
            MockThetaSelector::Psi0 => (1, Box::new(|len: usize| len.div_ceil(2))),
            MockThetaSelector::Phi0 => (2 * parity, Box::new(|_| 0)),
            MockThetaSelector::Phi1 => (
                2 * (1 - parity),
                Box::new(move |len: usize| len.div_ceil(2) + 1 - parity),
            ),
        };
        let mut total = 0u64;
        for (len, hist) in counts[end].iter().enumerate() {
            let extra = offset(len);
            if extra > goal {
                continue;
            }
            total += hist.get(goal - extra).copied().unwrap_or(0);
        }
        out.add_term(target as i64, total.into());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi1_prefix() {
        assert_eq!(
            mock_theta_series(MockThetaSelector::Psi1, 6),
            QPolynomial::from_coeffs([1, 1, 1, 1, 1, 1, 2])
        );
    }

    #[test]
    fn constant_terms() {
        assert!(mock_theta_series(MockThetaSelector::Phi0, 0).is_one());
        assert!(mock_theta_from_paths(MockThetaSelector::Psi1, 0, MockReading::Literal).is_one());
    }

    #[test]
    fn nonnegative_coefficients() {
        for sel in MockThetaSelector::ALL {
            let s = mock_theta_series(sel, 50);
            assert!(
                s.terms().all(|(_, c)| c.sign() != num_bigint::Sign::Minus),
                "{sel}"
            );
        }
    }

    #[test]
    fn psi_paths_match_series() {
        for sel in [MockThetaSelector::Psi0, MockThetaSelector::Psi1] {
            assert_eq!(
                mock_theta_from_paths(sel, 20, MockReading::Literal),
                mock_theta_series(sel, 20)
            );
        }
    }

    #[test]
    fn selector_names() {
        for sel in MockThetaSelector::ALL {
            assert_eq!(sel.name().parse::<MockThetaSelector>().unwrap(), sel);
        }
        assert!("chi0".parse::<MockThetaSelector>().is_err());
    }
}
