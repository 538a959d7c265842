use std::fmt;
use std::str::FromStr;

use crate::flags::{demazure, fusion, hook, weyl, Partition};
use crate::qseries::QPolynomial;
use crate::{Error, Result};

/// The module whose level-`m` flag is requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlagSource {
    /// Local Weyl module `W(s)`.
    Weyl {
        s: usize,
    },
    /// Fusion product `V(m', 1^s)`.
    Hook {
        m_prime: usize,
        s: usize,
    },
    /// Demazure module `D(m', s)`.
    Demazure {
        m_prime: usize,
        s: usize,
    },
    Fusion(Partition),
}

impl FlagSource {
    /// Smallest target level that admits a flag.
    pub fn level(&self) -> usize {
        match self {
            FlagSource::Weyl { s } => usize::from(*s > 0),
            FlagSource::Hook { m_prime, .. } | FlagSource::Demazure { m_prime, .. } => *m_prime,
            FlagSource::Fusion(xi) => xi.largest(),
        }
    }

    /// Highest weight of the source module.
    pub fn weight(&self) -> usize {
        match self {
            FlagSource::Weyl { s } | FlagSource::Demazure { s, .. } => *s,
            FlagSource::Hook { m_prime, s } => m_prime + s,
            FlagSource::Fusion(xi) => xi.size(),
        }
    }

    pub fn evaluate(&self, n: usize, m: usize) -> Result<QPolynomial> {
        if m == 0 || m < self.level() {
            return Err(Error::NoFlag {
                m,
                m_prime: self.level(),
            });
        }
        let n = n as i64;
        match self {
            FlagSource::Weyl { s } => Ok(weyl(*s as i64, n, m)),
            FlagSource::Hook { m_prime, s } => hook(*m_prime, *s as i64, n, m),
            FlagSource::Demazure { m_prime, s } => demazure(*m_prime, *s as i64, n, m),
            FlagSource::Fusion(xi) => fusion(xi, n, m),
        }
    }
}

impl fmt::Display for FlagSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlagSource::Weyl { s } => write!(f, "weyl:{s}"),
            FlagSource::Hook { m_prime, s } => write!(f, "hook:{m_prime},{s}"),
            FlagSource::Demazure { m_prime, s } => write!(f, "demazure:{m_prime},{s}"),
            FlagSource::Fusion(xi) => {
                let parts: Vec<String> = xi.parts().iter().map(|p| p.to_string()).collect();
                write!(f, "fusion:{}", parts.join(","))
            }
        }
    }
}

/// `weyl:s`, `hook:m',s`, `demazure:m',s` or `fusion:p1,p2,...`.
impl FromStr for FlagSource {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let (kind, args) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected kind:args, got {text:?}")))?;
        let numbers = |expected: usize| -> Result<Vec<usize>> {
            let v = args
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad number {t:?} in {text:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if v.len() != expected {
                return Err(Error::Parse(format!(
                    "{kind} takes {expected} argument(s), got {text:?}"
                )));
            }
            Ok(v)
        };
        let positive = |v: usize| -> Result<usize> {
            if v == 0 {
                Err(Error::Parse(format!("level must be positive in {text:?}")))
            } else {
                Ok(v)
            }
        };
        match kind.trim() {
            "weyl" => Ok(FlagSource::Weyl { s: numbers(1)?[0] }),
            "hook" => {
                let v = numbers(2)?;
                Ok(FlagSource::Hook {
                    m_prime: positive(v[0])?,
                    s: v[1],
                })
            }
            "demazure" => {
                let v = numbers(2)?;
                Ok(FlagSource::Demazure {
                    m_prime: positive(v[0])?,
                    s: v[1],
                })
            }
            "fusion" => Ok(FlagSource::Fusion(args.parse()?)),
            other => Err(Error::Parse(format!("unknown source kind {other:?}"))),
        }
    }
}

/// A fully specified multiplicity polynomial `V^{source->m}_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagQuery {
    pub source: FlagSource,
    pub target_level: usize,
    pub weight: usize,
}

impl FlagQuery {
    pub fn new(source: FlagSource, target_level: usize, weight: usize) -> Result<Self> {
        if target_level == 0 || target_level < source.level() {
            return Err(Error::NoFlag {
                m: target_level,
                m_prime: source.level(),
            });
        }
        Ok(Self {
            source,
            target_level,
            weight,
        })
    }

    pub fn evaluate(&self) -> Result<QPolynomial> {
        self.source.evaluate(self.weight, self.target_level)
    }
}
