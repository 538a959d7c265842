//! Named verification suites that compare the flag polynomials with every
//! independent formula over a bounded grid.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::flags::{
    demazure, demazure_inclusion_exclusion, flag_transitivity_check, hook, ses_recursion, weyl,
    Partition,
};
use crate::oracles::{
    chebyshev_gf, dimension_audit, km_determinant_poly, lpart_poly, mock_theta_from_paths,
    mock_theta_series, schur_check, HookShape, MockReading, MockThetaSelector,
};
use crate::paths::{admissible_set, PathQuery};
use crate::qseries::QPolynomial;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Km,
    Lpart,
    Chebyshev,
    Mock,
    Schur,
    Dims,
    Recursion,
    Transitivity,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Km,
        Suite::Lpart,
        Suite::Chebyshev,
        Suite::Mock,
        Suite::Schur,
        Suite::Dims,
        Suite::Recursion,
        Suite::Transitivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Km => "km",
            Suite::Lpart => "lpart",
            Suite::Chebyshev => "chebyshev",
            Suite::Mock => "mock",
            Suite::Schur => "schur",
            Suite::Dims => "dims",
            Suite::Recursion => "recursion",
            Suite::Transitivity => "transitivity",
        }
    }

    /// Parses a suite name, with `all` expanding to every suite.
    pub fn parse_list(name: &str) -> Result<Vec<Suite>> {
        if name.trim() == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Ok(vec![name.parse()?])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Grid bounds shared by all suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct VerifyConfig {
    /// Largest path length or module weight.
    pub max_s: usize,
    /// Largest target level.
    pub max_m: usize,
    /// Truncation order for series (`x` for Chebyshev quotients, `q` for mock theta).
    pub order: usize,
    /// Reading used for the `phi` path counts.
    pub mock_reading: MockReading,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_s: 12,
            max_m: 5,
            order: 8,
            mock_reading: MockReading::HalfIndex,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellResult {
    pub cell: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub failed: usize,
    /// Observations that do not count as failures.
    pub findings: Vec<String>,
    pub cells: Vec<CellResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

fn compare(cell: String, lhs: &QPolynomial, rhs: &QPolynomial) -> CellResult {
    let passed = lhs == rhs;
    let detail = (!passed).then(|| format!("{lhs} != {rhs}"));
    CellResult {
        cell,
        passed,
        detail,
    }
}

fn outcome(cell: String, r: Result<CellResult>) -> CellResult {
    r.unwrap_or_else(|e| CellResult {
        cell,
        passed: false,
        detail: Some(e.to_string()),
    })
}

fn finish(suite: Suite, cells: Vec<CellResult>, findings: Vec<String>) -> SuiteReport {
    let failed = cells.iter().filter(|c| !c.passed).count();
    SuiteReport {
        suite,
        checked: cells.len(),
        failed,
        findings,
        cells,
    }
}

/// Partitions with at most `max_len` parts, each at most `max_part`, and
/// size at most `max_size`, in lexicographic order of their parts.
pub fn small_partitions(max_len: usize, max_part: usize, max_size: usize) -> Vec<Partition> {
    fn go(prefix: &mut Vec<usize>, cap: usize, room: usize, left: usize, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()).expect("built in decreasing order"));
        if left == 0 {
            return;
        }
        for p in 1..=cap.min(room) {
            prefix.push(p);
            go(prefix, p, room - p, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), max_part, max_size, max_len, &mut out);
    out.sort();
    out
}

fn km_suite(cfg: &VerifyConfig) -> SuiteReport {
    let grid: Vec<(usize, usize, usize)> = (1..=cfg.max_m)
        .flat_map(|m| {
            (0..m).flat_map(move |n| {
                (0..)
                    .take_while(move |k| n + 2 * k <= cfg.max_s)
                    .map(move |k| (m, n, k))
            })
        })
        .collect();
    let cells = grid
        .into_par_iter()
        .map(|(m, n, k)| {
            let cell = format!("k={k} n={n} m={m}");
            outcome(
                cell.clone(),
                km_determinant_poly(k, n, m)
                    .map(|lhs| compare(cell, &lhs, &weyl((n + 2 * k) as i64, n as i64, m))),
            )
        })
        .collect();
    finish(Suite::Km, cells, Vec::new())
}

fn lpart_suite(cfg: &VerifyConfig) -> SuiteReport {
    let grid: Vec<(usize, usize)> = (0..=cfg.max_s)
        .flat_map(|n| {
            (0..)
                .take_while(move |k| n + 2 * k <= cfg.max_s)
                .map(move |k| (n, k))
        })
        .collect();
    let cells = grid
        .into_par_iter()
        .map(|(n, k)| {
            compare(
                format!("k={k} n={n}"),
                &lpart_poly(k, n),
                &weyl((n + 2 * k) as i64, n as i64, 2),
            )
        })
        .collect();
    finish(Suite::Lpart, cells, Vec::new())
}

fn chebyshev_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut grid = Vec::new();
    for m in 1..=cfg.max_m {
        for n in 0..=cfg.max_s {
            grid.push((m, n, false));
            if n <= m {
                grid.push((m, n, true));
            }
        }
    }
    let cells = grid
        .into_par_iter()
        .map(|(m, n, bounded)| {
            let series = chebyshev_gf(m, n, cfg.order, bounded).eval_q_at_one();
            let set = admissible_set(m, n);
            let mut bad = Vec::new();
            for (k, coeff) in series.iter().enumerate() {
                let s = n + 2 * k;
                let query = PathQuery::new(s, n);
                let count = if bounded {
                    query.height_bound(m).count()
                } else {
                    query.admissible(&set).count()
                };
                let mut agrees = *coeff == BigInt::from(count);
                if !bounded && s <= cfg.max_s {
                    agrees &= *coeff == weyl(s as i64, n as i64, m).eval_at_one();
                }
                if !agrees {
                    bad.push(k);
                }
            }
            CellResult {
                cell: format!(
                    "m={m} n={n} mode={}",
                    if bounded { "bounded" } else { "general" }
                ),
                passed: bad.is_empty(),
                detail: (!bad.is_empty()).then(|| format!("x-coefficients {bad:?} disagree")),
            }
        })
        .collect();
    finish(Suite::Chebyshev, cells, Vec::new())
}

fn mock_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut cells = Vec::new();
    let mut findings = Vec::new();
    for sel in MockThetaSelector::ALL {
        let series = mock_theta_series(sel, cfg.order);
        let is_phi = matches!(sel, MockThetaSelector::Phi0 | MockThetaSelector::Phi1);
        let reading = if is_phi {
            cfg.mock_reading
        } else {
            MockReading::Literal
        };
        let paths = mock_theta_from_paths(sel, cfg.order, reading);
        cells.push(compare(
            format!("{sel} reading={reading:?} order={}", cfg.order),
            &paths,
            &series,
        ));
        if is_phi && reading != MockReading::Literal {
            let literal = mock_theta_from_paths(sel, cfg.order, MockReading::Literal);
            if literal != series {
                let first = (0..=cfg.order as i64)
                    .find(|&e| literal.coeff(e) != series.coeff(e))
                    .unwrap_or_default();
                findings.push(format!(
                    "{sel}: literal reading disagrees with the q-series from q^{first} \
                     (paths give {}, series gives {})",
                    literal.coeff(first),
                    series.coeff(first)
                ));
            }
        }
    }
    finish(Suite::Mock, cells, findings)
}

fn schur_suite(cfg: &VerifyConfig) -> SuiteReport {
    let grid: Vec<HookShape> = (0..=cfg.max_s)
        .flat_map(|n| {
            (0..)
                .take_while(move |k| n + 2 * k <= cfg.max_s)
                .map(move |k| HookShape::new(n, k))
        })
        .collect();
    let cells = grid
        .into_par_iter()
        .map(|shape| {
            let cell = format!("lambda=({},{})", shape.n + shape.k, shape.k);
            outcome(
                cell.clone(),
                schur_check(shape, shape.size().max(1)).map(|c| compare(cell, &c.lhs, &c.rhs)),
            )
        })
        .collect();
    finish(Suite::Schur, cells, Vec::new())
}

fn dims_suite(cfg: &VerifyConfig) -> SuiteReport {
    let grid: Vec<(Partition, usize)> = small_partitions(5, cfg.max_m.min(4), cfg.max_s)
        .into_iter()
        .flat_map(|xi| (xi.largest().max(1)..=cfg.max_m).map(move |m| (xi.clone(), m)))
        .collect();
    let cells = grid
        .into_par_iter()
        .map(|(xi, m)| {
            let cell = format!("xi={xi} m={m}");
            outcome(
                cell.clone(),
                dimension_audit(&xi, m).map(|a| CellResult {
                    cell,
                    passed: a.holds(),
                    detail: (!a.holds()).then(|| format!("{} != {}", a.from_flags, a.expected)),
                }),
            )
        })
        .collect();
    finish(Suite::Dims, cells, Vec::new())
}

fn recursion_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut grid = Vec::new();
    for mp in 1..=cfg.max_m.min(4) {
        for m in mp..=cfg.max_m {
            for s in 0..=cfg.max_s {
                for n in 0..=s + mp {
                    grid.push((mp, m, s, n));
                }
            }
        }
    }
    let cells = grid
        .into_par_iter()
        .map(|(mp, m, s, n)| {
            let cell = format!("m'={mp} m={m} s={s} n={n}");
            let (s, n) = (s as i64, n as i64);
            outcome(
                cell.clone(),
                (|| {
                    let paths = hook(mp, s, n, m)?;
                    let rec = ses_recursion(mp, s, n, m)?;
                    let mut r = compare(cell.clone(), &paths, &rec);
                    if r.passed && s <= cfg.max_s as i64 && (s - n) / 2 <= 8 {
                        let solve = demazure(mp, s, n, m)?;
                        let sum = demazure_inclusion_exclusion(mp, s, n, m)?;
                        r = compare(cell, &solve, &sum);
                    }
                    Ok(r)
                })(),
            )
        })
        .collect();
    finish(Suite::Recursion, cells, Vec::new())
}

fn transitivity_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut grid = Vec::new();
    for xi in small_partitions(4, cfg.max_m.min(3), cfg.max_s.min(10)) {
        for mp in xi.largest().max(1)..=cfg.max_m {
            for m in mp..=cfg.max_m {
                for n in (xi.size() % 2..=xi.size()).step_by(2) {
                    grid.push((xi.clone(), mp, m, n));
                }
            }
        }
    }
    let cells = grid
        .into_par_iter()
        .map(|(xi, mp, m, n)| {
            let cell = format!("xi={xi} m'={mp} m={m} n={n}");
            outcome(
                cell.clone(),
                flag_transitivity_check(&xi, mp, m, n as i64)
                    .map(|c| compare(cell, &c.lhs, &c.rhs)),
            )
        })
        .collect();
    finish(Suite::Transitivity, cells, Vec::new())
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    match suite {
        Suite::Km => km_suite(cfg),
        Suite::Lpart => lpart_suite(cfg),
        Suite::Chebyshev => chebyshev_suite(cfg),
        Suite::Mock => mock_suite(cfg),
        Suite::Schur => schur_suite(cfg),
        Suite::Dims => dims_suite(cfg),
        Suite::Recursion => recursion_suite(cfg),
        Suite::Transitivity => transitivity_suite(cfg),
    }
}

/// Runs each requested suite once, in canonical order.
pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> VerifyReport {
    let mut unique = suites.to_vec();
    unique.sort();
    unique.dedup();
    let reports: Vec<SuiteReport> = unique.iter().map(|&s| run_suite(s, cfg)).collect();
    VerifyReport {
        config: *cfg,
        passed: reports.iter().all(SuiteReport::passed),
        suites: reports,
    }
}
