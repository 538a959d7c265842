//! Output formatting. Every renderer returns a complete string so that
//! output is assembled before anything reaches stdout.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::json;

use demflag::flags::{FlagSource, TableCell};
use demflag::oracles::MockThetaSelector;
use demflag::paths::DyckPath;
use demflag::qseries::{QPolynomial, XSeries};
use demflag::verify::VerifyReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable value");
    s.push('\n');
    s
}

fn csv_terms(out: &mut String, prefix: &str, poly: &QPolynomial) {
    for (e, c) in poly.terms() {
        let _ = writeln!(out, "{prefix},{e},{c}");
    }
}

pub fn polys(
    source: &FlagSource,
    m: usize,
    rows: &[(usize, QPolynomial)],
    table: bool,
    format: Format,
) -> String {
    let s = source.weight();
    let mut out = String::new();
    match format {
        Format::Text if !table => {
            let _ = writeln!(out, "{}", rows[0].1);
        }
        Format::Text => {
            for (n, p) in rows {
                let _ = writeln!(out, "n={n}\t{p}");
            }
        }
        Format::Json if !table => out = to_json(&rows[0].1),
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(n, p)| json!({ "n": n, "poly": p }))
                .collect();
            out = to_json(&json!({ "source": source.to_string(), "level": m, "rows": rows }));
        }
        Format::Csv => {
            out.push_str("s,n,m,exponent,coefficient\n");
            for (n, p) in rows {
                csv_terms(&mut out, &format!("{s},{n},{m}"), p);
            }
        }
        Format::Latex if !table => {
            let _ = writeln!(out, "{}", rows[0].1.to_latex());
        }
        Format::Latex => {
            out.push_str("\\begin{tabular}{r|l}\n$n$ & multiplicity \\\\ \\hline\n");
            for (n, p) in rows {
                let _ = writeln!(out, "{n} & ${}$ \\\\", p.to_latex());
            }
            out.push_str("\\end{tabular}\n");
        }
    }
    out
}

pub fn series(series: &XSeries, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Text => {
            for (k, c) in series.coeffs().iter().enumerate() {
                let _ = writeln!(out, "x^{k}\t{c}");
            }
            let _ = writeln!(out, "+ O(x^{})", series.order() + 1);
        }
        Format::Json => out = to_json(series),
        Format::Csv => {
            out.push_str("k,exponent,coefficient\n");
            for (k, c) in series.coeffs().iter().enumerate() {
                csv_terms(&mut out, &k.to_string(), c);
            }
        }
        Format::Latex => {
            let terms: Vec<String> = series
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| match k {
                    0 => format!("({})", c.to_latex()),
                    1 => format!("({})x", c.to_latex()),
                    _ => format!("({})x^{{{k}}}", c.to_latex()),
                })
                .collect();
            let body = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            };
            let _ = writeln!(out, "{body} + O(x^{{{}}})", series.order() + 1);
        }
    }
    Ok(out)
}

pub fn paths(paths: impl Iterator<Item = DyckPath>, format: Format) -> Result<String> {
    let mut out = String::new();
    let mut count = 0u64;
    match format {
        Format::Text => {
            for p in paths {
                count += 1;
                let _ = writeln!(
                    out,
                    "{p}\tcomaj={}\tmaj={}\tdes={}",
                    p.comaj(),
                    p.maj(),
                    p.des()
                );
            }
            let _ = writeln!(out, "# {count} paths");
        }
        Format::Csv => {
            out.push_str("path,comaj,maj,des\n");
            for p in paths {
                let _ = writeln!(out, "{p},{},{},{}", p.comaj(), p.maj(), p.des());
            }
        }
        Format::Json => {
            let rows: Vec<_> = paths
                .map(|p| {
                    json!({ "path": p.to_string(), "comaj": p.comaj(), "maj": p.maj(), "des": p.des() })
                })
                .collect();
            out = to_json(&json!({ "count": rows.len(), "paths": rows }));
        }
        Format::Latex => bail!("paths supports text, csv and json output"),
    }
    Ok(out)
}

pub fn report(report: &VerifyReport, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Text => {
            for s in &report.suites {
                let status = if s.passed() { "ok" } else { "FAILED" };
                let _ = writeln!(
                    out,
                    "{:<13}{status:<7}{} checked, {} failed",
                    s.suite.name(),
                    s.checked,
                    s.failed
                );
                for c in s.cells.iter().filter(|c| !c.passed) {
                    let detail = c.detail.as_deref().unwrap_or("");
                    let _ = writeln!(out, "  fail {}: {detail}", c.cell);
                }
                for f in &s.findings {
                    let _ = writeln!(out, "  note {f}");
                }
            }
            let _ = writeln!(out, "{}", if report.passed { "PASS" } else { "FAIL" });
        }
        Format::Json => out = to_json(report),
        Format::Csv | Format::Latex => bail!("verify supports text and json output"),
    }
    Ok(out)
}

pub fn mock(
    sel: MockThetaSelector,
    order: usize,
    series: &QPolynomial,
    paths: &QPolynomial,
    format: Format,
) -> Result<String> {
    let mut out = String::new();
    let rows = (0..=order as i64).map(|k| (k, series.coeff(k), paths.coeff(k)));
    match format {
        Format::Text => {
            let _ = writeln!(out, "# {}: q-series vs path counts", sel.name());
            let _ = writeln!(out, "{:>4} {:>12} {:>12}", "N", "series", "paths");
            let mut mismatches = 0;
            for (k, a, b) in rows {
                let flag = if a == b { "" } else { "  *" };
                mismatches += usize::from(a != b);
                let _ = writeln!(out, "{k:>4} {a:>12} {b:>12}{flag}");
            }
            let _ = writeln!(out, "# {mismatches} mismatching coefficients");
        }
        Format::Csv => {
            out.push_str("N,series,paths\n");
            for (k, a, b) in rows {
                let _ = writeln!(out, "{k},{a},{b}");
            }
        }
        Format::Json => {
            out = to_json(&json!({
                "which": sel,
                "order": order,
                "series": series,
                "paths": paths,
                "agree": series == paths,
            }));
        }
        Format::Latex => {
            let _ = writeln!(
                out,
                "{} &= {} + O(q^{{{}}}) \\\\",
                sel.name(),
                series.to_latex(),
                order + 1
            );
            let _ = writeln!(out, "&= {} + O(q^{{{}}})", paths.to_latex(), order + 1);
        }
    }
    Ok(out)
}

pub fn table(m_prime: usize, m: usize, cells: &[TableCell], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("m_prime,m,s,n,exponent,coefficient\n");
            for c in cells {
                csv_terms(&mut out, &format!("{m_prime},{m},{},{}", c.s, c.n), &c.poly);
            }
        }
        Format::Json => out = to_json(&json!({ "m_prime": m_prime, "m": m, "cells": cells })),
        Format::Text => {
            for c in cells {
                let _ = writeln!(out, "s={}\tn={}\t{}", c.s, c.n, c.poly);
            }
        }
        Format::Latex => {
            out.push_str("\\begin{tabular}{rr|l}\n$s$ & $n$ & multiplicity \\\\ \\hline\n");
            for c in cells {
                let _ = writeln!(out, "{} & {} & ${}$ \\\\", c.s, c.n, c.poly.to_latex());
            }
            out.push_str("\\end{tabular}\n");
        }
    }
    Ok(out)
}
