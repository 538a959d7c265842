//! Command-line front end for the `demflag` library.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use demflag::flags::{demazure_table, generating_series, FlagQuery, FlagSource};
use demflag::oracles::{mock_theta_from_paths, mock_theta_series, MockReading, MockThetaSelector};
use demflag::paths::{admissible_set, PathQuery};
use demflag::verify::{self, Suite, VerifyConfig};

use render::Format;

#[derive(Parser, Debug)]
#[command(
    name = "demflag",
    version,
    about = "Graded multiplicities in Demazure flags via admissible Dyck paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one multiplicity polynomial, or one per weight.
    Poly {
        /// weyl:s | hook:m',s | demazure:m',s | fusion:p1,p2,...
        #[arg(long)]
        source: FlagSource,
        /// Target level m.
        #[arg(long)]
        level: usize,
        /// Highest weight n of the Demazure module.
        #[arg(
            long,
            required_unless_present = "all_weights",
            conflicts_with = "all_weights"
        )]
        weight: Option<usize>,
        /// Print every weight n with |source| - n even.
        #[arg(long)]
        all_weights: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Truncated generating series A^{m'->m}_n(x, q).
    Series {
        #[arg(long)]
        m_prime: usize,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        weight: usize,
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List paths of a given length and end height with their statistics.
    Paths {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        weight: usize,
        /// Keep only paths admissible for this level.
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        height_bound: Option<usize>,
        #[arg(long, default_value_t = 0)]
        prefix_ups: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites; exits nonzero if any check fails.
    Verify {
        /// km, lpart, chebyshev, mock, schur, dims, recursion, transitivity or all.
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long)]
        max_s: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum)]
        mock_reading: Option<Reading>,
        /// TOML file with a [verify] table of default bounds.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Mock theta coefficients from the q-series and from path counts.
    MockTheta {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 30)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Reading::Literal)]
        reading: Reading,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Grid of V^{m'->m}_{s,n} over all s <= max-s.
    Table {
        #[arg(long, default_value_t = 1)]
        m_prime: usize,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        max_s: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Phi0,
    Phi1,
    Psi0,
    Psi1,
}

impl From<Which> for MockThetaSelector {
    fn from(w: Which) -> Self {
        match w {
            Which::Phi0 => MockThetaSelector::Phi0,
            Which::Phi1 => MockThetaSelector::Phi1,
            Which::Psi0 => MockThetaSelector::Psi0,
            Which::Psi1 => MockThetaSelector::Psi1,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Reading {
    Literal,
    HalfIndex,
}

impl From<Reading> for MockReading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::Literal => MockReading::Literal,
            Reading::HalfIndex => MockReading::HalfIndex,
        }
    }
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(default)]
    verify: VerifyConfig,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Poly {
            source,
            level,
            weight,
            all_weights,
            format,
        } => {
            let weights: Vec<usize> = match (weight, all_weights) {
                (Some(n), _) => vec![n],
                (None, _) => {
                    let size = source.weight();
                    (size % 2..=size).step_by(2).collect()
                }
            };
            let mut rows = Vec::with_capacity(weights.len());
            for n in weights {
                let poly = FlagQuery::new(source.clone(), level, n)?.evaluate()?;
                rows.push((n, poly));
            }
            print!(
                "{}",
                render::polys(&source, level, &rows, all_weights, format)
            );
        }
        Command::Series {
            m_prime,
            level,
            weight,
            order,
            format,
        } => {
            let series = generating_series(m_prime, level, weight, order)?;
            print!("{}", render::series(&series, format)?);
        }
        Command::Paths {
            length,
            weight,
            level,
            height_bound,
            prefix_ups,
            format,
        } => {
            if level == Some(0) {
                bail!("level must be positive");
            }
            let set = level.map(|m| admissible_set(m, weight));
            let mut query = PathQuery::new(length, weight).prefix_ups(prefix_ups);
            if let Some(set) = &set {
                query = query.admissible(set);
            }
            if let Some(h) = height_bound {
                query = query.height_bound(h);
            }
            print!("{}", render::paths(query.iter(), format)?);
        }
        Command::Verify {
            suite,
            max_s,
            max_m,
            order,
            mock_reading,
            config,
            format,
        } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    toml::from_str::<ConfigFile>(&text)
                        .with_context(|| format!("parsing {}", path.display()))?
                        .verify
                }
                None => VerifyConfig::default(),
            };
            cfg.max_s = max_s.unwrap_or(cfg.max_s);
            cfg.max_m = max_m.unwrap_or(cfg.max_m);
            cfg.order = order.unwrap_or(cfg.order);
            cfg.mock_reading = mock_reading.map(Into::into).unwrap_or(cfg.mock_reading);
            if cfg.max_m == 0 {
                bail!("--max-m must be positive");
            }
            let suites = Suite::parse_list(&suite)?;
            let report = verify::run(&suites, &cfg);
            print!("{}", render::report(&report, format)?);
            return Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::MockTheta {
            which,
            order,
            reading,
            format,
        } => {
            let sel: MockThetaSelector = which.into();
            let series = mock_theta_series(sel, order);
            let paths = mock_theta_from_paths(sel, order, reading.into());
            print!("{}", render::mock(sel, order, &series, &paths, format)?);
        }
        Command::Table {
            m_prime,
            level,
            max_s,
            format,
        } => {
            let cells = demazure_table(m_prime, level, max_s)?;
            print!("{}", render::table(m_prime, level, &cells, format)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}
