//! Command definitions and execution for the `sheafcones` binary.
//!
//! Exit codes: 0 success, 1 negative isomorphism verdict, 2 usage, domain,
//! or I/O error, 3 internal invariant violation (a bug signal).

pub mod svg;
pub mod text;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use sheafcones::moduli::{is_isomorphic, IsoReason, IsoVerdict, ModuliSpace, NotIsoReason};
use sheafcones::rational::{parse_rational, Rational};
use sheafcones::report::AnalysisReport;
use sheafcones::stability::{enumerate_rank_one_walls, largest_wall};
use sheafcones::Error;

#[derive(Parser)]
#[command(
    name = "sheafcones",
    version,
    about = "Invariants of the moduli spaces N(mu, chi) of one-dimensional plane sheaves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Full invariant report for one space
    #[command(allow_negative_numbers = true)]
    Analyze {
        mu: i64,
        chi: i64,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Survey of rank-one walls, largest first
    #[command(allow_negative_numbers = true)]
    Walls {
        mu: i64,
        chi: i64,
        /// Smallest squared radius to keep, as an exact fraction
        #[arg(long, default_value = "1/4", value_parser = parse_rational)]
        min_radius_sq: Rational,
        /// Largest point count for ideal-sheaf twists (default 2*mu)
        #[arg(long)]
        max_points: Option<u64>,
        /// Also write a concentric-semicircle diagram to this path
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Decide whether two spaces are isomorphic (exit 1 when they are not)
    #[command(allow_negative_numbers = true)]
    Iso {
        mu1: i64,
        chi1: i64,
        mu2: i64,
        chi2: i64,
    },
    /// Write one JSON report per isomorphism class with mu up to the bound
    Batch {
        mu_max: i64,
        /// Output path for the JSON-lines table
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    /// Bad input, unusable domain, or an I/O problem: exit 2.
    Domain(String),
    /// A cross-module invariant failed to hold: exit 3.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InternalInvariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Domain(format!("output: {e}"))
    }
}

/// Executes a parsed command, writing its report to `out`. Returns the
/// process exit code; failure messages go to stderr.
pub fn run(command: Command, out: &mut dyn Write) -> i32 {
    let outcome = match command {
        Command::Analyze { mu, chi, json } => cmd_analyze(mu, chi, json, out),
        Command::Walls {
            mu,
            chi,
            min_radius_sq,
            max_points,
            svg,
        } => cmd_walls(mu, chi, &min_radius_sq, max_points, svg.as_deref(), out),
        Command::Iso {
            mu1,
            chi1,
            mu2,
            chi2,
        } => cmd_iso(mu1, chi1, mu2, chi2, out),
        Command::Batch { mu_max, out: path } => cmd_batch(mu_max, &path, out),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            3
        }
    }
}

fn cmd_analyze(mu: i64, chi: i64, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = AnalysisReport::build(mu, chi)?;
    if json {
        let rendered = serde_json::to_string_pretty(&report)
            .map_err(|e| Failure::Internal(format!("report serialization: {e}")))?;
        writeln!(out, "{rendered}")?;
    } else {
        write!(out, "{}", text::render_analysis(&report))?;
    }
    Ok(0)
}

fn cmd_walls(
    mu: i64,
    chi: i64,
    min_radius_sq: &Rational,
    max_points: Option<u64>,
    svg_path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let space = ModuliSpace::new(mu, chi)?;
    let max_points = max_points.unwrap_or(2 * space.mu() as u64);
    let rows = enumerate_rank_one_walls(&space, min_radius_sq, max_points)?;
    let center = largest_wall(&space)?.wall.center;
    write!(out, "{}", text::render_walls(&space, &center, &rows))?;
    if let Some(path) = svg_path {
        let document = svg::render(&center, &rows);
        std::fs::write(path, document)
            .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    }
    Ok(0)
}

fn cmd_iso(mu1: i64, chi1: i64, mu2: i64, chi2: i64, out: &mut dyn Write) -> Result<i32, Failure> {
    let first = ModuliSpace::new(mu1, chi1)?;
    let second = ModuliSpace::new(mu2, chi2)?;
    match is_isomorphic(&first, &second) {
        IsoVerdict::Isomorphic(reason) => {
            let why = match reason {
                IsoReason::SmallMu => {
                    format!("mu = {} <= 2, every chi gives the same space", first.mu())
                }
                IsoReason::TwistCongruent => format!("chi' == chi (mod {})", first.mu()),
                IsoReason::DualCongruent => format!("chi' == -chi (mod {})", first.mu()),
            };
            writeln!(out, "isomorphic ({why})")?;
            Ok(0)
        }
        IsoVerdict::NotIsomorphic(reason) => {
            let why = match reason {
                NotIsoReason::DimensionMismatch => format!(
                    "dimension {} != {}",
                    first.dimension(),
                    second.dimension()
                ),
                NotIsoReason::ChiClassMismatch => {
                    format!("chi' != +-chi (mod {})", first.mu())
                }
            };
            writeln!(out, "not isomorphic ({why})")?;
            Ok(1)
        }
    }
}

fn cmd_batch(mu_max: i64, path: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    if !(3..=64).contains(&mu_max) {
        return Err(Failure::Domain(format!(
            "mu_max must be between 3 and 64, got {mu_max}"
        )));
    }
    let mut table = String::new();
    let mut rows = 0u32;
    for mu in 3..=mu_max {
        for chi in 0..=mu / 2 {
            let report = AnalysisReport::build(mu, chi)?;
            let line = serde_json::to_string(&report)
                .map_err(|e| Failure::Internal(format!("report serialization: {e}")))?;
            table.push_str(&line);
            table.push('\n');
            rows += 1;
        }
    }
    std::fs::write(path, table).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    writeln!(out, "wrote {rows} rows to {}", path.display())?;
    Ok(0)
}
