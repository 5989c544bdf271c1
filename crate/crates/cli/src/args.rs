use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rihahn::kernel::parse_rational;
use rihahn::Rational;

#[derive(Debug, Parser)]
#[command(
    name = "rihahn",
    version,
    about = "Exact tables and identity checks for R_I biorthogonal polynomials of Hahn type"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a family on the grid.
    Tabulate { target: TabulateTarget },
    /// Check an identity exactly.
    Verify { target: VerifyTarget },
    /// Limit transitions.
    Limit { target: LimitTarget },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TabulateTarget {
    #[value(name = "P")]
    P,
    #[value(name = "V")]
    V,
    Hahn,
    Weights,
    Monic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Gevp,
    Adjoint,
    Biorth,
    Hahn,
    Bridge,
    Christoffel,
    Recurrence,
    Difference,
    Shift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LimitTarget {
    Askey,
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct Opts {
    #[arg(long, global = true, value_parser = rational, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
    #[arg(long, global = true, value_parser = rational, allow_hyphen_values = true)]
    pub beta: Option<Rational>,
    #[arg(long = "N", global = true)]
    pub big_n: Option<u64>,
    #[arg(long, global = true, value_parser = rational, allow_hyphen_values = true)]
    pub xi: Option<Rational>,
    #[arg(long, global = true, value_parser = rational, allow_hyphen_values = true)]
    pub eta: Option<Rational>,
    /// Rational q in (0, 1).
    #[arg(long, global = true, value_parser = rational)]
    pub q: Option<Rational>,
    #[arg(long, global = true, value_parser = rational, allow_hyphen_values = true)]
    pub e: Option<Rational>,
    #[arg(long = "n-max", global = true)]
    pub n_max: Option<u64>,
    /// Defaults to csv for tables and json for reports.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout if absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 50)]
    pub trials: usize,
}
