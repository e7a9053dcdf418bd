//! `pearcey`: evaluate the Pearcey integral, reproduce the relative-error
//! tables, dump expansion coefficients, and export Stokes-sector maps.

mod commands;
mod complex;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pearcey::{Complex64, PearceyError};

use complex::parse_complex;

#[derive(Parser)]
#[command(name = "pearcey", version, about = "Pearcey integral: asymptotics, quadrature, tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate P(x, y) at one point.
    Eval(EvalArgs),
    /// Reproduce a relative-error table.
    Table(TableArgs),
    /// Dump c_n(x) and A_n(x).
    Coeffs(CoeffsArgs),
    /// Sample arg y over [-pi/2, pi/2] and classify each direction.
    Map(MapArgs),
}

#[derive(Args)]
pub struct EvalArgs {
    /// Complex x, e.g. `1`, `-2+0.5i`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0")]
    pub x: Complex64,
    /// Complex y.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true,
          required_unless_present = "y_mod", conflicts_with_all = ["y_mod", "y_arg_pi"])]
    pub y: Option<Complex64>,
    /// |y|, used with --y-arg-pi.
    #[arg(long, requires = "y_arg_pi")]
    pub y_mod: Option<f64>,
    /// arg y in units of pi.
    #[arg(long, requires = "y_mod", allow_hyphen_values = true)]
    pub y_arg_pi: Option<f64>,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    /// Truncation order N (expansion through A_N).
    #[arg(long, default_value_t = pearcey::asymptotics::DEFAULT_ORDER)]
    pub order: usize,
    /// Oracle used when the method is quadrature.
    #[arg(long, value_enum, default_value_t = Oracle::Contour)]
    pub oracle: Oracle,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Asymptotic,
    Quadrature,
    /// Asymptotic for |y| >= 8, quadrature below.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Contour,
    RealAxis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub paper_table: u8,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Oracle::Contour)]
    pub oracle: Oracle,
}

#[derive(Args)]
pub struct CoeffsArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub x: Complex64,
    #[arg(long, default_value_t = 5)]
    pub max_order: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args)]
pub struct MapArgs {
    /// Number of equispaced directions, endpoints included.
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    pub grid_arg_steps: u32,
    #[arg(long, value_parser = parse_positive)]
    pub y_mod: f64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0")]
    pub x: Complex64,
    #[arg(long, default_value_t = pearcey::asymptotics::DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_positive(text: &str) -> Result<f64, String> {
    match text.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(v) => Err(format!("must be positive and finite, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

/// Failures, each mapped to a distinct exit status.
#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Io(String),
}

impl From<PearceyError> for CliError {
    fn from(e: PearceyError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(args) => commands::eval(&args),
        Command::Table(args) => commands::table(&args),
        Command::Coeffs(args) => commands::coeffs(&args),
        Command::Map(args) => commands::map(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Domain(msg) => eprintln!("error: {msg}"),
                CliError::Io(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
