//! `tatami`: count, classify and verify rectangle tilings.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
//! 3 count overflow, 4 enumeration budget exceeded.

mod commands;

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tatami::{ClassMode, Error, TileShape};

const DEFAULT_MAX_NODES: u64 = 100_000_000;

#[derive(Parser)]
#[command(
    name = "tatami",
    version,
    about = "Exact counts of rectangle tilings by a single tile shape"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of classified counts, one row per floor length.
    Table(TableArgs),
    /// Verify generating functions listed in a file.
    Gfcheck(GfcheckArgs),
    /// Rebuild a total count from slide-free counts over partitions of the width.
    Invert(FloorArgs),
    /// Count tilings with the profile dynamic program.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct Instance {
    /// Tile as AxB: A across the floor width, B along the floor length.
    #[arg(long, value_parser = parse_tile)]
    tile: TileShape,
    /// Floor width m.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    width: u64,
    /// Search-node budget for exhaustive enumeration.
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: u64,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    instance: Instance,
    /// Floor lengths, LO..HI inclusive, or a single length.
    #[arg(long, value_parser = parse_range)]
    length: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value_t = Classify::Tatami)]
    classify: Classify,
    /// Count one representative per symmetry class.
    #[arg(long)]
    incongruent: bool,
    #[arg(long, value_enum, default_value_t = Format::Aligned)]
    format: Format,
    /// Pad every row to at least this many class columns.
    #[arg(long)]
    columns: Option<usize>,
}

#[derive(Args)]
struct GfcheckArgs {
    /// File of generating-function blocks.
    spec: std::path::PathBuf,
    /// `computed` to enumerate per binding, or a CSV/JSON table path.
    #[arg(long, default_value = "computed")]
    data: String,
    /// Search-node budget per enumerated row.
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: u64,
}

#[derive(Args)]
struct FloorArgs {
    #[command(flatten)]
    instance: Instance,
    /// Floor length n.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    length: u64,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    floor: FloorArgs,
    /// Also enumerate and compare, within the node budget.
    #[arg(long)]
    validate: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Classify {
    Tatami,
    Slide,
}

impl From<Classify> for ClassMode {
    fn from(c: Classify) -> Self {
        match c {
            Classify::Tatami => ClassMode::Tatami,
            Classify::Slide => ClassMode::SlideLines,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Aligned,
    Csv,
    Json,
}

fn parse_tile(s: &str) -> Result<TileShape, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| -> Result<usize, String> {
        match t.trim().parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(format!("`{t}` is not a positive length")),
        }
    };
    let range = match s.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi)?,
        None => num(s)?..=num(s)?,
    };
    if range.is_empty() {
        return Err(format!("`{s}` is an empty range"));
    }
    Ok(range)
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    Mismatch,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Overflow(_) => 3,
        Error::BudgetExceeded { .. } => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(a) => commands::table(a),
        Command::Gfcheck(a) => commands::gfcheck(a),
        Command::Invert(a) => commands::invert(a),
        Command::Oracle(a) => commands::oracle(a),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("tatami: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
