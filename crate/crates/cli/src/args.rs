use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use subperiod_core::{SubtractionSet, DEFAULT_HORIZON_CAP};

#[derive(Debug, Parser)]
#[command(name = "subperiod", version, about = "Periods of subtraction games")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Longest sequence examined while searching for a period.
    #[arg(
        long,
        global = true,
        env = "SUBPERIOD_HORIZON_CAP",
        default_value_t = DEFAULT_HORIZON_CAP
    )]
    pub horizon_cap: usize,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqMode {
    Outcome,
    Grundy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremId {
    #[value(name = "1")]
    T1,
    #[value(name = "2")]
    T2,
    #[value(name = "3")]
    T3,
    #[value(name = "4")]
    T4,
    #[value(name = "eq1")]
    Eq1,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the outcome (P=0, N=1) or Grundy sequence.
    Seq {
        #[arg(long, value_parser = parse_set)]
        set: SubtractionSet,
        /// Number of positions.
        #[arg(long)]
        n: usize,
        #[arg(value_enum, default_value_t = SeqMode::Outcome)]
        mode: SeqMode,
    },
    /// Certified preperiod and period of the outcome sequence.
    Period {
        #[arg(long, value_parser = parse_set)]
        set: SubtractionSet,
    },
    /// Check a period formula against computed periods.
    Theorem {
        #[arg(long, value_enum)]
        id: TheoremId,
        /// Parameter range for theorems 1-3, e.g. `3..15`.
        #[arg(long, value_parser = parse_range)]
        k: Option<RangeInclusive<u32>>,
        /// Range of the base element `s` for theorem 4.
        #[arg(long, value_parser = parse_range)]
        s: Option<RangeInclusive<u32>>,
        /// Theorem 4 selectors k1,k2,..., each 0 or 1.
        #[arg(long, value_parser = parse_selectors, conflicts_with = "n")]
        selectors: Option<Selectors>,
        /// Theorem 4: try every selector list of this length.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_range)]
        s1: Option<RangeInclusive<u32>>,
        #[arg(long, value_parser = parse_range)]
        s2: Option<RangeInclusive<u32>>,
        /// Use the parity conditions exactly as originally printed
        /// (theorems 2, 3 and eq1).
        #[arg(long)]
        printed: bool,
    },
    /// Reproduce one of the four published period tables.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
    },
    /// Certified periods across a parametrised family such as `1,4,5k`.
    Scan {
        #[arg(long)]
        family: String,
        #[arg(long, value_parser = parse_range)]
        range: RangeInclusive<u32>,
    },
    /// Smallest winning move from a position.
    Move {
        #[arg(long, value_parser = parse_set)]
        set: SubtractionSet,
        #[arg(long)]
        pos: u64,
    },
}

fn parse_set(s: &str) -> Result<SubtractionSet, String> {
    s.parse().map_err(|e: subperiod_core::Error| e.to_string())
}

/// `A..B` and `A..=B` are inclusive; a bare `A` is `A..=A`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("invalid number {t:?} in range {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

/// Theorem 4 selector list; a newtype so clap treats it as one value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selectors(pub Vec<bool>);

fn parse_selectors(s: &str) -> Result<Selectors, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| match t.trim() {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(format!("selector must be 0 or 1, got {other:?}")),
        })
        .collect::<Result<_, _>>()
        .map(Selectors)
}
