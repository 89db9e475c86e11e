//! `subperiod`: outcome sequences, certified periods and formula checks for
//! subtraction games.
//!
//! Exit codes: 0 on success (and when every theorem record matches), 1 on
//! usage or computation errors, 2 when a theorem check finds a mismatch.

mod args;
mod commands;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{Context as _, Result};
use clap::error::ErrorKind;
use clap::Parser;
use subperiod_core::HorizonPolicy;

use args::{Cli, Command};
use commands::{Context, TheoremArgs};

fn run(cli: Cli) -> Result<u8> {
    let ctx = Context { format: cli.format, policy: HorizonPolicy::with_cap(cli.horizon_cap) };
    let mut buf = Vec::new();
    let code = match cli.command {
        Command::Seq { set, n, mode } => commands::seq(&ctx, &mut buf, &set, n, mode)?,
        Command::Period { set } => commands::period(&ctx, &mut buf, &set)?,
        Command::Theorem { id, k, s, selectors, n, s1, s2, printed } => {
            let selectors = selectors.map(|s| s.0);
            let a = TheoremArgs { id, k, s, selectors, n, s1, s2, printed };
            commands::theorem(&ctx, &mut buf, &a)?
        }
        Command::Table { id } => commands::table(&ctx, &mut buf, id)?,
        Command::Scan { family, range } => commands::scan(&ctx, &mut buf, &family, range)?,
        Command::Move { set, pos } => commands::r#move(&ctx, &mut buf, &set, pos)?,
    };
    match &cli.out {
        Some(path) => {
            let mut f = BufWriter::new(
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
            );
            f.write_all(&buf)?;
            f.flush()?;
        }
        None => io::stdout().lock().write_all(&buf)?,
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
