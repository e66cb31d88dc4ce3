//! Command-line front end for the `whill` toolkit: every command renders a
//! table as CSV (with `#` metadata lines) or JSON.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod commands;
pub mod config;
pub mod error;
pub mod format;

pub use config::{Cli, Command, CommandName, Flags, Format, RunConfig};
pub use error::{exit, CliError};
pub use format::{fmt_num, Cell, Report};

/// Runs a validated configuration and renders it in the requested format.
pub fn render(cfg: &RunConfig) -> Result<String, CliError> {
    let report = commands::run(cfg)?;
    Ok(match cfg.format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    })
}

/// Parses, runs and writes the output; returns the process exit code.
pub fn main_with_args<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit::VALIDATION
            } else {
                exit::SUCCESS
            };
        }
    };
    let outcome = RunConfig::from_command(cli.command).and_then(|cfg| {
        let text = render(&cfg)?;
        match &cfg.out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    });
    match outcome {
        Ok(()) => exit::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
