//! The `hkr` command-line tool.

pub mod args;
pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use args::{Cli, Command, Format};
use cache::Cache;
use config::Config;
use error::CliError;

/// Parses `argv`, runs the command, writes the report to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match run_cli(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{}", e.message());
            e.exit_code()
        }
    }
}

fn run_cli(cli: &Cli, out: &mut impl Write) -> Result<u8, CliError> {
    let cfg = Config::from_args(&cli.global)?;
    if cfg.output_format == Format::Csv && !matches!(cli.command, Command::Rank(_)) {
        return Err(CliError::Usage("csv output is only available for `rank`".into()));
    }
    let mut cache = cfg.cache_path.as_deref().map(Cache::open);
    let report = commands::execute(&cli.command, &cfg, &mut cache)?;
    let text = match cfg.output_format {
        Format::Json => render::json(&report.payload),
        Format::Plain => match &report.plain {
            Some(text) if !cfg.verbose => text.clone(),
            _ => render::plain(&report.payload),
        },
        Format::Csv => match &report.csv {
            Some((header, rows)) => render::csv_table(header, rows)?,
            None => {
                return Err(CliError::Usage(
                    "this command has no table to print as CSV".into(),
                ))
            }
        },
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))?;
    Ok(if report.passed { 0 } else { 1 })
}
