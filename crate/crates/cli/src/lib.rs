//! Command-line front end: parses arguments, runs one scenario and writes a
//! CSV or JSON table.

mod args;
mod commands;
pub mod parse;
mod selftest;
pub mod table;

use std::fs::File;
use std::io::{BufWriter, Write};

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command};
pub use table::{format_real, Cell, Format, OutputTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl From<qinfo_core::Error> for Failure {
    fn from(e: qinfo_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn first_line(s: &str) -> &str {
    s.lines()
        .find(|l| !l.trim().is_empty())
        .unwrap_or("")
        .trim()
}

fn emit(cli: &Cli, body: &[u8], stdout: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Domain(e.to_string());
    match &cli.out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            w.write_all(body).map_err(io)?;
            w.flush().map_err(io)
        }
        None => stdout.write_all(body).map_err(io),
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if let Command::Selftest {
        inject_entropy_offset,
    } = cli.command
    {
        let suite = selftest::run(inject_entropy_offset);
        emit(cli, suite.render().as_bytes(), stdout)?;
        return Ok(if suite.passed() { EXIT_OK } else { EXIT_DOMAIN });
    }
    let table = commands::table(&cli.command, cli.base, cli.jobs.into())?;
    let mut body = Vec::new();
    table
        .write(cli.format, &mut body)
        .map_err(|e| Failure::Domain(e.to_string()))?;
    emit(cli, &body, stdout)?;
    Ok(EXIT_OK)
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
        Err(e) if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            let _ = writeln!(stderr, "error: missing subcommand (try --help)");
            return EXIT_USAGE;
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", first_line(&e.render().to_string()));
            return EXIT_USAGE;
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}
