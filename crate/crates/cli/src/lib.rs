//! Front end for the `threshold` binary. [`run`] is the whole program
//! minus process setup, so tests can drive it in-process.

pub mod args;
mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_FAILED: u8 = 2;

/// Parses `argv`, runs the subcommand and returns the exit status.
///
/// 0 when the command succeeded and every check passed, 2 when a check
/// failed or the input is not threshold, 1 for usage and input errors.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
            return code;
        }
    };

    let code = match commands::execute(&cli) {
        Ok(report) => match emit(&cli, &report.text, stdout) {
            Ok(()) => {
                if report.passed {
                    EXIT_OK
                } else {
                    EXIT_FAILED
                }
            }
            Err(msg) => {
                let _ = writeln!(stderr, "error: {msg}");
                EXIT_USAGE
            }
        },
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.exit_code()
        }
    };
    let _ = stdout.flush();
    code
}

fn emit(cli: &Cli, text: &str, stdout: &mut dyn Write) -> Result<(), String> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}
