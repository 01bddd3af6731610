use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::Parser;
use toriclogk_cli::{run, Cli, CliError, Outcome, RunConfig};

/// `TORICLOGK_COLOR` accepts `auto` (the default) or `never`.
fn color_enabled(to_file: bool) -> Result<bool, CliError> {
    match std::env::var("TORICLOGK_COLOR").as_deref() {
        Err(_) | Ok("auto") => Ok(!to_file && std::io::stdout().is_terminal()),
        Ok("never") => Ok(false),
        Ok(other) => Err(CliError::Usage(format!(
            "TORICLOGK_COLOR must be `auto` or `never`, got `{other}`"
        ))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Usage(e.to_string().trim_end().to_string());
            return emit(Outcome::failure(&err));
        }
    };
    let outcome = color_enabled(cli.output.is_some())
        .and_then(|color| RunConfig::from_cli(cli, color))
        .map(|cfg| run(&cfg))
        .unwrap_or_else(|e| Outcome::failure(&e));
    emit(outcome)
}

fn emit(o: Outcome) -> ExitCode {
    let _ = std::io::stdout().write_all(o.stdout.as_bytes());
    let _ = std::io::stderr().write_all(o.stderr.as_bytes());
    ExitCode::from(o.code as u8)
}
