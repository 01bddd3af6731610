//! Command-line front end for `toriclogk`.
//!
//! [`RunConfig::from_cli`] validates flags before anything is computed and
//! [`run`] produces the whole report in memory, so identical invocations give
//! byte-identical output.

pub mod args;
mod report;
pub mod svg;

use std::fmt;
use std::path::PathBuf;

use toriclogk::rational::{parse_rat, parse_rat_list};
use toriclogk::{builtins, Error, LatticePolytope, PolytopeFile, Rat};

pub use args::{Cli, CommandArgs, Format, Source};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    R,
    Futaki,
    Classify,
    Sweep,
    Oracle,
    Plot,
    P1conic,
}

impl Command {
    fn needs_polytope(self) -> bool {
        self != Command::P1conic
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    File(PathBuf),
    Builtin(String),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub input: Option<Input>,
    pub lambda: Option<Vec<Rat>>,
    pub beta: Option<Rat>,
    pub kmax: Option<u64>,
    pub alphas: Option<Vec<Rat>>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub color: bool,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad or missing flags.
    Usage(String),
    Domain(Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) | CliError::Domain(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Domain(e) => e.kind(),
            CliError::Io(_) => "Io",
        }
    }

    /// `{"error": kind, "message": text}`.
    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self.kind(), "message": self.to_string() }).to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_beta(s: &Option<String>) -> Result<Option<Rat>, CliError> {
    s.as_deref()
        .map(|b| parse_rat(b).map_err(|e| usage(format!("--beta: {e}"))))
        .transpose()
}

fn parse_vector(flag: &str, s: &Option<String>) -> Result<Option<Vec<Rat>>, CliError> {
    s.as_deref()
        .map(|v| parse_rat_list(v).map_err(|e| usage(format!("--{flag}: {e}"))))
        .transpose()
}

impl RunConfig {
    pub fn from_cli(cli: Cli, color: bool) -> Result<Self, CliError> {
        let mut cfg = RunConfig {
            command: Command::Check,
            input: None,
            lambda: None,
            beta: None,
            kmax: None,
            alphas: None,
            output: cli.output,
            format: cli.format,
            color,
        };
        let source = match cli.command {
            CommandArgs::Check(s) => s,
            CommandArgs::R(s) => {
                cfg.command = Command::R;
                s
            }
            CommandArgs::Futaki { source, lambda, beta } => {
                cfg.command = Command::Futaki;
                cfg.lambda = parse_vector("lambda", &lambda)?;
                cfg.beta = parse_beta(&beta)?;
                source
            }
            CommandArgs::Classify { source, beta } => {
                cfg.command = Command::Classify;
                cfg.beta = parse_beta(&beta)?;
                source
            }
            CommandArgs::Sweep(s) => {
                cfg.command = Command::Sweep;
                s
            }
            CommandArgs::Oracle { source, lambda, kmax } => {
                cfg.command = Command::Oracle;
                cfg.lambda = parse_vector("lambda", &lambda)?;
                cfg.kmax = kmax;
                source
            }
            CommandArgs::Plot { source, beta } => {
                cfg.command = Command::Plot;
                cfg.beta = parse_beta(&beta)?;
                source
            }
            CommandArgs::P1conic { alphas } => {
                cfg.command = Command::P1conic;
                cfg.alphas = parse_vector("alphas", &alphas)?;
                Source::default()
            }
        };
        cfg.input = match (source.input, source.builtin) {
            (Some(_), Some(_)) => return Err(usage("--input and --builtin are mutually exclusive")),
            (Some(p), None) => Some(Input::File(p)),
            (None, Some(b)) => Some(Input::Builtin(b)),
            (None, None) => None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Command-specific required flags.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.command.needs_polytope() && self.input.is_none() {
            return Err(usage("a polytope is required: pass --input FILE or --builtin NAME"));
        }
        let missing = match self.command {
            Command::Futaki | Command::Oracle if self.lambda.is_none() => Some("--lambda"),
            Command::Classify if self.beta.is_none() => Some("--beta"),
            Command::P1conic if self.alphas.is_none() => Some("--alphas"),
            _ => None,
        };
        if let Some(flag) = missing {
            return Err(usage(format!("{flag} is required for this command")));
        }
        if let Some(Input::Builtin(name)) = &self.input {
            if builtins::by_name(name).is_none() {
                return Err(usage(format!(
                    "unknown builtin `{name}`; expected one of {}",
                    builtins::NAMES.join(", ")
                )));
            }
        }
        Ok(())
    }
}

/// Exit code plus the text destined for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn failure(err: &CliError) -> Self {
        Outcome {
            code: err.exit_code(),
            stdout: String::new(),
            stderr: err.to_json() + "\n",
        }
    }
}

pub(crate) fn load_polytope(input: &Input) -> Result<(String, LatticePolytope), CliError> {
    match input {
        Input::Builtin(name) => {
            let p = builtins::by_name(name).ok_or_else(|| usage(format!("unknown builtin `{name}`")))?;
            Ok((name.clone(), p))
        }
        Input::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let file = PolytopeFile::parse(&text)?;
            let p = file.to_polytope()?;
            Ok((file.name, p))
        }
    }
}

/// Runs one command; the report goes to `output` when set, otherwise to stdout.
pub fn run(cfg: &RunConfig) -> Outcome {
    let body = match report::render(cfg) {
        Ok(body) => body,
        Err(e) => return Outcome::failure(&e),
    };
    match &cfg.output {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                code: 0,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::failure(&CliError::Io(format!("{}: {e}", path.display()))),
        },
        None => Outcome {
            code: 0,
            stdout: body,
            stderr: String::new(),
        },
    }
}
