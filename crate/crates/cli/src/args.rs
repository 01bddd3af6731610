use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "toriclogk", version, about = "Log-K-stability of toric Fano varieties from reflexive polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,

    /// Report format (`plot` always writes SVG).
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Source {
    /// Polytope JSON file.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Built-in polytope: p2, bl1p2, bl2p2 or p1xp1.
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Validate a polytope and print its H-representation, volume and barycenter.
    Check(Source),
    /// The invariant R(X).
    R(Source),
    /// Classical and log-Futaki invariants along a direction.
    Futaki {
        #[command(flatten)]
        source: Source,
        /// Direction, e.g. `-1,2` or `1/2,1`.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        beta: Option<String>,
    },
    /// Stability verdict at one cone angle parameter.
    Classify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        beta: Option<String>,
    },
    /// Critical beta along every facet normal.
    Sweep(Source),
    /// Lattice-point oracle: weight tables and fitted expansion coefficients.
    Oracle {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        kmax: Option<u64>,
    },
    /// SVG diagram of a polygon with O, P_c, Q and optionally Q_beta.
    Plot {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        beta: Option<String>,
    },
    /// Marked points on the projective line.
    P1conic {
        /// Comma-separated cone parameters in (0, 1).
        #[arg(long, allow_hyphen_values = true)]
        alphas: Option<String>,
    },
}
