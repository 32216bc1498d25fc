//! Command-line flags.

use clap::{Args, Parser, Subcommand, ValueEnum};
use extrans::catalog::TransitionCase;
use extrans::transition_limits::CuspRep;

#[derive(Parser, Debug)]
#[command(
    name = "extrans",
    version,
    about = "Mirror maps, modular identities and cusp limits of local extremal transitions"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Significant decimal digits for floating-point values.
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u8).range(1..=17), global = true)]
    pub precision: u8,
    /// Tolerance for numeric comparisons in `verify`.
    #[arg(long, default_value_t = 1e-9, global = true)]
    pub tolerance: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Pf,
    Modular,
    Gw,
    Translation,
    RemarkTable,
    All,
}

fn parse_case(s: &str) -> Result<TransitionCase, String> {
    s.parse().map_err(|e: extrans::Error| e.to_string())
}

fn parse_cusp(s: &str) -> Result<CuspRep, String> {
    s.parse().map_err(|e: extrans::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Constants of one case, or of every case.
    Constants {
        #[arg(long, value_parser = parse_case)]
        d: Option<TransitionCase>,
    },
    /// Coefficients of f, g, Q(P) and the extremal function.
    Series {
        #[arg(long, value_parser = parse_case)]
        d: TransitionCase,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// The mirror map Q(P), its inverse P(Q), and u and θf/f.
    Mirror {
        #[arg(long, value_parser = parse_case)]
        d: TransitionCase,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// The extremal function as a combination of Eisenstein series.
    Eisenstein {
        #[arg(long, value_parser = parse_case)]
        d: TransitionCase,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Runs a verification battery; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// The limit of Q at a cusp, or along the real axis when the transition
    /// point is elliptic.
    Limit {
        #[arg(long, value_parser = parse_case)]
        d: TransitionCase,
        /// Cusp representative a/c; defaults to the transition point.
        #[arg(long, value_parser = parse_cusp)]
        cusp: Option<CuspRep>,
    },
    /// Images of the segments [0, s_max·e^{2πi/n}) for n = 1..=dirs under P
    /// and Q.
    Path {
        #[arg(long, value_parser = parse_case)]
        d: TransitionCase,
        #[arg(long, default_value_t = 12)]
        dirs: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0.97)]
        s_max: f64,
    },
}
