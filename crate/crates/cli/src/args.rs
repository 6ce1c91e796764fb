use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qinfo_core::LogBase;

use crate::table::Format;

#[derive(Debug, Parser)]
#[command(
    name = "qinfo",
    version,
    about = "Entropy, retrievability and information loss reports"
)]
pub struct Cli {
    /// Output format: csv or json
    #[arg(long, global = true, default_value = "csv")]
    pub format: Format,
    /// Logarithm base: e or 2
    #[arg(long, global = true, default_value = "e")]
    pub base: LogBase,
    /// Write the table to PATH (truncated) instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Worker threads for per-row evaluation
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..=256))]
    pub jobs: u16,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Number of evenly spaced angles on the default range
    #[arg(long, conflicts_with = "theta", value_parser = clap::value_parser!(u32).range(1..=1_000_000))]
    pub points: Option<u32>,
    /// Explicit angles, comma separated; accepts pi, pi/N, K*pi/N
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub theta: Vec<String>,
    /// Read plain numeric angles as degrees
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Single qubit U3(θ,0)|0⟩ measured in the computational basis, θ ∈ [0, π]
    #[command(name = "sweep-1q")]
    SweepOneQubit(GridArgs),
    /// Φ+ measured at setting (θ, 0), θ ∈ [0, π/2]
    BellSweep(GridArgs),
    /// P(H,H') ≤ P(H',H'') + P(H,V'') for Φ+ or the maximally mixed state
    BellIneq {
        #[command(flatten)]
        grid: GridArgs,
        /// Use the two-qubit maximally mixed state instead of Φ+
        #[arg(long)]
        mms: bool,
    },
    /// Marginal entropies and extra entropy when results are not compared
    NoComm(GridArgs),
    /// Teleport a|0⟩ + b|1⟩ and account for Alice's information
    Teleport {
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = crate::parse::complex)]
        a: num_complex::Complex64,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = crate::parse::complex)]
        b: num_complex::Complex64,
    },
    /// GHZ_m with one qubit measured
    Ghz {
        #[arg(long, value_delimiter = ',', default_values_t = 3usize..=10)]
        m: Vec<usize>,
    },
    /// W_m with one qubit measured
    W {
        #[arg(long, value_delimiter = ',', default_values_t = 3usize..=12)]
        m: Vec<usize>,
    },
    /// Werner state entropy, retrievability and separability flags
    Werner {
        /// Mixing parameters; accepts p/q fractions and `vnei`
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Vec<String>,
    },
    /// Common minimal entanglement entropy gain and information loss
    Mee,
    /// Golden values and randomized identities
    Selftest {
        #[arg(long, hide = true, default_value_t = 0.0, allow_hyphen_values = true)]
        inject_entropy_offset: f64,
    },
}
