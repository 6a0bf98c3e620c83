use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Linear-programming bounds for quantum codes.
#[derive(Debug, Parser)]
#[command(name = "qbound", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write the primary artifact (certificate, curve, table) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct LengthDistance {
    /// Code length.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4096))]
    pub n: u32,
    /// Minimum distance.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub w: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Singleton-type certificate: K <= 2^(n - 2w + 2).
    Singleton(LengthDistance),
    /// Hamming-type certificate built from P_e^2, e = (w - 1)/2.
    Hamming(LengthDistance),
    /// Exact enumerator LP: largest feasible K, or feasibility of one K.
    Lp {
        #[command(flatten)]
        params: LengthDistance,
        /// Check this dimension only.
        #[arg(long = "K", value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
    },
    /// Binary first-LP certificate bounding S.
    #[command(name = "lp1-binary")]
    Lp1Binary(LengthDistance),
    /// Certificate file operations.
    Cert {
        #[command(subcommand)]
        action: CertAction,
    },
    /// Bounds for mixed binary/quaternary group codes.
    Mixed {
        #[command(subcommand)]
        bound: MixedBound,
    },
    /// Bounds for stabilizer codes of type 4^k0 2^k1.
    Stabilizer {
        #[command(subcommand)]
        bound: StabilizerBound,
    },
    /// Tabulate an asymptotic exponent curve.
    Curve {
        /// One of hamming, gv, singleton, lp1_binary.
        id: String,
        #[arg(long = "delta-min", default_value_t = 0.0)]
        delta_min: f64,
        #[arg(long = "delta-max")]
        delta_max: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
    },
    /// Print the Krawtchouk table P_i(x).
    Kraw {
        /// Alphabet size, 2 or 4.
        #[arg(long)]
        q: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=256))]
        n: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum CertAction {
    /// Re-derive a certificate's bound from its coefficients.
    Verify { path: PathBuf },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct MixedParams {
    /// Number of binary-restricted coordinates.
    #[arg(long)]
    pub l: u32,
    /// Total length.
    #[arg(long)]
    pub n: u32,
    /// log2 of the number of codewords.
    #[arg(long)]
    pub k: u32,
}

#[derive(Debug, Subcommand)]
pub enum MixedBound {
    Plotkin(MixedParams),
    Hamming(MixedParams),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct StabilizerParams {
    #[arg(long)]
    pub n: u32,
    /// Quantum dimension exponent.
    #[arg(long, required_unless_present = "k0", conflicts_with = "k0")]
    pub k: Option<u32>,
    /// Number of quaternary generators of the type; gives k = n - 2k0 - k1.
    #[arg(long)]
    pub k0: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub k1: u32,
}

#[derive(Debug, Subcommand)]
pub enum StabilizerBound {
    Plotkin(StabilizerParams),
    Hamming(StabilizerParams),
}
