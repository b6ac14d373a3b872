use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DISCLAIMER: &str = "\
Research cipher based on the Lorenz attractor. It has no security proof and \
has not been vetted; do not use it to protect real data.";

#[derive(Debug, Parser)]
#[command(name = "lzx", version, about = "Lorenz-attractor chaotic stream cipher", long_about = DISCLAIMER, after_help = DISCLAIMER)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encrypt a file into an lzx envelope
    Encrypt(EncryptArgs),
    /// Decrypt and verify an lzx envelope
    Decrypt(DecryptArgs),
    /// Byte statistics of any file: histogram, entropy, chi-square, autocorrelation
    Analyze(AnalyzeArgs),
    /// Log-scaled 2D Fourier power spectrum of a binary PGM image
    Spectrum(SpectrumArgs),
    /// Throughput of strong mode, fast mode and an AES-128-CTR baseline
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strong,
    Fast,
}

#[derive(Debug, Args)]
pub struct PasswordArgs {
    /// Read the password from the first line of this file (otherwise
    /// LZX_PASSWORD, otherwise an interactive prompt)
    #[arg(long, value_name = "PATH")]
    pub password_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EncryptArgs {
    pub input: PathBuf,
    #[arg(long, short, value_name = "PATH")]
    pub out: PathBuf,
    #[command(flatten)]
    pub password: PasswordArgs,
    #[arg(long, value_enum, default_value = "strong")]
    pub mode: ModeArg,
    /// Map iterations per byte (default 3000 strong, 100 fast)
    #[arg(long = "nit", value_name = "N")]
    pub n_it: Option<u32>,
    /// Integration step index: 0=0.01 1=0.005 2=0.001 3=0.02 4=0.027
    #[arg(long, value_name = "K", default_value_t = 0)]
    pub dt_code: u8,
    /// Fast-mode chunk size in bytes
    #[arg(long, value_name = "BYTES", default_value_t = lzx_core::parallel::DEFAULT_CHUNK_SIZE)]
    pub chunk_size: usize,
    /// Worker threads for fast mode (default: available parallelism)
    #[arg(long, env = "LZX_WORKERS", value_name = "N")]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DecryptArgs {
    pub input: PathBuf,
    #[arg(long, short, value_name = "PATH")]
    pub out: PathBuf,
    #[command(flatten)]
    pub password: PasswordArgs,
    #[arg(long, env = "LZX_WORKERS", value_name = "N")]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub input: PathBuf,
    /// Directory for CSV, PGM and summary outputs (created if missing)
    #[arg(long, value_name = "DIR")]
    pub report_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// Binary PGM (P5, maxval 255)
    pub input: PathBuf,
    #[arg(long, short, value_name = "PATH")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Buffer sizes in bytes
    #[arg(long, value_delimiter = ',', default_value = "65536")]
    pub sizes: Vec<usize>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "strong,fast")]
    pub modes: Vec<ModeArg>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub workers: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub repetitions: usize,
    #[arg(long, default_value_t = lzx_core::DynamicsParams::STRONG_N_IT)]
    pub strong_nit: u32,
    #[arg(long, default_value_t = lzx_core::DynamicsParams::FAST_N_IT)]
    pub fast_nit: u32,
    #[arg(long, default_value_t = lzx_core::parallel::DEFAULT_CHUNK_SIZE)]
    pub chunk_size: usize,
    /// Also write the full report as CSV
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
}
