use std::path::Path;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    /// Integrity, format, password and dynamics failures.
    Crypto(String),
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn io(path: &Path, err: std::io::Error) -> Self {
        CliError::Io(format!("{}: {err}", path.display()))
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Crypto(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        })
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Crypto(m) | CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<lzx_core::Error> for CliError {
    fn from(e: lzx_core::Error) -> Self {
        match e {
            lzx_core::Error::Config(m) => CliError::Usage(m),
            lzx_core::Error::InvalidParams(m) => CliError::Usage(m.to_string()),
            lzx_core::Error::Integrity { .. } => {
                CliError::Crypto(format!("{e} (wrong password or corrupted ciphertext)"))
            }
            other => CliError::Crypto(other.to_string()),
        }
    }
}

impl From<lzx_analysis::AnalysisError> for CliError {
    fn from(e: lzx_analysis::AnalysisError) -> Self {
        CliError::Crypto(e.to_string())
    }
}

impl From<lzx_bench::BenchError> for CliError {
    fn from(e: lzx_bench::BenchError) -> Self {
        match e {
            lzx_bench::BenchError::Config(m) => CliError::Usage(m),
            other => CliError::Crypto(other.to_string()),
        }
    }
}
