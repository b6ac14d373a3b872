use std::path::Path;

use lzx_core::Password;

use crate::error::CliError;

pub const ENV_VAR: &str = "LZX_PASSWORD";
const WARN_BELOW: usize = 6;

/// Password from file, environment or prompt, in that order. Never taken
/// from the command line.
pub fn obtain(file: Option<&Path>, confirm: bool) -> Result<Password, CliError> {
    let raw = if let Some(path) = file {
        let text = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
        let line_end = text.iter().position(|&b| b == b'\n').unwrap_or(text.len());
        let mut line = text[..line_end].to_vec();
        if line.last() == Some(&b'\r') {
            line.pop();
        }
        line
    } else if let Some(v) = std::env::var_os(ENV_VAR) {
        v.into_encoded_bytes()
    } else {
        let first =
            rpassword::prompt_password("Password: ").map_err(|e| CliError::Io(format!("cannot read password: {e}")))?;
        if confirm {
            let again = rpassword::prompt_password("Confirm password: ")
                .map_err(|e| CliError::Io(format!("cannot read password: {e}")))?;
            if again != first {
                return Err(CliError::Usage("passwords do not match".into()));
            }
        }
        first.into_bytes()
    };
    if raw.len() < WARN_BELOW {
        eprintln!("warning: password shorter than {WARN_BELOW} bytes");
    }
    Password::new(raw).map_err(CliError::from)
}
