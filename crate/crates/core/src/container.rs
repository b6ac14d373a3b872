//! Whole-message encryption into an envelope and back.

use crate::cipher::{decrypt_stream, encrypt_stream};
use crate::dynamics::DynamicsParams;
use crate::envelope::{dt_for_code, parse_envelope, write_envelope, EnvelopeHeader, Mode};
use crate::error::{Error, Result};
use crate::parallel::{decrypt_parallel, encrypt_parallel, DEFAULT_CHUNK_SIZE};
use crate::schedule::{build_key_material, Password};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SealOptions {
    pub mode: Mode,
    /// Defaults to 3000 (strong) or 100 (fast) when unset.
    pub n_it: Option<u32>,
    pub dt_code: u8,
    pub chunk_size: usize,
    pub workers: usize,
}

impl SealOptions {
    pub fn strong() -> Self {
        Self { mode: Mode::Strong, n_it: None, dt_code: 0, chunk_size: DEFAULT_CHUNK_SIZE, workers: 1 }
    }

    pub fn fast(workers: usize) -> Self {
        Self { mode: Mode::Fast, workers, ..Self::strong() }
    }

    pub fn n_it(&self) -> u32 {
        self.n_it.unwrap_or(match self.mode {
            Mode::Strong => DynamicsParams::STRONG_N_IT,
            Mode::Fast => DynamicsParams::FAST_N_IT,
        })
    }
}

/// Dynamics parameters encoded by a header.
pub fn params_for(header: &EnvelopeHeader) -> Result<DynamicsParams> {
    let dt = dt_for_code(header.dt_code).ok_or_else(|| Error::Format(format!("unknown dt code {}", header.dt_code)))?;
    let params = DynamicsParams::with_iterations(header.n_it).with_dt(dt);
    params.validate()?;
    Ok(params)
}

/// Encrypts `plain` and frames it as a version-1 envelope.
pub fn seal(plain: &[u8], pw: &Password, opts: &SealOptions) -> Result<Vec<u8>> {
    let chunk_size = match opts.mode {
        Mode::Strong => 0,
        Mode::Fast => u32::try_from(opts.chunk_size)
            .map_err(|_| Error::Config(format!("chunk size {} too large", opts.chunk_size)))?,
    };
    let header = EnvelopeHeader {
        mode: opts.mode,
        flags: 0,
        dt_code: opts.dt_code,
        n_it: opts.n_it(),
        chunk_size,
        payload_len: plain.len() as u64,
    };
    let params = params_for(&header)?;
    let chunks = match opts.mode {
        Mode::Strong => vec![encrypt_stream(plain, &build_key_material(pw)?, &params)?],
        Mode::Fast => encrypt_parallel(plain, pw, &params, opts.chunk_size, opts.workers)?,
    };
    Ok(write_envelope(&header, &chunks))
}

/// Parses, decrypts and integrity-checks an envelope.
pub fn open(bytes: &[u8], pw: &Password, workers: usize) -> Result<(EnvelopeHeader, Vec<u8>)> {
    let (header, ranges) = parse_envelope(bytes)?;
    let params = params_for(&header)?;
    let plain = match header.mode {
        Mode::Strong => decrypt_stream(&bytes[ranges[0].clone()], &build_key_material(pw)?, &params)?,
        Mode::Fast => {
            let chunks: Vec<&[u8]> = ranges.iter().map(|r| &bytes[r.clone()]).collect();
            decrypt_parallel(&chunks, pw, &params, workers)?
        }
    };
    Ok((header, plain))
}
