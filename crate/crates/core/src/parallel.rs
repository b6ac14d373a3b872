//! Chunked fast mode.
//!
//! The message is cut into fixed-size chunks, each keyed by its own
//! sub-password and encrypted as an independent stream. Chunk boundaries
//! depend only on the chunk size, so the ciphertext is identical whatever
//! the worker count.

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::cipher::{decrypt_stream, encrypt_stream};
use crate::dynamics::DynamicsParams;
use crate::error::{Error, Result};
use crate::schedule::{build_key_material, Password, PREHASH_LEN};

pub const DEFAULT_CHUNK_SIZE: usize = 64 * 1024;
pub const MIN_CHUNK_SIZE: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChunkPlan {
    pub message_len: usize,
    pub chunk_size: usize,
    pub chunk_count: usize,
}

impl ChunkPlan {
    /// Byte range of chunk `idx` within the plaintext.
    pub fn range(&self, idx: usize) -> std::ops::Range<usize> {
        let start = (idx * self.chunk_size).min(self.message_len);
        let end = (start + self.chunk_size).min(self.message_len);
        start..end
    }

    pub fn ranges(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        (0..self.chunk_count).map(|i| self.range(i))
    }
}

pub fn plan_chunks(message_len: usize, chunk_size: usize) -> Result<ChunkPlan> {
    if chunk_size < MIN_CHUNK_SIZE {
        return Err(Error::Config(format!("chunk size {chunk_size} below minimum {MIN_CHUNK_SIZE}")));
    }
    let chunk_count = message_len.div_ceil(chunk_size).max(1);
    Ok(ChunkPlan { message_len, chunk_size, chunk_count })
}

/// First 18 bytes of SHA-256(password ‖ index as u32 big-endian).
pub fn chunk_password(pw: &Password, index: u32) -> Password {
    let mut h = Sha256::new();
    h.update(pw.as_bytes());
    h.update(index.to_be_bytes());
    Password::new(&h.finalize()[..PREHASH_LEN]).expect("18-byte sub-password is always valid")
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    if workers == 0 {
        return Err(Error::Config("worker count must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))
}

fn chunk_index(idx: usize) -> Result<u32> {
    u32::try_from(idx).map_err(|_| Error::Config("too many chunks".into()))
}

/// Encrypts every chunk independently. Returns one ciphertext per chunk, in
/// order, each `16` bytes longer than its plaintext slice.
pub fn encrypt_parallel(
    plain: &[u8],
    pw: &Password,
    params: &DynamicsParams,
    chunk_size: usize,
    workers: usize,
) -> Result<Vec<Vec<u8>>> {
    let plan = plan_chunks(plain.len(), chunk_size)?;
    params.validate()?;
    let ranges: Vec<_> = plan.ranges().collect();
    pool(workers)?.install(|| {
        ranges
            .into_par_iter()
            .enumerate()
            .map(|(idx, range)| {
                let km = build_key_material(&chunk_password(pw, chunk_index(idx)?))?;
                encrypt_stream(&plain[range], &km, params)
            })
            .collect()
    })
}

/// Inverse of [`encrypt_parallel`]. An integrity failure names the lowest
/// failing chunk index.
pub fn decrypt_parallel(chunks: &[&[u8]], pw: &Password, params: &DynamicsParams, workers: usize) -> Result<Vec<u8>> {
    params.validate()?;
    let parts: Vec<Result<Vec<u8>>> = pool(workers)?.install(|| {
        chunks
            .par_iter()
            .enumerate()
            .map(|(idx, chunk)| {
                let km = build_key_material(&chunk_password(pw, chunk_index(idx)?))?;
                decrypt_stream(chunk, &km, params).map_err(|e| match e {
                    Error::Integrity { .. } => Error::Integrity { chunk: Some(idx) },
                    other => other,
                })
            })
            .collect()
    });
    let mut out = Vec::new();
    for part in parts {
        out.extend_from_slice(&part?);
    }
    Ok(out)
}
