//! Version-1 ciphertext container.
//!
//! ```text
//! offset  size  field
//!      0     4  magic "LZX1"
//!      4     1  version (1)
//!      5     1  mode (0 strong, 1 fast)
//!      6     1  flags (reserved, 0)
//!      7     1  dt code (index into DT_TABLE)
//!      8     4  n_it, u32 LE
//!     12     4  chunk size, u32 LE (0 in strong mode)
//!     16     8  payload length, u64 LE
//!     24     -  chunk ciphertexts in index order, each chunk_len + 16 bytes
//! ```

use std::ops::Range;

use crate::cipher::SENTINEL_LEN;
use crate::error::{Error, Result};
use crate::parallel::MIN_CHUNK_SIZE;

pub const MAGIC: &[u8; 4] = b"LZX1";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 24;

/// Integration steps addressable by the header's dt code.
pub const DT_TABLE: [f64; 5] = [0.01, 0.005, 0.001, 0.02, 0.027];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Strong,
    Fast,
}

impl Mode {
    pub fn code(self) -> u8 {
        match self {
            Mode::Strong => 0,
            Mode::Fast => 1,
        }
    }

    pub fn from_code(code: u8) -> Option<Mode> {
        match code {
            0 => Some(Mode::Strong),
            1 => Some(Mode::Fast),
            _ => None,
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Strong => "strong",
            Mode::Fast => "fast",
        })
    }
}

pub fn dt_for_code(code: u8) -> Option<f64> {
    DT_TABLE.get(usize::from(code)).copied()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnvelopeHeader {
    pub mode: Mode,
    pub flags: u8,
    pub dt_code: u8,
    pub n_it: u32,
    pub chunk_size: u32,
    pub payload_len: u64,
}

impl EnvelopeHeader {
    pub fn validate(&self) -> Result<()> {
        if self.flags != 0 {
            return Err(Error::Format(format!("reserved flags set: {:#04x}", self.flags)));
        }
        if dt_for_code(self.dt_code).is_none() {
            return Err(Error::Format(format!("unknown dt code {}", self.dt_code)));
        }
        if self.n_it == 0 {
            return Err(Error::Format("n_it is zero".into()));
        }
        match self.mode {
            Mode::Strong if self.chunk_size != 0 => Err(Error::Format("strong mode requires chunk size 0".into())),
            Mode::Fast if (self.chunk_size as usize) < MIN_CHUNK_SIZE => {
                Err(Error::Format(format!("fast-mode chunk size {} below {MIN_CHUNK_SIZE}", self.chunk_size)))
            }
            _ => Ok(()),
        }
    }

    pub fn chunk_count(&self) -> u64 {
        match self.mode {
            Mode::Strong => 1,
            Mode::Fast => self.payload_len.div_ceil(u64::from(self.chunk_size)).max(1),
        }
    }

    /// Plaintext bytes carried by each chunk, in order.
    fn chunk_payloads(&self) -> impl Iterator<Item = u64> + '_ {
        let size = match self.mode {
            Mode::Strong => self.payload_len.max(1),
            Mode::Fast => u64::from(self.chunk_size),
        };
        (0..self.chunk_count()).map(move |i| {
            let start = i.saturating_mul(size);
            self.payload_len.saturating_sub(start).min(size)
        })
    }

    /// `payload_len + 16 * chunk_count`, or `None` on overflow.
    pub fn body_len(&self) -> Option<u64> {
        (SENTINEL_LEN as u64).checked_mul(self.chunk_count())?.checked_add(self.payload_len)
    }

    pub fn to_bytes(&self) -> [u8; HEADER_LEN] {
        let mut out = [0u8; HEADER_LEN];
        out[0..4].copy_from_slice(MAGIC);
        out[4] = VERSION;
        out[5] = self.mode.code();
        out[6] = self.flags;
        out[7] = self.dt_code;
        out[8..12].copy_from_slice(&self.n_it.to_le_bytes());
        out[12..16].copy_from_slice(&self.chunk_size.to_le_bytes());
        out[16..24].copy_from_slice(&self.payload_len.to_le_bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < HEADER_LEN {
            return Err(Error::Truncation { expected: HEADER_LEN as u64, actual: bytes.len() as u64 });
        }
        if &bytes[0..4] != MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        if bytes[4] != VERSION {
            return Err(Error::Format(format!("unsupported version {}", bytes[4])));
        }
        let mode = Mode::from_code(bytes[5]).ok_or_else(|| Error::Format(format!("unknown mode {}", bytes[5])))?;
        let header = EnvelopeHeader {
            mode,
            flags: bytes[6],
            dt_code: bytes[7],
            n_it: u32::from_le_bytes(bytes[8..12].try_into().unwrap()),
            chunk_size: u32::from_le_bytes(bytes[12..16].try_into().unwrap()),
            payload_len: u64::from_le_bytes(bytes[16..24].try_into().unwrap()),
        };
        header.validate()?;
        Ok(header)
    }
}

/// Serializes header and chunk ciphertexts.
pub fn write_envelope<C: AsRef<[u8]>>(header: &EnvelopeHeader, chunks: &[C]) -> Vec<u8> {
    let body: usize = chunks.iter().map(|c| c.as_ref().len()).sum();
    let mut out = Vec::with_capacity(HEADER_LEN + body);
    out.extend_from_slice(&header.to_bytes());
    for c in chunks {
        out.extend_from_slice(c.as_ref());
    }
    out
}

/// Validates the header and returns the byte range of every chunk within
/// `bytes`.
pub fn parse_envelope(bytes: &[u8]) -> Result<(EnvelopeHeader, Vec<Range<usize>>)> {
    let header = EnvelopeHeader::from_bytes(bytes)?;
    let actual = bytes.len() as u64;
    let expected = header
        .body_len()
        .and_then(|b| b.checked_add(HEADER_LEN as u64))
        .ok_or_else(|| Error::Format("declared payload length overflows".into()))?;
    if expected != actual {
        return Err(Error::Truncation { expected, actual });
    }
    let mut offset = HEADER_LEN;
    let mut ranges = Vec::new();
    for payload in header.chunk_payloads() {
        // bounded by the length check above
        let len = payload as usize + SENTINEL_LEN;
        ranges.push(offset..offset + len);
        offset += len;
    }
    Ok((header, ranges))
}
