//! Byte-frequency statistics.

use crate::error::{AnalysisError, Result};

/// Minimum expected count per bin for the chi-square approximation.
const MIN_EXPECTED: u64 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    pub counts: [u64; 256],
    pub total: u64,
}

impl Histogram {
    pub fn frequency(&self, byte: u8) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.counts[usize::from(byte)] as f64 / self.total as f64
        }
    }
}

pub fn histogram(bytes: &[u8]) -> Histogram {
    let mut counts = [0u64; 256];
    for &b in bytes {
        counts[usize::from(b)] += 1;
    }
    Histogram { counts, total: bytes.len() as u64 }
}

/// Shannon entropy in bits per symbol; empty bins contribute nothing.
pub fn shannon_entropy(h: &Histogram) -> Result<f64> {
    if h.total == 0 {
        return Err(AnalysisError::EmptyInput);
    }
    let total = h.total as f64;
    let s: f64 = h
        .counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total;
            -p * p.log2()
        })
        .sum();
    // rounding can leave a uniform histogram a hair off the bounds
    Ok(s.clamp(0.0, 8.0))
}

/// Pearson statistic against the uniform distribution over 256 symbols.
pub fn chi_square_uniformity(h: &Histogram) -> Result<f64> {
    let needed = MIN_EXPECTED * 256;
    if h.total < needed {
        return Err(AnalysisError::InsufficientData { needed, got: h.total });
    }
    let expected = h.total as f64 / 256.0;
    Ok(h.counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum())
}
