//! 2D circular autocorrelation of a byte stream folded into a square.

use rustfft::num_complex::Complex64;
use rustfft::FftDirection;

use crate::error::{AnalysisError, Result};
use crate::fft2::fft2;
use crate::matrix::Matrix;

/// Normalised circular autocorrelation of the first `side²` bytes, laid out
/// row-major as a `side × side` matrix. Entry `(u, v)` is the correlation at
/// lag `(u, v)`, with 1 at zero lag. A constant input has no variance; its
/// matrix is 1 at the origin and 0 elsewhere.
pub fn autocorrelation_matrix(bytes: &[u8], side: usize) -> Result<Matrix> {
    if side == 0 {
        return Err(AnalysisError::InvalidDimensions("side must be positive".into()));
    }
    let n = side * side;
    if bytes.len() < n {
        return Err(AnalysisError::InsufficientData { needed: n as u64, got: bytes.len() as u64 });
    }
    let block = &bytes[..n];
    let mean = block.iter().map(|&b| f64::from(b)).sum::<f64>() / n as f64;

    let mut out = Matrix::zeros(side, side);
    if block.iter().all(|&b| b == block[0]) {
        out.set(0, 0, 1.0);
        return Ok(out);
    }

    let mut grid: Vec<Complex64> = block.iter().map(|&b| Complex64::new(f64::from(b) - mean, 0.0)).collect();
    fft2(&mut grid, side, side, FftDirection::Forward);
    for v in grid.iter_mut() {
        *v = Complex64::new(v.norm_sqr(), 0.0);
    }
    fft2(&mut grid, side, side, FftDirection::Inverse);

    let zero_lag = grid[0].re;
    for (slot, v) in out.data.iter_mut().zip(&grid) {
        *slot = v.re / zero_lag;
    }
    out.data[0] = 1.0;
    Ok(out)
}

/// Largest `|value|` away from zero lag.
pub fn max_off_origin(m: &Matrix) -> f64 {
    m.data.iter().skip(1).fold(0.0, |acc, v| acc.max(v.abs()))
}
