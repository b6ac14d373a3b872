//! Statistical instruments for judging cipher output: byte histograms,
//! Shannon entropy, chi-square uniformity, 2D autocorrelation, Fourier power
//! spectra and bit-level difference ratios, plus PGM image I/O for feeding
//! and rendering them.

pub mod bits;
pub mod correlation;
pub mod error;
mod fft2;
pub mod histogram;
pub mod image;
pub mod matrix;
pub mod render;
pub mod spectrum;

pub use bits::bit_difference_ratio;
pub use correlation::{autocorrelation_matrix, max_off_origin};
pub use error::{AnalysisError, Result};
pub use histogram::{chi_square_uniformity, histogram, shannon_entropy, Histogram};
pub use image::{read_pgm, write_pgm, GrayImage};
pub use matrix::Matrix;
pub use spectrum::{power_spectrum, spectral_flatness, PowerSpectrum};
