//! 2D Fourier power spectra.

use rustfft::num_complex::Complex64;
use rustfft::FftDirection;

use crate::error::{AnalysisError, Result};
use crate::fft2::fft2;
use crate::image::GrayImage;

pub const MIN_DIMENSION: usize = 8;

/// Linear power `|F(k)|² / N²` on the zero-padded grid, shifted so that DC
/// sits at `(width / 2, height / 2)`. With this scaling the powers sum to the
/// mean squared value of the padded image.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSpectrum {
    pub width: usize,
    pub height: usize,
    pub power: Vec<f64>,
}

impl PowerSpectrum {
    pub fn dc_index(&self) -> (usize, usize) {
        (self.width / 2, self.height / 2)
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.power[y * self.width + x]
    }

    pub fn total(&self) -> f64 {
        self.power.iter().sum()
    }

    /// `ln(1 + P)` per bin, for display.
    pub fn log_scaled(&self) -> Vec<f64> {
        self.power.iter().map(|p| p.ln_1p()).collect()
    }

    /// Grayscale rendering of the log spectrum, min-max scaled.
    pub fn to_image(&self) -> GrayImage {
        crate::render::heatmap(&self.log_scaled(), self.width, self.height)
    }

    /// Averages non-overlapping `block × block` tiles (dimensions must be
    /// divisible by `block`).
    pub fn smoothed(&self, block: usize) -> Result<PowerSpectrum> {
        if block == 0 || !self.width.is_multiple_of(block) || !self.height.is_multiple_of(block) {
            return Err(AnalysisError::InvalidDimensions(format!(
                "block {block} does not tile {}x{}",
                self.width, self.height
            )));
        }
        let (w, h) = (self.width / block, self.height / block);
        let mut power = vec![0.0; w * h];
        for y in 0..self.height {
            for x in 0..self.width {
                power[(y / block) * w + x / block] += self.get(x, y);
            }
        }
        let area = (block * block) as f64;
        power.iter_mut().for_each(|p| *p /= area);
        Ok(PowerSpectrum { width: w, height: h, power })
    }
}

pub fn power_spectrum(img: &GrayImage) -> Result<PowerSpectrum> {
    if img.width < MIN_DIMENSION || img.height < MIN_DIMENSION {
        return Err(AnalysisError::InvalidDimensions(format!(
            "{}x{} is below the {MIN_DIMENSION}x{MIN_DIMENSION} minimum",
            img.width, img.height
        )));
    }
    let (w, h) = (img.width.next_power_of_two(), img.height.next_power_of_two());
    let mut grid = vec![Complex64::default(); w * h];
    for y in 0..img.height {
        for x in 0..img.width {
            grid[y * w + x] = Complex64::new(f64::from(img.get(x, y)), 0.0);
        }
    }
    fft2(&mut grid, h, w, FftDirection::Forward);

    let norm = ((w * h) as f64).powi(2);
    let mut power = vec![0.0; w * h];
    for ky in 0..h {
        for kx in 0..w {
            let sy = (ky + h / 2) % h;
            let sx = (kx + w / 2) % w;
            power[sy * w + sx] = grid[ky * w + kx].norm_sqr() / norm;
        }
    }
    Ok(PowerSpectrum { width: w, height: h, power })
}

/// Ratio of geometric to arithmetic mean of every non-DC bin. White noise
/// gives about `e^-γ ≈ 0.56` on a raw periodogram; smoothing first pushes
/// it towards 1.
pub fn spectral_flatness(spec: &PowerSpectrum) -> f64 {
    let (dx, dy) = spec.dc_index();
    let dc = dy * spec.width + dx;
    let bins: Vec<f64> = spec.power.iter().enumerate().filter(|&(i, _)| i != dc).map(|(_, &p)| p).collect();
    let n = bins.len() as f64;
    let arith = bins.iter().sum::<f64>() / n;
    if arith == 0.0 {
        return 0.0;
    }
    let log_geo = bins.iter().map(|p| p.ln()).sum::<f64>() / n;
    log_geo.exp() / arith
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_image_is_pure_dc() {
        let img = GrayImage::new(16, 16, vec![100; 256]).unwrap();
        let spec = power_spectrum(&img).unwrap();
        let (dx, dy) = spec.dc_index();
        assert!((spec.get(dx, dy) - 10_000.0).abs() < 1e-9);
        let rest: f64 = spec.total() - spec.get(dx, dy);
        assert!(rest.abs() < 1e-9);
    }

    #[test]
    fn padding_to_powers_of_two() {
        let img = GrayImage::new(10, 9, vec![1; 90]).unwrap();
        let spec = power_spectrum(&img).unwrap();
        assert_eq!((spec.width, spec.height), (16, 16));
    }

    #[test]
    fn rejects_tiny_images() {
        let img = GrayImage::new(4, 16, vec![0; 64]).unwrap();
        assert!(power_spectrum(&img).is_err());
    }

    #[test]
    fn smoothing_preserves_mean() {
        let pixels: Vec<u8> = (0..1024u32).map(|i| (i * 97 % 256) as u8).collect();
        let spec = power_spectrum(&GrayImage::new(32, 32, pixels).unwrap()).unwrap();
        let s = spec.smoothed(4).unwrap();
        assert_eq!((s.width, s.height), (8, 8));
        assert!((s.total() * 16.0 - spec.total()).abs() < 1e-6 * spec.total());
        assert!(spec.smoothed(5).is_err());
    }
}
