//! CSV and PGM renderings of analysis results.

use std::fmt::Write;

use crate::histogram::Histogram;
use crate::image::GrayImage;
use crate::matrix::Matrix;

pub fn histogram_csv(h: &Histogram) -> String {
    let mut out = String::from("byte,count,frequency\n");
    for (byte, &count) in h.counts.iter().enumerate() {
        let _ = writeln!(out, "{byte},{count},{:.8}", h.frequency(byte as u8));
    }
    out
}

pub fn matrix_csv(m: &Matrix) -> String {
    let mut out = String::new();
    for row in m.data.chunks(m.cols) {
        let line: Vec<String> = row.iter().map(|v| format!("{v:.6}")).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Min-max scales `values` onto 0..=255. A flat field renders black.
pub fn heatmap(values: &[f64], width: usize, height: usize) -> GrayImage {
    let (lo, hi) = values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let span = hi - lo;
    let pixels = values.iter().map(|&v| if span > 0.0 { ((v - lo) / span * 255.0).round() as u8 } else { 0 }).collect();
    GrayImage { width, height, pixels }
}

/// Bar chart: one column per byte value, bar height proportional to count.
pub fn histogram_chart(h: &Histogram, height: usize) -> GrayImage {
    let peak = h.counts.iter().copied().max().unwrap_or(0).max(1) as f64;
    let mut pixels = vec![255u8; 256 * height];
    for (x, &count) in h.counts.iter().enumerate() {
        let bar = ((count as f64 / peak) * height as f64).round() as usize;
        for y in height - bar.min(height)..height {
            pixels[y * 256 + x] = 0;
        }
    }
    GrayImage { width: 256, height, pixels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::histogram::histogram;

    #[test]
    fn csv_shapes() {
        let csv = histogram_csv(&histogram(&[1, 1, 2]));
        assert_eq!(csv.lines().count(), 257);
        assert!(csv.contains("\n1,2,0.66666667\n"));

        let m = Matrix { rows: 2, cols: 2, data: vec![1.0, 0.5, -0.25, 0.0] };
        assert_eq!(matrix_csv(&m), "1.000000,0.500000\n-0.250000,0.000000\n");
    }

    #[test]
    fn heatmap_scales_to_full_range() {
        let img = heatmap(&[0.0, 1.0, 2.0, 4.0], 2, 2);
        assert_eq!(img.pixels, vec![0, 64, 128, 255]);
        assert_eq!(heatmap(&[3.0; 4], 2, 2).pixels, vec![0; 4]);
    }

    #[test]
    fn chart_bars() {
        let img = histogram_chart(&histogram(&[0, 0, 5]), 10);
        assert_eq!((img.width, img.height), (256, 10));
        assert_eq!(img.get(0, 0), 0);
        assert_eq!(img.get(5, 4), 255);
        assert_eq!(img.get(5, 5), 0);
        assert_eq!(img.get(7, 9), 255);
    }
}
