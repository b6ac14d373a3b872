use rustfft::num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

/// In-place 2D FFT of a row-major `rows × cols` grid (unnormalised).
pub(crate) fn fft2(data: &mut [Complex64], rows: usize, cols: usize, direction: FftDirection) {
    debug_assert_eq!(data.len(), rows * cols);
    let mut planner = FftPlanner::new();

    let row_fft = planner.plan_fft(cols, direction);
    for row in data.chunks_exact_mut(cols) {
        row_fft.process(row);
    }

    let col_fft = planner.plan_fft(rows, direction);
    let mut column = vec![Complex64::default(); rows];
    for c in 0..cols {
        for (r, slot) in column.iter_mut().enumerate() {
            *slot = data[r * cols + c];
        }
        col_fft.process(&mut column);
        for (r, v) in column.iter().enumerate() {
            data[r * cols + c] = *v;
        }
    }
}
