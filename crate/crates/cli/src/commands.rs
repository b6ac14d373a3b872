use std::fs;
use std::path::Path;
use std::time::Instant;

use lzx_analysis::{
    autocorrelation_matrix, chi_square_uniformity, histogram, max_off_origin, power_spectrum, read_pgm, render,
    shannon_entropy, spectral_flatness, write_pgm,
};
use lzx_bench::{render_csv, render_table, run_bench, BenchConfig};
use lzx_core::envelope::Mode;
use lzx_core::{open, seal, SealOptions};

use crate::args::{AnalyzeArgs, BenchArgs, DecryptArgs, EncryptArgs, ModeArg, SpectrumArgs};
use crate::error::CliError;
use crate::password;

const FAST_MODE_WARNING: &str = "warning: fast mode runs independent chunks with far fewer \
iterations per byte; it is faster but cryptographically weaker than strong mode";

/// Largest autocorrelation matrix side rendered by `analyze`.
const MAX_AUTOCORR_SIDE: usize = 256;

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, bytes: impl AsRef<[u8]>) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

fn default_workers(requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn mode_of(arg: ModeArg) -> Mode {
    match arg {
        ModeArg::Strong => Mode::Strong,
        ModeArg::Fast => Mode::Fast,
    }
}

pub fn encrypt(args: &EncryptArgs) -> Result<(), CliError> {
    let mode = mode_of(args.mode);
    if mode == Mode::Fast {
        eprintln!("{FAST_MODE_WARNING}");
    }
    let pw = password::obtain(args.password.password_file.as_deref(), true)?;
    let plain = read(&args.input)?;
    let opts = SealOptions {
        mode,
        n_it: args.n_it,
        dt_code: args.dt_code,
        chunk_size: args.chunk_size,
        workers: default_workers(args.workers),
    };
    let start = Instant::now();
    let sealed = seal(&plain, &pw, &opts)?;
    let elapsed = start.elapsed();
    write(&args.out, &sealed)?;
    let chunks = match mode {
        Mode::Strong => 1,
        Mode::Fast => lzx_core::plan_chunks(plain.len(), opts.chunk_size)?.chunk_count,
    };
    eprintln!(
        "encrypted {} bytes ({mode} mode, n_it {}, {chunks} chunk(s)) -> {} bytes in {:.3}s",
        plain.len(),
        opts.n_it(),
        sealed.len(),
        elapsed.as_secs_f64()
    );
    Ok(())
}

pub fn decrypt(args: &DecryptArgs) -> Result<(), CliError> {
    let sealed = read(&args.input)?;
    let pw = password::obtain(args.password.password_file.as_deref(), false)?;
    let start = Instant::now();
    let (header, plain) = open(&sealed, &pw, default_workers(args.workers))?;
    write(&args.out, &plain)?;
    eprintln!(
        "decrypted {} bytes ({} mode, n_it {}, {} chunk(s)) in {:.3}s; integrity verified",
        plain.len(),
        header.mode,
        header.n_it,
        header.chunk_count(),
        start.elapsed().as_secs_f64()
    );
    Ok(())
}

pub fn analyze(args: &AnalyzeArgs) -> Result<(), CliError> {
    let data = read(&args.input)?;
    let dir = &args.report_dir;
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;

    let h = histogram(&data);
    write(&dir.join("histogram.csv"), render::histogram_csv(&h))?;
    write(&dir.join("histogram.pgm"), write_pgm(&render::histogram_chart(&h, 128)))?;

    let mut summary = format!("file: {}\nbytes: {}\n", args.input.display(), data.len());
    match shannon_entropy(&h) {
        Ok(s) => summary += &format!("entropy_bits_per_byte: {s:.6}\n"),
        Err(e) => summary += &format!("entropy_bits_per_byte: n/a ({e})\n"),
    }
    match chi_square_uniformity(&h) {
        Ok(x) => summary += &format!("chi_square_255dof: {x:.3}\n"),
        Err(e) => summary += &format!("chi_square_255dof: n/a ({e})\n"),
    }

    let side = ((data.len() as f64).sqrt() as usize).min(MAX_AUTOCORR_SIDE);
    if side >= 2 {
        let m = autocorrelation_matrix(&data, side)?;
        summary +=
            &format!("autocorrelation_side: {side}\nautocorrelation_max_off_origin: {:.6}\n", max_off_origin(&m));
        write(&dir.join("autocorrelation.csv"), render::matrix_csv(&m))?;
        // lag (0, 0) sits in the centre of the rendering
        let shifted: Vec<f64> = (0..side * side)
            .map(|i| {
                let (r, c) = (i / side, i % side);
                m.get((r + side - side / 2) % side, (c + side - side / 2) % side)
            })
            .collect();
        write(&dir.join("autocorrelation.pgm"), write_pgm(&render::heatmap(&shifted, side, side)))?;
    }

    write(&dir.join("summary.txt"), &summary)?;
    print!("{summary}");
    Ok(())
}

pub fn spectrum(args: &SpectrumArgs) -> Result<(), CliError> {
    let img = read_pgm(&read(&args.input)?)?;
    let spec = power_spectrum(&img)?;
    write(&args.out, write_pgm(&spec.to_image()))?;
    println!(
        "spectrum {}x{} (padded from {}x{}), spectral flatness {:.4}",
        spec.width,
        spec.height,
        img.width,
        img.height,
        spectral_flatness(&spec)
    );
    Ok(())
}

pub fn bench(args: &BenchArgs) -> Result<(), CliError> {
    let cfg = BenchConfig {
        sizes: args.sizes.clone(),
        modes: args.modes.iter().copied().map(mode_of).collect(),
        workers: args.workers.clone(),
        repetitions: args.repetitions,
        strong_n_it: args.strong_nit,
        fast_n_it: args.fast_nit,
        chunk_size: args.chunk_size,
    };
    let report = run_bench(&cfg)?;
    print!("{}", render_table(&report));
    if let Some(path) = &args.csv {
        write(path, render_csv(&report))?;
    }
    Ok(())
}
