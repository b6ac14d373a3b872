//! Throughput harness.
//!
//! Every cell encrypts a fresh buffer of the requested size, checks that the
//! output decrypts back to the input, and only then records wall-clock
//! timings. The AES-128-CTR baseline runs over the same buffers.

use std::fmt::Write;
use std::time::Instant;

use aes::cipher::{KeyIvInit, StreamCipher};
use lzx_core::envelope::Mode;
use lzx_core::{open, seal, Password, SealOptions};
use thiserror::Error;

type Aes128Ctr = ctr::Ctr128BE<aes::Aes128>;

pub const MIN_SIZE: usize = 1024;
pub const MIN_REPETITIONS: usize = 3;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid bench configuration: {0}")]
    Config(String),
    #[error("round-trip check failed for {0}")]
    RoundTrip(String),
    #[error(transparent)]
    Cipher(#[from] lzx_core::Error),
}

/// What a row measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    Lorenz { mode: Mode, workers: usize },
    Aes128Ctr,
}

impl Subject {
    fn label(&self) -> String {
        match self {
            Subject::Lorenz { mode, .. } => mode.to_string(),
            Subject::Aes128Ctr => "aes-128-ctr".into(),
        }
    }

    fn workers(&self) -> usize {
        match self {
            Subject::Lorenz { workers, .. } => *workers,
            Subject::Aes128Ctr => 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub modes: Vec<Mode>,
    pub workers: Vec<usize>,
    pub repetitions: usize,
    pub strong_n_it: u32,
    pub fast_n_it: u32,
    pub chunk_size: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: vec![64 * 1024],
            modes: vec![Mode::Strong, Mode::Fast],
            workers: vec![1],
            repetitions: MIN_REPETITIONS,
            strong_n_it: lzx_core::DynamicsParams::STRONG_N_IT,
            fast_n_it: lzx_core::DynamicsParams::FAST_N_IT,
            chunk_size: lzx_core::parallel::DEFAULT_CHUNK_SIZE,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), BenchError> {
        if self.sizes.is_empty() || self.modes.is_empty() || self.workers.is_empty() {
            return Err(BenchError::Config("sizes, modes and workers must be non-empty".into()));
        }
        if let Some(s) = self.sizes.iter().find(|&&s| s < MIN_SIZE) {
            return Err(BenchError::Config(format!("size {s} below {MIN_SIZE} bytes")));
        }
        if self.repetitions < MIN_REPETITIONS {
            return Err(BenchError::Config(format!("at least {MIN_REPETITIONS} repetitions required")));
        }
        if self.workers.contains(&0) {
            return Err(BenchError::Config("worker counts must be positive".into()));
        }
        Ok(())
    }
}

/// Throughput in MB/s (10^6 bytes per second) over the repetitions.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub subject: Subject,
    pub size: usize,
    pub median_mbps: f64,
    pub min_mbps: f64,
    pub max_mbps: f64,
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn find(&self, subject: Subject, size: usize) -> Option<&BenchRow> {
        self.rows.iter().find(|r| r.subject == subject && r.size == size)
    }
}

fn test_buffer(size: usize) -> Vec<u8> {
    // cheap deterministic filler; content does not affect timing
    let mut state = 0x9E37_79B9_7F4A_7C15u64;
    (0..size)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 24) as u8
        })
        .collect()
}

fn summarize(subject: Subject, size: usize, mut mbps: Vec<f64>) -> BenchRow {
    mbps.sort_by(f64::total_cmp);
    let mid = mbps.len() / 2;
    let median = if mbps.len() % 2 == 1 { mbps[mid] } else { (mbps[mid - 1] + mbps[mid]) / 2.0 };
    BenchRow { subject, size, median_mbps: median, min_mbps: mbps[0], max_mbps: mbps[mbps.len() - 1] }
}

fn mbps(bytes: usize, secs: f64) -> f64 {
    bytes as f64 / 1e6 / secs.max(1e-9)
}

/// Measures encryption throughput of one Lorenz configuration.
pub fn measure_lorenz(
    size: usize,
    mode: Mode,
    workers: usize,
    repetitions: usize,
    opts: SealOptions,
) -> Result<BenchRow, BenchError> {
    let pw = Password::new("benchmark-password")?;
    let plain = test_buffer(size);
    let opts = SealOptions { mode, workers, ..opts };
    let mut samples = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let start = Instant::now();
        let sealed = seal(&plain, &pw, &opts)?;
        let elapsed = start.elapsed().as_secs_f64();
        let (_, recovered) = open(&sealed, &pw, workers)?;
        if recovered != plain {
            return Err(BenchError::RoundTrip(format!("{mode} mode, {size} bytes")));
        }
        samples.push(mbps(size, elapsed));
    }
    Ok(summarize(Subject::Lorenz { mode, workers }, size, samples))
}

pub fn measure_aes(size: usize, repetitions: usize) -> Result<BenchRow, BenchError> {
    let key = [0x42u8; 16];
    let iv = [0x24u8; 16];
    let plain = test_buffer(size);
    let mut samples = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let mut buf = plain.clone();
        let start = Instant::now();
        Aes128Ctr::new(&key.into(), &iv.into()).apply_keystream(&mut buf);
        let elapsed = start.elapsed().as_secs_f64();
        let mut check = buf;
        Aes128Ctr::new(&key.into(), &iv.into()).apply_keystream(&mut check);
        if check != plain {
            return Err(BenchError::RoundTrip(format!("aes-128-ctr, {size} bytes")));
        }
        samples.push(mbps(size, elapsed));
    }
    Ok(summarize(Subject::Aes128Ctr, size, samples))
}

/// Runs every `(size, mode, workers)` cell plus one AES row per size.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport, BenchError> {
    cfg.validate()?;
    let mut report = BenchReport::default();
    for &size in &cfg.sizes {
        for &mode in &cfg.modes {
            let n_it = match mode {
                Mode::Strong => cfg.strong_n_it,
                Mode::Fast => cfg.fast_n_it,
            };
            let opts = SealOptions { n_it: Some(n_it), chunk_size: cfg.chunk_size, ..SealOptions::strong() };
            for &workers in &cfg.workers {
                report.rows.push(measure_lorenz(size, mode, workers, cfg.repetitions, opts)?);
            }
        }
        report.rows.push(measure_aes(size, cfg.repetitions)?);
    }
    Ok(report)
}

/// Formats to three significant digits.
pub fn sig3(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (2 - magnitude).max(0) as usize;
    let factor = 10f64.powi(magnitude - 2);
    format!("{:.*}", decimals, (v / factor).round() * factor)
}

pub fn render_csv(report: &BenchReport) -> String {
    let mut out = String::from("subject,workers,size_bytes,median_mbps,min_mbps,max_mbps\n");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.subject.label(),
            r.subject.workers(),
            r.size,
            sig3(r.median_mbps),
            sig3(r.min_mbps),
            sig3(r.max_mbps)
        );
    }
    out
}

pub fn render_table(report: &BenchReport) -> String {
    let header = ["subject", "workers", "size (bytes)", "median MB/s"];
    let rows: Vec<[String; 4]> = report
        .rows
        .iter()
        .map(|r| [r.subject.label(), r.subject.workers().to_string(), r.size.to_string(), sig3(r.median_mbps)])
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: [&str; 4], out: &mut String| {
        let _ = writeln!(
            out,
            "{:<w0$}  {:>w1$}  {:>w2$}  {:>w3$}",
            cells[0],
            cells[1],
            cells[2],
            cells[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2],
            w3 = widths[3]
        );
    };
    line(header, &mut out);
    for row in &rows {
        line([&row[0], &row[1], &row[2], &row[3]], &mut out);
    }
    out
}
