//! End-to-end acceptance checks. Each test prints one `[AC-n] PASS|FAIL` line
//! before asserting, so `-- --show-output` gives a compact scoreboard.

use std::time::{Duration, Instant};

use lzx_analysis::{bit_difference_ratio, chi_square_uniformity, histogram, shannon_entropy};
use lzx_core::cipher::{decrypt_stream, encrypt_stream, extract_byte, ChainState};
use lzx_core::dynamics::{iterate, DynamicsParams, LorenzState};
use lzx_core::parallel::{chunk_password, encrypt_parallel};
use lzx_core::schedule::{build_key_material, normalize, pack_password, KeyMaterial, Password};
use lzx_core::{open, seal, Error, SealOptions};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const BOOK: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../testdata/paradise_lost.txt");
const GOLDEN: &str = include_str!("../../core/tests/data/golden_trajectory.txt");
const KIB: usize = 1024;

fn verdict(id: &str, ok: bool, detail: String) {
    println!("[{id}] {}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{id} failed: {detail}");
}

fn book() -> Vec<u8> {
    std::fs::read(BOOK).expect("book fixture missing")
}

fn km(pw: &[u8]) -> KeyMaterial {
    build_key_material(&Password::new(pw).unwrap()).unwrap()
}

fn random_password(rng: &mut StdRng) -> Vec<u8> {
    let len = rng.random_range(3..=32);
    (0..len).map(|_| rng.random()).collect()
}

fn strong_ciphertext(plain: &[u8], pw: &[u8]) -> Vec<u8> {
    encrypt_stream(plain, &km(pw), &DynamicsParams::strong()).unwrap()
}

#[test]
fn ac01_round_trip() {
    let mut rng = StdRng::seed_from_u64(0xac01);
    let start = Instant::now();
    let mut failures = 0;
    for i in 0..1000 {
        let pw = Password::new(random_password(&mut rng)).unwrap();
        let len = rng.random_range(0..=4096);
        let msg: Vec<u8> = (0..len).map(|_| rng.random()).collect();
        for opts in [
            SealOptions { n_it: Some(200), ..SealOptions::strong() },
            SealOptions { chunk_size: 1024, ..SealOptions::fast(1 + i % 4) },
        ] {
            let sealed = seal(&msg, &pw, &opts).unwrap();
            match open(&sealed, &pw, 1 + i % 3) {
                Ok((_, plain)) if plain == msg => {}
                _ => failures += 1,
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "AC-1",
        failures == 0 && elapsed < Duration::from_secs(120),
        format!("2000 round-trips, {failures} mismatches, {:.1} s (limit 120 s)", elapsed.as_secs_f64()),
    );
}

#[test]
fn ac02_ciphertext_entropy() {
    let plain = &book()[..100 * KIB];
    let c = strong_ciphertext(plain, b"entropy check");
    let s = shannon_entropy(&histogram(&c[..plain.len()])).unwrap();
    verdict("AC-2", s >= 7.99, format!("ciphertext entropy {s:.5} bits/byte (need >= 7.99)"));
}

#[test]
fn ac03_plaintext_entropy() {
    let plain = book();
    let s = shannon_entropy(&histogram(&plain)).unwrap();
    verdict(
        "AC-3",
        plain.len() >= 200 * KIB && (4.0..=5.0).contains(&s),
        format!("book of {} bytes has entropy {s:.4} (need 4.0..=5.0)", plain.len()),
    );
}

#[test]
fn ac04_histogram_uniformity() {
    let plain = &book()[..100 * KIB];
    let c = strong_ciphertext(plain, b"uniform histogram");
    let chi = chi_square_uniformity(&histogram(&c[..plain.len()])).unwrap();
    verdict("AC-4", chi < 311.0, format!("chi-square {chi:.1} over 255 dof (need < 311)"));
}

#[test]
fn ac05_key_sensitivity() {
    let plain = &book()[..100 * KIB];
    let a = strong_ciphertext(plain, b"123456");
    let b = strong_ciphertext(plain, b"123457");
    let ratio = bit_difference_ratio(&a, &b).unwrap();
    verdict("AC-5", (ratio - 0.5).abs() <= 0.02, format!("bit-difference ratio {ratio:.4} (need 0.50 +/- 0.02)"));
}

#[test]
fn ac06_integrity() {
    let params = DynamicsParams::strong();
    let k = km(b"integrity key");
    let mut rng = StdRng::seed_from_u64(0xac06);
    let msg: Vec<u8> = (0..KIB).map(|_| rng.random()).collect();
    let c = encrypt_stream(&msg, &k, &params).unwrap();

    let (mut rejected, mut differing, mut total) = (0, 0usize, 0usize);
    for _ in 0..100 {
        let pos = rng.random_range(0..c.len());
        let mut bad = c.clone();
        bad[pos] ^= rng.random_range(1..=255u8);
        if decrypt_stream(&bad, &k, &params) == Err(Error::Integrity { chunk: None }) {
            rejected += 1;
        }
        // replay the rejected decryption to see what it would have produced
        let mut chain = ChainState::new(&k);
        for (i, &byte) in bad.iter().enumerate().take(msg.len()) {
            let p = chain.decode_byte(byte);
            if i > pos {
                total += 1;
                differing += usize::from(p != msg[i]);
            }
            chain.advance(p, &params).unwrap();
        }
    }
    let ratio = differing as f64 / total as f64;
    verdict(
        "AC-6",
        rejected == 100 && ratio >= 0.95,
        format!("{rejected}/100 corruptions rejected, {ratio:.4} of later bytes garbled (need 100, >= 0.95)"),
    );
}

#[test]
fn ac07_block_patterns() {
    let block: Vec<u8> = (0..64u8).map(|b| b.wrapping_mul(37)).collect();
    let msg = block.repeat(16);
    let c = strong_ciphertext(&msg, b"repeated blocks");
    let blocks: Vec<&[u8]> = c[..msg.len()].chunks(64).collect();
    let mut collisions = 0;
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            collisions += usize::from(blocks[i] == blocks[j]);
        }
    }
    verdict("AC-7", collisions == 0, format!("{collisions} equal pairs among 16 ciphertext blocks"));
}

#[test]
fn ac08_keystream_uniformity() {
    let params = DynamicsParams::strong();
    let mut chain = ChainState::new(&km(b"keystream bytes"));
    let mut rng = StdRng::seed_from_u64(0xac08);
    let mut counts = [0u32; 256];
    for _ in 0..100_000 {
        counts[usize::from(extract_byte(chain.alpha[0], chain.omega[0]))] += 1;
        chain.advance(rng.random(), &params).unwrap();
    }
    let max = f64::from(*counts.iter().max().unwrap());
    let min = f64::from(*counts.iter().min().unwrap());
    let ratio = if min > 0.0 { max / min } else { f64::INFINITY };
    verdict("AC-8", ratio < 1.5, format!("max/min bin ratio {ratio:.3} over 1e5 bytes (need < 1.5)"));
}

#[test]
fn ac09_parallel_determinism() {
    let params = DynamicsParams::fast();
    let pw = Password::new("parallel determinism").unwrap();
    let mut rng = StdRng::seed_from_u64(0xac09);
    let msg: Vec<u8> = (0..300 * KIB + 17).map(|_| rng.random()).collect();
    let outputs: Vec<_> =
        [1, 2, 8].iter().map(|&w| encrypt_parallel(&msg, &pw, &params, 64 * KIB, w).unwrap()).collect();
    let invariant = outputs.windows(2).all(|w| w[0] == w[1]);

    let short = &msg[..5000];
    let single = encrypt_parallel(short, &pw, &params, 64 * KIB, 4).unwrap();
    let oracle = encrypt_stream(short, &build_key_material(&chunk_password(&pw, 0)).unwrap(), &params).unwrap();
    let equivalent = single.len() == 1 && single[0] == oracle;
    verdict(
        "AC-9",
        invariant && equivalent,
        format!("workers 1/2/8 identical: {invariant}; single chunk equals sequential cipher: {equivalent}"),
    );
}

fn parallel_throughput(msg: &[u8], pw: &Password, workers: usize) -> f64 {
    let params = DynamicsParams::fast();
    let start = Instant::now();
    let out = encrypt_parallel(msg, pw, &params, 64 * KIB, workers).unwrap();
    let secs = start.elapsed().as_secs_f64();
    assert_eq!(out.len(), msg.len().div_ceil(64 * KIB));
    msg.len() as f64 / secs / 1e6
}

#[test]
fn ac10_parallel_speedup() {
    let cores = std::thread::available_parallelism().map_or(1, usize::from);
    let pw = Password::new("speedup").unwrap();
    let msg = vec![0x5au8; 8 * KIB * KIB];
    let one = parallel_throughput(&msg, &pw, 1);
    let four = parallel_throughput(&msg, &pw, 4);
    let speedup = four / one;
    verdict(
        "AC-10",
        cores >= 4 && speedup >= 3.0,
        format!(
            "8 MiB fast mode: {one:.3} MB/s at 1 worker, {four:.3} MB/s at 4, speedup {speedup:.2}x \
             (need >= 3.0x on >= 4 cores; this host exposes {cores})"
        ),
    );
}

fn golden_states() -> Vec<[u64; 3]> {
    GOLDEN
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let w: Vec<u64> = l.split_whitespace().map(|w| u64::from_str_radix(w, 16).unwrap()).collect();
            [w[0], w[1], w[2]]
        })
        .collect()
}

#[test]
fn ac11a_golden_trajectory() {
    let golden = golden_states();
    let params = DynamicsParams::strong();
    let mut s = LorenzState::new(1.0, 1.0, 1.0);
    let mut first_bad = None;
    for (k, expected) in golden.iter().enumerate() {
        s = iterate(s, &params, 1).unwrap();
        if s.to_bits() != *expected && first_bad.is_none() {
            first_bad = Some(k + 1);
        }
    }
    verdict(
        "AC-11a",
        golden.len() == 100 && first_bad.is_none(),
        format!("{} golden states, first mismatch at {first_bad:?}", golden.len()),
    );
}

#[test]
fn ac11b_sensitive_dependence() {
    const HORIZON: u32 = 2000;
    let params = DynamicsParams::strong();
    let mut rng = StdRng::seed_from_u64(0xac11);
    let mut separated = 0;
    let mut steps = Vec::new();
    for _ in 0..100 {
        let mut a =
            LorenzState::new(rng.random_range(-15.0..15.0), rng.random_range(-15.0..15.0), rng.random_range(5.0..45.0));
        let mut b = LorenzState::new(a.x + 1e-10, a.y, a.z);
        for n in 1..=HORIZON {
            a = iterate(a, &params, 1).unwrap();
            b = iterate(b, &params, 1).unwrap();
            if a.distance(&b) > 1.0 {
                separated += 1;
                steps.push(n);
                break;
            }
        }
    }
    let slowest = steps.iter().max().copied().unwrap_or(0);
    verdict(
        "AC-11b",
        separated == 100,
        format!("{separated}/100 seeds separate past 1.0 within {HORIZON} steps (slowest that did: {slowest})"),
    );
}

#[test]
fn ac12_key_schedule_values() {
    // (password, packed a, normalized a', selectors mu), all by hand
    type Case = (&'static str, [u64; 3], [f64; 3], [u8; 3]);
    let cases: [Case; 3] = [
        ("abc", [97, 98, 99], [0.00097, 0.00098, 0.00099], [0, 2, 1]),
        ("abcd", [24932, 98, 99], [0.24932, 0.00098, 0.00099], [1, 1, 2]),
        ("abcde", [24932, 25189, 99], [0.24932, 0.25189, 0.00099], [0, 2, 2]),
    ];
    let mut mismatches = Vec::new();
    for (pw, a, a_prime, mu) in cases {
        let k = km(pw.as_bytes());
        let ok = pack_password(pw.as_bytes()).unwrap() == a
            && k.a == a
            && normalize(a, pw.len() / 3) == a_prime
            && k.a_prime == a_prime
            && k.mu0 == mu;
        if !ok {
            mismatches.push(pw);
        }
    }
    verdict("AC-12", mismatches.is_empty(), format!("abc/abcd/abcde mismatches: {mismatches:?}"));
}
