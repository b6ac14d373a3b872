//! Password → initial cipher state.
//!
//! The password bytes are packed into three integers, normalised into the
//! unit cube and offset into a chaotic region of the attractor. Selectors,
//! byte indices and moduli are derived from the same bytes; nothing here
//! depends on randomness or global state.

use sha2::{Digest, Sha256};

use crate::dynamics::LorenzState;
use crate::error::{Error, Result};

pub const MIN_PASSWORD_LEN: usize = 3;
pub const MAX_PASSWORD_LEN: usize = 23;
/// Length of the digest prefix that replaces over-long passwords.
pub const PREHASH_LEN: usize = 18;

/// Mantissa width of a binary64 value.
pub const XI: u32 = 52;
/// Decimal shift exponent: floor(log10(2^(XI - 6))).
pub const NU: u32 = 13;

/// Open intervals the attractor offset is drawn from.
pub const LAMBDA_RANGES: [(f64, f64); 3] = [(-15.67, 16.01), (-11.28, 16.01), (0.090, 62.000)];

/// Password bytes after length normalisation.
#[derive(Clone, PartialEq, Eq)]
pub struct Password(Vec<u8>);

impl Password {
    /// Passwords longer than 23 bytes are replaced by the first 18 bytes of
    /// their SHA-256 digest; shorter than 3 bytes is an error.
    pub fn new(raw: impl AsRef<[u8]>) -> Result<Self> {
        let raw = raw.as_ref();
        if raw.len() < MIN_PASSWORD_LEN {
            return Err(Error::PasswordLength(raw.len()));
        }
        if raw.len() > MAX_PASSWORD_LEN {
            let digest = Sha256::digest(raw);
            return Ok(Self(digest[..PREHASH_LEN].to_vec()));
        }
        Ok(Self(raw.to_vec()))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Debug for Password {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Password(<{} bytes>)", self.0.len())
    }
}

/// Everything the chained cipher needs to start a stream.
#[derive(Debug, Clone, PartialEq)]
pub struct KeyMaterial {
    pub a: [u64; 3],
    pub a_prime: [f64; 3],
    pub lambda: [f64; 3],
    pub r0: LorenzState,
    pub mu0: [u8; 3],
    pub alpha0: [f64; 3],
    pub omega0: [u8; 3],
    pub k_init: [u8; 3],
    pub k_chain3: u8,
    pub nu: u32,
    pub xi: u32,
}

/// Packs the password bytes into three integers.
///
/// With `L = n / 3` (1-based byte indices `p_i`):
///
/// * `a1 = Σ_{i≤L} p_i·2^(8(i-1))` when `n mod 3 = 0`, else `Σ_{i≤L} p_i·2^(8i) + p_{3L+1}`
/// * `a2 = Σ_{L<i≤2L} p_i·2^(8(i-L-1))` when `n mod 3 ≠ 2`, else `Σ_{L<i≤2L} p_i·2^(8(i-L)) + p_{3L+2}`
/// * `a3 = Σ_{2L<i≤3L} p_i·2^(8(i-2L-1))`
pub fn pack_password(pw: &[u8]) -> Result<[u64; 3]> {
    let n = pw.len();
    if !(MIN_PASSWORD_LEN..=MAX_PASSWORD_LEN).contains(&n) {
        return Err(Error::PasswordLength(n));
    }
    let l = n / 3;
    let rem = n % 3;
    // 1-based accessor
    let p = |i: usize| u64::from(pw[i - 1]);

    let a1 = if rem == 0 {
        (1..=l).map(|i| p(i) << (8 * (i - 1))).sum()
    } else {
        (1..=l).map(|i| p(i) << (8 * i)).sum::<u64>() + p(3 * l + 1)
    };
    let a2 = if rem != 2 {
        (l + 1..=2 * l).map(|i| p(i) << (8 * (i - l - 1))).sum()
    } else {
        (l + 1..=2 * l).map(|i| p(i) << (8 * (i - l))).sum::<u64>() + p(3 * l + 2)
    };
    let a3 = (2 * l + 1..=3 * l).map(|i| p(i) << (8 * (i - 2 * l - 1))).sum();
    Ok([a1, a2, a3])
}

/// Smallest `d` with `10^d >= 2^(8(L+1))`, i.e. `ceil(log10 2^(8(L+1)))`.
pub fn normalization_exponent(l: usize) -> u32 {
    let bound = 1u128 << (8 * (l + 1));
    let mut d = 0;
    let mut p = 1u128;
    while p < bound {
        p *= 10;
        d += 1;
    }
    d
}

/// Maps the packed integers into `[0, 1]`.
pub fn normalize(a: [u64; 3], l: usize) -> [f64; 3] {
    let divisor = 10f64.powi(normalization_exponent(l) as i32);
    a.map(|v| v as f64 / divisor)
}

/// Offset into the chaotic region, drawn deterministically from a digest of
/// the packed password.
pub fn derive_lambda(a: [u64; 3]) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (i, (lo, hi)) in LAMBDA_RANGES.iter().enumerate() {
        let mut h = Sha256::new();
        h.update([0x4C]);
        for v in a {
            h.update(v.to_be_bytes());
        }
        h.update([i as u8 + 1]);
        let prefix = be_u64_prefix(&h.finalize());
        // top 53 bits as a fraction in [0, 1)
        let frac = (prefix >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        out[i] = lo + frac * (hi - lo);
    }
    out
}

pub fn derive_mu(a: [u64; 3]) -> [u8; 3] {
    let [a1, a2, a3] = a.map(|v| v % 3);
    [((a1 + a2 + a3) % 3) as u8, ((a1 * a2 + a3) % 3) as u8, ((a1 + a2 * a3) % 3) as u8]
}

/// Selects `x`, `y` or `z` per selector.
pub fn derive_alpha(state: &LorenzState, mu: [u8; 3]) -> [f64; 3] {
    mu.map(|m| state.component(m))
}

/// Initial byte indices and moduli: `(omega0, k_init, k_chain3)`.
pub fn derive_omega_and_k(pw: &Password, a: [u64; 3]) -> ([u8; 3], [u8; 3], u8) {
    let h = Sha256::digest(pw.as_bytes());
    let k_init = [3 + h[0] % 2, 3 + h[1] % 2, 3 + h[2] % 2];
    let k_chain3 = 1 + h[3] % 6;

    let mut omega0 = [0u8; 3];
    for (i, slot) in omega0.iter_mut().enumerate() {
        let scale = i as u64 + 1;
        let mut d = Sha256::new();
        for v in a {
            d.update(v.wrapping_mul(scale).to_be_bytes());
        }
        let prefix = be_u64_prefix(&d.finalize());
        *slot = (prefix % u64::from(k_init[i])) as u8;
    }
    (omega0, k_init, k_chain3)
}

pub fn build_key_material(pw: &Password) -> Result<KeyMaterial> {
    let a = pack_password(pw.as_bytes())?;
    let a_prime = normalize(a, pw.len() / 3);
    let lambda = derive_lambda(a);
    let r0 = LorenzState::new(a_prime[0] + lambda[0], a_prime[1] + lambda[1], a_prime[2] + lambda[2]);
    let mu0 = derive_mu(a);
    let alpha0 = derive_alpha(&r0, mu0);
    let (omega0, k_init, k_chain3) = derive_omega_and_k(pw, a);
    Ok(KeyMaterial { a, a_prime, lambda, r0, mu0, alpha0, omega0, k_init, k_chain3, nu: NU, xi: XI })
}

fn be_u64_prefix(digest: &[u8]) -> u64 {
    let mut buf = [0u8; 8];
    buf.copy_from_slice(&digest[..8]);
    u64::from_be_bytes(buf)
}
