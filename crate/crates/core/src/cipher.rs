//! Single-stream chained cipher.
//!
//! Each byte is masked with two keystream bytes extracted from the low
//! decimal digits of the current attractor coordinates. The plaintext byte
//! then nudges the trajectory before the map is iterated again, so every
//! keystream byte depends on the whole plaintext prefix.

use crate::dynamics::{iterate, perturb, DynamicsParams, LorenzState};
use crate::error::{Error, Result};
use crate::schedule::{derive_alpha, KeyMaterial, NU};

/// Trailer appended to every stream before encryption and checked on
/// decryption.
pub const SENTINEL: &[u8; 16] = b"LORENZCHAOS-MAC1";
pub const SENTINEL_LEN: usize = SENTINEL.len();

/// 10^NU, exact in binary64.
const DECIMAL_SHIFT: f64 = 1e13;
const _: () = assert!(NU == 13);

/// Exact powers of ten used for the perturbation scale `10^(3 + omega3)`.
const POW10: [f64; 10] = [1e0, 1e1, 1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8, 1e9];

/// The `omega`-th least significant byte of `floor(|alpha| * 10^13)`.
#[inline]
pub fn extract_byte(alpha: f64, omega: u8) -> u8 {
    debug_assert!(8 * (u32::from(omega) + 1) <= 63, "mask exceeds integer width");
    let shifted = (alpha.abs() * DECIMAL_SHIFT).floor() as u64;
    let mask = 255u64 << (8 * u32::from(omega));
    ((shifted & mask) >> (8 * u32::from(omega))) as u8
}

/// Evolving per-stream state.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainState {
    pub r: LorenzState,
    pub mu: [u8; 3],
    pub alpha: [f64; 3],
    pub omega: [u8; 3],
    pub a_prime: [f64; 3],
    /// Moduli for the omega recurrence: `(k_init1, k_init2, k_chain3)`.
    pub k: [u8; 3],
}

impl ChainState {
    pub fn new(km: &KeyMaterial) -> Self {
        let k = [km.k_init[0], km.k_init[1], km.k_chain3];
        let mut omega = km.omega0;
        omega[2] %= k[2];
        let mut chain = Self { r: km.r0, mu: km.mu0, alpha: km.alpha0, omega, a_prime: km.a_prime, k };
        chain.separate_keystream_selectors();
        chain
    }

    /// Keeps the two keystream terms from reading the same byte of the same
    /// coordinate. Identical terms sum to `2·R`, which is always even and lets
    /// the plaintext's parity through. Once coincident, both selectors also
    /// receive identical shifts and would stay coincident when `k_1 = k_2`.
    fn separate_keystream_selectors(&mut self) {
        if self.mu[0] == self.mu[1] && self.omega[0] == self.omega[1] {
            self.omega[1] = (self.omega[1] + 1) % self.k[1];
        }
    }

    #[inline]
    fn keystream(&self) -> u8 {
        extract_byte(self.alpha[0], self.omega[0]).wrapping_add(extract_byte(self.alpha[1], self.omega[1]))
    }

    /// Masks one plaintext byte: `(p + R(α1, Ω1) + R(α2, Ω2)) mod 256`.
    #[inline]
    pub fn encode_byte(&self, p: u8) -> u8 {
        p.wrapping_add(self.keystream())
    }

    #[inline]
    pub fn decode_byte(&self, c: u8) -> u8 {
        c.wrapping_sub(self.keystream())
    }

    /// Feeds the plaintext byte just processed back into the trajectory and
    /// refreshes selectors, byte indices and coordinates.
    ///
    /// Order: perturb one axis by `p / 10^(3 + Ω3)`; iterate `n_it` steps;
    /// advance `μ_i` and `Ω_i` by `R(α_i, Ω_i)` taken from the coordinates
    /// that encoded this byte; re-select `α` from the new state under the new
    /// `μ`; finally offset the state by `a'`. If the first two selectors then
    /// coincide, the second byte index moves on by one.
    ///
    /// The index shift must come from the previous coordinates. Taking it
    /// from the freshly selected `α` makes the next keystream byte equal the
    /// shift itself whenever the shift is a multiple of `k_i`, which skews the
    /// keystream toward multiples of 3 and 4.
    pub fn advance(&mut self, p: u8, params: &DynamicsParams) -> Result<()> {
        let theta = f64::from(p) / POW10[3 + usize::from(self.omega[2])];
        let perturbed = perturb(self.r, self.mu[2], theta);
        let r = iterate(perturbed, params, params.n_it)?;

        for i in 0..3 {
            // 1-based index [(j + 2) mod 3] + 1 with j = i + 1; this is the
            // identity permutation.
            let src = (i + 3) % 3;
            let shift = u16::from(extract_byte(self.alpha[src], self.omega[i]));
            self.mu[i] = ((u16::from(self.mu[i]) + shift) % 3) as u8;
            self.omega[i] = ((u16::from(self.omega[i]) + shift) % u16::from(self.k[i])) as u8;
        }
        self.separate_keystream_selectors();
        self.alpha = derive_alpha(&r, self.mu);
        self.r = LorenzState::new(r.x + self.a_prime[0], r.y + self.a_prime[1], r.z + self.a_prime[2]);
        Ok(())
    }
}

/// Encrypts `plain` followed by the sentinel. Output is `plain.len() + 16`
/// bytes.
pub fn encrypt_stream(plain: &[u8], km: &KeyMaterial, params: &DynamicsParams) -> Result<Vec<u8>> {
    params.validate()?;
    let mut chain = ChainState::new(km);
    let total = plain.len() + SENTINEL_LEN;
    let mut out = Vec::with_capacity(total);
    for (idx, &p) in plain.iter().chain(SENTINEL.iter()).enumerate() {
        out.push(chain.encode_byte(p));
        // the state after the final byte is never observed
        if idx + 1 < total {
            chain.advance(p, params)?;
        }
    }
    Ok(out)
}

/// Decrypts and strips the sentinel, failing with [`Error::Integrity`] if the
/// recovered trailer does not match.
pub fn decrypt_stream(cipher: &[u8], km: &KeyMaterial, params: &DynamicsParams) -> Result<Vec<u8>> {
    if cipher.len() < SENTINEL_LEN {
        return Err(Error::Length(cipher.len()));
    }
    params.validate()?;
    let mut chain = ChainState::new(km);
    let mut out = Vec::with_capacity(cipher.len());
    for (idx, &c) in cipher.iter().enumerate() {
        let p = chain.decode_byte(c);
        out.push(p);
        if idx + 1 < cipher.len() {
            chain.advance(p, params)?;
        }
    }
    let body_len = cipher.len() - SENTINEL_LEN;
    if out[body_len..] != SENTINEL[..] {
        return Err(Error::Integrity { chunk: None });
    }
    out.truncate(body_len);
    Ok(out)
}
