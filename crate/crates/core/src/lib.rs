//! Chaotic stream cipher driven by a discretised Lorenz attractor.
//!
//! The password selects a starting point on the attractor. Keystream bytes
//! come from low-order decimal digits of the trajectory, and every plaintext
//! byte perturbs the trajectory before it advances, so identical plaintext
//! blocks never encrypt alike. A fixed 16-byte sentinel is encrypted at the
//! end of every stream and checked on decryption.
//!
//! ```
//! use lzx_core::{open, seal, Password, SealOptions};
//!
//! let pw = Password::new("correct horse").unwrap();
//! let opts = SealOptions { n_it: Some(200), ..SealOptions::strong() };
//! let sealed = seal(b"attack at dawn", &pw, &opts).unwrap();
//! let (_, plain) = open(&sealed, &pw, 1).unwrap();
//! assert_eq!(plain, b"attack at dawn");
//! ```
//!
//! This is a research cipher. It has no security proof and must not be used
//! to protect real data.

pub mod cipher;
pub mod container;
pub mod dynamics;
pub mod envelope;
pub mod error;
pub mod parallel;
pub mod schedule;

pub use cipher::{decrypt_stream, encrypt_stream, extract_byte, ChainState, SENTINEL};
pub use container::{open, params_for, seal, SealOptions};
pub use dynamics::{DynamicsParams, LorenzState};
pub use envelope::{parse_envelope, write_envelope, EnvelopeHeader, Mode};
pub use error::{Error, Result};
pub use parallel::{decrypt_parallel, encrypt_parallel, plan_chunks, ChunkPlan};
pub use schedule::{build_key_material, KeyMaterial, Password};
