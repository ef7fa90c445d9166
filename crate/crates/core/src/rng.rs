//! Splittable random-number streams.
//!
//! Every stochastic routine in this crate draws from a stream keyed by
//! `(master seed, purpose tag, index)`. The key is hashed into a 256-bit
//! ChaCha8 seed, so streams are mutually independent, cheap to create on
//! demand, and identical no matter how work is scheduled across threads.
//! Replication `j` of any Monte Carlo loop always sees the same numbers,
//! which makes results reproducible and independent of the worker count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Domain-separation prefix, bumped only if the stream layout ever changes.
const STREAM_VERSION: &[u8] = b"spatsel.stream.v1";

/// Deterministic RNG for the stream `(seed, purpose, index)`.
pub fn stream(seed: u64, purpose: &str, index: u64) -> ChaCha8Rng {
    let mut hasher = Sha256::new();
    hasher.update(STREAM_VERSION);
    hasher.update(seed.to_le_bytes());
    hasher.update((purpose.len() as u64).to_le_bytes());
    hasher.update(purpose.as_bytes());
    hasher.update(index.to_le_bytes());
    let digest = hasher.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}
