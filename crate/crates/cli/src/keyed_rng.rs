//! Random streams keyed by `(seed, check name, trial index)`, so each trial
//! draws the same numbers whatever runs before it or on which thread.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

pub fn keyed_rng(seed: u64, name: &str, trial: u64) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update((name.len() as u64).to_le_bytes());
    h.update(name.as_bytes());
    h.update(trial.to_le_bytes());
    ChaCha8Rng::from_seed(h.finalize().into())
}
