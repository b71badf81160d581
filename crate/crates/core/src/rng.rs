//! Seeding conventions.
//!
//! All randomness comes from ChaCha8. A master seed `s` and a stream number
//! `k` select the generator `ChaCha8Rng::seed_from_u64(s)` with
//! `set_stream(k)`. Samplers use one stream per row (the row number in the
//! sampler's processing order). Experiments derive per-trial seeds as the
//! first `u64` of stream `k` of the master seed, with `k` a documented
//! counter (see [`crate::experiments`]).

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

pub fn stream_rng(seed: u64, stream: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn derive_seed(master: u64, counter: u64) -> u64 {
    stream_rng(master, counter).next_u64()
}
