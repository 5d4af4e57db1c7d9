//! Deterministic counter-based RNG substreams.
//!
//! Every parallel Monte-Carlo site (trajectory, trace point, bootstrap
//! resample, grid point) draws from its own ChaCha stream keyed by
//! `(master seed, stream index)`, so results are independent of scheduling
//! and thread count.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// ChaCha12 stream for `(master, stream)`, independent across stream indices.
pub fn substream(master: u64, stream: u64) -> ChaCha12Rng {
    let mut state = master ^ stream.wrapping_mul(0xA24B_AED4_963E_E407);
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha12Rng::from_seed(seed)
}

/// Binomial draw; `p` is clamped into `[0, 1]`.
pub fn binomial_draw<R: Rng>(rng: &mut R, n: u64, p: f64) -> u64 {
    let p = p.clamp(0.0, 1.0);
    let dist = rand_distr::Binomial::new(n, p).expect("p clamped to [0,1]");
    rng.sample(dist)
}

/// Poisson draw with the given mean; `mean <= 0` yields zero.
pub fn poisson_draw<R: Rng>(rng: &mut R, mean: f64) -> u64 {
    if mean <= 0.0 {
        return 0;
    }
    let dist = rand_distr::Poisson::new(mean).expect("positive mean");
    let v: f64 = rng.sample(dist);
    v.round().max(0.0) as u64
}
