//! Deterministic random stream derivation.
//!
//! Each consumer (bootstrap iteration, benchmark sample) gets its own
//! ChaCha8 stream keyed by `(master_seed, index)` through the splitmix64
//! avalanche mix. Streams therefore depend only on the pair of integers,
//! never on scheduling or worker count.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// splitmix64 step: advances the state and returns a mixed output word.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives an independent stream for (master_seed, index): the pair is
/// folded into a splitmix64 state, and four output words form the 256-bit
/// ChaCha8 key.
pub fn derive_stream(master_seed: u64, index: u64) -> ChaCha8Rng {
    let mut state = master_seed ^ index.wrapping_mul(0xA24B_AED4_963E_E407);
    let mut key = [0u8; 32];
    for chunk in key.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

/// One standard-normal draw via Box-Muller on the stream's uniforms.
pub fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}
