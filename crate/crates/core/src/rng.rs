//! Portable seeded randomness and the seed-splitting rule.
//!
//! Every random stream in the crate is a [`SimRng`] (ChaCha with 8 rounds)
//! seeded through [`SimRng::seed_from_u64`]. Child streams are addressed by a
//! path of integers below a parent seed:
//!
//! ```text
//! child = derive_seed(parent, &[a, b, ...])
//!       = fold(parent, |s, x| splitmix64(s ^ splitmix64(x + 1)))
//! ```
//!
//! The derivation is a pure function of `(parent, path)`, so changing one
//! sibling never perturbs another, and results are identical across
//! platforms.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

/// One round of the SplitMix64 output function.
#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn derive_seed(parent: u64, path: &[u64]) -> u64 {
    path.iter()
        .fold(parent, |s, &x| splitmix64(s ^ splitmix64(x.wrapping_add(1))))
}

pub fn rng_from_seed(seed: u64) -> SimRng {
    SimRng::seed_from_u64(seed)
}
