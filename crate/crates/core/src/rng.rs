//! Seeded randomness. Every random choice in the crate is drawn from a
//! ChaCha stream derived from a user seed and a fixed purpose label, so runs
//! are reproducible and independent stages never share a stream.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type WorkRng = ChaCha8Rng;

pub mod purpose {
    pub const FIELD: u64 = 1;
    pub const INDEX: u64 = 2;
    pub const SPECIALIZE: u64 = 3;
    pub const ORACLE: u64 = 4;
    pub const MEATAXE: u64 = 5;
    pub const LEMMA: u64 = 6;
}

pub fn stream(seed: u64, purpose: u64) -> WorkRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(purpose);
    rng
}

/// Mix a seed with a small integer (a prime, a sample number) for sub-runs.
pub fn derive(seed: u64, salt: u64) -> u64 {
    let mut x = seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Smallest `e >= 1` with `p^e >= bound`, limited so that the field tables
/// stay within [`crate::gf::MAX_FIELD_ORDER`].
pub fn extension_degree_for(p: u64, bound: u64) -> u32 {
    let mut e = 1u32;
    let mut q = p;
    while q < bound {
        match q.checked_mul(p) {
            Some(next) if next <= crate::gf::MAX_FIELD_ORDER => {
                q = next;
                e += 1;
            }
            _ => break,
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_degree_policy() {
        assert_eq!(extension_degree_for(5, 4 * 9 * 3), 3);
        assert_eq!(extension_degree_for(101, 50), 1);
        assert_eq!(extension_degree_for(2, u64::MAX), 20);
    }
}
