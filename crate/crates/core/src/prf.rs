//! Counter-based pseudorandom function and seed derivation.
//!
//! Everything random in this crate is a pure function of a 64-bit key and a
//! 64-bit counter, so a coordinate of a random point can be read at any index
//! without storing a tape, and results agree across platforms.
//!
//! The algorithm is fixed:
//!
//! ```text
//! mix(z)   = SplitMix64 finalizer (xor-shift 30/27/31, multipliers
//!            0xbf58476d1ce4e5b9 and 0x94d049bb133111eb)
//! word(key, i) = mix(mix(key) + (i + 1) * 0x9e3779b97f4a7c15)   (wrapping)
//! derive_seed(master, label) = mix(master ^ fnv1a64(label))
//! ```

const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The `i`-th pseudorandom word of stream `key`.
#[inline]
pub fn word(key: u64, i: u64) -> u64 {
    mix64(mix64(key).wrapping_add(i.wrapping_add(1).wrapping_mul(GAMMA)))
}

/// Uniform double in `[0, 1)` from the top 53 bits of `word(key, i)`.
#[inline]
pub fn unit(key: u64, i: u64) -> f64 {
    (word(key, i) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// FNV-1a over the bytes of `s`.
pub fn fnv1a64(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

/// Per-task seed from a master seed and a task label. Adding tasks with new
/// labels never changes the seeds of existing ones.
pub fn derive_seed(master: u64, label: &str) -> u64 {
    mix64(master ^ fnv1a64(label))
}

/// Seed for the `index`-th member of a labelled family of tasks.
pub fn derive_indexed(master: u64, label: &str, index: u64) -> u64 {
    derive_seed(master, &format!("{label}/{index}"))
}
