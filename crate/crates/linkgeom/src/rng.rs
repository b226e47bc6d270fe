//! Deterministic 64-bit random generator for seeds, perturbation offsets,
//! and random test configurations.
//!
//! The generator is the splitmix64 state transition, fixed here so that
//! identical seeds reproduce identical streams on every platform:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output = z ^ (z >> 31)
//! ```
//!
//! Randomness enters the library only through explicit seeds handed to this
//! type; all other code is purely deterministic.

use crate::scalar::Rat;
use num_bigint::BigInt;

/// Splitmix64 generator. Cheap to construct; every draw is O(1).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Next raw 64-bit output.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n` without modulo bias (rejection sampling).
    ///
    /// # Panics
    /// Panics if `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0) is meaningless");
        // Reject the low 2⁶⁴ mod n values so the remainder is uniform.
        let threshold = n.wrapping_neg() % n;
        loop {
            let v = self.next_u64();
            if v >= threshold {
                return v % n;
            }
        }
    }

    /// Uniform draw from the inclusive range `lo..=hi`.
    ///
    /// # Panics
    /// Panics if `lo > hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        let span = (hi as i128 - lo as i128 + 1) as u64;
        lo.wrapping_add(self.below(span) as i64)
    }

    /// Random rational with numerator uniform in `[−(2^bits − 1), 2^bits − 1]`
    /// and denominator `2^bits` (the result is reduced canonically).
    ///
    /// # Panics
    /// Panics if `bits` is 0 or exceeds 62.
    pub fn rat_with_bits(&mut self, bits: u32) -> Rat {
        assert!(bits >= 1 && bits <= 62, "bits must be in 1..=62");
        let bound = (1i64 << bits) - 1;
        let num = self.int_in(-bound, bound);
        Rat::new(BigInt::from(num), BigInt::from(1i64 << bits))
    }
}
