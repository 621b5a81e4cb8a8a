//! Counter-based splittable random streams.
//!
//! A [`Stream`] is a 64-bit key plus a draw counter. Draw `i` (starting at 1)
//! is `mix(key + i * GAMMA)`, the SplitMix64 output function, so any draw can
//! be reproduced from `(key, i)` alone. Child streams are derived from the
//! parent key and a label, never from the parent's counter:
//!
//! ```text
//! root(seed)         key = mix(seed ^ ROOT_SALT)
//! split(key, label)  key = mix(key ^ mix(label + SPLIT_SALT))
//! next_f64           (next_u64 >> 11) * 2^-53
//! ```
//!
//! The simulator keys streams by `(master_seed, rep_index, round, voter)`,
//! so results do not depend on evaluation order or thread count.

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const ROOT_SALT: u64 = 0x5245_5045_4154_564F; // "REPEATVO"
const SPLIT_SALT: u64 = 0xD1B5_4A32_D192_ED03;

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stream {
    key: u64,
    counter: u64,
}

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream {
            key: mix(seed ^ ROOT_SALT),
            counter: 0,
        }
    }

    /// Independent child stream identified by `label`.
    pub fn split(&self, label: u64) -> Stream {
        Stream {
            key: mix(self.key ^ mix(label.wrapping_add(SPLIT_SALT))),
            counter: 0,
        }
    }

    pub fn key(&self) -> u64 {
        self.key
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix(self.key.wrapping_add(self.counter.wrapping_mul(GAMMA)))
    }

    /// Uniform draw from `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw from `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }
}
