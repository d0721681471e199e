//! Named, seedable random streams.
//!
//! Every consumer of randomness (environment resets, policy noise, replay
//! sampling, intrinsic-reward perturbations, HVD sampling, ...) owns its own
//! stream, keyed by a string id and a run seed. Streams with the same
//! `(id, seed)` produce identical sequences, and draws from one stream never
//! advance another. This is what lets an agent trained with the intrinsic
//! bonus disabled reproduce the plain baseline exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

/// Serializable snapshot of a stream; restoring yields the exact generator
/// state, so checkpoints round-trip bit-exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RngState {
    pub id: String,
    pub seed: u64,
    pub word_pos: u128,
}

/// A named pseudo-random stream backed by ChaCha8.
#[derive(Debug, Clone)]
pub struct RngStream {
    id: String,
    seed: u64,
    rng: ChaCha8Rng,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl RngStream {
    pub fn new(id: &str, seed: u64) -> Self {
        // Derive a 32-byte key from (id, seed) with a stable hash so the
        // mapping is identical across platforms and library versions.
        let mut state = seed ^ fnv1a(id.as_bytes());
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        Self {
            id: id.to_string(),
            seed,
            rng: ChaCha8Rng::from_seed(key),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn state(&self) -> RngState {
        RngState {
            id: self.id.clone(),
            seed: self.seed,
            word_pos: self.rng.get_word_pos(),
        }
    }

    pub fn restore(state: &RngState) -> Self {
        let mut stream = Self::new(&state.id, state.seed);
        stream.rng.set_word_pos(state.word_pos);
        stream
    }

    /// Uniform draw in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.random()
    }

    /// Uniform draw in `[lo, hi)`.
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.uniform() * (hi - lo)
    }

    /// Standard normal draw.
    pub fn normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.rng)
    }

    /// Uniform index in `[0, n)`.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0, "index() needs a nonempty range");
        self.rng.random_range(0..n)
    }

    /// `k` distinct indices from `[0, n)`, in ascending order.
    pub fn indices_without_replacement(&mut self, n: usize, k: usize) -> Vec<usize> {
        assert!(k <= n, "cannot draw {k} distinct indices from {n}");
        // Partial Fisher-Yates over 0..n.
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.index(n - i);
            pool.swap(i, j);
        }
        pool.truncate(k);
        pool.sort_unstable();
        pool
    }

    pub fn shuffle<T>(&mut self, slice: &mut [T]) {
        for i in (1..slice.len()).rev() {
            let j = self.index(i + 1);
            slice.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_id_and_seed_replays_sequence() {
        let mut a = RngStream::new("env", 7);
        let mut b = RngStream::new("env", 7);
        for _ in 0..100 {
            assert_eq!(a.uniform().to_bits(), b.uniform().to_bits());
        }
        assert_eq!(a.normal().to_bits(), b.normal().to_bits());
    }

    #[test]
    fn different_ids_are_independent() {
        let mut a = RngStream::new("env", 7);
        let mut b = RngStream::new("policy", 7);
        let before: Vec<u64> = (0..8).map(|_| b.uniform().to_bits()).collect();
        // Re-deriving b and draining a in between must not change b's draws.
        let mut a2 = RngStream::new("env", 7);
        let mut b2 = RngStream::new("policy", 7);
        for _ in 0..1000 {
            a2.uniform();
        }
        let after: Vec<u64> = (0..8).map(|_| b2.uniform().to_bits()).collect();
        assert_eq!(before, after);
        let _ = a;
    }

    #[test]
    fn state_round_trips_mid_sequence() {
        let mut a = RngStream::new("replay", 42);
        for _ in 0..17 {
            a.normal();
        }
        let snap = a.state();
        let expected: Vec<u64> = (0..32).map(|_| a.uniform().to_bits()).collect();
        let mut restored = RngStream::restore(&snap);
        let got: Vec<u64> = (0..32).map(|_| restored.uniform().to_bits()).collect();
        assert_eq!(expected, got);
    }

    #[test]
    fn without_replacement_is_distinct_and_sorted() {
        let mut r = RngStream::new("hvd", 3);
        let idx = r.indices_without_replacement(50, 10);
        assert_eq!(idx.len(), 10);
        for w in idx.windows(2) {
            assert!(w[0] < w[1]);
        }
        let all = r.indices_without_replacement(5, 5);
        assert_eq!(all, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn uniform_in_respects_bounds() {
        let mut r = RngStream::new("env", 11);
        for _ in 0..1000 {
            let x = r.uniform_in(-2.0, 3.0);
            assert!((-2.0..3.0).contains(&x));
        }
    }
}
