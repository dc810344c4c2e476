//! Deterministic seeded instance selection.
//!
//! Competition instances are drawn from each problem's pool with a publicly
//! announced seed (historically the concatenated winning numbers of a lottery
//! draw), so anyone can re-run the selection and get the same list. The
//! procedure is fixed bit-for-bit:
//!
//! 1. the seed string's decimal digits are folded into a 64-bit integer
//!    (base-10 accumulation, wrapping on overflow; non-digits are skipped),
//! 2. the fold is XOR-mixed with an FNV-1a hash of the problem id so every
//!    problem gets its own stream,
//! 3. a splitmix64 stream drives a partial Fisher-Yates shuffle of the pool
//!    indices, and the first `n` positions are the selection, in shuffle
//!    order.

use alloc::vec::Vec;

/// Folds the decimal digits of `seed` into a `u64`, ignoring every
/// non-digit character and wrapping on overflow.
pub fn fold_seed_digits(seed: &str) -> u64 {
    let mut acc: u64 = 0;
    for b in seed.bytes() {
        if b.is_ascii_digit() {
            acc = acc.wrapping_mul(10).wrapping_add(u64::from(b - b'0'));
        }
    }
    acc
}

/// 64-bit FNV-1a.
pub fn fnv1a64(data: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in data {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// The splitmix64 generator (Steele, Lea & Flood's SplittableRandom finalizer).
#[derive(Clone, Copy, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

/// Picks `min(n, pool_len)` distinct pool indices for one problem.
///
/// The result is a pure function of `(seed, problem_id, pool_len)`; the order
/// of the returned indices is the shuffle order. Index selection uses
/// `next_u64() % remaining` — the tiny modulo bias is irrelevant here, and
/// keeping the draw this simple makes independent reimplementation easy.
pub fn select_order(seed: &str, problem_id: &str, pool_len: usize, n: usize) -> Vec<usize> {
    let mut rng = SplitMix64::new(fold_seed_digits(seed) ^ fnv1a64(problem_id.as_bytes()));
    let mut indices: Vec<usize> = (0..pool_len).collect();
    let take = n.min(pool_len);
    for i in 0..take {
        let remaining = (pool_len - i) as u64;
        let j = i + (rng.next_u64() % remaining) as usize;
        indices.swap(i, j);
    }
    indices.truncate(take);
    indices
}
