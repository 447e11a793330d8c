//! Benchmark-only crate; see `benches/engine.rs`.

use setcover_game::rng::SplitMix64;
use setcover_game::{ElementSet, JointStrategy, Universe};

/// A reproducible random instance for benchmarking.
pub fn random_instance(n: usize, m: usize, seed: u64) -> JointStrategy {
    let mut rng = SplitMix64::new(seed);
    let strategies = (0..m)
        .map(|_| ElementSet::from_bits(rng.next_below(1 << n) as u16))
        .collect();
    JointStrategy::new(Universe::of_size(n).unwrap(), strategies).unwrap()
}
