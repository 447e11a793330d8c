//! Exact cover distributions under the random-order variant, by enumerating
//! all `m!` scan orders, plus a seeded Monte Carlo estimator for profiles too
//! large to enumerate.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::greedy::greedy_cover_unchecked;
use crate::rational::Rational;
use crate::rng::{shuffled_identity, SplitMix64};
use crate::strategy::{Cover, JointStrategy};

/// Default bound on exact permutation enumeration: 9! = 362,880 greedy runs.
pub const DEFAULT_PERMUTATION_CAP: usize = 9;

/// The exact distribution over covers induced by a uniformly random scan
/// order. Covers are keyed by their selected-agent set: utilities depend only
/// on membership, and distinct selection orders that pick the same agents are
/// the same outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDistribution {
    entries: BTreeMap<Vec<usize>, Rational>,
    permutation_count: u64,
}

impl CoverDistribution {
    /// `(agent set, probability)` pairs in lexicographic order of the sets.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.entries.iter()
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn permutation_count(&self) -> u64 {
        self.permutation_count
    }

    pub fn probability_of(&self, agents: &[usize]) -> Rational {
        let mut key = agents.to_vec();
        key.sort_unstable();
        self.entries.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn contains(&self, cover: &Cover) -> bool {
        self.entries.contains_key(&cover.agent_set())
    }

    /// Exact sum of all probabilities; an invariant check, always 1.
    pub fn total(&self) -> Rational {
        self.entries.values().cloned().sum()
    }
}

pub(crate) fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// Writes the `k`-th permutation of `0..m` in lexicographic order into `out`.
/// `k` is decoded in the factorial number system.
fn kth_permutation(m: usize, mut k: u64, out: &mut Vec<usize>) {
    let mut available: Vec<usize> = (0..m).collect();
    out.clear();
    for remaining in (1..=m).rev() {
        let block = factorial(remaining - 1);
        let pick = (k / block) as usize;
        k %= block;
        out.push(available.remove(pick));
    }
}

fn check_cap(m: usize, cap: usize) -> Result<()> {
    if m > cap {
        return Err(Error::PermutationCapExceeded { m, cap });
    }
    Ok(())
}

/// Tally of greedy outcomes over all `m!` permutations: how many scan orders
/// produce each selected-agent set. Permutation ranges are partitioned across
/// workers and the integer tallies merged by addition, so parallel and serial
/// runs agree exactly.
fn cover_tallies(joint: &JointStrategy, cap: usize) -> Result<(BTreeMap<Vec<usize>, u64>, u64)> {
    let m = joint.agent_count();
    check_cap(m, cap)?;
    let total = factorial(m);
    let chunk = 4096u64;
    let chunks = total.div_ceil(chunk);
    let tallies = (0..chunks)
        .into_par_iter()
        .fold(BTreeMap::<Vec<usize>, u64>::new, |mut acc, c| {
            let mut order = Vec::with_capacity(m);
            for k in (c * chunk)..total.min((c + 1) * chunk) {
                kth_permutation(m, k, &mut order);
                let cover = greedy_cover_unchecked(joint, &order);
                *acc.entry(cover.agent_set()).or_insert(0) += 1;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, count) in b {
                *a.entry(key).or_insert(0) += count;
            }
            a
        });
    Ok((tallies, total))
}

/// The exact cover distribution of the random-order variant: one greedy run
/// per permutation of the agents, each weighted `1/m!`.
///
/// Errors when `m` exceeds `cap`; callers beyond the cap should fall back to
/// [`monte_carlo_probabilities`].
pub fn cover_distribution(joint: &JointStrategy, cap: usize) -> Result<CoverDistribution> {
    let (tallies, total) = cover_tallies(joint, cap)?;
    let entries = tallies
        .into_iter()
        .map(|(agents, count)| Ok((agents, Rational::from_ratio(count, total)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(CoverDistribution { entries, permutation_count: total })
}

/// Per-agent counts of permutations whose cover includes the agent, plus `m!`.
/// The cheap primitive behind both exact utilities and the probability vector.
pub(crate) fn selection_counts(joint: &JointStrategy, cap: usize) -> Result<(Vec<u64>, u64)> {
    let (tallies, total) = cover_tallies(joint, cap)?;
    let mut counts = vec![0u64; joint.agent_count()];
    for (agents, count) in &tallies {
        for &agent in agents {
            counts[agent] += count;
        }
    }
    Ok((counts, total))
}

/// `Pr[agent i is selected]` for every agent, as exact rationals.
pub fn selection_probabilities(joint: &JointStrategy, cap: usize) -> Result<Vec<Rational>> {
    let (counts, total) = selection_counts(joint, cap)?;
    counts
        .into_iter()
        .map(|c| Rational::from_ratio(c, total))
        .collect()
}

/// One greedy run under a permutation drawn with the documented seeded
/// generator and shuffle. Identical seed and instance reproduce the identical
/// cover.
pub fn sample_cover(joint: &JointStrategy, seed: u64) -> Cover {
    let mut rng = SplitMix64::new(seed);
    let order = shuffled_identity(joint.agent_count(), &mut rng);
    greedy_cover_unchecked(joint, &order)
}

/// Monte Carlo estimates of the selection probabilities.
#[derive(Debug, Clone)]
pub struct MonteCarloEstimate {
    /// Empirical selection frequency per agent.
    pub probabilities: Vec<f64>,
    /// `sqrt(p(1-p)/samples)` per agent, using the estimated `p`.
    pub standard_errors: Vec<f64>,
    pub samples: u64,
    pub seed: u64,
}

/// Estimates the selection probabilities from `samples` independent sampled
/// covers. The sample stream is a deterministic function of the seed. The
/// estimates here are the only floating-point values in the engine.
pub fn monte_carlo_probabilities(
    joint: &JointStrategy,
    samples: u64,
    seed: u64,
) -> MonteCarloEstimate {
    assert!(samples >= 1, "at least one sample is required");
    let m = joint.agent_count();
    let mut rng = SplitMix64::new(seed);
    let mut hits = vec![0u64; m];
    for _ in 0..samples {
        let order = shuffled_identity(m, &mut rng);
        let cover = greedy_cover_unchecked(joint, &order);
        for &agent in cover.selection_order() {
            hits[agent] += 1;
        }
    }
    let probabilities: Vec<f64> = hits.iter().map(|&h| h as f64 / samples as f64).collect();
    let standard_errors = probabilities
        .iter()
        .map(|&p| (p * (1.0 - p) / samples as f64).sqrt())
        .collect();
    MonteCarloEstimate { probabilities, standard_errors, samples, seed }
}
