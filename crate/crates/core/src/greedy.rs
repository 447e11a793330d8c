//! The greedy cover algorithm for an arbitrary agent scan order, plus an
//! exhaustive minimum-cover search used as the approximation oracle.
//!
//! Tie-breaking is the load-bearing semantic of the whole engine: each round
//! scans every agent in permutation order and replaces the running candidate
//! only on a *strictly* greater count of still-uncovered elements. The earliest
//! agent in the permutation therefore wins among maximizers. Already-selected
//! agents stay in the scan; they can never win again because their marginal
//! coverage is zero and replacement requires strictly more.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::strategy::{Cover, JointStrategy};

/// A scan order over all `m` agents: a bijection on `{0, .., m-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    order: Vec<usize>,
}

impl Permutation {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let m = order.len();
        let mut seen = vec![false; m];
        for &agent in &order {
            if agent >= m {
                return Err(Error::InvalidPermutation {
                    detail: format!("index {agent} out of range for {m} agents"),
                });
            }
            if seen[agent] {
                return Err(Error::InvalidPermutation {
                    detail: format!("index {agent} repeats"),
                });
            }
            seen[agent] = true;
        }
        Ok(Permutation { order })
    }

    /// The fixed scan order of the deterministic variant: agents in index order.
    pub fn identity(m: usize) -> Self {
        Permutation { order: (0..m).collect() }
    }

    /// Parses a 1-based agent list as used in human-facing interfaces.
    pub fn from_one_based(order: &[usize]) -> Result<Self> {
        let zero_based = order
            .iter()
            .map(|&a| {
                a.checked_sub(1).ok_or_else(|| Error::InvalidPermutation {
                    detail: "agent numbers are 1-based".to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(zero_based)
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Runs the greedy cover algorithm under the given scan order.
///
/// While uncovered elements remain, the candidate starts at the first agent in
/// the permutation and is replaced only by a strictly larger marginal
/// coverage; the winner joins the cover and its elements are struck from the
/// uncovered set. Terminates in at most `min(m, |U'|)` rounds.
pub fn greedy_cover(joint: &JointStrategy, pi: &Permutation) -> Result<Cover> {
    let m = joint.agent_count();
    if pi.len() != m {
        return Err(Error::InvalidPermutation {
            detail: format!("permutation covers {} agents, instance has {m}", pi.len()),
        });
    }
    Ok(greedy_cover_unchecked(joint, pi.order()))
}

/// Same algorithm with the permutation already validated; the hot path for
/// full permutation enumeration.
pub(crate) fn greedy_cover_unchecked(joint: &JointStrategy, order: &[usize]) -> Cover {
    let strategies = joint.strategies();
    let mut uncovered = joint.effective_universe().bits();
    let mut selected = Vec::new();
    while uncovered != 0 {
        let mut winner = order[0];
        let mut best = (strategies[winner].bits() & uncovered).count_ones();
        for &agent in &order[1..] {
            let gain = (strategies[agent].bits() & uncovered).count_ones();
            if best < gain {
                winner = agent;
                best = gain;
            }
        }
        // Some agent always covers an uncovered element, so the winner's
        // marginal coverage is positive and the loop strictly shrinks.
        debug_assert!(best > 0);
        uncovered &= !strategies[winner].bits();
        selected.push(winner);
    }
    Cover::new(selected)
}

/// The deterministic variant: greedy under the identity scan order.
pub fn deterministic_cover(joint: &JointStrategy) -> Cover {
    greedy_cover_unchecked(joint, &Permutation::identity(joint.agent_count()).order)
}

/// All minimum-cardinality agent sets whose strategies union to the effective
/// universe, by exhaustive search over the `2^m` agent subsets, in
/// lexicographic order of the index sets.
pub fn optimal_covers(joint: &JointStrategy) -> Vec<Vec<usize>> {
    let m = joint.agent_count();
    let target = joint.effective_universe();
    let mut best_size = usize::MAX;
    let mut best: Vec<Vec<usize>> = Vec::new();
    for subset in 0u32..(1u32 << m) {
        let size = subset.count_ones() as usize;
        if size > best_size {
            continue;
        }
        let mut union = crate::universe::ElementSet::EMPTY;
        for agent in 0..m {
            if subset & (1 << agent) != 0 {
                union = union.union(joint.strategy(agent));
            }
        }
        if !target.is_subset_of(union) {
            continue;
        }
        let agents: Vec<usize> = (0..m).filter(|a| subset & (1 << a) != 0).collect();
        if size < best_size {
            best_size = size;
            best = vec![agents];
        } else {
            best.push(agents);
        }
    }
    best.sort();
    best
}

/// `H(k)`, the harmonic number, in exact rationals: the classical bound on how
/// far a greedy cover can exceed the optimum.
pub fn harmonic(k: usize) -> Rational {
    (1..=k)
        .map(|j| Rational::from_ratio(1, j as u64).expect("j >= 1"))
        .sum()
}
