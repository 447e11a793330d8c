//! Utilities, best responses, equilibrium checking, and exhaustive
//! equilibrium enumeration for both variants of the game.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::greedy::deterministic_cover;
use crate::params::GameParams;
use crate::rational::Rational;
use crate::stochastic::selection_counts;
use crate::strategy::JointStrategy;
use crate::universe::{ElementSet, Universe};

/// Which greedy variant resolves outcomes: the fixed identity scan order, or
/// a scan order drawn uniformly at random (in which case utilities are
/// expectations).
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Variant {
    Deterministic,
    NonDeterministic,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Deterministic => "deterministic",
            Variant::NonDeterministic => "nondeterministic",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d" | "det" | "deterministic" => Ok(Variant::Deterministic),
            "n" | "nondet" | "nondeterministic" | "non-deterministic" => {
                Ok(Variant::NonDeterministic)
            }
            other => Err(Error::InvalidRegime {
                detail: format!("unknown variant `{other}` (expected `d` or `n`)"),
            }),
        }
    }
}

/// Enumeration bounds. `permutation_cap` limits exact distribution runs to
/// `m <= cap`; `profile_budget` limits joint-strategy scans to `(2^n)^m`
/// profiles. Both are knobs, not hard truths about the algorithms.
#[derive(Debug, Clone)]
pub struct Limits {
    pub permutation_cap: usize,
    pub profile_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            permutation_cap: crate::stochastic::DEFAULT_PERMUTATION_CAP,
            profile_budget: 1 << 20,
        }
    }
}

/// A strict improvement refuting an equilibrium claim: `agent` gains by
/// switching `from -> to` while everyone else stands still.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeviationWitness {
    pub agent: usize,
    pub from: ElementSet,
    pub to: ElementSet,
    pub utility_before: Rational,
    pub utility_after: Rational,
}

/// Outcome of an equilibrium check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NashVerdict {
    Equilibrium,
    Deviation(DeviationWitness),
}

impl NashVerdict {
    pub fn is_equilibrium(&self) -> bool {
        matches!(self, NashVerdict::Equilibrium)
    }
}

/// The utility of one agent under the given profile: the selection benefit
/// (an indicator for the deterministic variant, a probability for the
/// random-order variant) scaled by `beta`, minus `alpha` per chosen element.
pub fn utility(
    joint: &JointStrategy,
    params: &GameParams,
    agent: usize,
    variant: Variant,
    limits: &Limits,
) -> Result<Rational> {
    Ok(utilities(joint, params, variant, limits)?.swap_remove(agent))
}

/// Utilities of every agent at once; the per-profile primitive everything
/// else builds on. One greedy run (deterministic) or one permutation
/// enumeration (random-order) covers all agents.
pub fn utilities(
    joint: &JointStrategy,
    params: &GameParams,
    variant: Variant,
    limits: &Limits,
) -> Result<Vec<Rational>> {
    let m = joint.agent_count();
    let benefits: Vec<Rational> = match variant {
        Variant::Deterministic => {
            let cover = deterministic_cover(joint);
            (0..m)
                .map(|agent| {
                    if cover.contains(agent) {
                        params.beta().clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        }
        Variant::NonDeterministic => {
            let (counts, total) = selection_counts(joint, limits.permutation_cap)?;
            counts
                .into_iter()
                .map(|c| Ok(params.beta() * &Rational::from_ratio(c, total)?))
                .collect::<Result<_>>()?
        }
    };
    Ok(benefits
        .into_iter()
        .enumerate()
        .map(|(agent, benefit)| {
            let size = joint.strategy(agent).len() as i64;
            benefit - params.alpha() * &Rational::from_integer(size)
        })
        .collect())
}

/// All utility-maximizing replacement strategies for one agent, holding the
/// others fixed, plus the optimum value. Every one of the `2^n` candidate
/// subsets is evaluated; ties are reported in full, in canonical set order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestResponse {
    pub strategies: Vec<ElementSet>,
    pub utility: Rational,
}

pub fn best_responses(
    joint: &JointStrategy,
    agent: usize,
    params: &GameParams,
    variant: Variant,
    limits: &Limits,
) -> Result<BestResponse> {
    let n = joint.universe().size();
    let mut best: Option<BestResponse> = None;
    for candidate in ElementSet::all_for_size(n) {
        let trial = joint.with_strategy(agent, candidate);
        let value = utility(&trial, params, agent, variant, limits)?;
        match &mut best {
            None => {
                best = Some(BestResponse { strategies: vec![candidate], utility: value });
            }
            Some(current) => {
                if value > current.utility {
                    current.utility = value;
                    current.strategies = vec![candidate];
                } else if value == current.utility {
                    current.strategies.push(candidate);
                }
            }
        }
    }
    Ok(best.expect("at least the empty set is always a candidate"))
}

/// Checks the equilibrium condition: no agent can strictly improve by any of
/// its `2^n` replacement strategies. On failure, reports the lowest-indexed
/// improving agent with the canonically-least strategy among its optimal
/// deviations.
pub fn is_nash(
    joint: &JointStrategy,
    params: &GameParams,
    variant: Variant,
    limits: &Limits,
) -> Result<NashVerdict> {
    let current = utilities(joint, params, variant, limits)?;
    for (agent, before) in current.iter().enumerate() {
        let response = best_responses(joint, agent, params, variant, limits)?;
        if response.utility > *before {
            return Ok(NashVerdict::Deviation(DeviationWitness {
                agent,
                from: joint.strategy(agent),
                to: response.strategies[0],
                utility_before: before.clone(),
                utility_after: response.utility,
            }));
        }
    }
    Ok(NashVerdict::Equilibrium)
}

/// Decodes profile number `k` (base `2^n`, agent 0 most significant) against
/// the canonical subset order, so ascending `k` is lexicographic profile
/// order.
fn decode_profile(k: u64, m: usize, subsets: &[ElementSet]) -> Vec<ElementSet> {
    let base = subsets.len() as u64;
    let mut digits = vec![ElementSet::EMPTY; m];
    let mut rest = k;
    for agent in (0..m).rev() {
        digits[agent] = subsets[(rest % base) as usize];
        rest /= base;
    }
    digits
}

/// Number of joint strategies for `m` agents over `n` elements: `(2^n)^m`.
pub fn profile_count(n: usize, m: usize) -> u128 {
    (1u128 << n).checked_pow(m as u32).unwrap_or(u128::MAX)
}

/// Exhaustively tests every joint strategy and returns the equilibria in
/// lexicographic order. With `dedup`, keeps one representative per
/// agent-relabeling orbit: the lexicographically least *equilibrium* in the
/// orbit. (For the deterministic variant an orbit can mix equilibria and
/// non-equilibria, because tie-breaking is positional; the representative is
/// always taken from the equilibria so that every returned profile passes
/// [`is_nash`].)
pub fn enumerate_nash(
    universe: &Universe,
    m: usize,
    params: &GameParams,
    variant: Variant,
    dedup: bool,
    limits: &Limits,
) -> Result<Vec<JointStrategy>> {
    let n = universe.size();
    let required = profile_count(n, m);
    if required > u128::from(limits.profile_budget) {
        return Err(Error::BudgetExceeded {
            required,
            budget: u128::from(limits.profile_budget),
        });
    }
    if variant == Variant::NonDeterministic && m > limits.permutation_cap {
        return Err(Error::PermutationCapExceeded { m, cap: limits.permutation_cap });
    }
    if m == 0 {
        return Err(Error::EmptyProfile);
    }

    let subsets = ElementSet::all_for_size(n);
    let total = required as u64;
    let mut hits: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|&k| {
            let joint = JointStrategy::new(
                universe.clone(),
                decode_profile(k, m, &subsets),
            )
            .expect("decoded profiles are valid by construction");
            is_nash(&joint, params, variant, limits)
                .expect("caps were validated before the scan")
                .is_equilibrium()
        })
        .collect();
    hits.sort_unstable();

    let mut out = Vec::with_capacity(hits.len());
    let mut seen_orbits: BTreeSet<Vec<ElementSet>> = BTreeSet::new();
    for k in hits {
        let joint = JointStrategy::new(universe.clone(), decode_profile(k, m, &subsets))
            .expect("decoded profiles are valid by construction");
        if dedup {
            let mut orbit_key = joint.strategies().to_vec();
            orbit_key.sort();
            if !seen_orbits.insert(orbit_key) {
                continue;
            }
        }
        out.push(joint);
    }
    Ok(out)
}
