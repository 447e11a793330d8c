//! An engine for set-cover instance games.
//!
//! Agents each choose a subset of a shared element universe; the joint choice
//! is a set-cover instance, and a greedy algorithm selects which agents make
//! the cover. An agent earns `beta` when selected and pays `alpha` per chosen
//! element. Two variants differ only in the order the greedy algorithm scans
//! agents: a fixed identity order, or a uniformly random permutation (under
//! which utilities are expectations).
//!
//! The engine computes covers, exact cover distributions and selection
//! probabilities, exact utilities, best responses, and pure equilibria by
//! exhaustive search, and mechanically verifies a catalog of equilibrium
//! characterizations against that ground truth. All probabilities and
//! utilities are exact rationals; floating point appears only in the Monte
//! Carlo estimator.

mod error;
pub mod game;
pub mod greedy;
pub mod instance;
mod params;
mod rational;
pub mod rng;
pub mod stochastic;
mod strategy;
pub mod theorems;
mod universe;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use game::{
    best_responses, enumerate_nash, is_nash, utilities, utility, BestResponse, DeviationWitness,
    Limits, NashVerdict, Variant,
};
pub use greedy::{deterministic_cover, greedy_cover, harmonic, optimal_covers, Permutation};
pub use instance::{instance_json, parse_instance};
pub use params::GameParams;
pub use rational::Rational;
pub use stochastic::{
    cover_distribution, monte_carlo_probabilities, sample_cover, selection_probabilities,
    CoverDistribution, MonteCarloEstimate, DEFAULT_PERMUTATION_CAP,
};
pub use strategy::{Cover, JointStrategy};
pub use universe::{ElementSet, Universe, MAX_UNIVERSE};
