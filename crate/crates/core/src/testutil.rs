//! Shared fixtures for the unit tests.

use crate::strategy::JointStrategy;
use crate::universe::{ElementSet, Universe};

pub(crate) fn universe(n: usize) -> Universe {
    Universe::of_size(n).unwrap()
}

pub(crate) fn set(indices: &[usize], n: usize) -> ElementSet {
    ElementSet::from_indices(indices.iter().copied(), n).unwrap()
}

/// Builds a joint strategy over the default-labelled universe of size `n`.
pub(crate) fn joint(n: usize, strategies: &[&[usize]]) -> JointStrategy {
    JointStrategy::new(
        universe(n),
        strategies.iter().map(|s| set(s, n)).collect(),
    )
    .unwrap()
}

/// The four-agent fixture used throughout the suite:
/// S1 = {e1,e2}, S2 = {e2,e3}, S3 = {e3}, S4 = {e1} over three elements.
/// Its three optimal covers are {1,2}, {1,3}, {2,4} (1-based).
pub(crate) fn hiring() -> JointStrategy {
    joint(3, &[&[0, 1], &[1, 2], &[2], &[0]])
}
