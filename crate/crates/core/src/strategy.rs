//! Joint strategies (one subset per agent) and the covers produced from them.

use std::fmt;

use crate::error::{Error, Result};
use crate::universe::{ElementSet, Universe};

/// An ordered profile of one strategy per agent; doubles as a set-cover
/// instance over the union of the chosen subsets.
///
/// Agent identity is positional: two agents may hold identical sets and remain
/// distinct, and everything downstream (covers, utilities) refers to agents by
/// index. Indices are 0-based internally and 1-based in human-facing output.
#[derive(Clone, PartialEq, Eq)]
pub struct JointStrategy {
    universe: Universe,
    strategies: Vec<ElementSet>,
}

impl JointStrategy {
    pub fn new(universe: Universe, strategies: Vec<ElementSet>) -> Result<Self> {
        if strategies.is_empty() {
            return Err(Error::EmptyProfile);
        }
        let n = universe.size();
        for set in &strategies {
            if !set.valid_for(n) {
                let index = set.iter().last().unwrap_or(0);
                return Err(Error::ElementOutOfRange { index, n });
            }
        }
        Ok(JointStrategy { universe, strategies })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Number of agents `m`.
    pub fn agent_count(&self) -> usize {
        self.strategies.len()
    }

    pub fn strategies(&self) -> &[ElementSet] {
        &self.strategies
    }

    pub fn strategy(&self, agent: usize) -> ElementSet {
        self.strategies[agent]
    }

    /// Copy of this profile with one agent's strategy replaced.
    pub fn with_strategy(&self, agent: usize, strategy: ElementSet) -> Self {
        let mut strategies = self.strategies.clone();
        strategies[agent] = strategy;
        JointStrategy { universe: self.universe.clone(), strategies }
    }

    /// The effective universe: the union of all agents' strategies, i.e. the
    /// element set a cover must actually reach. May be a strict subset of the
    /// universe, or empty.
    pub fn effective_universe(&self) -> ElementSet {
        self.strategies
            .iter()
            .fold(ElementSet::EMPTY, |acc, s| acc.union(*s))
    }

    /// Strategies rendered as label lists, for reports.
    pub fn to_labels(&self) -> Vec<Vec<String>> {
        self.strategies
            .iter()
            .map(|s| s.labels(&self.universe))
            .collect()
    }
}

impl fmt::Debug for JointStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.strategies.iter()).finish()
    }
}

/// The outcome of one greedy run: agent indices in selection order.
///
/// Every selected agent contributed at least one then-uncovered element, the
/// indices are distinct, and their sets union to the effective universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    selected: Vec<usize>,
}

impl Cover {
    pub(crate) fn new(selected: Vec<usize>) -> Self {
        Cover { selected }
    }

    /// Agents in the order the greedy algorithm picked them.
    pub fn selection_order(&self) -> &[usize] {
        &self.selected
    }

    /// The selected agents as a sorted index set. Membership in this set is
    /// what utilities reward: order is an artifact of the run, not of the
    /// outcome.
    pub fn agent_set(&self) -> Vec<usize> {
        let mut agents = self.selected.clone();
        agents.sort_unstable();
        agents
    }

    pub fn contains(&self, agent: usize) -> bool {
        self.selected.contains(&agent)
    }

    pub fn len(&self) -> usize {
        self.selected.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selected.is_empty()
    }
}
