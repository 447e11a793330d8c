//! The element universe and bitmask-encoded subsets of it.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Hard ceiling on universe size so full strategy-space enumeration (2^n per
/// agent) stays tractable and a subset fits in one machine word.
pub const MAX_UNIVERSE: usize = 16;

/// The ground set of `n` elements, with optional display labels.
///
/// Unlabeled universes name their elements `e1`..`en`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    n: usize,
    labels: Option<Vec<String>>,
}

impl Universe {
    /// Universe of `n` elements with the default labels.
    pub fn of_size(n: usize) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge { n, max: MAX_UNIVERSE });
        }
        Ok(Universe { n, labels: None })
    }

    /// Universe whose elements carry the given pairwise-distinct labels.
    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge { n, max: MAX_UNIVERSE });
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel { label: label.clone() });
            }
        }
        Ok(Universe { n, labels: Some(labels) })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn label(&self, index: usize) -> String {
        debug_assert!(index < self.n);
        match &self.labels {
            Some(labels) => labels[index].clone(),
            None => format!("e{}", index + 1),
        }
    }

    /// Index of the element with this label, if any.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => {
                let rest = label.strip_prefix('e')?;
                let k: usize = rest.parse().ok()?;
                (1..=self.n).contains(&k).then(|| k - 1)
            }
        }
    }

    /// The subset containing every element.
    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }
}

/// A subset of the universe, encoded as a bitmask over element indices.
///
/// Ordering is lexicographic on the sorted element sequence, so
/// `{} < {e1} < {e1,e2} < {e2}`; this is the canonical order used for
/// deterministic enumeration and reporting throughout the engine.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u16);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_UNIVERSE);
        if n == 0 {
            ElementSet(0)
        } else {
            ElementSet(((1u32 << n) - 1) as u16)
        }
    }

    /// Raw bitmask constructor; callers must have validated the width.
    pub fn from_bits(bits: u16) -> Self {
        ElementSet(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I, n: usize) -> Result<Self> {
        let mut bits = 0u16;
        for index in indices {
            if index >= n {
                return Err(Error::ElementOutOfRange { index, n });
            }
            bits |= 1 << index;
        }
        Ok(ElementSet(bits))
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        index < 16 && self.0 & (1 << index) != 0
    }

    pub fn with(self, index: usize) -> Self {
        debug_assert!(index < 16);
        ElementSet(self.0 | (1 << index))
    }

    pub fn union(self, other: ElementSet) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSet) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn is_subset_of(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// Fits within a universe of `n` elements.
    pub fn valid_for(self, n: usize) -> bool {
        u32::from(self.0) < (1u32 << n)
    }

    pub fn labels(self, universe: &Universe) -> Vec<String> {
        self.iter().map(|i| universe.label(i)).collect()
    }

    /// Every subset of an `n`-element universe in the canonical order.
    pub fn all_for_size(n: usize) -> Vec<ElementSet> {
        debug_assert!(n <= MAX_UNIVERSE);
        let mut sets: Vec<ElementSet> = (0..(1u32 << n)).map(|b| ElementSet(b as u16)).collect();
        sets.sort();
        sets
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "e{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_caps_size() {
        assert!(Universe::of_size(16).is_ok());
        assert!(Universe::of_size(17).is_err());
    }

    #[test]
    fn labels_must_be_distinct_and_resolve() {
        let labels = vec!["alpha".into(), "beta".into(), "gamma".into()];
        let u = Universe::with_labels(labels).unwrap();
        assert_eq!(u.index_of("beta"), Some(1));
        assert_eq!(u.index_of("delta"), None);

        let dup = Universe::with_labels(vec!["x".into(), "x".into()]);
        assert!(dup.is_err());
    }

    #[test]
    fn default_labels_resolve_one_based() {
        let u = Universe::of_size(3).unwrap();
        assert_eq!(u.label(0), "e1");
        assert_eq!(u.index_of("e3"), Some(2));
        assert_eq!(u.index_of("e4"), None);
        assert_eq!(u.index_of("e0"), None);
    }

    #[test]
    fn element_set_rejects_out_of_range() {
        assert!(ElementSet::from_indices([2], 2).is_err());
        let s = ElementSet::from_indices([0, 1], 2).unwrap();
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn ordering_is_lexicographic_on_sorted_elements() {
        let n = 2;
        let all = ElementSet::all_for_size(n);
        let as_lists: Vec<Vec<usize>> = all.iter().map(|s| s.iter().collect()).collect();
        assert_eq!(
            as_lists,
            vec![vec![], vec![0], vec![0, 1], vec![1]],
        );
    }
}
