//! Mechanical verification of equilibrium characterizations.
//!
//! Each claim in the catalog is a predicate over joint strategies together
//! with a parameter-regime hypothesis. The harness compares the predicate
//! against brute-force ground truth from [`enumerate_nash`] and reports
//! `confirmed`, `refuted` (with every disagreeing profile as a witness), or
//! `vacuous` (hypothesis unmet). Refutation is a first-class outcome: the
//! harness surfaces discrepancies, it does not assume the claims.
//!
//! The claim catalog, stated by content:
//!
//! - `T1.1` fixed order, `alpha > beta`: the all-empty profile is the unique
//!   equilibrium.
//! - `T1.2` fixed order, `beta/2 <= alpha < beta`: equilibria place
//!   `min(m, n)` pairwise-distinct singletons and leave the rest empty. The
//!   *strict* reading pins the singletons to the first `min(m, n)` agents;
//!   the *permissive* reading allows any agents. The readings genuinely
//!   differ: an empty agent scanning ahead of a singleton holder can grab
//!   that holder's element and win the tie.
//! - `T1.3` fixed order, `alpha = beta`: up to `min(m, n)` distinct
//!   singletons, every other agent empty.
//! - `T2` fixed order, `m > n`, `alpha < beta/2`: no pure equilibrium exists
//!   (the always-false predicate).
//! - `T3.1` random order, `m <= n`, `alpha <= beta`: distinct singletons,
//!   with empty strategies possible only at `alpha = beta`.
//! - `T3.2` random order, `m > n`, `alpha = beta/2`: the paired-singleton
//!   construction (all elements covered, each by at most two singleton
//!   agents, with either no empty agents or every covered element doubled)
//!   is an equilibrium family. Verified soundness-first; equilibria outside
//!   the family are reported rather than treated as refutations.
//! - `T3.3` random order, integer `rho >= 2` with `m > rho*n` and
//!   `beta/((1+rho)n) < alpha <= beta/(rho*n)`: equilibria are `rho` agents
//!   holding the full universe and the rest empty; `rho - 1` full agents
//!   also qualify exactly on the right boundary `alpha = beta/(rho*n)` when
//!   `rho >= 3`.
//! - `L1` fixed order: equilibria have pairwise-disjoint strategies.
//! - `L2` fixed order: equilibria never contain a strategy with more than
//!   one element.
//! - `L3` random order, `alpha < beta/2`, `m > n`: any agent selected with
//!   probability strictly between 0 and 1 holds the full universe.
//! - `C1` random order: an equilibrium containing a full-universe strategy
//!   has every other strategy full or empty.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{enumerate_nash, is_nash, profile_count, Limits, Variant};
use crate::params::GameParams;
use crate::rational::Rational;
use crate::stochastic::selection_counts;
use crate::strategy::JointStrategy;
use crate::universe::{ElementSet, Universe};

/// Identifier of one verifiable claim.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(non_camel_case_types)]
pub enum ClaimId {
    T1_1,
    T1_2,
    T1_3,
    T2,
    T3_1,
    T3_2,
    T3_3,
    L1,
    L2,
    L3,
    C1,
}

impl ClaimId {
    pub const ALL: [ClaimId; 11] = [
        ClaimId::T1_1,
        ClaimId::T1_2,
        ClaimId::T1_3,
        ClaimId::T2,
        ClaimId::T3_1,
        ClaimId::T3_2,
        ClaimId::T3_3,
        ClaimId::L1,
        ClaimId::L2,
        ClaimId::L3,
        ClaimId::C1,
    ];

    /// How the predicate relates to ground truth.
    pub fn kind(self) -> ClaimKind {
        match self {
            ClaimId::T1_1 | ClaimId::T1_2 | ClaimId::T1_3 | ClaimId::T2 | ClaimId::T3_1
            | ClaimId::T3_3 => ClaimKind::Equality,
            ClaimId::T3_2 => ClaimKind::Existence,
            ClaimId::L1 | ClaimId::L2 | ClaimId::L3 | ClaimId::C1 => ClaimKind::Necessary,
        }
    }

    pub fn variant(self) -> Variant {
        match self {
            ClaimId::T1_1 | ClaimId::T1_2 | ClaimId::T1_3 | ClaimId::T2 | ClaimId::L1
            | ClaimId::L2 => Variant::Deterministic,
            _ => Variant::NonDeterministic,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClaimId::T1_1 => "T1.1",
            ClaimId::T1_2 => "T1.2",
            ClaimId::T1_3 => "T1.3",
            ClaimId::T2 => "T2",
            ClaimId::T3_1 => "T3.1",
            ClaimId::T3_2 => "T3.2",
            ClaimId::T3_3 => "T3.3",
            ClaimId::L1 => "L1",
            ClaimId::L2 => "L2",
            ClaimId::L3 => "L3",
            ClaimId::C1 => "C1",
        };
        f.write_str(s)
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T1.1" => Ok(ClaimId::T1_1),
            "T1.2" => Ok(ClaimId::T1_2),
            "T1.3" => Ok(ClaimId::T1_3),
            "T2" => Ok(ClaimId::T2),
            "T3.1" => Ok(ClaimId::T3_1),
            "T3.2" => Ok(ClaimId::T3_2),
            "T3.3" => Ok(ClaimId::T3_3),
            "L1" => Ok(ClaimId::L1),
            "L2" => Ok(ClaimId::L2),
            "L3" => Ok(ClaimId::L3),
            "C1" => Ok(ClaimId::C1),
            _ => Err(Error::UnknownClaim { input: s.to_string() }),
        }
    }
}

/// Equality claims assert `E = P`; necessary-condition claims assert
/// `E ⊆ P`; existence claims assert that `P`'s profiles are equilibria.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum ClaimKind {
    Equality,
    Necessary,
    Existence,
}

/// Which reading of the positional claim `T1.2` to verify.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Default)]
pub enum Reading {
    /// Any `min(m, n)` agents may hold the singletons.
    #[default]
    Permissive,
    /// The first `min(m, n)` agents hold the singletons.
    Strict,
}

/// How to compare the predicate against ground truth.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Default)]
pub enum CheckMode {
    /// Two-sided within budget; existence claims and over-budget `T3.3`
    /// runs fall back to soundness.
    #[default]
    Auto,
    /// Full `E = P` (or `E ⊆ P`) comparison over the whole profile space.
    TwoSided,
    /// Check only that predicate-accepted profiles are equilibria.
    Soundness,
}

/// The mode a verification actually ran in.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum RanMode {
    TwoSided,
    Soundness,
    Skipped,
}

impl fmt::Display for RanMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RanMode::TwoSided => "two-sided",
            RanMode::Soundness => "soundness",
            RanMode::Skipped => "skipped",
        })
    }
}

/// A fully specified parameter point at which a claim is checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterRegime {
    pub n: usize,
    pub m: usize,
    pub alpha: Rational,
    pub beta: Rational,
    pub variant: Variant,
    pub rho: Option<u64>,
}

impl ParameterRegime {
    pub fn new(
        n: usize,
        m: usize,
        alpha: Rational,
        beta: Rational,
        variant: Variant,
    ) -> Result<Self> {
        let regime = ParameterRegime { n, m, alpha, beta, variant, rho: None };
        regime.validate()?;
        Ok(regime)
    }

    pub fn with_rho(mut self, rho: u64) -> Result<Self> {
        self.rho = Some(rho);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::InvalidRegime { detail: "m must be at least 1".into() });
        }
        if !self.alpha.is_positive() || !self.beta.is_positive() {
            return Err(Error::InvalidRegime {
                detail: "alpha and beta must be strictly positive".into(),
            });
        }
        if let Some(rho) = self.rho {
            if self.variant != Variant::NonDeterministic {
                return Err(Error::InvalidRegime {
                    detail: "rho applies only to the random-order variant".into(),
                });
            }
            if rho < 2 {
                return Err(Error::InvalidRegime { detail: "rho must be at least 2".into() });
            }
            if self.n == 0 || self.m <= (rho as usize) * self.n {
                return Err(Error::InvalidRegime {
                    detail: format!("rho = {rho} requires m > rho * n"),
                });
            }
            let rho_n = Rational::from_integer((rho as i64) * self.n as i64);
            let next_n = Rational::from_integer((rho as i64 + 1) * self.n as i64);
            let upper = &self.beta / &rho_n;
            let lower = &self.beta / &next_n;
            if !(self.alpha > lower && self.alpha <= upper) {
                return Err(Error::InvalidRegime {
                    detail: format!(
                        "alpha = {} is outside the rho = {rho} band ({lower}, {upper}]",
                        self.alpha
                    ),
                });
            }
        }
        Ok(())
    }

    pub fn params(&self) -> Result<GameParams> {
        GameParams::new(self.alpha.clone(), self.beta.clone())
    }

    pub fn universe(&self) -> Result<Universe> {
        Universe::of_size(self.n)
    }

    fn half_beta(&self) -> Rational {
        &self.beta / &Rational::from_integer(2)
    }

    /// The unique band index `rho = floor(beta / (alpha * n))`, when it is a
    /// meaningful one: at least 2, with `m > rho * n`.
    pub fn derived_rho(&self) -> Option<u64> {
        if self.n == 0 {
            return None;
        }
        let ratio = &self.beta / &(&self.alpha * &Rational::from_integer(self.n as i64));
        let floor = ratio.floor_integer();
        let rho = u64::try_from(floor).ok()?;
        (rho >= 2 && self.m > (rho as usize) * self.n).then_some(rho)
    }
}

/// Why a regime fails a claim's hypothesis, or the effective `rho` when the
/// hypothesis holds.
fn hypothesis(claim: ClaimId, regime: &ParameterRegime) -> std::result::Result<Option<u64>, String> {
    if regime.variant != claim.variant() {
        return Err(format!(
            "claim {claim} concerns the {} variant",
            claim.variant().as_str()
        ));
    }
    let (n, m) = (regime.n, regime.m);
    let (alpha, beta) = (&regime.alpha, &regime.beta);
    let half = regime.half_beta();
    match claim {
        ClaimId::T1_1 => (alpha > beta)
            .then_some(None)
            .ok_or_else(|| "requires alpha > beta".into()),
        ClaimId::T1_2 => (*alpha >= half && alpha < beta)
            .then_some(None)
            .ok_or_else(|| "requires beta/2 <= alpha < beta".into()),
        ClaimId::T1_3 => (alpha == beta)
            .then_some(None)
            .ok_or_else(|| "requires alpha = beta".into()),
        ClaimId::T2 => (m > n && *alpha < half)
            .then_some(None)
            .ok_or_else(|| "requires m > n and alpha < beta/2".into()),
        ClaimId::T3_1 => (m <= n && alpha <= beta)
            .then_some(None)
            .ok_or_else(|| "requires m <= n and alpha <= beta".into()),
        ClaimId::T3_2 => (m > n && *alpha == half)
            .then_some(None)
            .ok_or_else(|| "requires m > n and alpha = beta/2".into()),
        ClaimId::T3_3 => {
            let derived = regime.derived_rho();
            if let (Some(stated), Some(found)) = (regime.rho, derived) {
                if stated != found {
                    return Err(format!("stated rho = {stated} but parameters give {found}"));
                }
            }
            derived.map(Some).ok_or_else(|| {
                "requires an integer rho >= 2 with m > rho*n and \
                 beta/((1+rho)n) < alpha <= beta/(rho*n)"
                    .into()
            })
        }
        ClaimId::L1 | ClaimId::L2 => Ok(None),
        ClaimId::L3 => (m > n && *alpha < half)
            .then_some(None)
            .ok_or_else(|| "requires m > n and alpha < beta/2".into()),
        ClaimId::C1 => Ok(None),
    }
}

/// A decidable predicate over joint strategies.
pub struct Predicate(Box<dyn Fn(&JointStrategy) -> bool + Send + Sync>);

impl Predicate {
    pub fn accepts(&self, joint: &JointStrategy) -> bool {
        (self.0)(joint)
    }
}

fn all_singleton_or_empty(joint: &JointStrategy) -> bool {
    joint.strategies().iter().all(|s| s.len() <= 1)
}

/// Element multiplicities across all strategies (not just singletons).
fn element_counts(joint: &JointStrategy) -> Vec<usize> {
    let n = joint.universe().size();
    let mut counts = vec![0usize; n];
    for s in joint.strategies() {
        for e in s.iter() {
            counts[e] += 1;
        }
    }
    counts
}

fn singletons_pairwise_distinct(joint: &JointStrategy) -> bool {
    element_counts(joint).iter().all(|&c| c <= 1)
}

fn distinct_singleton_profile(joint: &JointStrategy, exact_count: Option<usize>) -> bool {
    if !all_singleton_or_empty(joint) || !singletons_pairwise_distinct(joint) {
        return false;
    }
    match exact_count {
        Some(k) => joint.strategies().iter().filter(|s| s.len() == 1).count() == k,
        None => true,
    }
}

/// Builds the profile predicate for a claim at a regime. The regime must
/// satisfy the claim's hypothesis (checked by [`verify`]; the predicate
/// itself trusts its inputs).
pub fn characterize(
    claim: ClaimId,
    regime: &ParameterRegime,
    reading: Reading,
) -> Result<Predicate> {
    regime.validate()?;
    let n = regime.n;
    let m = regime.m;
    let ell_1 = m.min(n);
    let full = ElementSet::full(n);
    let permutation_cap = Limits::default().permutation_cap.max(m);

    let f: Box<dyn Fn(&JointStrategy) -> bool + Send + Sync> = match claim {
        ClaimId::T1_1 => Box::new(|j| j.strategies().iter().all(|s| s.is_empty())),
        ClaimId::T1_2 => match reading {
            Reading::Permissive => {
                Box::new(move |j| distinct_singleton_profile(j, Some(ell_1)))
            }
            Reading::Strict => Box::new(move |j| {
                let lead = &j.strategies()[..ell_1];
                lead.iter().all(|s| s.len() == 1)
                    && j.strategies()[ell_1..].iter().all(|s| s.is_empty())
                    && singletons_pairwise_distinct(j)
            }),
        },
        ClaimId::T1_3 => Box::new(|j| distinct_singleton_profile(j, None)),
        ClaimId::T2 => Box::new(|_| false),
        ClaimId::T3_1 => {
            if regime.alpha == regime.beta {
                Box::new(|j| distinct_singleton_profile(j, None))
            } else {
                // alpha < beta: every agent grabs an element, so no empties.
                Box::new(move |j| distinct_singleton_profile(j, Some(m)))
            }
        }
        ClaimId::T3_2 => Box::new(move |j| {
            if !all_singleton_or_empty(j) {
                return false;
            }
            let counts = element_counts(j);
            if counts.iter().any(|&c| c == 0 || c > 2) {
                return false;
            }
            let empties = j.strategies().iter().filter(|s| s.is_empty()).count();
            empties == 0 || counts.iter().all(|&c| c == 2)
        }),
        ClaimId::T3_3 => {
            let rho = regime
                .rho
                .or_else(|| regime.derived_rho())
                .ok_or_else(|| Error::InvalidRegime {
                    detail: "no valid rho for this regime".into(),
                })? as usize;
            let boundary = regime.alpha
                == &regime.beta / &Rational::from_integer((rho * n) as i64);
            let allow_one_less = rho >= 3 && boundary;
            Box::new(move |j| {
                let full_count = j.strategies().iter().filter(|s| **s == full).count();
                let empty_count = j.strategies().iter().filter(|s| s.is_empty()).count();
                if full_count + empty_count != m {
                    return false;
                }
                full_count == rho || (allow_one_less && full_count == rho - 1)
            })
        }
        ClaimId::L1 => Box::new(|j| {
            let strategies = j.strategies();
            for (i, a) in strategies.iter().enumerate() {
                for b in &strategies[i + 1..] {
                    if !a.intersection(*b).is_empty() {
                        return false;
                    }
                }
            }
            true
        }),
        ClaimId::L2 => Box::new(all_singleton_or_empty),
        ClaimId::L3 => Box::new(move |j| {
            let (counts, total) = selection_counts(j, permutation_cap)
                .expect("permutation cap was widened to cover m");
            j.strategies().iter().zip(&counts).all(|(s, &c)| {
                let fractional = c > 0 && c < total;
                !fractional || *s == full
            })
        }),
        ClaimId::C1 => Box::new(move |j| {
            if !j.strategies().contains(&full) {
                return true;
            }
            j.strategies().iter().all(|s| *s == full || s.is_empty())
        }),
    };
    Ok(Predicate(f))
}

/// Constructively generates the profiles accepted by the `T3.2` and `T3.3`
/// predicates, so soundness checks can run without scanning the whole
/// profile space. Output is in lexicographic profile order.
fn generate_family(
    claim: ClaimId,
    regime: &ParameterRegime,
) -> Result<Option<Vec<JointStrategy>>> {
    let universe = regime.universe()?;
    let n = regime.n;
    let m = regime.m;
    match claim {
        ClaimId::T3_3 => {
            let rho = regime
                .rho
                .or_else(|| regime.derived_rho())
                .ok_or_else(|| Error::InvalidRegime {
                    detail: "no valid rho for this regime".into(),
                })? as usize;
            let boundary = regime.alpha
                == &regime.beta / &Rational::from_integer((rho * n) as i64);
            let mut sizes = vec![rho];
            if rho >= 3 && boundary {
                sizes.push(rho - 1);
            }
            let full = ElementSet::full(n);
            let mut profiles = Vec::new();
            for k in sizes {
                for choice in combinations(m, k) {
                    let strategies = (0..m)
                        .map(|a| if choice.contains(&a) { full } else { ElementSet::EMPTY })
                        .collect();
                    profiles.push(JointStrategy::new(universe.clone(), strategies)?);
                }
            }
            profiles.sort_by(|a, b| a.strategies().cmp(b.strategies()));
            Ok(Some(profiles))
        }
        ClaimId::T3_2 => {
            // Multisets: d = min(n, m - n) doubled elements, the other
            // elements single, the remaining m - n - d agents empty.
            let d = n.min(m - n);
            let mut profiles = Vec::new();
            for doubled in combinations(n, d) {
                let mut items: Vec<(ElementSet, usize)> = Vec::new();
                for e in 0..n {
                    let count = if doubled.contains(&e) { 2 } else { 1 };
                    items.push((ElementSet::EMPTY.with(e), count));
                }
                let empties = m - n - d;
                if empties > 0 {
                    items.push((ElementSet::EMPTY, empties));
                }
                items.sort_by_key(|item| item.0);
                let mut current = Vec::with_capacity(m);
                arrangements(&mut items, &mut current, m, &mut |strategies| {
                    profiles.push(
                        JointStrategy::new(universe.clone(), strategies.to_vec())
                            .expect("generated strategies are valid"),
                    );
                });
            }
            profiles.sort_by(|a, b| a.strategies().cmp(b.strategies()));
            Ok(Some(profiles))
        }
        _ => Ok(None),
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn recurse(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            recurse(i + 1, n, k, current, out);
            current.pop();
        }
    }
    recurse(0, n, k, &mut current, &mut out);
    out
}

/// Every distinct arrangement of a strategy multiset across `m` agents.
fn arrangements(
    items: &mut Vec<(ElementSet, usize)>,
    current: &mut Vec<ElementSet>,
    m: usize,
    emit: &mut impl FnMut(&[ElementSet]),
) {
    if current.len() == m {
        emit(current);
        return;
    }
    for i in 0..items.len() {
        if items[i].1 == 0 {
            continue;
        }
        items[i].1 -= 1;
        current.push(items[i].0);
        arrangements(items, current, m, emit);
        current.pop();
        items[i].1 += 1;
    }
}

/// The status of one verification run.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum VerdictStatus {
    Confirmed,
    Refuted,
    Vacuous,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictStatus::Confirmed => "confirmed",
            VerdictStatus::Refuted => "refuted",
            VerdictStatus::Vacuous => "vacuous",
        })
    }
}

/// The outcome of checking one claim at one regime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub claim: ClaimId,
    pub regime: ParameterRegime,
    pub reading: Reading,
    pub mode: RanMode,
    pub status: VerdictStatus,
    /// Profiles where predicate and ground truth disagree.
    pub witnesses: Vec<JointStrategy>,
    /// Ground-truth equilibria, when an enumeration ran (two-sided runs and
    /// in-budget vacuous surveys).
    pub equilibria: Option<Vec<JointStrategy>>,
    /// Equilibria outside an existence family; informational, not witnesses.
    pub unpredicted: Vec<JointStrategy>,
}

fn within_scan_budget(regime: &ParameterRegime, limits: &Limits) -> bool {
    let required = profile_count(regime.n, regime.m);
    let cap_ok = regime.variant == Variant::Deterministic
        || regime.m <= limits.permutation_cap;
    required <= u128::from(limits.profile_budget) && cap_ok
}

/// Scans the whole profile space once, classifying each profile as
/// equilibrium and/or predicate-accepted. Returns `(equilibria, accepted)`
/// in lexicographic order.
fn scan_space(
    regime: &ParameterRegime,
    predicate: &Predicate,
    limits: &Limits,
) -> Result<(Vec<JointStrategy>, Vec<JointStrategy>)> {
    let universe = regime.universe()?;
    let params = regime.params()?;
    let required = profile_count(regime.n, regime.m);
    if required > u128::from(limits.profile_budget) {
        return Err(Error::BudgetExceeded {
            required,
            budget: u128::from(limits.profile_budget),
        });
    }
    if regime.variant == Variant::NonDeterministic && regime.m > limits.permutation_cap {
        return Err(Error::PermutationCapExceeded { m: regime.m, cap: limits.permutation_cap });
    }
    let subsets = ElementSet::all_for_size(regime.n);
    let m = regime.m;
    let total = required as u64;
    let mut classified: Vec<(u64, bool, bool)> = (0..total)
        .into_par_iter()
        .filter_map(|k| {
            let strategies = decode(k, m, &subsets);
            let joint = JointStrategy::new(universe.clone(), strategies)
                .expect("decoded profiles are valid");
            let nash = is_nash(&joint, &params, regime.variant, limits)
                .expect("caps were validated before the scan")
                .is_equilibrium();
            let accepted = predicate.accepts(&joint);
            (nash || accepted).then_some((k, nash, accepted))
        })
        .collect();
    classified.sort_unstable_by_key(|&(k, _, _)| k);

    let mut equilibria = Vec::new();
    let mut accepted = Vec::new();
    for (k, nash, acc) in classified {
        let joint = JointStrategy::new(universe.clone(), decode(k, m, &subsets))
            .expect("decoded profiles are valid");
        if nash {
            equilibria.push(joint.clone());
        }
        if acc {
            accepted.push(joint);
        }
    }
    Ok((equilibria, accepted))
}

fn decode(k: u64, m: usize, subsets: &[ElementSet]) -> Vec<ElementSet> {
    let base = subsets.len() as u64;
    let mut digits = vec![ElementSet::EMPTY; m];
    let mut rest = k;
    for agent in (0..m).rev() {
        digits[agent] = subsets[(rest % base) as usize];
        rest /= base;
    }
    digits
}

/// Verifies one claim at one regime, comparing its predicate against
/// brute-force ground truth.
pub fn verify(
    claim: ClaimId,
    regime: &ParameterRegime,
    reading: Reading,
    mode: CheckMode,
    limits: &Limits,
) -> Result<TheoremVerdict> {
    regime.validate()?;
    if hypothesis(claim, regime).is_err() {
        // Hypothesis unmet: no claim to check, but report ground truth when
        // it is cheap, so uncovered regimes still get surveyed.
        let equilibria = if within_scan_budget(regime, limits) {
            Some(enumerate_nash(
                &regime.universe()?,
                regime.m,
                &regime.params()?,
                regime.variant,
                false,
                limits,
            )?)
        } else {
            None
        };
        return Ok(TheoremVerdict {
            claim,
            regime: regime.clone(),
            reading,
            mode: RanMode::Skipped,
            status: VerdictStatus::Vacuous,
            witnesses: Vec::new(),
            equilibria,
            unpredicted: Vec::new(),
        });
    }

    let predicate = characterize(claim, regime, reading)?;
    let effective = match (claim.kind(), mode) {
        (ClaimKind::Existence, CheckMode::Auto) => CheckMode::Soundness,
        (ClaimKind::Equality, CheckMode::Auto) => {
            if within_scan_budget(regime, limits) {
                CheckMode::TwoSided
            } else if claim == ClaimId::T3_3 {
                CheckMode::Soundness
            } else {
                CheckMode::TwoSided // will surface the budget error below
            }
        }
        (ClaimKind::Necessary, _) => CheckMode::TwoSided,
        (_, chosen) => chosen,
    };

    match effective {
        CheckMode::TwoSided | CheckMode::Auto => {
            let (equilibria, accepted) = scan_space(regime, &predicate, limits)?;
            // E \ P and P \ E, each already in lexicographic profile order.
            let missing: Vec<JointStrategy> = equilibria
                .iter()
                .filter(|j| !accepted.contains(j))
                .cloned()
                .collect();
            let unstable: Vec<JointStrategy> = accepted
                .iter()
                .filter(|j| !equilibria.contains(j))
                .cloned()
                .collect();
            let (witnesses, unpredicted) = match claim.kind() {
                ClaimKind::Equality => {
                    let mut w = missing;
                    w.extend(unstable);
                    w.sort_by(|a, b| a.strategies().cmp(b.strategies()));
                    (w, Vec::new())
                }
                ClaimKind::Necessary => (missing, Vec::new()),
                // Existence: only unsound members refute; equilibria outside
                // the family are informational.
                ClaimKind::Existence => (unstable, missing),
            };
            Ok(TheoremVerdict {
                claim,
                regime: regime.clone(),
                reading,
                mode: RanMode::TwoSided,
                status: if witnesses.is_empty() {
                    VerdictStatus::Confirmed
                } else {
                    VerdictStatus::Refuted
                },
                witnesses,
                equilibria: Some(equilibria),
                unpredicted,
            })
        }
        CheckMode::Soundness => {
            let params = regime.params()?;
            let family = match generate_family(claim, regime)? {
                Some(family) => family,
                None => {
                    // Fall back to filtering a full scan by the predicate.
                    let (_, accepted) = scan_space(regime, &predicate, limits)?;
                    accepted
                }
            };
            let mut witnesses = Vec::new();
            for joint in &family {
                if !is_nash(joint, &params, regime.variant, limits)?.is_equilibrium() {
                    witnesses.push(joint.clone());
                }
            }
            // Informational extras when a full enumeration is affordable.
            let (equilibria, unpredicted) = if within_scan_budget(regime, limits) {
                let all = enumerate_nash(
                    &regime.universe()?,
                    regime.m,
                    &params,
                    regime.variant,
                    false,
                    limits,
                )?;
                let extra: Vec<JointStrategy> = all
                    .iter()
                    .filter(|j| !predicate.accepts(j))
                    .cloned()
                    .collect();
                (Some(all), extra)
            } else {
                (None, Vec::new())
            };
            Ok(TheoremVerdict {
                claim,
                regime: regime.clone(),
                reading,
                mode: RanMode::Soundness,
                status: if witnesses.is_empty() {
                    VerdictStatus::Confirmed
                } else {
                    VerdictStatus::Refuted
                },
                witnesses,
                equilibria,
                unpredicted,
            })
        }
    }
}

/// One entry of a suite configuration file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegimeSpec {
    pub claim: String,
    pub n: usize,
    pub m: usize,
    pub alpha: String,
    pub beta: String,
    pub variant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reading: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
}

impl RegimeSpec {
    pub fn resolve(&self) -> Result<(ClaimId, ParameterRegime, Reading, CheckMode)> {
        let claim: ClaimId = self.claim.parse()?;
        let mut regime = ParameterRegime::new(
            self.n,
            self.m,
            self.alpha.parse()?,
            self.beta.parse()?,
            self.variant.parse()?,
        )?;
        if let Some(rho) = self.rho {
            regime = regime.with_rho(rho)?;
        }
        let reading = match self.reading.as_deref() {
            None => Reading::default(),
            Some("permissive") => Reading::Permissive,
            Some("strict") => Reading::Strict,
            Some(other) => {
                return Err(Error::InvalidRegime {
                    detail: format!("unknown reading `{other}`"),
                })
            }
        };
        let mode = match self.mode.as_deref() {
            None => CheckMode::Auto,
            Some("auto") => CheckMode::Auto,
            Some("two-sided") => CheckMode::TwoSided,
            Some("soundness") => CheckMode::Soundness,
            Some(other) => {
                return Err(Error::InvalidRegime {
                    detail: format!("unknown mode `{other}`"),
                })
            }
        };
        Ok((claim, regime, reading, mode))
    }
}

/// A suite configuration: the grid of (claim, regime) pairs to verify.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub regimes: Vec<RegimeSpec>,
}

impl SuiteConfig {
    pub fn from_json(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }
}

/// One row of a suite report: the verdict, or the error that prevented it.
#[derive(Debug)]
pub struct SuiteRow {
    pub spec: RegimeSpec,
    pub outcome: std::result::Result<TheoremVerdict, String>,
    pub wall: std::time::Duration,
}

/// The aggregated result of running a whole suite configuration.
#[derive(Debug)]
pub struct SuiteReport {
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn any_refuted(&self) -> bool {
        self.rows.iter().any(|row| {
            matches!(
                &row.outcome,
                Ok(v) if v.status == VerdictStatus::Refuted
            )
        })
    }

    pub fn any_error(&self) -> bool {
        self.rows.iter().any(|row| row.outcome.is_err())
    }
}

/// Runs every configured check. Regimes run independently in parallel;
/// per-regime failures become error rows instead of aborting the suite, and
/// rows are ordered by (claim, regime) regardless of worker scheduling.
pub fn verify_suite(config: &SuiteConfig, limits: &Limits) -> SuiteReport {
    let mut rows: Vec<SuiteRow> = config
        .regimes
        .par_iter()
        .map(|spec| {
            let start = Instant::now();
            let outcome = spec.resolve().and_then(|(claim, regime, reading, mode)| {
                verify(claim, &regime, reading, mode, limits)
            });
            SuiteRow {
                spec: spec.clone(),
                outcome: outcome.map_err(|e| e.to_string()),
                wall: start.elapsed(),
            }
        })
        .collect();
    rows.sort_by(|a, b| {
        let key = |r: &SuiteRow| {
            (
                r.spec.claim.clone(),
                r.spec.n,
                r.spec.m,
                r.spec.alpha.clone(),
                r.spec.beta.clone(),
                r.spec.variant.clone(),
                r.spec.rho,
                r.spec.reading.clone(),
                r.spec.mode.clone(),
            )
        };
        key(a).cmp(&key(b))
    });
    SuiteReport { rows }
}

fn profiles_as_labels(profiles: &[JointStrategy]) -> Vec<Vec<Vec<String>>> {
    profiles.iter().map(|j| j.to_labels()).collect()
}

/// JSON form of a report.
pub fn report_json(report: &SuiteReport) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = report
        .rows
        .iter()
        .map(|row| {
            let mut object = serde_json::Map::new();
            object.insert("claim".into(), row.spec.claim.clone().into());
            object.insert("n".into(), row.spec.n.into());
            object.insert("m".into(), row.spec.m.into());
            object.insert("alpha".into(), row.spec.alpha.clone().into());
            object.insert("beta".into(), row.spec.beta.clone().into());
            object.insert("variant".into(), row.spec.variant.clone().into());
            if let Some(rho) = row.spec.rho {
                object.insert("rho".into(), rho.into());
            }
            match &row.outcome {
                Ok(v) => {
                    object.insert("status".into(), v.status.to_string().into());
                    object.insert("mode".into(), v.mode.to_string().into());
                    object.insert(
                        "reading".into(),
                        match v.reading {
                            Reading::Permissive => "permissive",
                            Reading::Strict => "strict",
                        }
                        .into(),
                    );
                    object.insert(
                        "witnesses".into(),
                        serde_json::to_value(profiles_as_labels(&v.witnesses)).unwrap(),
                    );
                    if let Some(eq) = &v.equilibria {
                        object.insert("equilibrium_count".into(), eq.len().into());
                        object.insert(
                            "equilibria".into(),
                            serde_json::to_value(profiles_as_labels(eq)).unwrap(),
                        );
                    }
                    if !v.unpredicted.is_empty() {
                        object.insert(
                            "unpredicted_equilibria".into(),
                            serde_json::to_value(profiles_as_labels(&v.unpredicted)).unwrap(),
                        );
                    }
                }
                Err(e) => {
                    object.insert("status".into(), "error".into());
                    object.insert("error".into(), e.clone().into());
                }
            }
            object.insert("wall_ms".into(), (row.wall.as_millis() as u64).into());
            serde_json::Value::Object(object)
        })
        .collect();
    serde_json::json!({ "rows": rows })
}

/// Plain-text table form of a report.
pub fn report_table(report: &SuiteReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<6} {:>3} {:>3} {:>8} {:>6} {:<8} {:<11} {:<10} {:>9} {:>4} {:>8}\n",
        "CLAIM", "n", "m", "alpha", "beta", "variant", "mode", "status", "witnesses", "eq", "ms"
    ));
    for row in &report.rows {
        let variant_short = match row.spec.variant.as_str() {
            "d" | "det" | "deterministic" => "fixed",
            _ => "random",
        };
        match &row.outcome {
            Ok(v) => {
                let reading = if v.claim == ClaimId::T1_2 {
                    match v.reading {
                        Reading::Permissive => " (permissive)",
                        Reading::Strict => " (strict)",
                    }
                } else {
                    ""
                };
                out.push_str(&format!(
                    "{:<6} {:>3} {:>3} {:>8} {:>6} {:<8} {:<11} {:<10} {:>9} {:>4} {:>8}{}\n",
                    row.spec.claim,
                    row.spec.n,
                    row.spec.m,
                    row.spec.alpha,
                    row.spec.beta,
                    variant_short,
                    v.mode.to_string(),
                    v.status.to_string(),
                    v.witnesses.len(),
                    v.equilibria.as_ref().map_or("-".to_string(), |e| e.len().to_string()),
                    row.wall.as_millis(),
                    reading,
                ));
            }
            Err(e) => {
                out.push_str(&format!(
                    "{:<6} {:>3} {:>3} {:>8} {:>6} {:<8} {:<11} {:<10} error: {}\n",
                    row.spec.claim,
                    row.spec.n,
                    row.spec.m,
                    row.spec.alpha,
                    row.spec.beta,
                    variant_short,
                    "-",
                    "error",
                    e,
                ));
            }
        }
    }
    out
}

/// CSV form of a report.
pub fn report_csv(report: &SuiteReport) -> String {
    let mut out = String::from("claim,n,m,alpha,beta,variant,rho,reading,mode,status,witnesses,equilibria,wall_ms\n");
    for row in &report.rows {
        let (reading, mode, status, witnesses, equilibria) = match &row.outcome {
            Ok(v) => (
                match v.reading {
                    Reading::Permissive => "permissive",
                    Reading::Strict => "strict",
                }
                .to_string(),
                v.mode.to_string(),
                v.status.to_string(),
                v.witnesses.len().to_string(),
                v.equilibria.as_ref().map_or(String::new(), |e| e.len().to_string()),
            ),
            Err(e) => (
                String::new(),
                String::new(),
                format!("error: {}", e.replace(',', ";")),
                String::new(),
                String::new(),
            ),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            row.spec.claim,
            row.spec.n,
            row.spec.m,
            row.spec.alpha,
            row.spec.beta,
            row.spec.variant,
            row.spec.rho.map_or(String::new(), |r| r.to_string()),
            reading,
            mode,
            status,
            witnesses,
            equilibria,
            row.wall.as_millis(),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regime(n: usize, m: usize, alpha: &str, beta: &str, variant: Variant) -> ParameterRegime {
        ParameterRegime::new(n, m, alpha.parse().unwrap(), beta.parse().unwrap(), variant)
            .unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn claim_ids_round_trip() {
        for claim in ClaimId::ALL {
            let text = claim.to_string();
            assert_eq!(text.parse::<ClaimId>().unwrap(), claim);
        }
        assert!("T9.9".parse::<ClaimId>().is_err());
    }

    #[test]
    fn expensive_elements_leave_only_the_empty_profile() {
        let r = regime(2, 2, "2", "1", Variant::Deterministic);
        let verdict =
            verify(ClaimId::T1_1, &r, Reading::default(), CheckMode::Auto, &limits()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Confirmed);
        let eq = verdict.equilibria.unwrap();
        assert_eq!(eq.len(), 1);
        assert!(eq[0].strategies().iter().all(|s| s.is_empty()));
    }

    #[test]
    fn nonexistence_band_is_confirmed_by_the_full_scan() {
        let r = regime(2, 3, "1/4", "1", Variant::Deterministic);
        let verdict =
            verify(ClaimId::T2, &r, Reading::default(), CheckMode::Auto, &limits()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Confirmed);
        assert_eq!(verdict.equilibria.unwrap().len(), 0);
    }

    #[test]
    fn disjointness_is_necessary_for_fixed_order_equilibria() {
        let r = regime(3, 2, "3/5", "1", Variant::Deterministic);
        let verdict =
            verify(ClaimId::L1, &r, Reading::default(), CheckMode::Auto, &limits()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Confirmed);
        assert!(!verdict.equilibria.unwrap().is_empty());
    }

    #[test]
    fn positional_readings_differ_where_empties_scan_first() {
        // With an empty agent ahead of a singleton holder, the empty agent can
        // grab the held element and win the tie, so only the strict
        // (first-agents) reading matches ground truth.
        let r = regime(2, 3, "3/5", "1", Variant::Deterministic);
        let strict =
            verify(ClaimId::T1_2, &r, Reading::Strict, CheckMode::Auto, &limits()).unwrap();
        assert_eq!(strict.status, VerdictStatus::Confirmed);
        let eq = strict.equilibria.as_ref().unwrap();
        assert_eq!(eq.len(), 2);

        let permissive =
            verify(ClaimId::T1_2, &r, Reading::Permissive, CheckMode::Auto, &limits()).unwrap();
        assert_eq!(permissive.status, VerdictStatus::Refuted);
        // The four accepted-but-unstable placements: in each, an empty agent
        // scans ahead of some singleton holder.
        assert_eq!(permissive.witnesses.len(), 4);
        for witness in &permissive.witnesses {
            let last_holder = witness
                .strategies()
                .iter()
                .rposition(|s| s.len() == 1)
                .unwrap();
            let first_empty = witness
                .strategies()
                .iter()
                .position(|s| s.is_empty())
                .unwrap();
            assert!(first_empty < last_holder);
        }
    }

    #[test]
    fn readings_coincide_when_no_agent_is_empty() {
        for (n, m) in [(2usize, 2usize), (3, 2), (3, 3)] {
            let r = regime(n, m, "3/5", "1", Variant::Deterministic);
            for reading in [Reading::Permissive, Reading::Strict] {
                let verdict =
                    verify(ClaimId::T1_2, &r, reading, CheckMode::Auto, &limits()).unwrap();
                assert_eq!(
                    verdict.status,
                    VerdictStatus::Confirmed,
                    "({n},{m}) under {reading:?}"
                );
            }
        }
    }

    #[test]
    fn full_universe_band_confirms_two_sided_and_sound() {
        let r = regime(2, 5, "1/5", "1", Variant::NonDeterministic)
            .with_rho(2)
            .unwrap();
        let sound =
            verify(ClaimId::T3_3, &r, Reading::default(), CheckMode::Soundness, &limits())
                .unwrap();
        assert_eq!(sound.status, VerdictStatus::Confirmed);
        assert_eq!(sound.mode, RanMode::Soundness);

        let two_sided =
            verify(ClaimId::T3_3, &r, Reading::default(), CheckMode::TwoSided, &limits())
                .unwrap();
        assert_eq!(two_sided.status, VerdictStatus::Confirmed);
        // C(5,2) profiles with two full strategies.
        assert_eq!(two_sided.equilibria.unwrap().len(), 10);
    }

    #[test]
    fn one_less_full_agent_only_on_the_boundary() {
        // rho = 3 band for n = 1 is (1/4, 1/3]; strictly inside, only three
        // full agents survive; on the boundary, two also do.
        let inside = regime(1, 4, "3/10", "1", Variant::NonDeterministic);
        let v = verify(ClaimId::T3_3, &inside, Reading::default(), CheckMode::TwoSided, &limits())
            .unwrap();
        assert_eq!(v.status, VerdictStatus::Confirmed);
        assert_eq!(v.equilibria.unwrap().len(), 4); // C(4,3)

        let boundary = regime(1, 4, "1/3", "1", Variant::NonDeterministic);
        let v = verify(ClaimId::T3_3, &boundary, Reading::default(), CheckMode::TwoSided, &limits())
            .unwrap();
        assert_eq!(v.status, VerdictStatus::Confirmed);
        assert_eq!(v.equilibria.unwrap().len(), 10); // C(4,3) + C(4,2)
    }

    #[test]
    fn paired_singleton_family_is_sound_and_extras_are_reported() {
        let r = regime(2, 4, "1/2", "1", Variant::NonDeterministic);
        let verdict =
            verify(ClaimId::T3_2, &r, Reading::default(), CheckMode::Auto, &limits()).unwrap();
        assert_eq!(verdict.mode, RanMode::Soundness);
        assert_eq!(verdict.status, VerdictStatus::Confirmed);
        // Equilibria outside the paired family exist on this boundary (e.g.
        // a lone singleton plus empties, where joining only ties); they are
        // surfaced as extras rather than swallowed or treated as refutation.
        assert!(verdict.equilibria.is_some());
        assert!(!verdict.unpredicted.is_empty());
        let predicate = characterize(ClaimId::T3_2, &r, Reading::default()).unwrap();
        for extra in &verdict.unpredicted {
            assert!(!predicate.accepts(extra));
        }
    }

    #[test]
    fn family_generators_match_the_predicates() {
        for (claim, r) in [
            (ClaimId::T3_2, regime(2, 3, "1/2", "1", Variant::NonDeterministic)),
            (ClaimId::T3_2, regime(2, 5, "1/2", "1", Variant::NonDeterministic)),
            (
                ClaimId::T3_3,
                regime(2, 5, "1/5", "1", Variant::NonDeterministic),
            ),
            (
                ClaimId::T3_3,
                regime(1, 4, "1/3", "1", Variant::NonDeterministic),
            ),
        ] {
            let predicate = characterize(claim, &r, Reading::default()).unwrap();
            let family = generate_family(claim, &r).unwrap().unwrap();
            for joint in &family {
                assert!(predicate.accepts(joint), "{claim}: generator escaped predicate");
            }
            // The generator finds exactly the accepted profiles.
            let (_, accepted) = scan_space(&r, &predicate, &limits()).unwrap();
            assert_eq!(family, accepted, "{claim}: generator/scan mismatch");
        }
    }

    #[test]
    fn vacuous_regimes_still_survey_ground_truth() {
        // Fixed order with alpha < beta/2 and m <= n is outside every claim's
        // hypothesis for T1.2; the row reports the equilibria it found.
        let r = regime(2, 2, "1/4", "1", Variant::Deterministic);
        let verdict =
            verify(ClaimId::T1_2, &r, Reading::default(), CheckMode::Auto, &limits()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Vacuous);
        assert_eq!(verdict.mode, RanMode::Skipped);
        let eq = verdict.equilibria.unwrap();
        assert_eq!(eq.len(), 2);
        for j in &eq {
            assert_eq!(
                j.strategies().iter().filter(|s| s.len() == 1).count(),
                2
            );
        }
    }

    #[test]
    fn fractional_selection_forces_the_full_universe() {
        let r = regime(2, 5, "1/5", "1", Variant::NonDeterministic);
        let verdict =
            verify(ClaimId::L3, &r, Reading::default(), CheckMode::Auto, &limits()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Confirmed);

        let c1 = verify(ClaimId::C1, &r, Reading::default(), CheckMode::Auto, &limits()).unwrap();
        assert_eq!(c1.status, VerdictStatus::Confirmed);
    }

    #[test]
    fn verdicts_are_deterministic() {
        let r = regime(2, 3, "3/5", "1", Variant::Deterministic);
        let a = verify(ClaimId::T1_2, &r, Reading::Permissive, CheckMode::Auto, &limits())
            .unwrap();
        let b = verify(ClaimId::T1_2, &r, Reading::Permissive, CheckMode::Auto, &limits())
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn confirmed_equality_means_predicate_profiles_are_equilibria() {
        let r = regime(3, 2, "3/5", "1", Variant::NonDeterministic);
        let verdict =
            verify(ClaimId::T3_1, &r, Reading::default(), CheckMode::Auto, &limits()).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Confirmed);
        let predicate = characterize(ClaimId::T3_1, &r, Reading::default()).unwrap();
        let params = r.params().unwrap();
        for joint in verdict.equilibria.as_ref().unwrap() {
            assert!(predicate.accepts(joint));
            assert!(is_nash(joint, &params, r.variant, &limits())
                .unwrap()
                .is_equilibrium());
        }
        // Spot content check: the six ordered pairs of distinct singletons.
        assert_eq!(verdict.equilibria.unwrap().len(), 6);
    }

    #[test]
    fn suite_runs_collect_rows_and_flag_errors_without_aborting() {
        let config = SuiteConfig {
            regimes: vec![
                RegimeSpec {
                    claim: "T1.1".into(),
                    n: 2,
                    m: 2,
                    alpha: "5/4".into(),
                    beta: "1".into(),
                    variant: "d".into(),
                    rho: None,
                    reading: None,
                    mode: None,
                },
                RegimeSpec {
                    claim: "nope".into(),
                    n: 2,
                    m: 2,
                    alpha: "1".into(),
                    beta: "1".into(),
                    variant: "d".into(),
                    rho: None,
                    reading: None,
                    mode: None,
                },
            ],
        };
        let report = verify_suite(&config, &limits());
        assert_eq!(report.rows.len(), 2);
        assert!(report.any_error());
        assert!(!report.any_refuted());
        let table = report_table(&report);
        assert!(table.contains("confirmed"));
        assert!(table.contains("error"));
        let json = report_json(&report);
        assert_eq!(json["rows"].as_array().unwrap().len(), 2);
        let csv = report_csv(&report);
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn empty_suite_is_an_empty_success() {
        let report = verify_suite(&SuiteConfig { regimes: vec![] }, &limits());
        assert!(report.rows.is_empty());
        assert!(!report.any_refuted());
    }

    #[test]
    fn t3_1_splits_on_the_cost_benefit_boundary() {
        // Below beta every agent must hold a singleton; at beta empties join.
        let below = regime(2, 2, "3/5", "1", Variant::NonDeterministic);
        let p = characterize(ClaimId::T3_1, &below, Reading::default()).unwrap();
        let both = crate::testutil::joint(2, &[&[0], &[1]]);
        let one_empty = crate::testutil::joint(2, &[&[0], &[]]);
        assert!(p.accepts(&both));
        assert!(!p.accepts(&one_empty));

        let at = regime(2, 2, "1", "1", Variant::NonDeterministic);
        let p = characterize(ClaimId::T3_1, &at, Reading::default()).unwrap();
        assert!(p.accepts(&both));
        assert!(p.accepts(&one_empty));
        // Duplicate singletons stay out in both cases.
        assert!(!p.accepts(&crate::testutil::joint(2, &[&[0], &[0]])));
    }
}
