use thiserror::Error;

/// Errors produced by instance construction, parsing, and the enumeration caps.
#[derive(Debug, Error)]
pub enum Error {
    #[error("universe size {n} exceeds the supported maximum of {max} elements")]
    UniverseTooLarge { n: usize, max: usize },

    #[error("universe labels must be pairwise distinct: `{label}` appears twice")]
    DuplicateLabel { label: String },

    #[error("element index {index} is out of range for a universe of {n} elements")]
    ElementOutOfRange { index: usize, n: usize },

    #[error("a joint strategy needs at least one agent")]
    EmptyProfile,

    #[error("invalid permutation: {detail}")]
    InvalidPermutation { detail: String },

    #[error(
        "cannot enumerate {m}! permutations: m = {m} exceeds the exact-enumeration cap of {cap}; \
         use the seeded Monte Carlo estimator instead"
    )]
    PermutationCapExceeded { m: usize, cap: usize },

    #[error("enumeration budget exceeded: {required} joint strategies required, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("parameter `{name}` must be strictly positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: String },

    #[error("cannot parse `{input}` as a rational `p/q`")]
    InvalidRational { input: String },

    #[error("unknown claim identifier `{input}`")]
    UnknownClaim { input: String },

    #[error("invalid parameter regime: {detail}")]
    InvalidRegime { detail: String },

    #[error("{field}: {detail}")]
    InstanceField { field: String, detail: String },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
