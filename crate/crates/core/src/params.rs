use crate::error::{Error, Result};
use crate::rational::Rational;

/// The two exogenous game parameters: `alpha`, the per-element cost of a
/// strategy, and `beta`, the reward for being selected into the cover. Both
/// must be strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameParams {
    alpha: Rational,
    beta: Rational,
}

impl GameParams {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::NonPositiveParameter { name: "alpha", value: alpha.to_string() });
        }
        if !beta.is_positive() {
            return Err(Error::NonPositiveParameter { name: "beta", value: beta.to_string() });
        }
        Ok(GameParams { alpha, beta })
    }

    /// Convenience constructor from `p/q` strings.
    pub fn parse(alpha: &str, beta: &str) -> Result<Self> {
        GameParams::new(alpha.parse()?, beta.parse()?)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }
}
