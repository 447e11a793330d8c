//! Exact rational arithmetic for every utility and probability in the engine.
//!
//! Equilibrium checks sit on knife-edge parameter boundaries, so nothing here
//! may round: values are arbitrary-precision ratios kept in lowest terms with
//! a positive denominator.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number, always in lowest terms with a positive denominator.
///
/// Parses from and displays as `p/q` (just `p` when the denominator is 1).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `p/q`, reducing to lowest terms. Errors when `q == 0`.
    pub fn new(numer: i64, denom: i64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::InvalidRational {
                input: format!("{numer}/{denom}"),
            });
        }
        Ok(Rational(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    /// Exact ratio of two unsigned counts, e.g. a permutation tally over `m!`.
    pub fn from_ratio(numer: u64, denom: u64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::InvalidRational {
                input: format!("{numer}/{denom}"),
            });
        }
        Ok(Rational(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Nearest double; only ever used for human-readable summaries.
    pub fn to_f64(&self) -> f64 {
        use num::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Largest integer `<= self`.
    pub fn floor_integer(&self) -> BigInt {
        self.0.floor().to_integer()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

// Debug defers to Display so test failures print `3/5` rather than struct innards.
impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidRational { input: s.to_string() };
        let s = s.trim();
        let (numer, denom) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let numer = BigInt::from_str(numer).map_err(|_| bad())?;
        let denom = BigInt::from_str(denom).map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_and_displays_lowest_terms() {
        let r: Rational = "6/4".parse().unwrap();
        assert_eq!(r.to_string(), "3/2");
        let w: Rational = "2".parse().unwrap();
        assert_eq!(w.to_string(), "2");
        let n: Rational = "-3/6".parse().unwrap();
        assert_eq!(n.to_string(), "-1/2");
        let d: Rational = "4/-6".parse().unwrap();
        assert_eq!(d.to_string(), "-2/3");
    }

    #[test]
    fn rejects_zero_denominator_and_garbage() {
        assert!("1/0".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn exact_comparisons_on_knife_edges() {
        // beta / (rho * n) with rho = 2, n = 2: alpha = 1/4 sits exactly on the bound.
        let alpha: Rational = "1/4".parse().unwrap();
        let bound = Rational::new(1, 4).unwrap();
        assert_eq!(alpha, bound);
        assert!(alpha <= bound && bound <= alpha);
    }

    proptest! {
        #[test]
        fn add_then_subtract_round_trips(p in -1000i64..1000, q in 1i64..1000,
                                         r in -1000i64..1000, s in 1i64..1000) {
            let a = Rational::new(p, q).unwrap();
            let b = Rational::new(r, s).unwrap();
            let back = &(&a + &b) - &b;
            prop_assert_eq!(back, a);
        }

        #[test]
        fn display_round_trips(p in -10_000i64..10_000, q in 1i64..10_000) {
            let a = Rational::new(p, q).unwrap();
            let again: Rational = a.to_string().parse().unwrap();
            prop_assert_eq!(again, a);
        }
    }
}
