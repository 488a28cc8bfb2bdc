use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{GroupError, Result};

/// An exact fraction in lowest terms. Prints as `num/den`, or just `num`
/// when the denominator is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Panics when `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Self {
        ExactRational(self.0.recip())
    }

    pub fn pow(&self, e: u32) -> Self {
        ExactRational(Pow::pow(&self.0, e))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Approximate value, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || GroupError::Parse(format!("not a rational: `{s}`"));
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(ExactRational(BigRational::new(n, d)))
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl From<ExactRational> for BigRational {
    fn from(r: ExactRational) -> Self {
        r.0
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident) => {
        impl $tr for ExactRational {
            type Output = ExactRational;
            fn $f(self, rhs: ExactRational) -> ExactRational {
                ExactRational($tr::$f(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $f(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational($tr::$f(&self.0, &rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self> {
        ExactRational::parse(s)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        ExactRational::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for `ExactRational::new(n, d)` on machine integers.
pub fn ratio(n: u128, d: u128) -> ExactRational {
    ExactRational::new(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms_and_format() {
        assert_eq!(ratio(8, 20).to_string(), "2/5");
        assert_eq!(ratio(16, 72).to_string(), "2/9");
        assert_eq!(ratio(6, 6).to_string(), "1");
        assert_eq!(ExactRational::parse("10/4").unwrap(), ratio(5, 2));
        assert_eq!(ExactRational::parse("3").unwrap(), ratio(3, 1));
        assert!(ExactRational::parse("1/0").is_err());
        assert!(ExactRational::parse("x").is_err());
    }

    #[test]
    fn ordering_matches_the_example_chain() {
        assert!(ratio(3, 10) < ratio(5, 12));
        assert!(ratio(5, 12) < ratio(7, 15));
        assert!(ratio(7, 15) < ratio(1, 2));
    }

    #[test]
    fn serde_round_trip() {
        let r = ratio(5, 288);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "\"5/288\"");
        assert_eq!(serde_json::from_str::<ExactRational>(&s).unwrap(), r);
    }

    proptest! {
        #[test]
        fn display_parses_back(n in 0u64..10_000, d in 1u64..10_000) {
            let r = ExactRational::new(n, d);
            prop_assert_eq!(ExactRational::parse(&r.to_string()).unwrap(), r.clone());
            prop_assert_eq!(&(&r * &ratio(2, 1)) / &ratio(2, 1), r);
        }
    }
}
