//! Exact reduced fractions.
//!
//! [`Ratio`] carries filling factors and Hausdorff dimensions. It is always
//! stored in lowest terms with a positive denominator, and prints as `p/q`
//! (integers included, e.g. `4/1`) so that every printed value re-parses to
//! the identical fraction.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, SpectrumError};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ratio(BigRational);

impl Ratio {
    /// Builds `num/den` reduced to lowest terms.
    ///
    /// Panics if `den` is zero; use [`Ratio::try_new`] for untrusted input.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self::try_new(num, den).expect("Ratio::new with zero denominator")
    }

    pub fn try_new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(SpectrumError::ZeroDenominator);
        }
        Ok(Self(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The unimodularity determinant `p₂q₁ − p₁q₂` for `self = p₁/q₁`,
    /// `other = p₂/q₂`.
    pub fn det(&self, other: &Ratio) -> BigInt {
        other.numer() * self.denom() - self.numer() * other.denom()
    }

    /// Farey mediant `(p₁+p₂)/(q₁+q₂)`.
    pub fn mediant(&self, other: &Ratio) -> Ratio {
        Ratio::new(self.numer() + other.numer(), self.denom() + other.denom())
    }

    /// Parses `p/q` (or a bare integer `p`) and rejects fractions that are
    /// not already in lowest terms.
    pub fn parse_reduced(s: &str) -> Result<Self> {
        let (num, den) = split_parts(s)?;
        if den.is_negative() || !num.gcd(&den).is_one() {
            return Err(SpectrumError::NotReduced {
                input: s.trim().to_string(),
            });
        }
        Ok(Self(BigRational::new_raw(num, den)))
    }

    pub(crate) fn inner(&self) -> &BigRational {
        &self.0
    }
}

fn split_parts(s: &str) -> Result<(BigInt, BigInt)> {
    let input = s.trim();
    let malformed = |reason| SpectrumError::MalformedRatio {
        input: input.to_string(),
        reason,
    };
    if input.is_empty() {
        return Err(malformed("empty input"));
    }
    let (num, den) = match input.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (input, "1"),
    };
    let parse = |part: &str, what| -> Result<BigInt> {
        if part.is_empty() || part.starts_with('+') {
            return Err(malformed(what));
        }
        part.parse::<BigInt>().map_err(|_| malformed(what))
    };
    let num = parse(num, "numerator is not an integer")?;
    let den = parse(den, "denominator is not an integer")?;
    if den.is_zero() {
        return Err(SpectrumError::ZeroDenominator);
    }
    Ok((num, den))
}

impl FromStr for Ratio {
    type Err = SpectrumError;

    /// Lenient parse: `6/4` is accepted and reduced to `3/2`.
    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = split_parts(s)?;
        Ok(Self(BigRational::new(num, den)))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ratio({self})")
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Ratio::parse_reduced(&s).map_err(de::Error::custom)
    }
}

impl From<i64> for Ratio {
    fn from(n: i64) -> Self {
        Ratio::from_integer(n)
    }
}

impl PartialEq<i64> for Ratio {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Ratio {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Ratio> for &Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &Ratio) -> Ratio {
                Ratio(self.inner().$method(rhs.inner()))
            }
        }
        impl $trait<Ratio> for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: Ratio) -> Ratio {
                Ratio(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Ratio> for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &Ratio) -> Ratio {
                Ratio(self.0.$method(rhs.inner()))
            }
        }
        impl $trait<i64> for &Ratio {
            type Output = Ratio;
            fn $method(self, rhs: i64) -> Ratio {
                Ratio(self.inner().$method(BigRational::from_integer(rhs.into())))
            }
        }
        impl $trait<&Ratio> for i64 {
            type Output = Ratio;
            fn $method(self, rhs: &Ratio) -> Ratio {
                Ratio(BigRational::from_integer(self.into()).$method(rhs.inner()))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        Ratio(-self.inner().clone())
    }
}

impl Ratio {
    /// Exact quotient; `None` when dividing by zero.
    pub fn checked_div(&self, rhs: &Ratio) -> Option<Ratio> {
        if rhs.0.is_zero() {
            None
        } else {
            Some(Ratio(&self.0 / &rhs.0))
        }
    }

    /// Halves the value exactly (spin from filling factor, `s = ν/2`).
    pub fn half(&self) -> Ratio {
        Ratio(&self.0 / BigRational::from_integer(BigInt::from(2)))
    }
}
