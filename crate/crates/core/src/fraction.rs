use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with a positive denominator.
///
/// Renders as `p` or `p/q`; never as a decimal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fraction(Ratio<i128>);

impl Fraction {
    /// `numer / denom`, reduced. Panics if `denom` is zero.
    pub fn new(numer: i128, denom: i128) -> Self {
        Fraction(Ratio::new(numer, denom))
    }

    /// The integer `n` as a fraction.
    pub fn from_integer(n: i128) -> Self {
        Fraction(Ratio::from_integer(n))
    }

    /// Zero.
    pub fn zero() -> Self {
        Fraction(Ratio::zero())
    }

    /// One.
    pub fn one() -> Self {
        Fraction(Ratio::one())
    }

    /// Numerator in lowest terms.
    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    /// Denominator in lowest terms (always positive).
    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        Fraction(self.0.abs())
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then(|| self.numer())
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_integer(n as i128)
    }
}

impl From<u64> for Fraction {
    fn from(n: u64) -> Self {
        Fraction::from_integer(n as i128)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned when a fraction string cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFractionError(pub String);

impl fmt::Display for ParseFractionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse `{}` as a fraction", self.0)
    }
}

impl FromStr for Fraction {
    type Err = ParseFractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseFractionError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i128>().map(Fraction::from_integer).map_err(|_| err()),
            Some((p, q)) => {
                let p = p.trim().parse::<i128>().map_err(|_| err())?;
                let q = q.trim().parse::<i128>().map_err(|_| err())?;
                if q == 0 {
                    return Err(err());
                }
                Ok(Fraction::new(p, q))
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                Fraction(self.0 $op rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl AddAssign for Fraction {
    fn add_assign(&mut self, rhs: Fraction) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Fraction {
    fn sub_assign(&mut self, rhs: Fraction) {
        self.0 -= rhs.0;
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-self.0)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Fraction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Fraction {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Visitor;

        impl serde::de::Visitor<'_> for Visitor {
            type Value = Fraction;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a fraction string \"p/q\" or an integer")
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Fraction, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Fraction, E> {
                Ok(Fraction::from(v))
            }

            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Fraction, E> {
                Ok(Fraction::from(v))
            }
        }

        deserializer.deserialize_any(Visitor)
    }
}
