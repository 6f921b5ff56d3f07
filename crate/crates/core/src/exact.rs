//! Exact rational arithmetic over arbitrary-precision integers.
//!
//! Every other module computes through [`Rational`]. Values are normalized on
//! construction (lowest terms, positive denominator, zero as 0/1) so equality
//! is structural, and they grow as needed: greedy Egyptian expansion produces
//! denominators well past 10^24, so fixed-width arithmetic is not an option.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number in canonical form: lowest terms, denominator > 0,
/// zero stored uniquely as 0/1.
///
/// Immutable after construction; freely shareable between threads.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// 0/1.
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    /// 1/1.
    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `numer/denom` in canonical form. Panics if `denom == 0`; use
    /// [`Rational::checked_new`] for untrusted input.
    pub fn new<N: Into<BigInt>, D: Into<BigInt>>(numer: N, denom: D) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    /// Builds `numer/denom`, rejecting a zero denominator.
    pub fn checked_new<N: Into<BigInt>, D: Into<BigInt>>(numer: N, denom: D) -> Result<Self> {
        let d: BigInt = denom.into();
        if d.is_zero() {
            return Err(Error::Domain("denominator must be nonzero".into()));
        }
        Ok(Rational(BigRational::new(numer.into(), d)))
    }

    /// The unit fraction 1/n.
    pub fn unit<D: Into<BigInt>>(denom: D) -> Self {
        Rational::new(BigInt::one(), denom)
    }

    pub fn from_integer<N: Into<BigInt>>(n: N) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("zero has no reciprocal".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    /// Floor of the exact quotient, as a big integer.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Ceiling of the exact quotient, as a big integer.
    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Total order consistent with the real-number order.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Rational {
    /// Textual form `p/q`; the denominator is omitted for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({self})")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q`, `-p/q`, or a bare integer such as `8`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |txt: &str, at: usize| -> Result<BigInt> {
            if txt.is_empty() {
                return Err(Error::Parse {
                    position: at,
                    message: "expected an integer".into(),
                });
            }
            BigInt::from_str(txt).map_err(|_| Error::Parse {
                position: at,
                message: format!("invalid integer {txt:?}"),
            })
        };
        match s.find('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s, 0)?))),
            Some(slash) => {
                let numer = parse_int(&s[..slash], 0)?;
                let denom = parse_int(&s[slash + 1..], slash + 1)?;
                if denom.is_zero() {
                    return Err(Error::Parse {
                        position: slash + 1,
                        message: "denominator must be nonzero".into(),
                    });
                }
                Ok(Rational(BigRational::new(numer, denom)))
            }
        }
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
        impl $trait<&Rational> for &Rational {
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

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero Rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero Rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}
