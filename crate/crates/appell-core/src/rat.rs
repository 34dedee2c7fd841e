//! Exact rational scalars.
//!
//! [`Rat`] is the only scalar type used by the matrix kernel. It is an
//! arbitrary-precision rational kept in lowest terms with a positive
//! denominator, so every arithmetic identity in this crate can be tested
//! as exact equality. The canonical text form is `p/q`, or just `p` when
//! the denominator is one, with the sign always on the numerator.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Pow, Signed, Zero};

/// Exact rational number in lowest terms with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `n / d` in lowest terms.
    ///
    /// Panics if `d` is zero; fallible construction from text goes through
    /// [`FromStr`].
    pub fn new<N: Into<BigInt>, D: Into<BigInt>>(n: N, d: D) -> Self {
        Rat(BigRational::new(n.into(), d.into()))
    }

    pub fn integer<N: Into<BigInt>>(n: N) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Integer power; negative exponents invert. Panics on `0^negative`.
    pub fn pow(&self, exp: i32) -> Rat {
        if exp < 0 {
            assert!(!self.is_zero(), "zero has no negative powers");
        }
        Rat(Pow::pow(&self.0, exp))
    }

    /// Multiplicative inverse. Panics on zero; callers check first.
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "zero has no reciprocal");
        Rat(self.0.recip())
    }

    /// Exact division that reports division by zero instead of panicking.
    pub fn checked_div(&self, rhs: &Rat) -> Option<Rat> {
        if rhs.is_zero() {
            None
        } else {
            Some(Rat(&self.0 / &rhs.0))
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::integer(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Self {
        Rat::integer(n)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
// Division panics on a zero divisor, matching integer division; use
// `checked_div` where a zero divisor is a reachable data condition.
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign for Rat {
    fn mul_assign(&mut self, rhs: Rat) {
        self.0 *= rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Error parsing a `p/q` rational literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRatError {
    Invalid(String),
    ZeroDenominator,
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRatError::Invalid(s) => write!(f, "invalid rational literal {s:?}"),
            ParseRatError::ZeroDenominator => write!(f, "rational literal has zero denominator"),
        }
    }
}

impl std::error::Error for ParseRatError {}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `p` or `p/q` with an optional sign on either part; the
    /// result is normalized to lowest terms with the sign on the numerator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let invalid = || ParseRatError::Invalid(s.to_owned());
        match trimmed.split_once('/') {
            None => {
                let n = BigInt::from_str(trimmed).map_err(|_| invalid())?;
                Ok(Rat::integer(n))
            }
            Some((np, dp)) => {
                let n = BigInt::from_str(np.trim()).map_err(|_| invalid())?;
                let d = BigInt::from_str(dp.trim()).map_err(|_| invalid())?;
                if d.is_zero() {
                    return Err(ParseRatError::ZeroDenominator);
                }
                Ok(Rat::new(n, d))
            }
        }
    }
}

/// `n!` as an exact rational.
pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::integer(acc)
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    Rat::integer(acc)
}
