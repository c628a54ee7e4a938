use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Sign;
use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Rat {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_int(n: i64) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Rat> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn sign(&self) -> Sign {
        if self.0.is_zero() {
            Sign::Zero
        } else if self.0.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Option<Rat> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    pub fn square(&self) -> Rat {
        Rat(&self.0 * &self.0)
    }

    /// Exact conversion of a finite binary64 value.
    pub fn from_f64(x: f64) -> Option<Rat> {
        BigRational::from_float(x).map(Rat)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The rational square root, when one exists.
    pub fn sqrt_exact(&self) -> Option<Rat> {
        if self.0.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rat(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Rational bounds `lo <= sqrt(self) <= hi` with `hi - lo <= 2^-bits`.
    pub fn sqrt_bounds(&self, bits: u32) -> (Rat, Rat) {
        assert!(!self.0.is_negative(), "square root of a negative rational");
        // sqrt(n/d) = sqrt(n*d)/d; scale by 2^bits before the integer root.
        let scale = BigInt::one() << bits;
        let nd = self.numer() * self.denom();
        let root = (nd * &scale * &scale).sqrt();
        let denom = self.denom() * &scale;
        let lo = BigRational::new(root.clone(), denom.clone());
        let hi = BigRational::new(root + BigInt::one(), denom);
        (Rat(lo), Rat(hi))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn min(self, other: Rat) -> Rat {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Grammar: `-?INT(/INT)?`, whitespace ignored.
    fn from_str(s: &str) -> Result<Rat> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Literal(s.trim().to_string());
        let (neg, body) = match compact.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, compact.as_str()),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !digits(num) || !den.map_or(true, digits) {
            return Err(bad());
        }
        let mut n: BigInt = num.parse().map_err(|_| bad())?;
        if neg {
            n = -n;
        }
        let d: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer((*other).into())))
    }
}

macro_rules! rat_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl<'a> $tr<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, rhs: &'a Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &'a Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
        impl<'a> $tr<Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(&self.0 $op rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        let r: Rat = " -6 / 4 ".parse().unwrap();
        assert_eq!(r, Rat::new(-3, 2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("7".parse::<Rat>().unwrap().to_string(), "7");
        assert_eq!("0/5".parse::<Rat>().unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "-", "1/", "/2", "1/0", "1.5", "--1", "1/-2", "a"] {
            assert!(s.parse::<Rat>().is_err(), "{s}");
        }
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(Rat::new(9, 4).sqrt_exact(), Some(Rat::new(3, 2)));
        assert_eq!(Rat::new(2, 1).sqrt_exact(), None);
        assert_eq!(Rat::new(-1, 1).sqrt_exact(), None);
        let (lo, hi) = Rat::from_int(2).sqrt_bounds(40);
        assert!(lo.square() <= Rat::from_int(2));
        assert!(hi.square() >= Rat::from_int(2));
        assert!(&hi - &lo <= Rat::from_big(1.into(), BigInt::one() << 39).unwrap());
    }

    #[test]
    fn float_roundtrip_is_exact() {
        let x = 0.1_f64;
        let r = Rat::from_f64(x).unwrap();
        assert_eq!(r.to_f64(), x);
        assert!(r != Rat::new(1, 10));
    }
}
