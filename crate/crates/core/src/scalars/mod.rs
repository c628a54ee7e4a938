//! Exact scalar domains.
//!
//! The tower is `Rat` (the rationals), `Quad` (a + b·√d for a single
//! squarefree `d`; real when `d > 0`, complex when `d < 0`), `CPair<F>`
//! (re + im·i over a real field `F`) and `Quat<F>` (quaternions over a real
//! field `F`).  Everything here is exact; the binary64 helpers used by the
//! sampling harness live in [`float`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

mod cpair;
pub mod float;
mod literal;
mod quad;
mod quat;
mod rat;
pub mod sqrt;

pub use cpair::CPair;
pub use literal::ParseScalar;
pub use quad::{quad_sign, Quad};
pub(crate) use quad::check_discriminant;
pub use quat::{complexify, complexify_transposed, dot3, quat_inv, quat_normsq, Quat};
pub use rat::Rat;

/// Sign of an ordered-field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg = -1,
    Zero = 0,
    Pos = 1,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        self as i8
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Neg => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Pos => Ordering::Greater,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.to_i8() * rhs.to_i8() {
            -1 => Sign::Neg,
            0 => Sign::Zero,
            _ => Sign::Pos,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }
}

/// A division ring with an involution and a norm valued in a real field.
///
/// Multiplication need not commute; callers that rely on commutativity
/// check [`Scalar::COMMUTATIVE`].
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The real field that houses norms.
    type Real: RealScalar;

    const COMMUTATIVE: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn inv(&self) -> Option<Self>;
    /// Complex or quaternion conjugation; the identity on real fields.
    fn conj(&self) -> Self;
    /// Squared absolute value, `x · conj(x)`.
    fn abs_sq(&self) -> Self::Real;
    fn from_real(r: Self::Real) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_real(<Self::Real as RealScalar>::from_rat(Rat::from_int(n)))
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_real(<Self::Real as RealScalar>::from_rat(Rat::new(n, d)))
    }
    /// The quadratic discriminant this value lives over, `0` when rational.
    fn discriminant(&self) -> i64;
    /// Squared-modulus determinant: `|det M|²` for commutative entries, the
    /// Study determinant for quaternion entries.
    fn det_norm(m: &Matrix<Self>) -> Result<Self::Real>;
    /// A random element with small rational coordinates over `ℚ(√d)`
    /// (`d = 0` for purely rational coordinates).
    fn sample_small<R: Rng + ?Sized>(rng: &mut R, d: i64) -> Self;

    fn div_left(&self, rhs: &Self) -> Result<Self> {
        Ok(rhs.inv().ok_or(Error::DivisionByZero)? * self.clone())
    }

    fn div_right(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv().ok_or(Error::DivisionByZero)?)
    }
}

/// An ordered real field (ℚ or a real quadratic field).
pub trait RealScalar: Scalar<Real = Self> + ParseScalar {
    fn sign(&self) -> Sign;
    fn from_rat(r: Rat) -> Self;
    fn to_f64(&self) -> f64;
    /// The square root inside the same field, when it exists there.
    fn sqrt_exact(&self) -> Option<Self>;
    /// Rational bounds on the value, width at most `2^-bits`.
    fn rat_bounds(&self, bits: u32) -> (Rat, Rat);

    fn cmp_real(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign().to_ordering()
    }

    fn is_nonneg(&self) -> bool {
        self.sign() != Sign::Neg
    }
}

/// Draw a small rational `p/q` with `|p| <= 6`, `1 <= q <= 4`.
pub(crate) fn small_rat<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    Rat::new(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

impl Scalar for Rat {
    type Real = Rat;
    const COMMUTATIVE: bool = true;

    fn zero() -> Rat {
        Rat::zero()
    }
    fn one() -> Rat {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rat::is_one(self)
    }
    fn inv(&self) -> Option<Rat> {
        self.recip()
    }
    fn conj(&self) -> Rat {
        self.clone()
    }
    fn abs_sq(&self) -> Rat {
        self.square()
    }
    fn from_real(r: Rat) -> Rat {
        r
    }
    fn discriminant(&self) -> i64 {
        0
    }
    fn det_norm(m: &Matrix<Rat>) -> Result<Rat> {
        Ok(m.det()?.square())
    }
    fn sample_small<R: Rng + ?Sized>(rng: &mut R, _d: i64) -> Rat {
        small_rat(rng)
    }
}

impl RealScalar for Rat {
    fn sign(&self) -> Sign {
        Rat::sign(self)
    }
    fn from_rat(r: Rat) -> Rat {
        r
    }
    fn to_f64(&self) -> f64 {
        Rat::to_f64(self)
    }
    fn sqrt_exact(&self) -> Option<Rat> {
        Rat::sqrt_exact(self)
    }
    fn rat_bounds(&self, _bits: u32) -> (Rat, Rat) {
        (self.clone(), self.clone())
    }
    fn cmp_real(&self, other: &Rat) -> Ordering {
        self.cmp(other)
    }
}
