use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use super::{RealScalar, Scalar};
use crate::error::Result;
use crate::linalg::Matrix;

/// `re + im·i` over a real field `F`; the entries of complexified
/// quaternion matrices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CPair<F> {
    pub re: F,
    pub im: F,
}

impl<F: RealScalar> CPair<F> {
    pub fn new(re: F, im: F) -> Self {
        CPair { re, im }
    }

    pub fn real(re: F) -> Self {
        CPair { re, im: F::zero() }
    }
}

impl<F: RealScalar> Add for CPair<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        CPair::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<F: RealScalar> Sub for CPair<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        CPair::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<F: RealScalar> Mul for CPair<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        CPair::new(re, im)
    }
}

impl<F: RealScalar> Neg for CPair<F> {
    type Output = Self;
    fn neg(self) -> Self {
        CPair::new(-self.re, -self.im)
    }
}

impl<F: RealScalar> Scalar for CPair<F> {
    type Real = F;
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        CPair::new(F::zero(), F::zero())
    }
    fn one() -> Self {
        CPair::new(F::one(), F::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let n = self.abs_sq().inv()?;
        Some(CPair::new(self.re.clone() * n.clone(), -(self.im.clone() * n)))
    }
    fn conj(&self) -> Self {
        CPair::new(self.re.clone(), -self.im.clone())
    }
    fn abs_sq(&self) -> F {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }
    fn from_real(r: F) -> Self {
        CPair::real(r)
    }
    fn discriminant(&self) -> i64 {
        match self.re.discriminant() {
            0 => self.im.discriminant(),
            d => d,
        }
    }
    fn det_norm(m: &Matrix<Self>) -> Result<F> {
        Ok(m.det()?.abs_sq())
    }
    fn sample_small<R: Rng + ?Sized>(rng: &mut R, d: i64) -> Self {
        CPair::new(F::sample_small(rng, d), F::sample_small(rng, d))
    }
}

impl<F: RealScalar> fmt::Display for CPair<F> {
    /// `QUAD(+|-)QUAD*i`; the sign in front of the imaginary part applies
    /// to the whole imaginary coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im = self.im.to_string();
        if im.starts_with('-') {
            write!(f, "{}-{}*i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}*i", self.re, im)
        }
    }
}

impl<F: RealScalar> fmt::Debug for CPair<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
