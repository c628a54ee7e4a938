use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use super::{CPair, RealScalar, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// `t + x·i + y·j + z·k` over a real field `F`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quat<F> {
    pub t: F,
    pub x: F,
    pub y: F,
    pub z: F,
}

impl<F: RealScalar> Quat<F> {
    pub fn new(t: F, x: F, y: F, z: F) -> Self {
        Quat { t, x, y, z }
    }

    pub fn real(t: F) -> Self {
        Quat::new(t, F::zero(), F::zero(), F::zero())
    }

    /// `t + v` for a vector part `v`.
    pub fn from_parts(t: F, v: [F; 3]) -> Self {
        let [x, y, z] = v;
        Quat::new(t, x, y, z)
    }

    pub fn i() -> Self {
        Quat::new(F::zero(), F::one(), F::zero(), F::zero())
    }

    pub fn j() -> Self {
        Quat::new(F::zero(), F::zero(), F::one(), F::zero())
    }

    pub fn k() -> Self {
        Quat::new(F::zero(), F::zero(), F::zero(), F::one())
    }

    pub fn vector(&self) -> [F; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn components(&self) -> [F; 4] {
        [self.t.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn from_components(c: [F; 4]) -> Self {
        let [t, x, y, z] = c;
        Quat::new(t, x, y, z)
    }

    pub fn scale(&self, s: &F) -> Self {
        Quat::new(
            self.t.clone() * s.clone(),
            self.x.clone() * s.clone(),
            self.y.clone() * s.clone(),
            self.z.clone() * s.clone(),
        )
    }
}

/// Euclidean inner product of two 3-vectors.
pub fn dot3<F: RealScalar>(u: &[F; 3], v: &[F; 3]) -> F {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone() + u[2].clone() * v[2].clone()
}

fn cross<F: RealScalar>(u: &[F; 3], v: &[F; 3]) -> [F; 3] {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

impl<F: RealScalar> Add for Quat<F> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Quat::new(self.t + r.t, self.x + r.x, self.y + r.y, self.z + r.z)
    }
}

impl<F: RealScalar> Sub for Quat<F> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Quat::new(self.t - r.t, self.x - r.x, self.y - r.y, self.z - r.z)
    }
}

impl<F: RealScalar> Mul for Quat<F> {
    type Output = Self;
    /// `(t₁ + v₁)(t₂ + v₂) = t₁t₂ − v₁·v₂ + t₁v₂ + t₂v₁ + v₁×v₂`.
    fn mul(self, r: Self) -> Self {
        let v1 = self.vector();
        let v2 = r.vector();
        let t = self.t.clone() * r.t.clone() - dot3(&v1, &v2);
        let c = cross(&v1, &v2);
        let comp = |i: usize| self.t.clone() * v2[i].clone() + r.t.clone() * v1[i].clone() + c[i].clone();
        Quat::new(t, comp(0), comp(1), comp(2))
    }
}

impl<F: RealScalar> Neg for Quat<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Quat::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl<F: RealScalar> Scalar for Quat<F> {
    type Real = F;
    const COMMUTATIVE: bool = false;

    fn zero() -> Self {
        Quat::real(F::zero())
    }
    fn one() -> Self {
        Quat::real(F::one())
    }
    fn is_zero(&self) -> bool {
        self.t.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let n = self.abs_sq().inv()?;
        Some(self.conj().scale(&n))
    }
    fn conj(&self) -> Self {
        Quat::new(self.t.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }
    fn abs_sq(&self) -> F {
        self.components()
            .into_iter()
            .fold(F::zero(), |acc, c| acc + c.clone() * c)
    }
    fn from_real(r: F) -> Self {
        Quat::real(r)
    }
    fn discriminant(&self) -> i64 {
        self.components()
            .iter()
            .map(|c| c.discriminant())
            .find(|&d| d != 0)
            .unwrap_or(0)
    }
    fn det_norm(m: &Matrix<Self>) -> Result<F> {
        m.pivot_norm()
    }
    fn sample_small<R: Rng + ?Sized>(rng: &mut R, d: i64) -> Self {
        Quat::new(
            F::sample_small(rng, d),
            F::sample_small(rng, d),
            F::sample_small(rng, d),
            F::sample_small(rng, d),
        )
    }
}

/// `t² + x² + y² + z²`.
pub fn quat_normsq<F: RealScalar>(a: &Quat<F>) -> F {
    a.abs_sq()
}

/// `α* / |α|²`.
pub fn quat_inv<F: RealScalar>(a: &Quat<F>) -> Result<Quat<F>> {
    a.inv().ok_or(Error::DivisionByZero)
}

/// The 2×2 complex matrix of `a + bi + cj + dk = (a + bi) + (c + di)j`,
/// `[[a+bi, c+di], [−c+di, a−bi]]`.
///
/// This orientation is multiplicative under `ij = k`; its transpose
/// ([`complexify_transposed`]) reverses products.
pub fn complexify<F: RealScalar>(q: &Quat<F>) -> Matrix<CPair<F>> {
    complexify_transposed(q).transpose()
}

/// `[[a+bi, −c+di], [c+di, a−bi]]`, an anti-homomorphism:
/// the image of `αβ` is the image of `β` times the image of `α`.
pub fn complexify_transposed<F: RealScalar>(q: &Quat<F>) -> Matrix<CPair<F>> {
    let (a, b, c, d) = (q.t.clone(), q.x.clone(), q.y.clone(), q.z.clone());
    Matrix::from_rows(vec![
        vec![CPair::new(a.clone(), b.clone()), CPair::new(-c.clone(), d.clone())],
        vec![CPair::new(c, d), CPair::new(a, -b)],
    ])
}

impl<F: RealScalar> fmt::Display for Quat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {}; {})", self.t, self.x, self.y, self.z)
    }
}

impl<F: RealScalar> fmt::Debug for Quat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
