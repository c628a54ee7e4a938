use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use super::{small_rat, Rat, RealScalar, Scalar, Sign};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// `a + b·√d` over one squarefree discriminant `d`.
///
/// Values with `b = 0` are plain rationals and carry `d = 0`; they combine
/// with elements of any field.  Combining two irrational values with
/// different discriminants is an error (`try_*`) or a panic (operators).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quad {
    a: Rat,
    b: Rat,
    d: i64,
}

pub(crate) fn is_squarefree(d: i64) -> bool {
    let mut n = d.unsigned_abs();
    if n == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        if n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

pub(crate) fn check_discriminant(d: i64) -> Result<()> {
    if d == 0 || d == 1 || !is_squarefree(d) {
        Err(Error::BadDiscriminant(d))
    } else {
        Ok(())
    }
}

fn join(d1: i64, d2: i64) -> Result<i64> {
    match (d1, d2) {
        (0, d) | (d, 0) => Ok(d),
        (x, y) if x == y => Ok(x),
        (x, y) => Err(Error::MixedDiscriminant(x, y)),
    }
}

impl Quad {
    pub fn new(a: Rat, b: Rat, d: i64) -> Result<Quad> {
        if b.is_zero() {
            return Ok(Quad::rational(a));
        }
        check_discriminant(d)?;
        Ok(Quad { a, b, d })
    }

    fn raw(a: Rat, b: Rat, d: i64) -> Quad {
        if b.is_zero() {
            Quad::rational(a)
        } else {
            Quad { a, b, d }
        }
    }

    pub fn rational(a: Rat) -> Quad {
        Quad {
            a,
            b: Rat::zero(),
            d: 0,
        }
    }

    /// `√d` itself.
    pub fn sqrt_of(d: i64) -> Result<Quad> {
        Quad::new(Rat::zero(), Rat::one(), d)
    }

    /// The primitive cube root of unity `ρ = (−1 + √−3)/2`.
    pub fn rho() -> Quad {
        Quad::raw(Rat::new(-1, 2), Rat::new(1, 2), -3)
    }

    /// The golden ratio `(1 + √5)/2`.
    pub fn phi() -> Quad {
        Quad::raw(Rat::new(1, 2), Rat::new(1, 2), 5)
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    /// Discriminant tag, `0` for rational values.
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a − b·√d`.
    pub fn galois_conj(&self) -> Quad {
        Quad::raw(self.a.clone(), -&self.b, self.d)
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rat {
        self.a.square() - Rat::from_int(self.d) * self.b.square()
    }

    pub fn try_add(&self, rhs: &Quad) -> Result<Quad> {
        let d = join(self.d, rhs.d)?;
        Ok(Quad::raw(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    pub fn try_sub(&self, rhs: &Quad) -> Result<Quad> {
        let d = join(self.d, rhs.d)?;
        Ok(Quad::raw(&self.a - &rhs.a, &self.b - &rhs.b, d))
    }

    pub fn try_mul(&self, rhs: &Quad) -> Result<Quad> {
        let d = join(self.d, rhs.d)?;
        let dr = Rat::from_int(d);
        let a = &self.a * &rhs.a + dr * (&self.b * &rhs.b);
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Quad::raw(a, b, d))
    }

    pub fn try_div(&self, rhs: &Quad) -> Result<Quad> {
        let inv = rhs.recip().ok_or(Error::DivisionByZero)?;
        self.try_mul(&inv)
    }

    pub fn recip(&self) -> Option<Quad> {
        let n = self.norm();
        let inv = n.recip()?;
        Some(Quad::raw(&self.a * &inv, -(&self.b * &inv), self.d))
    }

    fn expect(r: Result<Quad>) -> Quad {
        match r {
            Ok(q) => q,
            Err(e) => panic!("{e}"),
        }
    }
}

/// Sign of `a + b·√d` for `d > 0`, decided by comparing `a²` with `b²·d`.
///
/// Rational values (b = 0) are accepted for any tag.
pub fn quad_sign(q: &Quad) -> Result<Sign> {
    let sa = q.a.sign();
    let sb = q.b.sign();
    if sb == Sign::Zero {
        return Ok(sa);
    }
    if q.d <= 0 {
        return Err(Error::Unordered(q.d));
    }
    if sa == Sign::Zero || sa == sb {
        return Ok(sb);
    }
    let lhs = q.a.square();
    let rhs = q.b.square() * Rat::from_int(q.d);
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sb,
        std::cmp::Ordering::Equal => Sign::Zero,
    })
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let (op, mag) = if self.b.sign() == Sign::Neg {
            ('-', -&self.b)
        } else {
            ('+', self.b.clone())
        };
        write!(f, "{}{}{}*rt({})", self.a, op, mag, self.d)
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rat> for Quad {
    fn from(a: Rat) -> Quad {
        Quad::rational(a)
    }
}

macro_rules! quad_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a> $tr<&'a Quad> for &'a Quad {
            type Output = Quad;
            fn $m(self, rhs: &'a Quad) -> Quad {
                Quad::expect(self.$try(rhs))
            }
        }
        impl $tr for Quad {
            type Output = Quad;
            fn $m(self, rhs: Quad) -> Quad {
                Quad::expect(self.$try(&rhs))
            }
        }
    };
}

quad_binop!(Add, add, try_add);
quad_binop!(Sub, sub, try_sub);
quad_binop!(Mul, mul, try_mul);

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad::raw(-self.a, -self.b, self.d)
    }
}

impl Scalar for Quad {
    type Real = Quad;
    const COMMUTATIVE: bool = true;

    fn zero() -> Quad {
        Quad::rational(Rat::zero())
    }
    fn one() -> Quad {
        Quad::rational(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
    fn inv(&self) -> Option<Quad> {
        self.recip()
    }
    fn conj(&self) -> Quad {
        if self.d < 0 {
            self.galois_conj()
        } else {
            self.clone()
        }
    }
    fn abs_sq(&self) -> Quad {
        if self.d < 0 {
            Quad::rational(self.norm())
        } else {
            self * self
        }
    }
    fn from_real(r: Quad) -> Quad {
        r
    }
    fn discriminant(&self) -> i64 {
        self.d
    }
    fn det_norm(m: &Matrix<Quad>) -> Result<Quad> {
        Ok(m.det()?.abs_sq())
    }
    fn sample_small<R: Rng + ?Sized>(rng: &mut R, d: i64) -> Quad {
        if d == 0 {
            Quad::rational(small_rat(rng))
        } else {
            Quad::raw(small_rat(rng), small_rat(rng), d)
        }
    }
}

impl RealScalar for Quad {
    fn sign(&self) -> Sign {
        match quad_sign(self) {
            Ok(s) => s,
            Err(e) => panic!("{e}"),
        }
    }
    fn from_rat(r: Rat) -> Quad {
        Quad::rational(r)
    }
    fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            self.a.to_f64()
        } else if self.d > 0 {
            self.a.to_f64() + self.b.to_f64() * (self.d as f64).sqrt()
        } else {
            f64::NAN
        }
    }
    fn sqrt_exact(&self) -> Option<Quad> {
        if self.sign() == Sign::Neg {
            return None;
        }
        if self.b.is_zero() {
            if let Some(r) = self.a.sqrt_exact() {
                return Some(Quad::rational(r));
            }
            return None;
        }
        // (x + y√d)² = a + b√d  ⇒  x² + d·y² = a, 2xy = b,
        // hence x² = (a ± √(a² − d·b²)) / 2.
        let s = self.norm().sqrt_exact()?;
        for cand in [&self.a + &s, &self.a - &s] {
            let x2 = cand * Rat::new(1, 2);
            if let Some(x) = x2.sqrt_exact() {
                if x.is_zero() {
                    continue;
                }
                let y = &self.b / &(Rat::from_int(2) * x.clone());
                let root = Quad::raw(x, y, self.d);
                let root = if root.sign() == Sign::Neg { -root } else { root };
                if &(&root * &root) == self {
                    return Some(root);
                }
            }
        }
        None
    }
    fn rat_bounds(&self, bits: u32) -> (Rat, Rat) {
        if self.b.is_zero() {
            return (self.a.clone(), self.a.clone());
        }
        assert!(self.d > 0, "bounds requested for a complex value");
        // widen the √d interval so the scaled result keeps the requested width
        let extra = self.b.abs().numer().bits() as u32 + 1;
        let (lo, hi) = Rat::from_int(self.d).sqrt_bounds(bits + extra);
        let (p, q) = if self.b.sign() == Sign::Pos {
            (&self.b * &lo, &self.b * &hi)
        } else {
            (&self.b * &hi, &self.b * &lo)
        };
        (&self.a + &p, &self.a + &q)
    }
}
