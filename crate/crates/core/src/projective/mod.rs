//! Points, hyperplanes and their incidence in `Pⁿ(D)`.
//!
//! A point is a nonzero column up to right scalars, a hyperplane a nonzero
//! row up to left scalars; `h` contains `p` when `h·p = 0`.  The default
//! hyperplane at infinity is the barycentric one, `Σ xₚ = 0`.

use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vec, left_rank, normalize_point, scale_left, scale_right, Matrix, Side, SpanBasis};
use crate::scalars::{ParseScalar, Quad, Quat, Rat, RealScalar, Scalar};

mod format;

pub use format::{AnyDocument, Document};

/// The scalar domain a configuration lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// ℚ.
    Real,
    /// ℚ(√d) with `d > 0`.
    RealQuad(i64),
    /// ℚ(√d) with `d < 0`.
    Complex(i64),
    /// Quaternions over ℚ (`None`) or ℚ(√d).
    Quaternion(Option<i64>),
}

impl Domain {
    /// Discriminant handed to the literal parser.
    pub fn context(&self) -> Option<i64> {
        match *self {
            Domain::Real | Domain::Quaternion(None) => None,
            Domain::RealQuad(d) | Domain::Complex(d) | Domain::Quaternion(Some(d)) => Some(d),
        }
    }
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Domain::Real => f.write_str("R"),
            Domain::RealQuad(d) => write!(f, "R({d})"),
            Domain::Complex(d) => write!(f, "C({d})"),
            Domain::Quaternion(None) => f.write_str("H"),
            Domain::Quaternion(Some(d)) => write!(f, "H({d})"),
        }
    }
}

/// Scalars that can appear as coordinates in a document.
pub trait Coord: Scalar + ParseScalar {
    /// The domain tag for coordinates over discriminant `d` (0 = none).
    fn domain(d: i64) -> Domain;
}

impl Coord for Rat {
    fn domain(_d: i64) -> Domain {
        Domain::Real
    }
}

impl Coord for Quad {
    fn domain(d: i64) -> Domain {
        if d > 0 {
            Domain::RealQuad(d)
        } else {
            Domain::Complex(d)
        }
    }
}

impl<F: RealScalar> Coord for Quat<F> {
    fn domain(d: i64) -> Domain {
        Domain::Quaternion((d != 0).then_some(d))
    }
}

/// A nonzero column vector up to right scalars.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint<S> {
    coords: Vec<S>,
}

/// A nonzero row vector up to left scalars.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hyperplane<S> {
    covector: Vec<S>,
}

impl<S: Scalar> ProjPoint<S> {
    pub fn new(coords: Vec<S>) -> Result<Self> {
        if is_zero_vec(&coords) {
            return Err(Error::ZeroVector);
        }
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Projective equality: the two columns are right-proportional.
    pub fn same_as(&self, other: &ProjPoint<S>) -> bool {
        right_proportional(&self.coords, &other.coords)
    }

    pub fn scaled(&self, s: &S) -> Result<Self> {
        ProjPoint::new(scale_right(&self.coords, s))
    }
}

impl<S: Scalar> Hyperplane<S> {
    pub fn new(covector: Vec<S>) -> Result<Self> {
        if is_zero_vec(&covector) {
            return Err(Error::ZeroVector);
        }
        Ok(Hyperplane { covector })
    }

    /// `x_i = 0`.
    pub fn coordinate(n_plus_1: usize, i: usize) -> Self {
        let mut v = vec![S::zero(); n_plus_1];
        v[i] = S::one();
        Hyperplane { covector: v }
    }

    /// `Σ xₚ = 0`.
    pub fn barycentric_infinity(n_plus_1: usize) -> Self {
        Hyperplane {
            covector: vec![S::one(); n_plus_1],
        }
    }

    pub fn covector(&self) -> &[S] {
        &self.covector
    }

    pub fn len(&self) -> usize {
        self.covector.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covector.is_empty()
    }

    /// Projective equality: the two rows are left-proportional.
    pub fn same_as(&self, other: &Hyperplane<S>) -> bool {
        left_proportional(&self.covector, &other.covector)
    }

    pub fn scaled(&self, s: &S) -> Result<Self> {
        Hyperplane::new(scale_left(s, &self.covector))
    }

    /// `h·p`.
    pub fn eval(&self, p: &ProjPoint<S>) -> Result<S> {
        check_len(self.len(), p.len())?;
        Ok(dot(&self.covector, &p.coords))
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `v = u·λ` for some λ.
pub fn right_proportional<S: Scalar>(u: &[S], v: &[S]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let Some(k) = u.iter().position(|x| !x.is_zero()) else {
        return is_zero_vec(v);
    };
    let lam = u[k].inv().expect("nonzero") * v[k].clone();
    scale_right(u, &lam) == v
}

/// `v = λ·u` for some λ.
pub fn left_proportional<S: Scalar>(u: &[S], v: &[S]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let Some(k) = u.iter().position(|x| !x.is_zero()) else {
        return is_zero_vec(v);
    };
    let lam = v[k].clone() * u[k].inv().expect("nonzero");
    scale_left(&lam, u) == v
}

/// Whether `p` lies on `h`.
pub fn incident<S: Scalar>(h: &Hyperplane<S>, p: &ProjPoint<S>) -> Result<bool> {
    Ok(h.eval(p)?.is_zero())
}

/// A finite point set in `Pⁿ(D)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Configuration<S> {
    dim: usize,
    domain: Domain,
    points: Vec<ProjPoint<S>>,
}

impl<S: Scalar> Configuration<S> {
    /// Checks lengths and pairwise distinctness.
    pub fn new(dim: usize, domain: Domain, points: Vec<ProjPoint<S>>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            check_len(dim + 1, p.len())?;
            if points[..i].iter().any(|q| q.same_as(p)) {
                return Err(Error::Duplicate(i));
            }
        }
        Ok(Configuration { dim, domain, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn points(&self) -> &[ProjPoint<S>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, p: &ProjPoint<S>) -> Option<usize> {
        self.points.iter().position(|q| q.same_as(p))
    }

    /// The same configuration with the points listed in a new order.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Configuration {
            dim: self.dim,
            domain: self.domain,
            points: order.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// Drop the point at `index`.
    pub fn without(&self, index: usize) -> Self {
        let mut points = self.points.clone();
        points.remove(index);
        Configuration {
            dim: self.dim,
            domain: self.domain,
            points,
        }
    }
}

/// A finite hyperplane set with an optional hyperplane at infinity.
#[derive(Clone, PartialEq, Debug)]
pub struct Arrangement<S> {
    dim: usize,
    domain: Domain,
    planes: Vec<Hyperplane<S>>,
    infinity: Option<Hyperplane<S>>,
}

impl<S: Scalar> Arrangement<S> {
    /// Checks lengths, pairwise distinctness, and that the hyperplane at
    /// infinity is not a member.
    pub fn new(dim: usize, domain: Domain, planes: Vec<Hyperplane<S>>, infinity: Option<Hyperplane<S>>) -> Result<Self> {
        for (i, h) in planes.iter().enumerate() {
            check_len(dim + 1, h.len())?;
            if planes[..i].iter().any(|g| g.same_as(h)) {
                return Err(Error::Duplicate(i));
            }
            if infinity.as_ref().is_some_and(|inf| inf.same_as(h)) {
                return Err(Error::Duplicate(i));
            }
        }
        if let Some(inf) = &infinity {
            check_len(dim + 1, inf.len())?;
        }
        Ok(Arrangement {
            dim,
            domain,
            planes,
            infinity,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn planes(&self) -> &[Hyperplane<S>] {
        &self.planes
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }

    pub fn infinity(&self) -> Option<&Hyperplane<S>> {
        self.infinity.as_ref()
    }

    /// The declared hyperplane at infinity, or `Σ xₚ = 0`.
    pub fn infinity_or_barycentric(&self) -> Hyperplane<S> {
        self.infinity
            .clone()
            .unwrap_or_else(|| Hyperplane::barycentric_infinity(self.dim + 1))
    }

    pub fn with_infinity(&self, infinity: Option<Hyperplane<S>>) -> Result<Self> {
        Arrangement::new(self.dim, self.domain, self.planes.clone(), infinity)
    }

    pub fn position(&self, h: &Hyperplane<S>) -> Option<usize> {
        self.planes.iter().position(|g| g.same_as(h))
    }

    pub fn covectors(&self) -> Vec<Vec<S>> {
        self.planes.iter().map(|h| h.covector.clone()).collect()
    }
}

/// Some `z ∈ S ∖ {x, y}` on the line `xy` (lowest index), or `None`.
pub fn collinear_third<S: Scalar>(s: &Configuration<S>, x: usize, y: usize) -> Result<Option<usize>> {
    for i in [x, y] {
        if i >= s.len() {
            return Err(Error::NotInConfiguration(i));
        }
    }
    if x == y {
        return Err(Error::Degenerate(format!("point {x} paired with itself")));
    }
    let mut line = SpanBasis::new(Side::Right, s.dim + 1);
    line.insert(s.points[x].coords());
    line.insert(s.points[y].coords());
    Ok((0..s.len()).find(|&z| z != x && z != y && line.contains(s.points[z].coords())))
}

/// The dual arrangement: each point column `v` becomes the covector `v*ᵀ`.
///
/// Conjugation turns right spans of columns into left spans of rows, so
/// collinear points map to hyperplanes through a common `(n−2)`-flat over
/// every domain, including ℍ.
pub fn dualize<S: Scalar>(s: &Configuration<S>) -> Arrangement<S> {
    let planes = s
        .points
        .iter()
        .map(|p| Hyperplane {
            covector: p.coords.iter().map(Scalar::conj).collect(),
        })
        .collect();
    Arrangement {
        dim: s.dim,
        domain: s.domain,
        planes,
        infinity: None,
    }
}

/// Inverse of [`dualize`]; the hyperplane at infinity is dropped.
pub fn dualize_arrangement<S: Scalar>(a: &Arrangement<S>) -> Configuration<S> {
    let points = a
        .planes
        .iter()
        .map(|h| ProjPoint {
            coords: h.covector.iter().map(Scalar::conj).collect(),
        })
        .collect();
    Configuration {
        dim: a.dim,
        domain: a.domain,
        points,
    }
}

/// Projective dimension of the span of the points.
pub fn span_dim<S: Scalar>(s: &Configuration<S>) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::Degenerate("empty configuration".into()));
    }
    let cols: Vec<Vec<S>> = s.points.iter().map(|p| p.coords.clone()).collect();
    Ok(crate::linalg::right_rank(&cols) - 1)
}

/// Whether `h₁ ∩ h₂` lies in `infinity`.
pub fn parallel<S: Scalar>(h1: &Hyperplane<S>, h2: &Hyperplane<S>, infinity: &Hyperplane<S>) -> Result<bool> {
    check_len(h1.len(), h2.len())?;
    check_len(h1.len(), infinity.len())?;
    if h1.same_as(h2) || h1.same_as(infinity) || h2.same_as(infinity) {
        return Err(Error::Degenerate("parallelism needs three distinct hyperplanes".into()));
    }
    Ok(left_rank(&[h1.covector.clone(), h2.covector.clone(), infinity.covector.clone()]) == 2)
}

/// A point in the barycentric chart.
#[derive(Clone, PartialEq, Debug)]
pub enum Affine<S> {
    /// Coordinates summing to 1.
    Point(Vec<S>),
    AtInfinity,
}

/// Right-rescale so the coordinates sum to 1.
pub fn to_affine<S: Scalar>(p: &ProjPoint<S>) -> Affine<S> {
    let sum = p.coords.iter().fold(S::zero(), |acc, x| acc + x.clone());
    if sum.is_zero() {
        Affine::AtInfinity
    } else {
        Affine::Point(normalize_point(&p.coords))
    }
}

/// Right-rescale so that `infinity · p = 1`; `None` when `p` lies on it.
pub fn to_chart<S: Scalar>(p: &[S], infinity: &Hyperplane<S>) -> Option<Vec<S>> {
    let s = dot(&infinity.covector, p).inv()?;
    Some(scale_right(p, &s))
}

/// The covector of `h` in the coordinates `x = B·y`, namely `h·B`.
pub fn change_basis<S: Scalar>(h: &Hyperplane<S>, basis: &Matrix<S>) -> Result<Hyperplane<S>> {
    check_len(basis.rows(), h.len())?;
    let covector = (0..basis.cols())
        .map(|c| dot(&h.covector, &basis.column(c)))
        .collect();
    Hyperplane::new(covector)
}

#[cfg(test)]
mod tests;
