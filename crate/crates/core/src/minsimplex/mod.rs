//! Simplices of a hyperplane arrangement and their measures.
//!
//! The measure of `n+1` hyperplanes with empty intersection is the squared
//! modulus determinant (`|det|²`, or the Study determinant over ℍ) of the
//! matrix of their vertices, each vertex scaled so that the hyperplane at
//! infinity evaluates to 1 on it.  A vertex on the hyperplane at infinity
//! makes the measure infinite.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{dot, intersect_hyperplanes, normalize_point, Matrix};
use crate::projective::{to_chart, Arrangement, Hyperplane, ProjPoint};
use crate::scalars::{RealScalar, Scalar};

mod alpha;

pub use alpha::{derive_alpha_system, replacement_planes, AlphaSystem, Inequality};

/// A non-negative exact real or `∞`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Measure<R> {
    Finite(R),
    Infinite,
}

impl<R: RealScalar> Measure<R> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Measure::Finite(_))
    }

    pub fn value(&self) -> Option<&R> {
        match self {
            Measure::Finite(v) => Some(v),
            Measure::Infinite => None,
        }
    }

    /// `∞` compares above every finite value.
    pub fn cmp_measure(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Measure::Finite(a), Measure::Finite(b)) => a.cmp_real(b),
            (Measure::Finite(_), Measure::Infinite) => Ordering::Less,
            (Measure::Infinite, Measure::Finite(_)) => Ordering::Greater,
            (Measure::Infinite, Measure::Infinite) => Ordering::Equal,
        }
    }
}

impl<R: fmt::Display> fmt::Display for Measure<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Finite(v) => v.fmt(f),
            Measure::Infinite => f.write_str("inf"),
        }
    }
}

/// `n+1` planes of an arrangement with empty common intersection.
#[derive(Clone, Debug)]
pub struct Simplex<S: Scalar> {
    /// Increasing plane indices.
    pub planes: Vec<usize>,
    /// `vertices[i]` is the intersection of all planes but `planes[i]`,
    /// scaled to the affine chart when finite.
    pub vertices: Vec<ProjPoint<S>>,
    pub measure: Measure<S::Real>,
}

/// Vertices `Pᵢ = ⋂_{j≠i} Πⱼ`, or `None` if the planes share a point.
pub fn simplex_vertices<S: Scalar>(planes: &[&Hyperplane<S>]) -> Option<Vec<Vec<S>>> {
    let n1 = planes.len();
    if planes.iter().any(|h| h.len() != n1) {
        return None;
    }
    let mut verts = Vec::with_capacity(n1);
    for i in 0..n1 {
        let rows: Vec<Vec<S>> = (0..n1)
            .filter(|&j| j != i)
            .map(|j| planes[j].covector().to_vec())
            .collect();
        let v = intersect_hyperplanes(&rows)?;
        if dot(planes[i].covector(), &v).is_zero() {
            return None;
        }
        verts.push(v);
    }
    Some(verts)
}

/// The measure of a simplex, from vertices normalized against `infinity`.
pub fn measure<S: Scalar>(planes: &[&Hyperplane<S>], infinity: &Hyperplane<S>) -> Result<Measure<S::Real>> {
    let verts = simplex_vertices(planes).ok_or_else(|| Error::Degenerate("planes do not form a simplex".into()))?;
    let mut cols = Vec::with_capacity(verts.len());
    for v in &verts {
        match to_chart(v, infinity) {
            Some(c) => cols.push(c),
            None => return Ok(Measure::Infinite),
        }
    }
    Ok(Measure::Finite(Matrix::from_columns(&cols)?.det_norm()?))
}

/// The same quantity through multiplicativity: the determinant of the raw
/// vertices divided by `Π |infinity · Pᵢ|²`.
pub fn measure_factored<S: Scalar>(raw: &Matrix<S>, infinity: &Hyperplane<S>) -> Result<Measure<S::Real>> {
    let det = raw.det_norm()?;
    scale_by_chart(&det, raw, infinity)
}

fn scale_by_chart<S: Scalar>(det: &S::Real, raw: &Matrix<S>, infinity: &Hyperplane<S>) -> Result<Measure<S::Real>> {
    let mut denom = <S::Real as Scalar>::one();
    for c in 0..raw.cols() {
        let e = dot(infinity.covector(), &raw.column(c));
        if e.is_zero() {
            return Ok(Measure::Infinite);
        }
        denom = denom * e.abs_sq();
    }
    Ok(Measure::Finite(det.clone() * denom.inv().ok_or(Error::DivisionByZero)?))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Simplices of an arrangement together with the raw data needed to
/// re-measure them against another hyperplane at infinity.
pub struct SimplexTable<S: Scalar> {
    pub simplices: Vec<Vec<usize>>,
    /// Raw vertex matrix of each simplex (columns as returned by the solver).
    raw: Vec<Matrix<S>>,
    /// `|det|²` or Study determinant of `raw`.
    det: Vec<S::Real>,
}

impl<S: Scalar> SimplexTable<S> {
    pub fn build(a: &Arrangement<S>) -> Result<Self> {
        let n1 = a.dim() + 1;
        let planes = a.planes();
        // every simplex vertex is the common point of n planes
        let facets = combinations(planes.len(), n1 - 1);
        let points: HashMap<Vec<usize>, Vec<S>> = facets
            .into_par_iter()
            .filter_map(|f| {
                let rows: Vec<Vec<S>> = f.iter().map(|&i| planes[i].covector().to_vec()).collect();
                intersect_hyperplanes(&rows).map(|v| (f, v))
            })
            .collect();
        let found: Vec<(Vec<usize>, Matrix<S>, S::Real)> = combinations(planes.len(), n1)
            .into_par_iter()
            .filter_map(|t| {
                let first = &points.get(&t[1..])?;
                if dot(planes[t[0]].covector(), first).is_zero() {
                    return None;
                }
                let cols: Vec<Vec<S>> = (0..n1)
                    .map(|i| {
                        let facet: Vec<usize> = t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
                        points[&facet].clone()
                    })
                    .collect();
                let raw = Matrix::from_columns(&cols).ok()?;
                Some(raw.det_norm().map(|d| (t, raw, d)))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut table = SimplexTable {
            simplices: Vec::with_capacity(found.len()),
            raw: Vec::with_capacity(found.len()),
            det: Vec::with_capacity(found.len()),
        };
        for (t, raw, d) in found {
            table.simplices.push(t);
            table.raw.push(raw);
            table.det.push(d);
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn raw_vertices(&self, i: usize) -> &Matrix<S> {
        &self.raw[i]
    }

    /// Measures of every simplex against `infinity`.
    pub fn measures(&self, infinity: &Hyperplane<S>) -> Result<Vec<Measure<S::Real>>> {
        (0..self.len())
            .into_par_iter()
            .map(|i| scale_by_chart(&self.det[i], &self.raw[i], infinity))
            .collect()
    }

    pub fn simplex(&self, i: usize, infinity: &Hyperplane<S>) -> Result<Simplex<S>> {
        let raw = &self.raw[i];
        let vertices = (0..raw.cols())
            .map(|c| {
                let v = raw.column(c);
                let v = to_chart(&v, infinity).unwrap_or_else(|| normalize_point(&v));
                ProjPoint::new(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Simplex {
            planes: self.simplices[i].clone(),
            vertices,
            measure: scale_by_chart(&self.det[i], raw, infinity)?,
        })
    }
}

/// All simplices of `a`, measured against its hyperplane at infinity
/// (barycentric when none is declared).
pub fn enumerate_simplices<S: Scalar>(a: &Arrangement<S>) -> Result<Vec<Simplex<S>>> {
    let table = SimplexTable::build(a)?;
    let inf = a.infinity_or_barycentric();
    (0..table.len()).map(|i| table.simplex(i, &inf)).collect()
}

/// A minimum-measure simplex and every other simplex that ties with it.
#[derive(Clone, Debug)]
pub struct MinSimplex<S: Scalar> {
    pub simplex: Simplex<S>,
    pub ties: Vec<Vec<usize>>,
}

/// Index of the least measure (lexicographically first on ties) and the
/// indices tying with it.
pub fn argmin_measure<R: RealScalar>(measures: &[Measure<R>]) -> Result<(usize, Vec<usize>)> {
    let mut best: Option<usize> = None;
    for (i, m) in measures.iter().enumerate() {
        if !m.is_finite() {
            continue;
        }
        if best.map_or(true, |b| m.cmp_measure(&measures[b]) == Ordering::Less) {
            best = Some(i);
        }
    }
    let b = best.ok_or(Error::NoFiniteSimplex)?;
    let ties = (0..measures.len())
        .filter(|&i| i != b && measures[i] == measures[b])
        .collect();
    Ok((b, ties))
}

pub fn find_min_simplex<S: Scalar>(a: &Arrangement<S>) -> Result<MinSimplex<S>> {
    let table = SimplexTable::build(a)?;
    let inf = a.infinity_or_barycentric();
    let measures = table.measures(&inf)?;
    let (b, ties) = argmin_measure(&measures)?;
    Ok(MinSimplex {
        simplex: table.simplex(b, &inf)?,
        ties: ties.into_iter().map(|i| table.simplices[i].clone()).collect(),
    })
}

/// A hyperplane at infinity under which all simplex measures differ.
#[derive(Clone, Debug)]
pub struct GenericInfinity<S> {
    pub infinity: Hyperplane<S>,
    /// Number of candidates drawn, including the accepted one.
    pub attempts: usize,
}

pub const DEFAULT_ATTEMPTS: usize = 1000;

/// Draw small-rational covectors until one avoids the arrangement and every
/// simplex vertex and separates all simplex measures.
pub fn generic_infinity<S: Scalar>(a: &Arrangement<S>, seed: u64, max_attempts: usize) -> Result<GenericInfinity<S>> {
    let table = SimplexTable::build(a)?;
    generic_infinity_in(a, &table, seed, max_attempts)
}

pub fn generic_infinity_in<S: Scalar>(
    a: &Arrangement<S>,
    table: &SimplexTable<S>,
    seed: u64,
    max_attempts: usize,
) -> Result<GenericInfinity<S>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=max_attempts {
        let cov: Vec<S> = (0..=a.dim())
            .map(|_| S::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
            .collect();
        let Ok(h) = Hyperplane::new(cov) else { continue };
        if a.position(&h).is_some() {
            continue;
        }
        let measures = table.measures(&h)?;
        if measures.iter().any(|m| !m.is_finite()) {
            continue;
        }
        if tie_free(&measures) {
            return Ok(GenericInfinity { infinity: h, attempts: attempt });
        }
    }
    Err(Error::RetryExhausted(max_attempts))
}

/// Whether all finite measures are pairwise distinct.
pub fn tie_free<R: RealScalar>(measures: &[Measure<R>]) -> bool {
    let mut vals: Vec<&R> = measures.iter().filter_map(Measure::value).collect();
    vals.sort_by(|x, y| x.cmp_real(y));
    vals.windows(2).all(|w| w[0] != w[1])
}
