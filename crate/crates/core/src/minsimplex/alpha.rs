//! The α-coefficients of a simplex and their norm inequalities.
//!
//! In barycentric coordinates adapted to a simplex `Π₁…Πₙ₊₁`, the third
//! hyperplane through `Πp ∩ Πq` has equation `α_pq·x_p + x_q = 0`, and
//! `α_qp = α_pq⁻¹`.  Replacing `Πq` by `Π_pq` for every `q` in a nonempty
//! set `T ∌ p` gives a simplex of measure `|(1 − Σ_{q∈T} α_pq)⁻¹|²` relative
//! to the base, so minimality of the base forces
//! `|1 − Σ_{q∈T} α_pq|² ≤ 1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::{simplex_vertices, Measure};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::projective::{change_basis, to_chart, Arrangement, Hyperplane};
use crate::scalars::{sqrt::cmp_sqrt_sum, RealScalar, Scalar};
use crate::sg_core::select_third;

/// One inequality `|1 − Σ_{q∈set} α_pq|² ≤ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Inequality<R> {
    /// Simplex positions, 0-based.
    pub p: usize,
    pub set: Vec<usize>,
    /// `|1 − Σ α|²`.
    pub value: R,
}

impl<R: RealScalar> Inequality<R> {
    pub fn holds(&self) -> bool {
        self.value.cmp_real(&R::one()) != Ordering::Greater
    }

    pub fn is_equality(&self) -> bool {
        self.value.is_one()
    }

    pub fn slack(&self) -> R {
        R::one() - self.value.clone()
    }

    /// Relative measure of the simplex that gives rise to this inequality.
    pub fn relative_measure(&self) -> Measure<R> {
        match self.value.inv() {
            Some(v) => Measure::Finite(v),
            None => Measure::Infinite,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AlphaSystem<S: Scalar> {
    /// Plane indices of the base simplex, in position order.
    pub base: Vec<usize>,
    /// Plane index of the chosen third hyperplane for positions `p < q`.
    pub thirds: BTreeMap<(usize, usize), usize>,
    /// `α_pq` for ordered distinct positions.
    pub alpha: BTreeMap<(usize, usize), S>,
    pub inequalities: Vec<Inequality<S::Real>>,
    /// The base vertices in the chart, as the columns of the basis change.
    pub basis: Matrix<S>,
}

/// Nonempty subsets of `items`, by size and then lexicographically.
fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=items.len() {
        for c in super::combinations(items.len(), k) {
            out.push(c.into_iter().map(|i| items[i]).collect());
        }
    }
    out
}

/// Positions `0..n1` without `p`.
fn others(n1: usize, p: usize) -> Vec<usize> {
    (0..n1).filter(|&q| q != p).collect()
}

impl<S: Scalar> AlphaSystem<S> {
    /// Build from explicit coefficients on `n1` positions; checks
    /// `α_pq·α_qp = 1`.
    pub fn from_alphas(n1: usize, alpha: BTreeMap<(usize, usize), S>) -> Result<Self> {
        for p in 0..n1 {
            for q in others(n1, p) {
                let a = alpha.get(&(p, q)).ok_or_else(|| Error::InvalidParameter(format!("missing alpha {p} {q}")))?;
                let b = &alpha[&(q, p)];
                if !(a.clone() * b.clone()).is_one() {
                    return Err(Error::NonUnit(p, q));
                }
            }
        }
        let mut sys = AlphaSystem {
            base: (0..n1).collect(),
            thirds: BTreeMap::new(),
            alpha,
            inequalities: Vec::new(),
            basis: Matrix::identity(n1),
        };
        sys.inequalities = sys.evaluate();
        Ok(sys)
    }

    pub fn positions(&self) -> usize {
        self.base.len()
    }

    pub fn alpha(&self, p: usize, q: usize) -> &S {
        &self.alpha[&(p, q)]
    }

    fn evaluate(&self) -> Vec<Inequality<S::Real>> {
        let n1 = self.positions();
        let mut out = Vec::new();
        for p in 0..n1 {
            for set in subsets(&others(n1, p)) {
                let sum = set.iter().fold(S::zero(), |acc, &q| acc + self.alpha(p, q).clone());
                out.push(Inequality {
                    p,
                    value: (S::one() - sum).abs_sq(),
                    set,
                });
            }
        }
        out
    }

    pub fn all_hold(&self) -> bool {
        self.inequalities.iter().all(Inequality::holds)
    }

    pub fn all_equalities(&self) -> bool {
        self.inequalities.iter().all(Inequality::is_equality)
    }

    /// Unordered position pairs.
    pub fn pairs(&self) -> usize {
        let n1 = self.positions();
        n1 * (n1 - 1) / 2
    }

    /// `Σ_{p≠q} |α_pq|` against `bound`, exactly.
    pub fn abs_sum_cmp(&self, bound: &S::Real) -> Option<Ordering> {
        let norms: Vec<S::Real> = self.alpha.values().map(Scalar::abs_sq).collect();
        cmp_sqrt_sum(&norms, bound)
    }

    /// `Σ_{p≠q} |α_pq| ≥ 2·#pairs`, which follows from `|α_pq|·|α_qp| = 1`.
    pub fn agm_holds(&self) -> bool {
        let bound = <S::Real as Scalar>::from_int(2 * self.pairs() as i64);
        self.abs_sum_cmp(&bound) != Some(Ordering::Less)
    }
}

/// Pass to the coordinates of simplex `base` in `a` and read off `α_pq`.
pub fn derive_alpha_system<S: Scalar>(a: &Arrangement<S>, base: &[usize]) -> Result<AlphaSystem<S>> {
    let n1 = a.dim() + 1;
    if base.len() != n1 {
        return Err(Error::DimensionMismatch {
            expected: n1,
            found: base.len(),
        });
    }
    let planes: Vec<&Hyperplane<S>> = base
        .iter()
        .map(|&i| a.planes().get(i).ok_or(Error::NotInConfiguration(i)))
        .collect::<Result<_>>()?;
    let verts = simplex_vertices(&planes).ok_or_else(|| Error::Degenerate("base planes do not form a simplex".into()))?;
    let inf = a.infinity_or_barycentric();
    let cols = verts
        .iter()
        .map(|v| to_chart(v, &inf))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Degenerate("base simplex has a vertex at infinity".into()))?;
    let basis = Matrix::from_columns(&cols)?;

    let mut thirds = BTreeMap::new();
    let mut alpha = BTreeMap::new();
    for p in 0..n1 {
        for q in p + 1..n1 {
            let k = select_third(a, base[p], base[q])?;
            thirds.insert((p, q), k);
            let h = change_basis(&a.planes()[k], &basis)?;
            let c = h.covector();
            if c.iter().enumerate().any(|(r, x)| r != p && r != q && !x.is_zero()) {
                return Err(Error::Internal(format!("third plane {k} leaves the pencil of {p} and {q}")));
            }
            let (hp, hq) = (&c[p], &c[q]);
            let apq = hq.inv().ok_or(Error::NonUnit(p, q))? * hp.clone();
            let aqp = hp.inv().ok_or(Error::NonUnit(q, p))? * hq.clone();
            if !(apq.clone() * aqp.clone()).is_one() {
                return Err(Error::NonUnit(p, q));
            }
            alpha.insert((p, q), apq);
            alpha.insert((q, p), aqp);
        }
    }
    let mut sys = AlphaSystem {
        base: base.to_vec(),
        thirds,
        alpha,
        inequalities: Vec::new(),
        basis,
    };
    sys.inequalities = sys.evaluate();
    Ok(sys)
}

/// The planes of the replacement simplex behind `ineq`: `Πq` is swapped
/// for the chosen third `Π_pq` for each `q` in the set.
pub fn replacement_planes<S: Scalar>(sys: &AlphaSystem<S>, ineq: &Inequality<S::Real>) -> Vec<usize> {
    (0..sys.positions())
        .map(|q| {
            if ineq.set.contains(&q) {
                let key = (ineq.p.min(q), ineq.p.max(q));
                sys.thirds[&key]
            } else {
                sys.base[q]
            }
        })
        .collect()
}
