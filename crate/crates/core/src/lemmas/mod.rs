//! The inequality lemmas behind the minimal-simplex argument, checked
//! exactly on given inputs and by seeded sampling.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::minsimplex::{AlphaSystem, Measure};
use crate::projective::{parallel, Hyperplane};
use crate::scalars::{dot3, sqrt::cmp_sqrt_sum, CPair, Quad, Quat, Rat, RealScalar, Scalar};

mod sampling;

pub use sampling::{
    angular_order, centered_vertices_fit_f64, hexagon_suite, parallelotope_suite, sign_sum_identity_f64,
    triangle_suite, SampleReport, SuiteConfig, NEAR,
};

/// The nine triangles compared with `ℓ₁ℓ₂ℓ₃`, as `(label, p, T)`: the
/// lines `ℓ_q` for `q ∈ T` are replaced by `ℓ_pq`, giving normalized area
/// `|1 − Σ_{q∈T} α_pq|⁻¹`.  Positions are 0-based.
pub const TRIANGLES: [(&str, usize, &[usize]); 9] = [
    ("l12 l2 l3", 1, &[0]),
    ("l1 l12 l3", 0, &[1]),
    ("l1 l2 l13", 0, &[2]),
    ("l13 l2 l3", 2, &[0]),
    ("l1 l23 l3", 2, &[1]),
    ("l1 l2 l23", 1, &[2]),
    ("l1 l12 l13", 0, &[1, 2]),
    ("l12 l2 l23", 1, &[0, 2]),
    ("l13 l23 l3", 2, &[0, 1]),
];

fn check_reciprocal<S: Scalar>(n: usize, alpha: &BTreeMap<(usize, usize), S>) -> Result<()> {
    for p in 0..n {
        for q in (0..n).filter(|&q| q != p) {
            let a = alpha
                .get(&(p, q))
                .ok_or_else(|| Error::InvalidParameter(format!("missing alpha {} {}", p + 1, q + 1)))?;
            if a.is_zero() {
                return Err(Error::Degenerate(format!("alpha {} {} vanishes", p + 1, q + 1)));
            }
            if !(a.clone() * alpha[&(q, p)].clone()).is_one() {
                return Err(Error::NonUnit(p, q));
            }
        }
    }
    Ok(())
}

/// Fill in `α_qp = α_pq⁻¹` from the values with `p < q`.
pub fn reciprocal_closure<S: Scalar>(upper: &BTreeMap<(usize, usize), S>) -> Result<BTreeMap<(usize, usize), S>> {
    let mut out = BTreeMap::new();
    for (&(p, q), a) in upper {
        let inv = a.inv().ok_or_else(|| Error::Degenerate(format!("alpha {} {} vanishes", p + 1, q + 1)))?;
        out.insert((p, q), a.clone());
        out.insert((q, p), inv);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TriangleOutcome {
    /// Normalized areas in [`TRIANGLES`] order; `∞` for an unbounded one.
    pub areas: Vec<Measure<Rat>>,
    /// Some area is at most 1.
    pub conclusion_holds: bool,
    /// No area is below 1.
    pub equality_case: bool,
    /// In the equality case, every `α_ij = 1`.
    pub parallels_forced: bool,
}

impl TriangleOutcome {
    pub fn holds(&self) -> bool {
        self.conclusion_holds && (!self.equality_case || self.parallels_forced)
    }
}

pub fn check_triangle_lemma(alpha: &BTreeMap<(usize, usize), Rat>) -> Result<TriangleOutcome> {
    check_reciprocal(3, alpha)?;
    let areas: Vec<Measure<Rat>> = TRIANGLES
        .iter()
        .map(|&(_, p, set)| {
            let e = set.iter().fold(Rat::one(), |acc, &q| &acc - &alpha[&(p, q)]);
            match e.abs().recip() {
                Some(a) => Measure::Finite(a),
                None => Measure::Infinite,
            }
        })
        .collect();
    let one = Measure::Finite(Rat::one());
    let conclusion_holds = areas.iter().any(|a| a.cmp_measure(&one) != Ordering::Greater);
    let equality_case = areas.iter().all(|a| a.cmp_measure(&one) != Ordering::Less);
    Ok(TriangleOutcome {
        areas,
        conclusion_holds,
        equality_case,
        parallels_forced: alpha.values().all(Rat::is_one),
    })
}

/// Lines `x₁, x₂, x₃` and `α_ij·x_i + x_j` for `i < j`, in that order.
pub fn triangle_lines(alpha: &BTreeMap<(usize, usize), Rat>) -> Vec<Hyperplane<Rat>> {
    let mut lines: Vec<Hyperplane<Rat>> = (0..3).map(|i| Hyperplane::coordinate(3, i)).collect();
    for (p, q) in [(0, 1), (0, 2), (1, 2)] {
        let mut c = vec![Rat::zero(); 3];
        c[p] = alpha[&(p, q)].clone();
        c[q] = Rat::one();
        lines.push(Hyperplane::new(c).expect("nonzero"));
    }
    lines
}

/// Indices into [`triangle_lines`] of the lines of triangle `row`.
pub fn triangle_line_indices(row: usize) -> [usize; 3] {
    let (_, p, set) = TRIANGLES[row];
    let third = |a: usize, b: usize| 3 + match (a.min(b), a.max(b)) {
        (0, 1) => 0,
        (0, 2) => 1,
        _ => 2,
    };
    let mut out = [0, 1, 2];
    for &q in set {
        out[q] = third(p, q);
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct HexagonOutcome {
    /// `Σ|αₙ|` compared with 3.
    pub sum_cmp: Ordering,
    pub sum: f64,
    pub holds: bool,
    pub equality: bool,
}

/// Subsets of `0..n` as bit masks, in increasing mask order.
fn masks(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

fn disc_conditions<S: Scalar>(alpha: &[S]) -> Result<()> {
    for set in masks(alpha.len()) {
        let s = set.iter().fold(S::one(), |acc, &i| acc - alpha[i].clone());
        if s.abs_sq().cmp_real(&S::Real::one()) == Ordering::Greater {
            return Err(Error::PreconditionFailed(set));
        }
    }
    Ok(())
}

/// `|1 − Σ_{n∈S} αₙ| ≤ 1` for every `S` implies `Σ|αₙ| ≤ 3`, with equality
/// exactly for `{1, −ρ, −ρ̄}`.  The equality pattern is recognized as one
/// value equal to 1 and two distinct roots of `z² − z + 1`.
pub fn check_hexagon_lemma<S: Scalar>(alpha: &[S; 3]) -> Result<HexagonOutcome> {
    disc_conditions(alpha)?;
    let norms: Vec<S::Real> = alpha.iter().map(Scalar::abs_sq).collect();
    let three = S::Real::from_int(3);
    let sum_cmp = cmp_sqrt_sum(&norms, &three).ok_or_else(|| Error::Internal("undecided root sum".into()))?;
    let root = |z: &S| (z.clone() * z.clone() - z.clone() + S::one()).is_zero();
    let pattern = (0..3).any(|i| {
        let (a, b) = (&alpha[(i + 1) % 3], &alpha[(i + 2) % 3]);
        alpha[i].is_one() && root(a) && root(b) && a != b
    });
    Ok(HexagonOutcome {
        sum_cmp,
        sum: crate::scalars::sqrt::sqrt_sum_f64(&norms),
        holds: sum_cmp != Ordering::Greater,
        equality: sum_cmp == Ordering::Equal && pattern,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParallelotopeOutcome {
    /// `Σ‖b_p‖` compared with 4.
    pub sum_cmp: Ordering,
    pub sum: f64,
    pub holds: bool,
    pub equality: bool,
}

/// `|1 − Σ_{p∈A} b_p| ≤ 1` for all 16 subsets implies `Σ‖b_p‖ ≤ 4`, with
/// equality exactly when `b_p = 1/2 + v_p`, `⟨v_p, v_p⟩ = 3/4` and
/// `⟨v_p, v_q⟩ = −1/4`.
pub fn check_parallelotope_lemma<F: RealScalar>(b: &[Quat<F>; 4]) -> Result<ParallelotopeOutcome> {
    disc_conditions(b)?;
    let norms: Vec<F> = b.iter().map(Scalar::abs_sq).collect();
    let sum_cmp = cmp_sqrt_sum(&norms, &F::from_int(4)).ok_or_else(|| Error::Internal("undecided root sum".into()))?;
    Ok(ParallelotopeOutcome {
        sum_cmp,
        sum: crate::scalars::sqrt::sqrt_sum_f64(&norms),
        holds: sum_cmp != Ordering::Greater,
        equality: sum_cmp == Ordering::Equal && tetrahedral(b),
    })
}

/// `b_p = 1/2 + v_p` with the `v_p` a regular tetrahedron of radius `√3/2`.
pub fn tetrahedral<F: RealScalar>(b: &[Quat<F>]) -> bool {
    let half = F::from_ratio(1, 2);
    let (three_q, minus_q) = (F::from_ratio(3, 4), F::from_ratio(-1, 4));
    b.iter().enumerate().all(|(p, x)| {
        let v = x.vector();
        x.t == half
            && dot3(&v, &v) == three_q
            && b[p + 1..].iter().all(|y| dot3(&v, &y.vector()) == minus_q)
    })
}

/// `Σ over the 16 sign choices of ‖Σ ±a_p‖² = 16·Σ‖a_p‖²`.
pub fn sign_sum_identity<F: RealScalar>(a: &[Quat<F>; 4]) -> bool {
    let mut total = F::zero();
    for signs in 0u32..16 {
        let s = (0..4).fold(Quat::zero(), |acc, p| {
            if signs >> p & 1 == 1 {
                acc - a[p].clone()
            } else {
                acc + a[p].clone()
            }
        });
        total = total + s.abs_sq();
    }
    let direct = a.iter().fold(F::zero(), |acc, x| acc + x.abs_sq());
    total == F::from_int(16) * direct
}

/// After moving the centroid of the parallelotope to the ball's centre,
/// its vertices `½·Σ ±b_p` lie in the unit ball.
pub fn centered_vertices_fit<F: RealScalar>(b: &[Quat<F>; 4]) -> bool {
    let half = F::from_ratio(1, 2);
    (0u32..16).all(|signs| {
        let s = (0..4).fold(Quat::zero(), |acc, p| {
            let h = b[p].scale(&half);
            if signs >> p & 1 == 1 {
                acc - h
            } else {
                acc + h
            }
        });
        s.abs_sq().cmp_real(&F::one()) != Ordering::Greater
    })
}

/// Positions `0..4` for the four-index complex system.
fn pair(j: usize, k: usize) -> (usize, usize) {
    (j - 1, k - 1)
}

/// The displayed solution: `α₁₃ = α₃₁ = α₂₄ = α₄₂ = 1`,
/// `α₁₂ = α₂₃ = α₃₄ = α₄₁ = −ρ` and `α₁₄ = α₄₃ = α₃₂ = α₂₁ = −ρ̄`.
pub fn canonical_lemma_c() -> BTreeMap<(usize, usize), Quad> {
    let rho = Quad::rho();
    let (one, a, b) = (Quad::one(), -rho.clone(), -rho.galois_conj());
    let mut m = BTreeMap::new();
    for (j, k) in [(1, 3), (3, 1), (2, 4), (4, 2)] {
        m.insert(pair(j, k), one.clone());
    }
    for (j, k) in [(1, 2), (2, 3), (3, 4), (4, 1)] {
        m.insert(pair(j, k), a.clone());
    }
    for (j, k) in [(1, 4), (4, 3), (3, 2), (2, 1)] {
        m.insert(pair(j, k), b.clone());
    }
    m
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                let d = 6 - a - b - c;
                out.push([a, b, c, d]);
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct LemmaCOutcome {
    pub system: AlphaSystem<Quad>,
    /// All 28 inequalities hold.
    pub admissible: bool,
    /// Inequalities with `|1 − Σα|² = 1`.
    pub tight: usize,
    /// Inequalities with `|1 − Σα| = 0`.
    pub vanishing: usize,
    pub all_equalities: bool,
    /// `Σ|α_jk|` compared with 12.
    pub sum_cmp: Option<Ordering>,
    /// `σ` with `α_{σ(j)σ(k)} = canonical_jk`, first in lexicographic order.
    pub matched_permutation: Option<[usize; 4]>,
}

impl LemmaCOutcome {
    pub fn holds(&self) -> bool {
        self.admissible && self.matched_permutation.is_some()
    }
}

pub fn check_lemma_c(alpha: &BTreeMap<(usize, usize), Quad>) -> Result<LemmaCOutcome> {
    check_reciprocal(4, alpha)?;
    let system = AlphaSystem::from_alphas(4, alpha.clone())?;
    let canon = canonical_lemma_c();
    let matched_permutation = permutations4().into_iter().find(|s| {
        canon.iter().all(|(&(j, k), v)| alpha[&(s[j], s[k])] == *v)
    });
    let tight = system.inequalities.iter().filter(|i| i.is_equality()).count();
    let vanishing = system.inequalities.iter().filter(|i| i.value.is_zero()).count();
    Ok(LemmaCOutcome {
        admissible: system.all_hold(),
        tight,
        vanishing,
        all_equalities: system.all_equalities(),
        sum_cmp: system.abs_sum_cmp(&Quad::from_int(12)),
        matched_permutation,
        system,
    })
}

/// `Π₁₃ ∥ Π₂₄` under the barycentric hyperplane at infinity, with
/// `Π_jk: α_jk·x_j + x_k = 0`.
pub fn lemma_c_parallel(alpha: &BTreeMap<(usize, usize), Quad>) -> Result<bool> {
    let plane = |j: usize, k: usize| {
        let mut c = vec![Quad::zero(); 4];
        c[j] = alpha[&(j, k)].clone();
        c[k] = Quad::one();
        Hyperplane::new(c)
    };
    parallel(&plane(0, 2)?, &plane(1, 3)?, &Hyperplane::barycentric_infinity(4))
}

/// Named identities checked in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub checks: Vec<(String, bool)>,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.checks.iter().find(|(_, ok)| !ok).map(|(n, _)| n.as_str())
    }

    pub fn render(&self) -> String {
        self.checks
            .iter()
            .map(|(n, ok)| format!("check: {n}: {}\n", if *ok { "ok" } else { "FAIL" }))
            .collect()
    }
}

/// Hypotheses `α_qp = α_pq⁻¹` and `|1 − Σ_{q∈T} α_pq| ≤ 1`, then the
/// conclusions `α_pq = 1/2 + v_pq`, `v_pq = −v_qp`, `⟨v_pq, v_pq⟩ = 3/4`,
/// `⟨v_pq, v_pr⟩ = −1/4`, equality everywhere and `Σ|α_pq| = 2·#pairs`.
pub fn check_lemma_l1<F: RealScalar>(sys: &AlphaSystem<Quat<F>>) -> Certificate {
    let n = sys.positions();
    let ordered: Vec<(usize, usize)> = (0..n).flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q))).collect();
    let half = F::from_ratio(1, 2);
    let v = |p: usize, q: usize| sys.alpha(p, q).vector();
    let mut checks = Vec::new();
    let mut push = |name: String, ok: bool| checks.push((name, ok));
    push(
        "alpha_qp = alpha_pq^-1".into(),
        ordered.iter().all(|&(p, q)| (sys.alpha(p, q).clone() * sys.alpha(q, p).clone()).is_one()),
    );
    push(format!("|1 - sum alpha| <= 1 ({} inequalities)", sys.inequalities.len()), sys.all_hold());
    push("re alpha_pq = 1/2".into(), ordered.iter().all(|&(p, q)| sys.alpha(p, q).t == half));
    push(
        "v_pq = -v_qp".into(),
        ordered.iter().all(|&(p, q)| {
            let (a, b) = (v(p, q), v(q, p));
            (0..3).all(|i| a[i] == -b[i].clone())
        }),
    );
    push(
        "<v_pq, v_pq> = 3/4".into(),
        ordered.iter().all(|&(p, q)| dot3(&v(p, q), &v(p, q)) == F::from_ratio(3, 4)),
    );
    push(
        "<v_pq, v_pr> = -1/4".into(),
        ordered
            .iter()
            .all(|&(p, q)| (0..n).filter(|&r| r != p && r != q).all(|r| dot3(&v(p, q), &v(p, r)) == F::from_ratio(-1, 4))),
    );
    push(format!("equality in all {} inequalities", sys.inequalities.len()), sys.all_equalities());
    let bound = F::from_int(2 * sys.pairs() as i64);
    push(
        format!("sum |alpha_pq| = {}", 2 * sys.pairs()),
        sys.abs_sum_cmp(&bound) == Some(Ordering::Equal),
    );
    Certificate { checks }
}

/// A complex value as the quaternion `re + im·i`.
pub fn complex_as_quat<F: RealScalar>(z: &CPair<F>) -> Quat<F> {
    Quat::new(z.re.clone(), z.im.clone(), F::zero(), F::zero())
}

/// An element of ℚ(√−3) as `re + im·i` over ℚ(√3).
pub fn eisenstein_as_quat(z: &Quad) -> Result<Quat<Quad>> {
    if z.is_rational() {
        return Ok(Quat::real(z.clone()));
    }
    if z.d() != -3 {
        return Err(Error::BadDiscriminant(z.d()));
    }
    // a + b√−3 = a + (b√3)·i
    Ok(Quat::new(Quad::rational(z.a().clone()), Quad::new(Rat::zero(), z.b().clone(), 3)?, Quad::zero(), Quad::zero()))
}

#[cfg(test)]
mod tests;
