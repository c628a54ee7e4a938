//! Sylvester–Gallai checks for point sets and hyperplane arrangements.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{left_rank, right_rank, Side, SpanBasis};
use crate::projective::{collinear_third, Arrangement, Configuration};
use crate::scalars::Scalar;

/// Which incidence condition a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every line through two points contains a third.
    Points,
    /// Every codimension-2 intersection of two hyperplanes lies in a third.
    Hyperplanes,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Points => "sg",
            Mode::Hyperplanes => "dual",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SgReport {
    pub mode: Mode,
    pub elements: usize,
    /// Projective dimension spanned by the points, or by the covectors in
    /// the dual space.
    pub span: usize,
    pub is_sg: bool,
    /// Pairs `i < j` with no third element.
    pub violations: Vec<(usize, usize)>,
    /// The lowest-index third element for every other pair.
    pub witness: BTreeMap<(usize, usize), usize>,
}

impl SgReport {
    fn build(mode: Mode, elements: usize, span: usize, thirds: Vec<((usize, usize), Option<usize>)>) -> Self {
        let mut violations = Vec::new();
        let mut witness = BTreeMap::new();
        for (pair, third) in thirds {
            match third {
                Some(k) => {
                    witness.insert(pair, k);
                }
                None => violations.push(pair),
            }
        }
        SgReport {
            mode,
            elements,
            span,
            is_sg: violations.is_empty(),
            violations,
            witness,
        }
    }

    pub fn pairs(&self) -> usize {
        self.elements * self.elements.saturating_sub(1) / 2
    }

    /// `key: value` lines, then one `witness:` and `violation:` line each.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "mode: {}", self.mode);
        let _ = writeln!(out, "elements: {}", self.elements);
        let _ = writeln!(out, "span: {}", self.span);
        let _ = writeln!(out, "pairs: {}", self.pairs());
        let _ = writeln!(out, "is_sg: {}", self.is_sg);
        let _ = writeln!(out, "violations: {}", self.violations.len());
        for ((i, j), k) in &self.witness {
            let _ = writeln!(out, "witness: {i} {j} {k}");
        }
        for (i, j) in &self.violations {
            let _ = writeln!(out, "violation: {i} {j}");
        }
        out
    }
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Check every pair of points for a third collinear point.
pub fn verify_sg<S: Scalar>(s: &Configuration<S>) -> SgReport {
    let thirds = all_pairs(s.len())
        .into_par_iter()
        .map(|(i, j)| ((i, j), collinear_third(s, i, j).expect("indices in range")))
        .collect();
    let cols: Vec<Vec<S>> = s.points().iter().map(|p| p.coords().to_vec()).collect();
    let span = right_rank(&cols).saturating_sub(1);
    SgReport::build(Mode::Points, s.len(), span, thirds)
}

/// Lowest-index `k ∉ {i, j}` whose covector lies in the left span of
/// planes `i` and `j`.
pub fn dual_third<S: Scalar>(a: &Arrangement<S>, i: usize, j: usize) -> Option<usize> {
    let planes = a.planes();
    let mut pencil = SpanBasis::new(Side::Left, a.dim() + 1);
    pencil.insert(planes[i].covector());
    pencil.insert(planes[j].covector());
    (0..planes.len()).find(|&k| k != i && k != j && pencil.contains(planes[k].covector()))
}

/// Check every pair of hyperplanes for a third through their intersection.
pub fn verify_dual_sg<S: Scalar>(a: &Arrangement<S>) -> SgReport {
    verify_dual_sg_on(a, all_pairs(a.len()))
}

/// The dual check restricted to the listed pairs.
pub fn verify_dual_sg_on<S: Scalar>(a: &Arrangement<S>, pairs: Vec<(usize, usize)>) -> SgReport {
    let thirds = pairs
        .into_par_iter()
        .map(|(i, j)| ((i, j), dual_third(a, i, j)))
        .collect();
    let span = left_rank(&a.covectors()).saturating_sub(1);
    SgReport::build(Mode::Hyperplanes, a.len(), span, thirds)
}

/// Every line through two or more points, as increasing point indices,
/// ordered by their first two members.
pub fn connecting_lines<S: Scalar>(s: &Configuration<S>) -> Vec<Vec<usize>> {
    let pts = s.points();
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for (i, j) in all_pairs(s.len()) {
        if lines.iter().any(|l| l.contains(&i) && l.contains(&j)) {
            continue;
        }
        let mut span = SpanBasis::new(Side::Right, s.dim() + 1);
        span.insert(pts[i].coords());
        span.insert(pts[j].coords());
        lines.push((0..pts.len()).filter(|&k| span.contains(pts[k].coords())).collect());
    }
    lines
}

/// The third hyperplane through `Πp ∩ Πq`, lowest index first.
pub fn select_third<S: Scalar>(a: &Arrangement<S>, p: usize, q: usize) -> Result<usize> {
    for i in [p, q] {
        if i >= a.len() {
            return Err(Error::NotInConfiguration(i));
        }
    }
    if p == q {
        return Err(Error::Degenerate(format!("plane {p} paired with itself")));
    }
    dual_third(a, p, q).ok_or(Error::NoThird(p, q))
}
