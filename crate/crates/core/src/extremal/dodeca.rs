use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::minsimplex::{derive_alpha_system, AlphaSystem};
use crate::projective::{Arrangement, Document, Domain, Hyperplane};
use crate::scalars::{dot3, quat_normsq, Quad, Quat, Scalar};

/// Index pairs `p < q` of the five simplex positions, in labeling order.
pub const UNORDERED_PAIRS: [(usize, usize); 10] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

type V3 = [Quad; 3];

/// The 20 vertices of the regular dodecahedron of circumradius `√3/2`:
/// `(±1, ±1, ±1)/2`, then the cyclic shifts of `(0, ±1/φ, ±φ)/2`.
pub fn dodeca_vertices() -> Vec<V3> {
    let half = Quad::from_ratio(1, 2);
    let phi = Quad::phi();
    let inv_phi = phi.clone() - Quad::one();
    let signs = [Quad::one(), -Quad::one()];
    let mut out = Vec::with_capacity(20);
    for a in &signs {
        for b in &signs {
            for c in &signs {
                out.push([a.clone() * half.clone(), b.clone() * half.clone(), c.clone() * half.clone()]);
            }
        }
    }
    for shift in 0..3 {
        for a in &signs {
            for b in &signs {
                let mut v = [
                    Quad::zero(),
                    a.clone() * inv_phi.clone() * half.clone(),
                    b.clone() * phi.clone() * half.clone(),
                ];
                v.rotate_left(shift);
                out.push(v);
            }
        }
    }
    out
}

fn neg3(v: &V3) -> V3 {
    [-v[0].clone(), -v[1].clone(), -v[2].clone()]
}

struct Search {
    antipode: Vec<usize>,
    /// `dot[i][j] == −1/4`.
    tetra: Vec<Vec<bool>>,
    labels: [usize; 10],
    used: Vec<bool>,
    found: Vec<[usize; 10]>,
}

impl Search {
    /// The vertex assigned to the ordered pair `(a, b)` among the first
    /// `upto` unordered pairs.
    fn oriented(&self, upto: usize, a: usize, b: usize) -> Option<usize> {
        let k = UNORDERED_PAIRS[..upto].iter().position(|&(x, y)| (x, y) == (a.min(b), a.max(b)))?;
        let v = self.labels[k];
        Some(if a < b { v } else { self.antipode[v] })
    }

    fn compatible(&self, k: usize, x: usize) -> bool {
        let (p, q) = UNORDERED_PAIRS[k];
        let xq = self.antipode[x];
        (0..5).all(|r| {
            let at_p = r == p || r == q || self.oriented(k, p, r).map_or(true, |y| self.tetra[x][y]);
            let at_q = r == p || r == q || self.oriented(k, q, r).map_or(true, |y| self.tetra[xq][y]);
            at_p && at_q
        })
    }

    fn run(&mut self, k: usize) {
        if k == UNORDERED_PAIRS.len() {
            self.found.push(self.labels);
            return;
        }
        for x in 0..self.antipode.len() {
            if self.used[x] || !self.compatible(k, x) {
                continue;
            }
            let xq = self.antipode[x];
            self.used[x] = true;
            self.used[xq] = true;
            self.labels[k] = x;
            self.run(k + 1);
            self.used[x] = false;
            self.used[xq] = false;
        }
    }
}

/// Every assignment of vertices `v_pq` (for `p < q`, with `v_qp = −v_pq`)
/// such that each `{v_pq : q ≠ p}` has pairwise inner products `−1/4`.
/// Lexicographically sorted.
pub fn dodeca_labelings() -> Vec<[usize; 10]> {
    let verts = dodeca_vertices();
    let n = verts.len();
    let antipode: Vec<usize> = verts
        .iter()
        .map(|v| verts.iter().position(|w| *w == neg3(v)).expect("centrally symmetric"))
        .collect();
    let target = Quad::from_ratio(-1, 4);
    let tetra = (0..n)
        .map(|i| (0..n).map(|j| dot3(&verts[i], &verts[j]) == target).collect())
        .collect();
    let mut s = Search {
        antipode,
        tetra,
        labels: [0; 10],
        used: vec![false; n],
        found: Vec::new(),
    };
    s.run(0);
    s.found.sort();
    s.found
}

#[derive(Clone, Debug)]
pub struct DodecaSystem {
    pub vertices: Vec<V3>,
    /// Vertex index of `v_pq` for each pair of [`UNORDERED_PAIRS`].
    pub labeling: [usize; 10],
    /// `v_pq` for ordered distinct positions.
    pub v: BTreeMap<(usize, usize), V3>,
    /// `α_pq = 1/2 + v_pq`.
    pub alpha: BTreeMap<(usize, usize), Quat<Quad>>,
}

/// The lexicographically least labeling, with every invariant checked.
pub fn dodeca_system() -> Result<DodecaSystem> {
    let labeling = *dodeca_labelings().first().ok_or_else(|| Error::SearchFailed("no dodecahedral labeling".into()))?;
    let sys = DodecaSystem::from_labeling(labeling);
    sys.verify()?;
    Ok(sys)
}

fn broken(what: &str) -> Error {
    Error::Internal(format!("dodecahedral system violates {what}"))
}

impl DodecaSystem {
    pub fn from_labeling(labeling: [usize; 10]) -> Self {
        let vertices = dodeca_vertices();
        let mut v = BTreeMap::new();
        let mut alpha = BTreeMap::new();
        let half = Quad::from_ratio(1, 2);
        for (k, &(p, q)) in UNORDERED_PAIRS.iter().enumerate() {
            let w = vertices[labeling[k]].clone();
            v.insert((q, p), neg3(&w));
            v.insert((p, q), w);
        }
        for (&pq, w) in &v {
            alpha.insert(pq, Quat::from_parts(half.clone(), w.clone()));
        }
        DodecaSystem {
            vertices,
            labeling,
            v,
            alpha,
        }
    }

    /// Coordinate planes, then `α_pq·x_p + x_q = 0` for `p < q`; the
    /// barycentric hyperplane at infinity.
    pub fn arrangement(&self) -> Arrangement<Quat<Quad>> {
        let mut planes: Vec<Hyperplane<Quat<Quad>>> = (0..5).map(|i| Hyperplane::coordinate(5, i)).collect();
        for &(p, q) in &UNORDERED_PAIRS {
            let mut c = vec![Quat::zero(); 5];
            c[p] = self.alpha[&(p, q)].clone();
            c[q] = Quat::one();
            planes.push(Hyperplane::new(c).expect("nonzero"));
        }
        Arrangement::new(4, Domain::Quaternion(Some(5)), planes, Some(Hyperplane::barycentric_infinity(5)))
            .expect("distinct planes")
    }

    pub fn alpha_system(&self) -> Result<AlphaSystem<Quat<Quad>>> {
        derive_alpha_system(&self.arrangement(), &[0, 1, 2, 3, 4])
    }

    /// The arrangement as a document, with the α values as notes.
    pub fn document(&self) -> Document<Quat<Quad>> {
        let mut doc = Document::from_arrangement(&self.arrangement());
        doc.notes.push("regular dodecahedron alpha system, alpha p q = 1/2 + v_pq".into());
        for ((p, q), a) in &self.alpha {
            doc.notes.push(format!("alpha {} {} = {}", p + 1, q + 1, a));
        }
        doc
    }

    /// Geometric invariants of the vertices and the α relations, then
    /// equality in all 75 inequalities of the derived system.
    pub fn verify(&self) -> Result<()> {
        let three_quarters = Quad::from_ratio(3, 4);
        let minus_quarter = Quad::from_ratio(-1, 4);
        let half = Quad::from_ratio(1, 2);
        for p in 0..5 {
            for q in (0..5).filter(|&q| q != p) {
                let v = &self.v[&(p, q)];
                if *v != neg3(&self.v[&(q, p)]) {
                    return Err(broken("v_pq = -v_qp"));
                }
                if dot3(v, v) != three_quarters {
                    return Err(broken("<v_pq, v_pq> = 3/4"));
                }
                let a = &self.alpha[&(p, q)];
                if a.t != half || !quat_normsq(a).is_one() {
                    return Err(broken("alpha_pq = 1/2 + v_pq with unit norm"));
                }
                if !(a.clone() + self.alpha[&(q, p)].clone()).is_one() {
                    return Err(broken("alpha_pq + alpha_qp = 1"));
                }
                for r in (0..5).filter(|&r| r != p && r != q) {
                    if dot3(v, &self.v[&(p, r)]) != minus_quarter {
                        return Err(broken("<v_pq, v_pr> = -1/4"));
                    }
                    if !quat_normsq(&(a.clone() - self.alpha[&(q, r)].clone())).is_one() {
                        return Err(broken("|alpha_pq - alpha_qr| = 1"));
                    }
                }
            }
        }
        let sys = self.alpha_system()?;
        if sys.alpha != self.alpha {
            return Err(broken("derived alpha values"));
        }
        if sys.inequalities.len() != 75 || !sys.all_equalities() {
            return Err(broken("equality in the 75 inequalities"));
        }
        if sys.abs_sum_cmp(&Quad::from_int(20)) != Some(std::cmp::Ordering::Equal) {
            return Err(broken("sum of |alpha_pq| = 20"));
        }
        Ok(())
    }
}

/// Squared distances `|v − w|²` between the vertices in one tetrahedron.
pub fn tetrahedron_edges(sys: &DodecaSystem, p: usize) -> Vec<Quad> {
    let others: Vec<usize> = (0..5).filter(|&q| q != p).collect();
    let mut out = Vec::new();
    for (i, &q) in others.iter().enumerate() {
        for &r in &others[i + 1..] {
            let (a, b) = (&sys.v[&(p, q)], &sys.v[&(p, r)]);
            let d: V3 = [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone(), a[2].clone() - b[2].clone()];
            out.push(dot3(&d, &d));
        }
    }
    out
}
