use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{dot, intersect_hyperplanes, Matrix, Side, SpanBasis};
use crate::projective::{to_chart, Arrangement, Domain, Hyperplane};
use crate::scalars::{Quad, Rat, RealScalar, Scalar};
use crate::sg_core::{dual_third, verify_dual_sg};

/// Outcome of a dual-SG check restricted to interior flats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteriorCheck {
    pub elements: usize,
    /// Pairs whose intersection counts as interior.
    pub interior: Vec<(usize, usize)>,
    /// Interior pairs with no third element.
    pub failures: Vec<(usize, usize)>,
    /// Violations of the unrestricted check.
    pub boundary_violations: usize,
}

impl InteriorCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn lattice_line(i: usize, m: i64) -> Hyperplane<Rat> {
    // xᵢ = m·(x₁ + x₂ + x₃)
    let mut c = vec![Rat::from_int(-m); 3];
    c[i] = &c[i] + &Rat::one();
    Hyperplane::new(c).expect("nonzero")
}

/// Lines `xᵢ = m`, `|m| ≤ M`, in the chart `x₁ + x₂ + x₃ = 1`; ordered by
/// `i` and then `m`.
pub fn tri_lattice(m: u32) -> Result<Arrangement<Rat>> {
    if m == 0 {
        return Err(Error::InvalidParameter("lattice bound must be at least 1".into()));
    }
    let m = m as i64;
    let planes = (0..3).flat_map(|i| (-m..=m).map(move |k| lattice_line(i, k))).collect();
    Arrangement::new(2, Domain::Real, planes, Some(Hyperplane::barycentric_infinity(3)))
}

/// Every finite crossing with all coordinates of modulus below `M − 1`
/// must lie on a third line.
pub fn check_tri_lattice(m: u32) -> Result<InteriorCheck> {
    let a = tri_lattice(m)?;
    let inf = a.infinity_or_barycentric();
    let bound = Rat::from_int(m as i64 - 1);
    let per = 2 * m as usize + 1;
    let mut interior = Vec::new();
    let mut failures = Vec::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if i / per == j / per {
                continue;
            }
            let rows = vec![a.planes()[i].covector().to_vec(), a.planes()[j].covector().to_vec()];
            let p = intersect_hyperplanes(&rows).ok_or_else(|| Error::Internal("lattice lines coincide".into()))?;
            let Some(x) = to_chart(&p, &inf) else { continue };
            if !x.iter().all(|c| c.abs().cmp_real(&bound).is_lt()) {
                continue;
            }
            interior.push((i, j));
            let through = a.planes().iter().filter(|h| dot(h.covector(), &p).is_zero()).count();
            if through < 3 || dual_third(&a, i, j).is_none() {
                failures.push((i, j));
            }
        }
    }
    Ok(InteriorCheck {
        elements: a.len(),
        interior,
        failures,
        boundary_violations: verify_dual_sg(&a).violations.len(),
    })
}

/// `ρ^e` for any integer `e`.
pub fn rho_pow(e: i64) -> Quad {
    match e.rem_euclid(3) {
        0 => Quad::one(),
        1 => Quad::rho(),
        _ => Quad::rho() * Quad::rho(),
    }
}

/// `a + bρ` for integers `a`, `b`.
fn eisenstein(a: i64, b: i64) -> Quad {
    Quad::from_int(a) + Quad::rho() * Quad::from_int(b)
}

/// Eisenstein integers of norm at most `bound`, by norm, then `a`, then `b`.
pub fn eisenstein_ring(bound: u32) -> Vec<Quad> {
    let r = bound as i64 + 1;
    let mut out: Vec<(i64, i64, i64)> = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            let n = a * a - a * b + b * b;
            if n <= bound as i64 {
                out.push((n, a, b));
            }
        }
    }
    out.sort();
    out.into_iter().map(|(_, a, b)| eisenstein(a, b)).collect()
}

/// `x_f − ρ^c·x_{f+1} = m` in affine ℂ³ (indices mod 3).
#[derive(Clone, Debug, PartialEq)]
pub struct EisensteinPlane {
    pub family: usize,
    pub c: usize,
    pub m: Quad,
}

impl EisensteinPlane {
    /// Covector on `(x₁, x₂, x₃, x₀)`, with `x₀ = 0` at infinity.
    pub fn hyperplane(&self) -> Hyperplane<Quad> {
        let mut v = vec![Quad::zero(); 4];
        v[self.family] = Quad::one();
        v[(self.family + 1) % 3] = -rho_pow(self.c as i64);
        v[3] = -self.m.clone();
        Hyperplane::new(v).expect("nonzero")
    }
}

/// Families, then exponents, then the ring in [`eisenstein_ring`] order.
pub fn eisenstein_plane_list(bound: u32) -> Vec<EisensteinPlane> {
    let ring = eisenstein_ring(bound);
    let mut out = Vec::new();
    for family in 0..3 {
        for c in 0..3 {
            for m in &ring {
                out.push(EisensteinPlane { family, c, m: m.clone() });
            }
        }
    }
    out
}

pub fn eisenstein_planes(bound: u32) -> Result<Arrangement<Quad>> {
    let planes = eisenstein_plane_list(bound).iter().map(EisensteinPlane::hyperplane).collect();
    Arrangement::new(3, Domain::Complex(-3), planes, Some(Hyperplane::coordinate(4, 3)))
}

/// The plane predicted through the line where two planes meet, written as
/// `x_f − ρ^c·x_{f+1} = λ·m + μ·m′` in terms of the two constants.  Both
/// rules come from eliminating a coordinate:
///
/// * `x_f − ρ^c x_{f+1} = m`, `x_{f+1} − ρ^{c′} x_{f+2} = m′` give
///   `x_{f+2} − ρ^{−c−c′} x_f = −ρ^{−c′}(m′ + ρ^{−c} m)`;
/// * `x_f − ρ^c x_{f+1} = m`, `x_f − ρ^{c′} x_{f+1} = m′` with `c ≠ c′`
///   give the remaining exponent `c″` with constant `λm + μm′`, where
///   `λ + μ = 1` and `λρ^c + μρ^{c′} = ρ^{c″}`.
///
/// Returns `(family, c, coefficient of m, coefficient of m′)`, or `None`
/// for parallel planes (same family and exponent).
pub fn closure_coefficients(fa: usize, ca: usize, fb: usize, cb: usize) -> Option<(usize, usize, Quad, Quad)> {
    let (ca, cb) = (ca as i64, cb as i64);
    if fa == fb {
        if ca == cb {
            return None;
        }
        let c3 = 3 - ca - cb;
        let mu = (rho_pow(c3) - rho_pow(ca)) * (rho_pow(cb) - rho_pow(ca)).inv().expect("distinct roots");
        let lambda = Quad::one() - mu.clone();
        return Some((fa, c3 as usize, lambda, mu));
    }
    let family = (fa + 2) % 3;
    if fb == (fa + 1) % 3 {
        let c3 = (-ca - cb).rem_euclid(3) as usize;
        Some((family, c3, -rho_pow(-ca - cb), -rho_pow(-cb)))
    } else {
        // swap the roles of m and m′
        let (f, c, on_b, on_a) = closure_coefficients(fb, cb as usize, fa, ca as usize)?;
        Some((f, c, on_a, on_b))
    }
}

/// The closure partner of two planes.
#[derive(Clone, Debug, PartialEq)]
pub enum Closure {
    Parallel,
    Predicted(EisensteinPlane),
}

pub fn closure_third(a: &EisensteinPlane, b: &EisensteinPlane) -> Closure {
    match closure_coefficients(a.family, a.c, b.family, b.c) {
        None => Closure::Parallel,
        Some((family, c, on_a, on_b)) => Closure::Predicted(EisensteinPlane {
            family,
            c,
            m: on_a * a.m.clone() + on_b * b.m.clone(),
        }),
    }
}

fn x_part(family: usize, c: usize) -> Vec<Quad> {
    let h = EisensteinPlane { family, c, m: Quad::zero() }.hyperplane();
    h.covector()[..3].to_vec()
}

/// Symbolic check of the rule for `(fa, ca)` and `(fb, cb)`: the predicted
/// plane is `λ·A + μ·B` with `λ, μ` read off the null space of the linear
/// parts, and then its constant must be `λm + μm′` identically, i.e. the
/// coefficients must be `λ` and `μ`.
pub fn closure_identity_holds(fa: usize, ca: usize, fb: usize, cb: usize) -> bool {
    let Some((f, c, on_m, on_m2)) = closure_coefficients(fa, ca, fb, cb) else {
        return false;
    };
    let cols = vec![x_part(fa, ca), x_part(fb, cb), x_part(f, c)];
    let null = Matrix::from_columns(&cols).expect("3x3").null_space();
    let [nu] = null.as_slice() else { return false };
    let Some(inv) = nu[2].inv() else { return false };
    let lambda = -(nu[0].clone() * inv.clone());
    let mu = -(nu[1].clone() * inv);
    lambda == on_m && mu == on_m2
}

/// Concrete check on `count` random Eisenstein constants: the predicted
/// plane lies in the pencil of the two given planes.
pub fn check_closure_random(seed: u64, count: usize) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < count {
        let draw = |rng: &mut ChaCha8Rng| EisensteinPlane {
            family: rng.gen_range(0..3),
            c: rng.gen_range(0..3),
            m: eisenstein(rng.gen_range(-6..=6), rng.gen_range(-6..=6)),
        };
        let (a, b) = (draw(&mut rng), draw(&mut rng));
        let Closure::Predicted(t) = closure_third(&a, &b) else { continue };
        let mut pencil = SpanBasis::new(Side::Left, 4);
        pencil.insert(a.hyperplane().covector());
        pencil.insert(b.hyperplane().covector());
        if !pencil.contains(t.hyperplane().covector()) {
            return false;
        }
        done += 1;
    }
    true
}

/// Interior dual-SG check of the truncation at norm `bound`: a pair is
/// interior when its closure partner stays inside the truncation (for
/// parallel planes, when the class has a third member).
pub fn check_eisenstein(bound: u32) -> Result<InteriorCheck> {
    let list = eisenstein_plane_list(bound);
    let a = eisenstein_planes(bound)?;
    let limit = Rat::from_int(bound as i64);
    let class = eisenstein_ring(bound).len();
    let mut interior = Vec::new();
    let mut failures = Vec::new();
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            let ok = match closure_third(&list[i], &list[j]) {
                Closure::Parallel => {
                    if class < 3 {
                        continue;
                    }
                    dual_third(&a, i, j).is_some()
                }
                Closure::Predicted(t) => {
                    if t.m.norm().cmp_real(&limit).is_gt() {
                        continue;
                    }
                    match a.position(&t.hyperplane()) {
                        Some(k) => {
                            let mut pencil = SpanBasis::new(Side::Left, 4);
                            pencil.insert(a.planes()[i].covector());
                            pencil.insert(a.planes()[j].covector());
                            k != i && k != j && pencil.contains(a.planes()[k].covector()) && dual_third(&a, i, j).is_some()
                        }
                        None => false,
                    }
                }
            };
            interior.push((i, j));
            if !ok {
                failures.push((i, j));
            }
        }
    }
    Ok(InteriorCheck {
        elements: a.len(),
        interior,
        failures,
        boundary_violations: verify_dual_sg(&a).violations.len(),
    })
}
