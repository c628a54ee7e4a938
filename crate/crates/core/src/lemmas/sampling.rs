//! Seeded Monte-Carlo suites for the three inequality lemmas.
//!
//! Samples are drawn in binary64.  Anything within [`NEAR`] of the bound is
//! rationalized and decided by the exact checks; floating tolerance alone
//! never produces a violation.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{check_hexagon_lemma, check_parallelotope_lemma, check_triangle_lemma, TRIANGLES};
use crate::error::Error;
use crate::scalars::float::{exact, norm4, to_exact_complex, to_exact_quat, C64};
use crate::scalars::Rat;

/// Distance to the bound below which a sample is decided exactly.
pub const NEAR: f64 = 1e-6;

const CHUNK: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            samples: 100_000,
            seed: 0,
            tol: 1e-9,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleReport {
    pub lemma: String,
    /// Admissible samples checked.
    pub samples: usize,
    /// Samples whose conclusion fails, as decided in exact arithmetic.
    pub violations: usize,
    /// `bound − statistic`, over all samples.
    pub max_slack: f64,
    pub min_slack: f64,
    pub seed: u64,
    pub tolerance: f64,
    /// Box draws made and how many were admissible without shrinking.
    pub box_draws: usize,
    pub box_accepted: usize,
    /// Samples proposed near the equality configuration.
    pub boundary_proposals: usize,
    /// Samples within [`NEAR`] of the bound, all re-decided exactly.
    pub near_boundary: usize,
    /// Near samples whose rationalization misses the precondition.
    pub exact_inadmissible: usize,
    /// Failed per-sample checks of intermediate steps.
    pub substep_failures: usize,
}

impl SampleReport {
    fn empty(lemma: &str, cfg: &SuiteConfig) -> Self {
        SampleReport {
            lemma: lemma.into(),
            samples: 0,
            violations: 0,
            max_slack: f64::NEG_INFINITY,
            min_slack: f64::INFINITY,
            seed: cfg.seed,
            tolerance: cfg.tol,
            box_draws: 0,
            box_accepted: 0,
            boundary_proposals: 0,
            near_boundary: 0,
            exact_inadmissible: 0,
            substep_failures: 0,
        }
    }

    fn merge(mut self, o: SampleReport) -> Self {
        self.samples += o.samples;
        self.violations += o.violations;
        self.max_slack = self.max_slack.max(o.max_slack);
        self.min_slack = self.min_slack.min(o.min_slack);
        self.box_draws += o.box_draws;
        self.box_accepted += o.box_accepted;
        self.boundary_proposals += o.boundary_proposals;
        self.near_boundary += o.near_boundary;
        self.exact_inadmissible += o.exact_inadmissible;
        self.substep_failures += o.substep_failures;
        self
    }

    pub fn passed(&self) -> bool {
        self.violations == 0 && self.substep_failures == 0
    }

    /// Fraction of box draws admissible as drawn.
    pub fn acceptance_rate(&self) -> f64 {
        if self.box_draws == 0 {
            0.0
        } else {
            self.box_accepted as f64 / self.box_draws as f64
        }
    }

    /// Record one admissible sample with its slack; `exact` decides near
    /// ones and returns `Some(holds)`, or `None` when the rationalized
    /// sample is not admissible.
    fn record(&mut self, slack: f64, exact: impl FnOnce() -> Option<bool>) {
        self.samples += 1;
        self.max_slack = self.max_slack.max(slack);
        self.min_slack = self.min_slack.min(slack);
        if slack < NEAR || slack.is_nan() {
            self.near_boundary += 1;
            match exact() {
                None => self.exact_inadmissible += 1,
                Some(false) => self.violations += 1,
                Some(true) => {}
            }
        }
    }
}

impl fmt::Display for SampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lemma: {}", self.lemma)?;
        writeln!(f, "samples: {}", self.samples)?;
        writeln!(f, "violations: {}", self.violations)?;
        writeln!(f, "max_slack: {:e}", self.max_slack)?;
        writeln!(f, "min_slack: {:e}", self.min_slack)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "tolerance: {:e}", self.tolerance)?;
        writeln!(f, "box_draws: {}", self.box_draws)?;
        writeln!(f, "box_accepted: {}", self.box_accepted)?;
        writeln!(f, "acceptance_rate: {:.4}", self.acceptance_rate())?;
        writeln!(f, "boundary_proposals: {}", self.boundary_proposals)?;
        writeln!(f, "near_boundary: {}", self.near_boundary)?;
        writeln!(f, "exact_inadmissible: {}", self.exact_inadmissible)?;
        writeln!(f, "substep_failures: {}", self.substep_failures)
    }
}

/// Split `cfg.samples` into chunks, each with its own ChaCha stream of the
/// one seed, and merge the chunk reports in order.
fn run_suite<F>(lemma: &str, cfg: &SuiteConfig, one: F) -> SampleReport
where
    F: Fn(&mut ChaCha8Rng, &mut SampleReport) + Sync,
{
    let chunks = cfg.samples.div_ceil(CHUNK);
    let parts: Vec<SampleReport> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(c as u64);
            let mut rep = SampleReport::empty(lemma, cfg);
            let n = CHUNK.min(cfg.samples - c * CHUNK);
            for _ in 0..n {
                one(&mut rng, &mut rep);
            }
            rep
        })
        .collect();
    parts.into_iter().fold(SampleReport::empty(lemma, cfg), SampleReport::merge)
}

/// Perturbation size `10^{−k}` with `k` uniform in `1..=9`, drawn once per
/// sample so that every coordinate moves on the same scale.
fn jitter_scale(rng: &mut ChaCha8Rng) -> f64 {
    10f64.powi(-rng.gen_range(1..=9))
}

fn jitter(rng: &mut ChaCha8Rng, scale: f64) -> f64 {
    rng.gen_range(-1.0..1.0) * scale
}

fn triangle_areas(a: &BTreeMap<(usize, usize), f64>) -> [f64; 9] {
    let mut out = [0.0; 9];
    for (row, &(_, p, set)) in TRIANGLES.iter().enumerate() {
        let e = set.iter().fold(1.0, |acc, &q| acc - a[&(p, q)]);
        out[row] = 1.0 / e.abs();
    }
    out
}

fn reciprocal_f64(a12: f64, a13: f64, a23: f64) -> BTreeMap<(usize, usize), f64> {
    let mut m = BTreeMap::new();
    for ((p, q), v) in [((0, 1), a12), ((0, 2), a13), ((1, 2), a23)] {
        m.insert((p, q), v);
        m.insert((q, p), 1.0 / v);
    }
    m
}

/// Some normalized area is at most 1.  Half of the samples come from the
/// box `[−2, 2]³` on `(α₁₂, α₁₃, α₂₃)`, half from around the equality case
/// `α = 1`, with some coordinates exactly 1.
pub fn triangle_suite(cfg: &SuiteConfig) -> SampleReport {
    run_suite("triangle", cfg, |rng, rep| {
        let boundary = rng.gen_bool(0.5);
        let a: [f64; 3] = loop {
            let a = if boundary {
                let e = jitter_scale(rng);
                [0; 3].map(|_| if rng.gen_bool(0.25) { 1.0 } else { 1.0 + jitter(rng, e) })
            } else {
                rep.box_draws += 1;
                [0; 3].map(|_| rng.gen_range(-2.0..2.0))
            };
            if a.iter().all(|x| x.abs() > 1e-12) {
                break a;
            }
        };
        if boundary {
            rep.boundary_proposals += 1;
        } else {
            rep.box_accepted += 1;
        }
        let alpha = reciprocal_f64(a[0], a[1], a[2]);
        let min_area = triangle_areas(&alpha).into_iter().fold(f64::INFINITY, f64::min);
        rep.record(1.0 - min_area, || {
            let upper: BTreeMap<(usize, usize), Rat> =
                [((0, 1), a[0]), ((0, 2), a[1]), ((1, 2), a[2])].into_iter().map(|(k, v)| (k, exact(v))).collect();
            let full = super::reciprocal_closure(&upper).ok()?;
            Some(check_triangle_lemma(&full).map(|o| o.holds()).unwrap_or(false))
        });
    })
}

/// Indices sorted by argument in `(−π, π]`, zero values last.
pub fn angular_order(a: &[C64; 3]) -> [usize; 3] {
    let mut idx = [0, 1, 2];
    idx.sort_by(|&i, &j| (a[i].is_zero(), a[i].arg()).partial_cmp(&(a[j].is_zero(), a[j].arg())).expect("finite"));
    idx
}

fn subset_sums<T: Copy>(xs: &[T], zero: T, add: impl Fn(T, T) -> T) -> Vec<T> {
    (1u32..1 << xs.len())
        .map(|m| (0..xs.len()).filter(|&i| m >> i & 1 == 1).fold(zero, |acc, i| add(acc, xs[i])))
        .collect()
}

/// Largest `t` keeping `|1 − t·s| ≤ 1` for every subset sum `s`, given by
/// `t ≤ 2·Re s / |s|²`; `None` when some `s` has `Re s ≤ 0`.
fn shrink_limit(sums: &[(f64, f64)]) -> Option<f64> {
    let mut t = f64::INFINITY;
    for &(re, sq) in sums {
        if sq == 0.0 {
            continue;
        }
        if re <= 0.0 {
            return None;
        }
        t = t.min(2.0 * re / sq);
    }
    Some(t)
}

/// Scale an inadmissible draw radially into the admissible set.  Both the
/// boundary `t = t_max` and the interior are drawn.
fn shrink_factor(rng: &mut ChaCha8Rng, t_max: f64) -> f64 {
    let t = if rng.gen_bool(0.25) { t_max } else { t_max * rng.gen_range(f64::EPSILON..=1.0) };
    // stay inside after rounding
    t * (1.0 - 4.0 * f64::EPSILON)
}

fn disc_ok_c(a: &[C64; 3]) -> bool {
    subset_sums(a, C64::new(0.0, 0.0), C64::add)
        .iter()
        .all(|s| C64::new(1.0, 0.0).sub(*s).abs() <= 1.0)
}

fn rho_f64() -> C64 {
    C64::new(-0.5, 3f64.sqrt() / 2.0)
}

/// `Σ|αₙ| ≤ 3` under the seven disc conditions.  Box draws in `[−2, 2]²`
/// per value, perturbations of `{1, −ρ, −ρ̄}`; inadmissible draws are shrunk
/// radially.  Each sample also checks that the hexagon vertices in angular
/// order lie in `|z − 1| ≤ 1` and that its perimeter is `2·Σ|αₙ|`.
pub fn hexagon_suite(cfg: &SuiteConfig) -> SampleReport {
    run_suite("hexagon", cfg, |rng, rep| {
        let boundary = rng.gen_bool(0.5);
        let a: [C64; 3] = loop {
            let mut a = if boundary {
                let r = rho_f64();
                let mut base = [C64::new(1.0, 0.0), C64::new(-r.re, -r.im), C64::new(-r.re, r.im)];
                let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
                base.swap(i, j);
                let e = jitter_scale(rng);
                base.map(|z| z.add(C64::new(jitter(rng, e), jitter(rng, e))))
            } else {
                rep.box_draws += 1;
                [0; 3].map(|_| {
                    if rng.gen_bool(0.05) {
                        C64::new(0.0, 0.0)
                    } else {
                        C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
                    }
                })
            };
            if disc_ok_c(&a) {
                if !boundary {
                    rep.box_accepted += 1;
                }
                break a;
            }
            let sums: Vec<(f64, f64)> = subset_sums(&a, C64::new(0.0, 0.0), C64::add)
                .iter()
                .map(|s| (s.re, s.re * s.re + s.im * s.im))
                .collect();
            let Some(t_max) = shrink_limit(&sums) else { continue };
            let t = shrink_factor(rng, t_max);
            a = a.map(|z| z.scale(t));
            if disc_ok_c(&a) {
                break a;
            }
        };
        if boundary {
            rep.boundary_proposals += 1;
        }
        let order = angular_order(&a);
        let [x, y, z] = order.map(|i| a[i]);
        let zero = C64::new(0.0, 0.0);
        let hexagon = [zero, x, x.add(y), x.add(y).add(z), y.add(z), z];
        let one = C64::new(1.0, 0.0);
        let sum: f64 = a.iter().map(|z| z.abs()).sum();
        let perimeter: f64 = (0..6).map(|k| hexagon[(k + 1) % 6].sub(hexagon[k]).abs()).sum();
        let in_disc = hexagon.iter().all(|v| one.sub(*v).abs() <= 1.0 + cfg.tol);
        if !in_disc || (perimeter - 2.0 * sum).abs() > cfg.tol * (1.0 + sum) {
            rep.substep_failures += 1;
        }
        rep.record(3.0 - sum, || match check_hexagon_lemma(&a.map(to_exact_complex)) {
            Ok(o) => Some(o.holds),
            Err(Error::PreconditionFailed(_)) => None,
            Err(_) => Some(false),
        });
    })
}

fn qmul(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn disc_ok_q(b: &[[f64; 4]; 4]) -> bool {
    subset_sums(b, [0.0; 4], add4).iter().all(|s| norm4(&[1.0 - s[0], -s[1], -s[2], -s[3]]) <= 1.0)
}

fn add4(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

/// `1/2 + q·v_p·q̄` for the tetrahedron `v_p = (±1, ±1, ±1)/2` with an even
/// number of minus signs and a random unit quaternion `q`.
fn rotated_tetrahedron(rng: &mut ChaCha8Rng) -> [[f64; 4]; 4] {
    let q = loop {
        let q: [f64; 4] = [0; 4].map(|_| rng.gen_range(-1.0..1.0));
        let n = norm4(&q);
        if n > 1e-3 && n <= 1.0 {
            break q.map(|x| x / n);
        }
    };
    let qbar = [q[0], -q[1], -q[2], -q[3]];
    let tetra = [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]];
    tetra.map(|v| {
        let w = qmul(qmul(q, [0.0, v[0] / 2.0, v[1] / 2.0, v[2] / 2.0]), qbar);
        [0.5, w[1], w[2], w[3]]
    })
}

/// `Σ over signs of ‖Σ ±a_p‖² = 16·Σ‖a_p‖²`, to relative tolerance `tol`.
pub fn sign_sum_identity_f64(a: &[[f64; 4]; 4], tol: f64) -> bool {
    let direct: f64 = a.iter().map(|x| norm4(x).powi(2)).sum();
    let total: f64 = (0u32..16)
        .map(|m| {
            let s = (0..4).fold([0.0; 4], |acc, p| {
                let sign = if m >> p & 1 == 1 { -1.0 } else { 1.0 };
                add4(acc, a[p].map(|x| sign * x))
            });
            norm4(&s).powi(2)
        })
        .sum();
    (total - 16.0 * direct).abs() <= tol * (1.0 + total)
}

/// The vertices `½·Σ ±b_p` of the centred parallelotope lie in the unit
/// ball, up to `tol`.
pub fn centered_vertices_fit_f64(b: &[[f64; 4]; 4], tol: f64) -> bool {
    (0u32..16).all(|m| {
        let s = (0..4).fold([0.0; 4], |acc, p| {
            let sign = if m >> p & 1 == 1 { -0.5 } else { 0.5 };
            add4(acc, b[p].map(|x| sign * x))
        });
        norm4(&s) <= 1.0 + tol
    })
}

/// `Σ‖b_p‖ ≤ 4` under the 16 ball conditions.  Box draws in `[−2, 2]⁴` per
/// vector, perturbations of rotated tetrahedral configurations; shrinking
/// as for the hexagon.  Each sample also checks the sign-sum identity and
/// the centred fit.
pub fn parallelotope_suite(cfg: &SuiteConfig) -> SampleReport {
    run_suite("parallelotope", cfg, |rng, rep| {
        let boundary = rng.gen_bool(0.5);
        let b: [[f64; 4]; 4] = loop {
            let mut b = if boundary {
                let e = jitter_scale(rng);
                rotated_tetrahedron(rng).map(|v| v.map(|x| x + jitter(rng, e)))
            } else {
                rep.box_draws += 1;
                [0; 4].map(|_| [0; 4].map(|_| rng.gen_range(-2.0..2.0)))
            };
            if disc_ok_q(&b) {
                if !boundary {
                    rep.box_accepted += 1;
                }
                break b;
            }
            let sums: Vec<(f64, f64)> =
                subset_sums(&b, [0.0; 4], add4).iter().map(|s| (s[0], norm4(s).powi(2))).collect();
            let Some(t_max) = shrink_limit(&sums) else { continue };
            let t = shrink_factor(rng, t_max);
            b = b.map(|v| v.map(|x| x * t));
            if disc_ok_q(&b) {
                break b;
            }
        };
        if boundary {
            rep.boundary_proposals += 1;
        }
        if !sign_sum_identity_f64(&b, cfg.tol) || !centered_vertices_fit_f64(&b, cfg.tol) {
            rep.substep_failures += 1;
        }
        let sum: f64 = b.iter().map(norm4).sum();
        rep.record(4.0 - sum, || match check_parallelotope_lemma(&b.map(|v| to_exact_quat(&v))) {
            Ok(o) => Some(o.holds),
            Err(Error::PreconditionFailed(_)) => None,
            Err(_) => Some(false),
        });
    })
}
