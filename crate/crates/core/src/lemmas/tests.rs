use std::cmp::Ordering;
use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::extremal::dodeca_system;
use crate::minsimplex::measure;
use crate::scalars::float::C64;

fn upper(a12: Rat, a13: Rat, a23: Rat) -> BTreeMap<(usize, usize), Rat> {
    let m: BTreeMap<_, _> = [((0, 1), a12), ((0, 2), a13), ((1, 2), a23)].into_iter().collect();
    reciprocal_closure(&m).unwrap()
}

#[test]
fn triangle_all_ones_is_the_equality_case() {
    let o = check_triangle_lemma(&upper(Rat::one(), Rat::one(), Rat::one())).unwrap();
    assert!(o.conclusion_holds && o.equality_case && o.parallels_forced && o.holds());
    // the three two-replacement triangles have area 1, the rest are unbounded
    let finite: Vec<usize> = (0..9).filter(|&i| o.areas[i].is_finite()).collect();
    assert_eq!(finite, vec![6, 7, 8]);
    assert!(o.areas[6..].iter().all(|a| a.value().unwrap().is_one()));
}

#[test]
fn triangle_stretched_pair() {
    let o = check_triangle_lemma(&upper(Rat::from_int(2), Rat::one(), Rat::one())).unwrap();
    assert!(o.conclusion_holds);
    assert!(!o.equality_case);
    // α₂₁ = 1/2 gives |1 − α₂₁|⁻¹ = 2 for ℓ₁₂ℓ₂ℓ₃
    assert_eq!(o.areas[0], Measure::Finite(Rat::from_int(2)));
}

#[test]
fn triangle_rejects_bad_input() {
    let mut m = upper(Rat::from_int(2), Rat::one(), Rat::one());
    m.insert((1, 0), Rat::one());
    assert!(matches!(check_triangle_lemma(&m), Err(Error::NonUnit(0, 1))));
    let zero: BTreeMap<_, _> = [((0, 1), Rat::zero())].into_iter().collect();
    assert!(matches!(reciprocal_closure(&zero), Err(Error::Degenerate(_))));
}

#[test]
fn triangle_formulas_match_vertex_determinants() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let inf = Hyperplane::barycentric_infinity(3);
    for _ in 0..60 {
        let mut draw = || loop {
            let v = Rat::new(rng.gen_range(-12..=12), rng.gen_range(1..=5));
            if !v.is_zero() {
                break v;
            }
        };
        let alpha = upper(draw(), draw(), draw());
        let o = check_triangle_lemma(&alpha).unwrap();
        let lines = triangle_lines(&alpha);
        for row in 0..9 {
            let idx = triangle_line_indices(row);
            let m = measure(&idx.map(|i| &lines[i]), &inf).unwrap();
            match (&o.areas[row], m) {
                (Measure::Finite(a), Measure::Finite(v)) => assert_eq!(a.square(), v, "row {row}"),
                (Measure::Infinite, Measure::Infinite) => {}
                (a, v) => panic!("row {row}: {a:?} vs {v:?}"),
            }
        }
    }
}

proptest! {
    #[test]
    fn triangle_conclusion_on_rationals(n in proptest::array::uniform3(-30i64..=30), d in proptest::array::uniform3(1i64..=7)) {
        prop_assume!(n.iter().all(|&x| x != 0));
        let o = check_triangle_lemma(&upper(Rat::new(n[0], d[0]), Rat::new(n[1], d[1]), Rat::new(n[2], d[2]))).unwrap();
        prop_assert!(o.holds());
    }
}

fn canonical_hexagon() -> [Quad; 3] {
    let rho = Quad::rho();
    [Quad::one(), -rho.clone(), -rho.galois_conj()]
}

#[test]
fn hexagon_equality_case() {
    let o = check_hexagon_lemma(&canonical_hexagon()).unwrap();
    assert_eq!(o.sum_cmp, Ordering::Equal);
    assert!(o.holds && o.equality);
    assert!((o.sum - 3.0).abs() < 1e-12);
    let mut swapped = canonical_hexagon();
    swapped.swap(0, 2);
    assert!(check_hexagon_lemma(&swapped).unwrap().equality);
}

#[test]
fn hexagon_trivial_and_failing_inputs() {
    let z = CPair::new(Rat::zero(), Rat::zero());
    let o = check_hexagon_lemma(&[z.clone(), z.clone(), z.clone()]).unwrap();
    assert_eq!(o.sum_cmp, Ordering::Less);
    assert!(o.holds && !o.equality);
    let three = CPair::new(Rat::from_int(3), Rat::zero());
    assert_eq!(check_hexagon_lemma(&[three, z.clone(), z]), Err(Error::PreconditionFailed(vec![0])));
    // 1, 1/2, 0: admissible, sum 3/2
    let h = CPair::new(Rat::new(1, 2), Rat::zero());
    let one = CPair::new(Rat::one(), Rat::zero());
    let o = check_hexagon_lemma(&[one, h, CPair::new(Rat::zero(), Rat::zero())]).unwrap();
    assert!(o.holds && !o.equality);
}

#[test]
fn angular_order_puts_zeros_last() {
    let a = [C64::new(0.0, 0.0), C64::new(-1.0, 0.5), C64::new(1.0, -0.5)];
    assert_eq!(angular_order(&a), [2, 1, 0]);
}

fn q(t: i64, x: i64, y: i64, z: i64, den: i64) -> Quat<Rat> {
    Quat::new(Rat::new(t, den), Rat::new(x, den), Rat::new(y, den), Rat::new(z, den))
}

fn tetra_quads() -> [Quat<Rat>; 4] {
    [q(1, 1, 1, 1, 2), q(1, 1, -1, -1, 2), q(1, -1, 1, -1, 2), q(1, -1, -1, 1, 2)]
}

#[test]
fn parallelotope_equality_case() {
    let b = tetra_quads();
    assert!(tetrahedral(&b));
    let o = check_parallelotope_lemma(&b).unwrap();
    assert_eq!(o.sum_cmp, Ordering::Equal);
    assert!(o.holds && o.equality);
    // the b_p are then orthonormal: a hypercube inscribed in the ball
    for i in 0..4 {
        for j in 0..4 {
            let d = dot3(&b[i].vector(), &b[j].vector()) + b[i].t.clone() * b[j].t.clone();
            assert_eq!(d, if i == j { Rat::one() } else { Rat::zero() });
        }
    }
}

#[test]
fn parallelotope_trivial_and_failing_inputs() {
    let z = Quat::<Rat>::zero();
    let o = check_parallelotope_lemma(&[z.clone(), z.clone(), z.clone(), z]).unwrap();
    assert!(o.holds && !o.equality && o.sum == 0.0);
    // the standard basis misses |1 − e₂| ≤ 1
    let e = [q(1, 0, 0, 0, 1), q(0, 1, 0, 0, 1), q(0, 0, 1, 0, 1), q(0, 0, 0, 1, 1)];
    assert_eq!(check_parallelotope_lemma(&e), Err(Error::PreconditionFailed(vec![1])));
}

proptest! {
    #[test]
    fn parallelotope_substeps(v in proptest::array::uniform16(-9i64..=9), den in 1i64..=6) {
        let b: [Quat<Rat>; 4] = [0, 1, 2, 3].map(|p| q(v[4 * p], v[4 * p + 1], v[4 * p + 2], v[4 * p + 3], den));
        prop_assert!(sign_sum_identity(&b));
        if let Ok(o) = check_parallelotope_lemma(&b) {
            prop_assert!(o.holds);
            prop_assert!(centered_vertices_fit(&b));
        }
    }

    #[test]
    fn hexagon_on_admissible_rationals(v in proptest::array::uniform6(-8i64..=8), den in 1i64..=8) {
        let a = [0, 1, 2].map(|i| CPair::new(Rat::new(v[2 * i], den), Rat::new(v[2 * i + 1], den)));
        if let Ok(o) = check_hexagon_lemma(&a) {
            prop_assert!(o.holds);
        }
    }
}

#[test]
fn lemma_c_canonical_values() {
    let canon = canonical_lemma_c();
    let o = check_lemma_c(&canon).unwrap();
    assert!(o.admissible && o.holds());
    assert_eq!(o.matched_permutation, Some([0, 1, 2, 3]));
    assert_eq!(o.system.inequalities.len(), 28);
    // the pairs α₁₃α₃₁-type and 1 + ρ + ρ̄ sums vanish; the rest are tight
    assert_eq!((o.tight, o.vanishing), (20, 8));
    assert!(!o.all_equalities);
    assert_eq!(o.sum_cmp, Some(Ordering::Equal));
    assert!(lemma_c_parallel(&canon).unwrap());
}

#[test]
fn lemma_c_after_relabeling() {
    let canon = canonical_lemma_c();
    let swap = |i: usize| match i {
        0 => 1,
        1 => 0,
        k => k,
    };
    let relabeled: BTreeMap<_, _> = canon.iter().map(|(&(j, k), v)| ((swap(j), swap(k)), v.clone())).collect();
    let o = check_lemma_c(&relabeled).unwrap();
    assert!(o.holds());
    let s = o.matched_permutation.unwrap();
    assert_ne!(s, [0, 1, 2, 3]);
    assert!(canon.iter().all(|(&(j, k), v)| relabeled[&(s[j], s[k])] == *v));
}

#[test]
fn lemma_c_non_unit_values_are_not_extremal() {
    let mut m = canonical_lemma_c();
    m.insert((0, 2), Quad::from_int(2));
    m.insert((2, 0), Quad::from_ratio(1, 2));
    let o = check_lemma_c(&m).unwrap();
    assert!(o.matched_permutation.is_none());
    assert!(!(o.admissible && o.sum_cmp == Some(Ordering::Equal)));
    // strict AGM: |2| + |1/2| > 2
    assert_eq!(o.sum_cmp, Some(Ordering::Greater));
}

#[test]
fn lemma_l1_on_the_dodecahedron() {
    let sys = dodeca_system().unwrap().alpha_system().unwrap();
    let cert = check_lemma_l1(&sys);
    assert!(cert.holds(), "{}", cert.render());
    assert_eq!(cert.checks.len(), 8);
}

#[test]
fn lemma_l1_detects_a_perturbation() {
    let mut alpha = dodeca_system().unwrap().alpha;
    let a = alpha[&(0, 1)].clone();
    let b = Quat::new(a.t.clone() + Quad::from_ratio(1, 1000), a.x.clone(), a.y.clone(), a.z.clone());
    alpha.insert((1, 0), b.inv().unwrap());
    alpha.insert((0, 1), b);
    let sys = AlphaSystem::from_alphas(5, alpha).unwrap();
    let cert = check_lemma_l1(&sys);
    assert!(!cert.holds());
    assert!(cert.first_failure().is_some());
}

#[test]
fn lemma_l1_rejects_the_embedded_complex_solution() {
    let embedded: BTreeMap<_, _> = canonical_lemma_c()
        .iter()
        .map(|(&k, v)| (k, eisenstein_as_quat(v).unwrap()))
        .collect();
    let sys = AlphaSystem::from_alphas(4, embedded).unwrap();
    let cert = check_lemma_l1(&sys);
    assert!(cert.checks[0].1 && cert.checks[1].1);
    assert_eq!(cert.first_failure(), Some("re alpha_pq = 1/2"));
    // the v-vectors all lie in one plane
    assert!(sys.alpha.values().all(|a| a.y.is_zero() && a.z.is_zero()));
}

#[test]
fn complex_embedding_is_multiplicative() {
    let a = CPair::new(Rat::new(1, 2), Rat::new(-3, 4));
    let b = CPair::new(Rat::from_int(2), Rat::new(1, 3));
    let prod = a.clone() * b.clone();
    assert_eq!(complex_as_quat(&a) * complex_as_quat(&b), complex_as_quat(&prod));
}

#[test]
fn small_suites_are_clean_and_reproducible() {
    let cfg = SuiteConfig {
        samples: 5000,
        seed: 11,
        tol: 1e-9,
    };
    for suite in [triangle_suite, hexagon_suite, parallelotope_suite] {
        let r = suite(&cfg);
        assert_eq!(r.samples, 5000);
        assert!(r.passed(), "{r}");
        assert!(r.near_boundary > 0, "{r}");
        assert_eq!(r, suite(&cfg));
    }
}

#[test]
fn empty_suite() {
    let r = hexagon_suite(&SuiteConfig {
        samples: 0,
        ..SuiteConfig::default()
    });
    assert_eq!((r.samples, r.violations), (0, 0));
}

#[test]
fn float_substeps_on_the_tetrahedron() {
    let b = [[1.0, 1.0, 1.0, 1.0], [1.0, 1.0, -1.0, -1.0], [1.0, -1.0, 1.0, -1.0], [1.0, -1.0, -1.0, 1.0]]
        .map(|v: [f64; 4]| v.map(|x| x / 2.0));
    assert!(sign_sum_identity_f64(&b, 1e-12));
    assert!(centered_vertices_fit_f64(&b, 1e-12));
}
