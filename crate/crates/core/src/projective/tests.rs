use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

fn e<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

fn r(n: i64) -> Rat {
    Rat::from_int(n)
}

fn quat() -> impl Strategy<Value = Quat<Rat>> {
    proptest::collection::vec((-5i64..=5, 1i64..=3), 4)
        .prop_map(|c| Quat::new(Rat::new(c[0].0, c[0].1), Rat::new(c[1].0, c[1].1), Rat::new(c[2].0, c[2].1), Rat::new(c[3].0, c[3].1)))
}

fn nonzero_quat() -> impl Strategy<Value = Quat<Rat>> {
    quat().prop_filter("nonzero", |q| !q.is_zero())
}

#[test]
fn incidence_examples() {
    let h = Hyperplane::<Rat>::coordinate(3, 0);
    assert!(incident(&h, &ProjPoint::new(e(3, 1)).unwrap()).unwrap());
    assert!(!incident(&h, &ProjPoint::new(e(3, 0)).unwrap()).unwrap());
    // −ρ·1 + 1·ρ = 0
    let rho = Quad::rho();
    let h = Hyperplane::new(vec![-rho.clone(), Quad::one(), Quad::zero(), Quad::zero()]).unwrap();
    let p = ProjPoint::new(vec![Quad::one(), rho, Quad::zero(), Quad::zero()]).unwrap();
    assert!(incident(&h, &p).unwrap());
    let short = ProjPoint::new(e::<Quad>(3, 0)).unwrap();
    assert!(matches!(incident(&h, &short), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn collinear_third_examples() {
    let pts = |vs: Vec<Vec<Rat>>| {
        Configuration::new(2, Domain::Real, vs.into_iter().map(|v| ProjPoint::new(v).unwrap()).collect()).unwrap()
    };
    let two = pts(vec![e(3, 0), e(3, 1)]);
    assert_eq!(collinear_third(&two, 0, 1).unwrap(), None);
    let three = pts(vec![e(3, 0), e(3, 1), vec![r(1), r(1), r(0)]]);
    assert_eq!(collinear_third(&three, 0, 1).unwrap(), Some(2));
    assert_eq!(collinear_third(&three, 2, 0).unwrap(), Some(1));
    assert!(matches!(collinear_third(&three, 0, 7), Err(Error::NotInConfiguration(7))));
}

#[test]
fn configurations_reject_duplicates() {
    let p = ProjPoint::new(vec![r(1), r(2), r(3)]).unwrap();
    let q = p.scaled(&Rat::new(-1, 2)).unwrap();
    assert!(matches!(Configuration::new(2, Domain::Real, vec![p.clone(), q]), Err(Error::Duplicate(1))));
    let h = Hyperplane::barycentric_infinity(3);
    let a = Arrangement::new(2, Domain::Real, vec![h.clone()], Some(h.scaled(&r(2)).unwrap()));
    assert!(matches!(a, Err(Error::Duplicate(0))));
    assert!(matches!(ProjPoint::<Rat>::new(vec![r(0); 3]), Err(Error::ZeroVector)));
}

#[test]
fn dualize_is_an_involution() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let points = (0..6)
        .map(|_| ProjPoint::new((0..4).map(|_| Quat::<Rat>::sample_small(&mut rng, 0)).collect()).unwrap())
        .collect();
    let s = Configuration::new(3, Domain::Quaternion(None), points).unwrap();
    assert_eq!(dualize_arrangement(&dualize(&s)), s);
}

#[test]
fn collinear_points_dualize_to_a_pencil() {
    // x, y and z = x·a + y·b over ℍ
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut v = || (0..4).map(|_| Quat::<Rat>::sample_small(&mut rng, 0)).collect::<Vec<_>>();
    let (x, y) = (v(), v());
    let (a, b) = (Quat::new(r(1), r(2), r(0), r(-1)), Quat::new(r(0), r(1), r(1), r(3)));
    let z: Vec<_> = x.iter().zip(&y).map(|(p, q)| p.clone() * a.clone() + q.clone() * b.clone()).collect();
    let s = Configuration::new(
        3,
        Domain::Quaternion(None),
        vec![ProjPoint::new(x).unwrap(), ProjPoint::new(y).unwrap(), ProjPoint::new(z).unwrap()],
    )
    .unwrap();
    assert_eq!(span_dim(&s).unwrap(), 1);
    let d = dualize(&s);
    assert_eq!(left_rank(&d.covectors()), 2);
    // the plain transpose would not stay in the left span
    let plain: Vec<Vec<_>> = s.points().iter().map(|p| p.coords().to_vec()).collect();
    assert_eq!(left_rank(&plain), 3);
}

#[test]
fn span_dimensions() {
    let basis = Configuration::new(
        4,
        Domain::Real,
        (0..5).map(|i| ProjPoint::new(e::<Rat>(5, i)).unwrap()).collect(),
    )
    .unwrap();
    assert_eq!(span_dim(&basis).unwrap(), 4);
    let line = Configuration::new(
        2,
        Domain::Real,
        vec![
            ProjPoint::new(e(3, 0)).unwrap(),
            ProjPoint::new(e(3, 1)).unwrap(),
            ProjPoint::new(vec![r(2), r(-1), r(0)]).unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(span_dim(&line).unwrap(), 1);
}

#[test]
fn parallel_examples() {
    let inf = Hyperplane::<Rat>::barycentric_infinity(3);
    // x₁ = 0 and x₁ = 1 (that is, x₁ − (x₁+x₂+x₃) = 0) in the chart Σ = 1
    let h1 = Hyperplane::coordinate(3, 0);
    let h2 = Hyperplane::new(vec![r(0), r(-1), r(-1)]).unwrap();
    assert!(parallel(&h1, &h2, &inf).unwrap());
    let h3 = Hyperplane::coordinate(3, 1);
    assert!(!parallel(&h1, &h3, &inf).unwrap());
    assert!(matches!(parallel(&h1, &h1, &inf), Err(Error::Degenerate(_))));
    // random triples are not parallel
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let mut h = || Hyperplane::new((0..4).map(|_| Quat::<Rat>::sample_small(&mut rng, 0)).collect()).unwrap();
        let (a, b, c) = (h(), h(), h());
        assert!(!parallel(&a, &b, &c).unwrap());
    }
}

#[test]
fn affine_chart() {
    let p = ProjPoint::new(e::<Rat>(5, 0)).unwrap();
    assert_eq!(to_affine(&p), Affine::Point(e(5, 0)));
    let v = vec![r(2), r(-1), r(0), r(0), r(0)];
    assert_eq!(to_affine(&ProjPoint::new(v.clone()).unwrap()), Affine::Point(v));
    let w = ProjPoint::new(vec![r(1), r(-1), r(0)]).unwrap();
    assert_eq!(to_affine(&w), Affine::AtInfinity);
    let scaled = ProjPoint::new(vec![r(4), r(-2), r(0), r(0), r(0)]).unwrap();
    assert_eq!(to_affine(&scaled), Affine::Point(vec![r(2), r(-1), r(0), r(0), r(0)]));
}

#[test]
fn basis_change_preserves_incidence() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let cols: Vec<Vec<Quat<Rat>>> = (0..3)
        .map(|_| (0..3).map(|_| Quat::sample_small(&mut rng, 0)).collect())
        .collect();
    let b = Matrix::from_columns(&cols).unwrap();
    let h = Hyperplane::new((0..3).map(|_| Quat::sample_small(&mut rng, 0)).collect()).unwrap();
    let y: Vec<Quat<Rat>> = (0..3).map(|_| Quat::sample_small(&mut rng, 0)).collect();
    let x = b.apply(&y).unwrap();
    let hb = change_basis(&h, &b).unwrap();
    assert_eq!(dot(h.covector(), &x), dot(hb.covector(), &y));
}

proptest! {
    #[test]
    fn incidence_ignores_rescaling(
        h in proptest::collection::vec(quat(), 3),
        p in proptest::collection::vec(quat(), 2),
        lam in nonzero_quat(),
        mu in nonzero_quat(),
        a in quat(),
    ) {
        prop_assume!(!is_zero_vec(&h));
        // build a point on h when possible: p = (p₀, p₁, −h₂⁻¹(h₀p₀ + h₁p₁))
        let h2 = h[2].inv();
        prop_assume!(h2.is_some());
        let last = -(h2.unwrap() * (h[0].clone() * p[0].clone() + h[1].clone() * p[1].clone()));
        let on = vec![p[0].clone(), p[1].clone(), last];
        prop_assume!(!is_zero_vec(&on));
        let hp = Hyperplane::new(h.clone()).unwrap();
        let pt = ProjPoint::new(on).unwrap();
        prop_assert!(incident(&hp, &pt).unwrap());
        prop_assert!(incident(&hp.scaled(&lam).unwrap(), &pt.scaled(&mu).unwrap()).unwrap());
        let off = ProjPoint::new(vec![p[0].clone(), p[1].clone(), a]).unwrap();
        let before = incident(&hp, &off).unwrap();
        prop_assert_eq!(before, incident(&hp.scaled(&lam).unwrap(), &off.scaled(&mu).unwrap()).unwrap());
    }

    #[test]
    fn parallel_is_symmetric_and_scale_free(
        a in proptest::collection::vec(quat(), 3),
        b in proptest::collection::vec(quat(), 3),
        c in proptest::collection::vec(quat(), 3),
        l1 in nonzero_quat(), l2 in nonzero_quat(), l3 in nonzero_quat(),
        make_parallel in any::<bool>(),
    ) {
        prop_assume!(!is_zero_vec(&a) && !is_zero_vec(&c));
        // optionally put b in the left span of a and c
        let b = if make_parallel {
            a.iter().zip(&c).map(|(x, z)| l1.clone() * x.clone() + l2.clone() * z.clone()).collect()
        } else {
            b
        };
        prop_assume!(!is_zero_vec(&b));
        let (ha, hb, hc) = (Hyperplane::new(a).unwrap(), Hyperplane::new(b).unwrap(), Hyperplane::new(c).unwrap());
        prop_assume!(!ha.same_as(&hb) && !ha.same_as(&hc) && !hb.same_as(&hc));
        let p = parallel(&ha, &hb, &hc).unwrap();
        if make_parallel {
            prop_assert!(p);
        }
        prop_assert_eq!(p, parallel(&hb, &ha, &hc).unwrap());
        let scaled = parallel(&ha.scaled(&l1).unwrap(), &hb.scaled(&l2).unwrap(), &hc.scaled(&l3).unwrap()).unwrap();
        prop_assert_eq!(p, scaled);
    }

    #[test]
    fn full_span_iff_dual_has_no_common_point(
        coords in proptest::collection::vec(proptest::collection::vec((-2i64..=2, 1i64..=2), 4), 2..6),
    ) {
        let points: Vec<ProjPoint<Rat>> = coords
            .iter()
            .filter_map(|v| ProjPoint::new(v.iter().map(|&(n, d)| Rat::new(n, d)).collect()).ok())
            .collect();
        let mut distinct: Vec<ProjPoint<Rat>> = Vec::new();
        for p in points {
            if !distinct.iter().any(|q| q.same_as(&p)) {
                distinct.push(p);
            }
        }
        prop_assume!(!distinct.is_empty());
        let s = Configuration::new(3, Domain::Real, distinct).unwrap();
        let d = dualize(&s);
        prop_assert_eq!(span_dim(&s).unwrap() == 3, left_rank(&d.covectors()) == 4);
    }
}
