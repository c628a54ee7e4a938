use proptest::prelude::*;

use sgkit::projective::{dualize, dualize_arrangement, Configuration, Domain, ProjPoint};
use sgkit::scalars::{Quad, Quat, Rat, Scalar};
use sgkit::sg_core::{verify_dual_sg, verify_sg};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Rat::new(n, d))
}

fn configuration<S: Scalar>(coords: Vec<Vec<S>>, dim: usize, domain: Domain) -> Option<Configuration<S>> {
    let mut points: Vec<ProjPoint<S>> = Vec::new();
    for v in coords {
        let Ok(p) = ProjPoint::new(v) else { continue };
        if !points.iter().any(|q| q.same_as(&p)) {
            points.push(p);
        }
    }
    Configuration::new(dim, domain, points).ok().filter(|c| c.len() >= 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn real_sg_survives_dualizing(dim in 2usize..=3, raw in prop::collection::vec(prop::collection::vec(small_rat(), 4), 3..=7)) {
        let coords = raw.into_iter().map(|v| v[..=dim].to_vec()).collect();
        if let Some(s) = configuration::<Rat>(coords, dim, Domain::Real) {
            let a = verify_sg(&s);
            let b = verify_dual_sg(&dualize(&s));
            prop_assert_eq!(a.is_sg, b.is_sg);
            prop_assert_eq!(a.violations, b.violations);
            prop_assert_eq!(a.span, b.span);
        }
    }

    #[test]
    fn eisenstein_sg_survives_dualizing(raw in prop::collection::vec(prop::collection::vec((small_rat(), small_rat()), 3), 3..=6)) {
        let coords = raw
            .into_iter()
            .map(|v| v.into_iter().map(|(a, b)| Quad::new(a, b, -3).unwrap()).collect())
            .collect();
        if let Some(s) = configuration::<Quad>(coords, 2, Domain::Complex(-3)) {
            prop_assert_eq!(verify_sg(&s).is_sg, verify_dual_sg(&dualize(&s)).is_sg);
        }
    }

    #[test]
    fn quaternion_sg_survives_dualizing(raw in prop::collection::vec(prop::collection::vec((small_rat(), small_rat(), small_rat(), small_rat()), 3), 3..=5)) {
        let coords = raw
            .into_iter()
            .map(|v| v.into_iter().map(|(t, x, y, z)| Quat::new(t, x, y, z)).collect())
            .collect();
        if let Some(s) = configuration::<Quat<Rat>>(coords, 2, Domain::Quaternion(None)) {
            let planes = dualize(&s);
            prop_assert_eq!(verify_sg(&s).is_sg, verify_dual_sg(&planes).is_sg);
            let back = dualize_arrangement(&planes);
            prop_assert_eq!(back.len(), s.len());
            for (p, q) in back.points().iter().zip(s.points()) {
                prop_assert!(p.same_as(q));
            }
        }
    }
}
