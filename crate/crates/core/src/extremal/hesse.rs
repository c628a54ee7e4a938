use crate::projective::{Configuration, Domain, ProjPoint};
use crate::scalars::{Quad, Scalar};

/// The nine flexes of `x³ + y³ + z³ = 0`: `(0, 1, −ζ)`, `(−ζ, 0, 1)` and
/// `(1, −ζ, 0)` for `ζ³ = 1`.
pub fn hesse_points() -> Configuration<Quad> {
    let rho = Quad::rho();
    let zetas = [Quad::one(), rho.clone(), rho.clone() * rho];
    let mut points = Vec::with_capacity(9);
    for shift in 0..3 {
        for z in &zetas {
            let mut v = vec![Quad::zero(), Quad::one(), -z.clone()];
            v.rotate_right(shift);
            points.push(ProjPoint::new(v).expect("nonzero"));
        }
    }
    Configuration::new(2, Domain::Complex(-3), points).expect("distinct flexes")
}
