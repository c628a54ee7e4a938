//! Exact arithmetic and sign decisions in quadratic fields.

use sgkit::scalars::sqrt::cmp_sqrt_sum;
use sgkit::scalars::{quad_sign, ParseScalar, Quad, Rat};

fn main() {
    let phi = Quad::phi();
    let sq = phi.try_mul(&phi).unwrap();
    println!("phi = {phi}, phi^2 = {sq}, phi^2 - phi - 1 = {}", sq.try_sub(&phi).unwrap().try_sub(&Quad::rational(Rat::one())).unwrap());
    let x = Quad::parse_literal("7/2-3/2*rt(5)", Some(5)).unwrap();
    println!("{x} has sign {:?}, conjugate {}, norm {}", quad_sign(&x).unwrap(), x.galois_conj(), x.norm());
    let rho = Quad::rho();
    println!("rho = {rho}, rho^3 = {}", rho.try_mul(&rho).unwrap().try_mul(&rho).unwrap());
    // √2 + √3 lies between 3.14 and 3.15
    let xs = [Rat::new(2, 1), Rat::new(3, 1)];
    for b in [Rat::new(314, 100), Rat::new(315, 100)] {
        println!("sqrt 2 + sqrt 3 vs {b}: {:?}", cmp_sqrt_sum(&xs, &b));
    }
}
