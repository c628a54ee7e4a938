//! Points and hyperplanes trade places; the SG property survives the swap.

use sgkit::extremal::hesse_points;
use sgkit::projective::{dualize, Document};
use sgkit::sg_core::{verify_dual_sg, verify_sg};

fn main() {
    let points = hesse_points();
    let planes = dualize(&points);
    let a = verify_sg(&points);
    let b = verify_dual_sg(&planes);
    println!("points sg {}, planes dual sg {}", a.is_sg, b.is_sg);
    print!("{}", Document::from_arrangement(&planes));
}
