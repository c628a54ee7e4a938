//! The nine flexes of a plane cubic: every pair spans a line with a third
//! point, yet the points do not lie on one line.

use sgkit::extremal::hesse_points;
use sgkit::sg_core::{connecting_lines, verify_sg};

fn main() {
    let s = hesse_points();
    let rep = verify_sg(&s);
    println!("points {}, span {}, sg {}", rep.elements, rep.span, rep.is_sg);
    for (k, line) in connecting_lines(&s).iter().enumerate() {
        println!("line {k}: {line:?}");
    }
}
