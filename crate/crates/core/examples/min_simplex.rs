//! Least simplex of a small arrangement, before and after moving the
//! hyperplane at infinity to a generic position.

use sgkit::minsimplex::{find_min_simplex, generic_infinity, tie_free, SimplexTable, DEFAULT_ATTEMPTS};
use sgkit::projective::{Arrangement, Domain, Hyperplane};
use sgkit::scalars::Rat;

fn main() {
    let mut planes: Vec<Hyperplane<Rat>> = (0..5).map(|i| Hyperplane::coordinate(5, i)).collect();
    // x1/2 + x2 = 0
    let mut c = vec![Rat::zero(); 5];
    c[0] = Rat::new(1, 2);
    c[1] = Rat::one();
    planes.push(Hyperplane::new(c).unwrap());
    let a = Arrangement::new(4, Domain::Real, planes, None).unwrap();

    let min = find_min_simplex(&a).unwrap();
    println!("min {:?} measure {} ties {:?}", min.simplex.planes, min.simplex.measure, min.ties);

    let table = SimplexTable::build(&a).unwrap();
    let g = generic_infinity(&a, 0, DEFAULT_ATTEMPTS).unwrap();
    let after = table.measures(&g.infinity).unwrap();
    println!("generic infinity after {} attempts, tie free {}", g.attempts, tie_free(&after));
    for (s, m) in table.simplices.iter().zip(&after) {
        println!("{s:?}: {m}");
    }
}
