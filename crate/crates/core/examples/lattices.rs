//! Truncated triangular lattice and Eisenstein arrangements: each interior
//! pair of hyperplanes meets a third one.

use sgkit::extremal::{check_closure_random, check_eisenstein, check_tri_lattice, closure_identity_holds};

fn main() {
    for m in 1..=5 {
        let c = check_tri_lattice(m).expect("tri lattice");
        println!(
            "tri M={m}: {} lines, {} interior pairs, {} failures, {} boundary pairs",
            c.elements,
            c.interior.len(),
            c.failures.len(),
            c.boundary_violations
        );
    }
    for m in [0, 1, 2] {
        let c = check_eisenstein(m).expect("eisenstein");
        println!("eisenstein M={m}: {} planes, holds {}", c.elements, c.holds());
    }
    let symbolic = (0..3).flat_map(|c| (0..3).map(move |d| (c, d))).all(|(c, d)| closure_identity_holds(0, c, 1, d));
    println!("closure identities {symbolic}, random {}", check_closure_random(1, 50));
}
