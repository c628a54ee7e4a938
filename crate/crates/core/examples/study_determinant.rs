//! The Study determinant of quaternion matrices: nonnegative, multiplicative,
//! and |q|² on 1×1 matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgkit::linalg::Matrix;
use sgkit::scalars::{Quat, Rat};

fn random(rng: &mut ChaCha8Rng) -> Matrix<Quat<Rat>> {
    let mut q = || {
        let mut r = || Rat::new(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        Quat::new(r(), r(), r(), r())
    };
    Matrix::from_rows((0..3).map(|_| (0..3).map(|_| q()).collect()).collect())
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..5 {
        let (a, b) = (random(&mut rng), random(&mut rng));
        let (da, db) = (a.sdet().unwrap(), b.sdet().unwrap());
        let dab = a.mul(&b).unwrap().sdet().unwrap();
        println!("sdet A = {da}, sdet B = {db}, product rule {}, pivots agree {}", dab == da.clone() * db.clone(), a.pivot_norm().unwrap() == da);
    }
}
