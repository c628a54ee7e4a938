//! The dodecahedral quaternion system: every one of its inequalities is an
//! equality, decided in exact arithmetic over Q(√5).

use sgkit::extremal::dodeca_system;
use sgkit::lemmas::check_lemma_l1;
use sgkit::minsimplex::derive_alpha_system;

fn main() {
    let sys = dodeca_system().expect("dodeca");
    let arrangement = sys.arrangement();
    let alpha = derive_alpha_system(&arrangement, &[0, 1, 2, 3, 4]).expect("alpha");
    println!(
        "{} planes, {} inequalities, all equalities {}",
        arrangement.len(),
        alpha.inequalities.len(),
        alpha.all_equalities()
    );
    for ((p, q), a) in alpha.alpha.iter().take(4) {
        println!("alpha {} {} = {a}", p + 1, q + 1);
    }
    print!("{}", check_lemma_l1(&alpha).render());
}
