//! The four-index complex system built from cube roots of unity, and why it
//! does not lift to a quaternionic extremal system.

use sgkit::lemmas::{canonical_lemma_c, check_lemma_c, check_lemma_l1, eisenstein_as_quat, lemma_c_parallel};
use sgkit::minsimplex::AlphaSystem;

fn main() {
    let alpha = canonical_lemma_c();
    let o = check_lemma_c(&alpha).unwrap();
    println!(
        "{} inequalities: {} tight, {} vanishing, admissible {}",
        o.system.inequalities.len(),
        o.tight,
        o.vanishing,
        o.admissible
    );
    println!("parallel planes: {}", lemma_c_parallel(&alpha).unwrap());

    let lifted = alpha
        .iter()
        .map(|(k, v)| Ok((*k, eisenstein_as_quat(v)?)))
        .collect::<sgkit::Result<_>>()
        .unwrap();
    let sys = AlphaSystem::from_alphas(4, lifted).unwrap();
    let cert = check_lemma_l1(&sys);
    println!("as quaternions: first failed check {:?}", cert.first_failure());
}
