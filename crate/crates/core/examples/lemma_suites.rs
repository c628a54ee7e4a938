//! Randomized checks of the triangle, hexagon and parallelotope bounds, with
//! near-boundary samples decided again in exact arithmetic.

use sgkit::lemmas::{hexagon_suite, parallelotope_suite, triangle_suite, SuiteConfig};

fn main() {
    let samples = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10_000);
    let cfg = SuiteConfig { samples, ..SuiteConfig::default() };
    for rep in [triangle_suite(&cfg), hexagon_suite(&cfg), parallelotope_suite(&cfg)] {
        println!("{rep}");
    }
}
