//! Exact comparison of sums of square roots against a field element.

use std::cmp::Ordering;

use super::{Rat, RealScalar};

const MAX_BITS: u32 = 2048;

/// Compare `Σ √xᵢ` with `bound`.
///
/// When every `xᵢ` is a square in its field the comparison is done in the
/// field.  Otherwise rational enclosures are refined until they separate.
/// Over ℚ a sum of square roots containing an irrational term is never
/// rational, so refinement terminates; `None` is returned only if
/// [`MAX_BITS`] of precision do not separate the two sides.
pub fn cmp_sqrt_sum<F: RealScalar>(xs: &[F], bound: &F) -> Option<Ordering> {
    assert!(xs.iter().all(RealScalar::is_nonneg), "square root of a negative value");
    let roots: Option<Vec<F>> = xs.iter().map(RealScalar::sqrt_exact).collect();
    if let Some(roots) = roots {
        let sum = roots.into_iter().fold(F::zero(), |acc, r| acc + r);
        return Some(sum.cmp_real(bound));
    }
    let mut bits = 32;
    while bits <= MAX_BITS {
        let (lo, hi) = sqrt_sum_bounds(xs, bits);
        let (blo, bhi) = bound.rat_bounds(bits);
        if hi < blo {
            return Some(Ordering::Less);
        }
        if lo > bhi {
            return Some(Ordering::Greater);
        }
        bits *= 2;
    }
    None
}

/// Rational enclosure of `Σ √xᵢ`.
pub fn sqrt_sum_bounds<F: RealScalar>(xs: &[F], bits: u32) -> (Rat, Rat) {
    let mut lo = Rat::zero();
    let mut hi = Rat::zero();
    for x in xs {
        let (xl, xh) = x.rat_bounds(bits + 4);
        let xl = if xl.sign() == super::Sign::Neg { Rat::zero() } else { xl };
        lo = lo + xl.sqrt_bounds(bits + 4).0;
        hi = hi + xh.sqrt_bounds(bits + 4).1;
    }
    (lo, hi)
}

/// Binary64 approximation of `Σ √xᵢ`.
pub fn sqrt_sum_f64<F: RealScalar>(xs: &[F]) -> f64 {
    xs.iter().map(|x| x.to_f64().max(0.0).sqrt()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Quad, Scalar};

    #[test]
    fn rational_squares_compare_exactly() {
        let xs = [Rat::one(), Rat::one(), Rat::one()];
        assert_eq!(cmp_sqrt_sum(&xs, &Rat::from_int(3)), Some(Ordering::Equal));
        let xs = [Rat::new(1, 4), Rat::new(9, 4)];
        assert_eq!(cmp_sqrt_sum(&xs, &Rat::from_int(2)), Some(Ordering::Equal));
    }

    #[test]
    fn irrational_sums_separate() {
        // √2 + √3 ≈ 3.146 > π-ish bound 3.14
        let xs = [Rat::from_int(2), Rat::from_int(3)];
        assert_eq!(cmp_sqrt_sum(&xs, &Rat::new(314, 100)), Some(Ordering::Greater));
        assert_eq!(cmp_sqrt_sum(&xs, &Rat::new(315, 100)), Some(Ordering::Less));
        // very close: √(1 − ε) + √(1 + ε) < 2
        let eps = Rat::new(1, 1_000_000_007);
        let xs = [Rat::one() - eps.clone(), Rat::one() + eps];
        assert_eq!(cmp_sqrt_sum(&xs, &Rat::from_int(2)), Some(Ordering::Less));
    }

    #[test]
    fn quadratic_field_terms() {
        // (1 + √5)² = 6 + 2√5, so the root is exact
        let x = Quad::parse_like("6+2*rt(5)");
        let bound = Quad::parse_like("1+1*rt(5)");
        assert_eq!(cmp_sqrt_sum(&[x], &bound), Some(Ordering::Equal));
        // √√5 ≈ 1.4953 is not in ℚ(√5)
        let y = Quad::sqrt_of(5).unwrap();
        assert_eq!(cmp_sqrt_sum(&[y.clone()], &Quad::from_ratio(3, 2)), Some(Ordering::Less));
        assert_eq!(cmp_sqrt_sum(&[y], &Quad::from_ratio(299, 200)), Some(Ordering::Greater));
    }

    impl Quad {
        fn parse_like(s: &str) -> Quad {
            use crate::scalars::ParseScalar;
            Quad::parse_literal(s, None).unwrap()
        }
    }
}
