//! Scalar literal grammar shared by every text format.
//!
//! ```text
//! rational    -?INT(/INT)?
//! quadratic   RAT(+|-)RAT*rt(INT)
//! complex     QUAD(+|-)QUAD*i
//! quaternion  (F; F; F; F), or a bare F for a real quaternion
//! ```
//!
//! Whitespace is insignificant.  Output is always fully reduced, so
//! `parse(print(x)) == x` and printing is canonical.

use super::{CPair, Quad, Quat, Rat, RealScalar};
use crate::error::{Error, Result};

pub trait ParseScalar: Sized {
    /// Parse a literal prefix of whitespace-free `s`, returning the rest.
    /// `d` is the discriminant declared by the surrounding context.
    fn parse_prefix<'a>(s: &'a str, d: Option<i64>) -> Result<(Self, &'a str)>;

    fn parse_literal(s: &str, d: Option<i64>) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (v, rest) = Self::parse_prefix(&compact, d)?;
        if !rest.is_empty() {
            return Err(Error::Literal(s.trim().to_string()));
        }
        Ok(v)
    }
}

fn bad(s: &str) -> Error {
    Error::Literal(s.to_string())
}

fn digits_len(s: &str) -> usize {
    s.bytes().take_while(u8::is_ascii_digit).count()
}

fn rat_prefix(s: &str) -> Result<(Rat, &str)> {
    let mut end = usize::from(s.starts_with('-'));
    let int = digits_len(&s[end..]);
    if int == 0 {
        return Err(bad(s));
    }
    end += int;
    if s[end..].starts_with('/') {
        let den = digits_len(&s[end + 1..]);
        if den == 0 {
            return Err(bad(s));
        }
        end += 1 + den;
    }
    Ok((s[..end].parse()?, &s[end..]))
}

/// `*rt(INT)` following a coefficient.
fn radical_suffix(s: &str) -> Option<(i64, &str)> {
    let body = s.strip_prefix("*rt(")?;
    let close = body.find(')')?;
    let d: i64 = body[..close].parse().ok()?;
    Some((d, &body[close + 1..]))
}

impl ParseScalar for Rat {
    fn parse_prefix<'a>(s: &'a str, _d: Option<i64>) -> Result<(Rat, &'a str)> {
        rat_prefix(s)
    }
}

impl ParseScalar for Quad {
    fn parse_prefix<'a>(s: &'a str, d: Option<i64>) -> Result<(Quad, &'a str)> {
        let (a, rest) = rat_prefix(s)?;
        // optional (+|-)RAT*rt(INT); backtrack when the tail is something else
        if let Some(op) = rest.chars().next().filter(|c| *c == '+' || *c == '-') {
            let tail = &rest[1..];
            if !tail.starts_with('-') {
                if let Ok((b, after)) = rat_prefix(tail) {
                    if let Some((dd, after)) = radical_suffix(after) {
                        if let Some(ctx) = d {
                            if ctx != dd {
                                return Err(Error::MixedDiscriminant(ctx, dd));
                            }
                        }
                        let b = if op == '-' { -b } else { b };
                        return Ok((Quad::new(a, b, dd)?, after));
                    }
                }
            }
        }
        Ok((Quad::rational(a), rest))
    }
}

impl<F: RealScalar> ParseScalar for CPair<F> {
    fn parse_prefix<'a>(s: &'a str, d: Option<i64>) -> Result<(CPair<F>, &'a str)> {
        let (re, rest) = F::parse_prefix(s, d)?;
        let Some(op) = rest.chars().next().filter(|c| *c == '+' || *c == '-') else {
            return Ok((CPair::real(re), rest));
        };
        let tail = &rest[1..];
        if tail.starts_with('-') {
            return Err(bad(s));
        }
        let (im, after) = F::parse_prefix(tail, d)?;
        let after = after.strip_prefix("*i").ok_or_else(|| bad(s))?;
        let im = if op == '-' { -im } else { im };
        Ok((CPair::new(re, im), after))
    }
}

impl<F: RealScalar> ParseScalar for Quat<F> {
    fn parse_prefix<'a>(s: &'a str, d: Option<i64>) -> Result<(Quat<F>, &'a str)> {
        // a bare base-field literal reads as a real quaternion
        let Some(mut rest) = s.strip_prefix('(') else {
            let (t, rest) = F::parse_prefix(s, d)?;
            return Ok((Quat::real(t), rest));
        };
        let mut parts = Vec::with_capacity(4);
        for i in 0..4 {
            let (c, after) = F::parse_prefix(rest, d)?;
            parts.push(c);
            let sep = if i < 3 { ';' } else { ')' };
            rest = after.strip_prefix(sep).ok_or_else(|| bad(s))?;
        }
        let [t, x, y, z]: [F; 4] = parts.try_into().map_err(|_| bad(s))?;
        Ok((Quat::new(t, x, y, z), rest))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;

    #[test]
    fn quadratic_literals() {
        let r = Quad::parse_literal("-1/2 + 1/2*rt(-3)", Some(-3)).unwrap();
        assert_eq!(r, Quad::rho());
        let q = Quad::parse_literal("3-2*rt(5)", None).unwrap();
        assert_eq!(q.to_string(), "3-2*rt(5)");
        assert!(matches!(
            Quad::parse_literal("1+1*rt(5)", Some(-3)),
            Err(Error::MixedDiscriminant(-3, 5))
        ));
        assert!(Quad::parse_literal("1+1*rt(4)", None).is_err());
        assert!(Quad::parse_literal("1+*rt(5)", None).is_err());
        // zero radical coefficient normalizes to a rational
        assert_eq!(Quad::parse_literal("2+0*rt(5)", None).unwrap(), Quad::from_int(2));
    }

    #[test]
    fn complex_pair_literals() {
        let z: CPair<Quad> = CPair::parse_literal("1+2*rt(5)+3-1*rt(5)*i", None).unwrap();
        assert_eq!(z.re, Quad::parse_literal("1+2*rt(5)", None).unwrap());
        assert_eq!(z.im, Quad::parse_literal("3-1*rt(5)", None).unwrap());
        let w: CPair<Rat> = CPair::parse_literal("1/2 - 3/4*i", None).unwrap();
        assert_eq!(w.im, Rat::new(-3, 4));
        assert_eq!(w.to_string(), "1/2-3/4*i");
        let neg: CPair<Quad> = CPair::new(Quad::zero(), Quad::parse_literal("-1+1*rt(5)", None).unwrap());
        let printed = neg.to_string();
        assert_eq!(CPair::<Quad>::parse_literal(&printed, None).unwrap(), neg, "{printed}");
    }

    #[test]
    fn quaternion_literals() {
        let q: Quat<Quad> = Quat::parse_literal("(1/2; 1/4+1/4*rt(5); 0; -1)", Some(5)).unwrap();
        assert_eq!(q.t, Quad::from_ratio(1, 2));
        assert_eq!(q.z, Quad::from_int(-1));
        assert_eq!(q.to_string(), "(1/2; 1/4+1/4*rt(5); 0; -1)");
        assert!(Quat::<Rat>::parse_literal("(1; 2; 3)", None).is_err());
        assert!(Quat::<Rat>::parse_literal("(1; 2; 3; 4) x", None).is_err());
        assert_eq!(Quat::<Rat>::parse_literal("-3/2", None).unwrap(), Quat::real(Rat::new(-3, 2)));
    }
}
