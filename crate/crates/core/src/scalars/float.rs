//! Binary64 arithmetic for the sampling harness only.
//!
//! Nothing in the exact path depends on this module.  Samples drawn here
//! are converted to exact rationals (`to_exact_*`) before any verdict that
//! could contradict a theorem is recorded.

use super::{CPair, Quat, Rat};

/// A binary64 complex number.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub const fn new(re: f64, im: f64) -> C64 {
        C64 { re, im }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn arg(self) -> f64 {
        self.im.atan2(self.re)
    }

    pub fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }

    pub fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }

    pub fn mul(self, o: C64) -> C64 {
        C64::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }

    pub fn scale(self, s: f64) -> C64 {
        C64::new(self.re * s, self.im * s)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

pub fn norm4(v: &[f64; 4]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

/// Exact rational image of a finite binary64 complex value.
pub fn to_exact_complex(z: C64) -> CPair<Rat> {
    CPair::new(exact(z.re), exact(z.im))
}

/// Exact rational image of a binary64 4-vector read as a quaternion.
pub fn to_exact_quat(v: &[f64; 4]) -> Quat<Rat> {
    Quat::new(exact(v[0]), exact(v[1]), exact(v[2]), exact(v[3]))
}

pub fn exact(x: f64) -> Rat {
    Rat::from_f64(x).expect("finite sample")
}
