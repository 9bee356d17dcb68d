//! Angles stored exactly as rational multiples of pi.
//!
//! Ray directions and branch-cut positions in the case diagrams are all
//! rational multiples of pi, so angle arithmetic can stay exact and only the
//! rendering layer ever converts to floating point.

use core::fmt;
use core::ops::{Add, Sub};

use num_rational::Ratio;

/// An angle `q * pi` with `q` rational, normalized into `[0, 2)`.
///
/// The ordering is the counterclockwise order of rays starting at the
/// positive real axis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PiAngle(Ratio<i64>);

impl PiAngle {
    /// Angle `(num/den) * pi`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_ratio(Ratio::new(num, den))
    }

    pub fn zero() -> Self {
        PiAngle(Ratio::from_integer(0))
    }

    pub fn from_ratio(q: Ratio<i64>) -> Self {
        let two = Ratio::from_integer(2);
        let mut r = q - (q / two).floor() * two;
        if r < Ratio::from_integer(0) {
            r += two;
        }
        PiAngle(r)
    }

    /// The exact multiple of pi, in `[0, 2)`.
    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn radians(&self) -> f64 {
        let q = *self.0.numer() as f64 / *self.0.denom() as f64;
        q * core::f64::consts::PI
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Ratio::from_integer(0)
    }
}

impl Add for PiAngle {
    type Output = PiAngle;
    fn add(self, rhs: PiAngle) -> PiAngle {
        PiAngle::from_ratio(self.0 + rhs.0)
    }
}

impl Sub for PiAngle {
    type Output = PiAngle;
    fn sub(self, rhs: PiAngle) -> PiAngle {
        PiAngle::from_ratio(self.0 - rhs.0)
    }
}

impl fmt::Display for PiAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (n, d) = (*self.0.numer(), *self.0.denom());
        if d == 1 {
            if n == 1 {
                write!(f, "pi")
            } else {
                write!(f, "{n}pi")
            }
        } else if n == 1 {
            write!(f, "pi/{d}")
        } else {
            write!(f, "{n}pi/{d}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_into_two_turns() {
        assert_eq!(PiAngle::new(5, 2), PiAngle::new(1, 2));
        assert_eq!(PiAngle::new(-1, 2), PiAngle::new(3, 2));
        assert_eq!(PiAngle::new(4, 1), PiAngle::zero());
    }

    #[test]
    fn arithmetic_wraps() {
        let a = PiAngle::new(8, 5);
        let b = PiAngle::new(4, 5);
        assert_eq!(a + b, PiAngle::new(2, 5));
        assert_eq!(b - a, PiAngle::new(6, 5));
    }

    #[test]
    fn ordering_is_counterclockwise_from_zero() {
        let mut v = [PiAngle::new(6, 5), PiAngle::zero(), PiAngle::new(2, 5)];
        v.sort();
        assert_eq!(v, [PiAngle::zero(), PiAngle::new(2, 5), PiAngle::new(6, 5)]);
    }

    #[test]
    fn radians_match() {
        let a = PiAngle::new(2, 5);
        assert!((a.radians() - 2.0 * core::f64::consts::PI / 5.0).abs() < 1e-15);
    }
}
