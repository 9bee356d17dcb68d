//! The rank-2 boundary-class lattice, its skew pairing, and integer 2x2 maps.
//!
//! The basis (e1, e2) is fixed once for the whole engine; the pairing is the
//! intersection form with `pair(e1, e2) = 1`. Monodromies and Picard-Lefschetz
//! shears are unimodular integer matrices acting on this lattice.

use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::Error;

/// A vector in the rank-2 lattice, coordinates over the fixed basis (e1, e2).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LatticeVec {
    pub a: i64,
    pub b: i64,
}

impl LatticeVec {
    pub const fn new(a: i64, b: i64) -> Self {
        LatticeVec { a, b }
    }

    pub const fn zero() -> Self {
        LatticeVec { a: 0, b: 0 }
    }

    pub const fn e1() -> Self {
        LatticeVec { a: 1, b: 0 }
    }

    pub const fn e2() -> Self {
        LatticeVec { a: 0, b: 1 }
    }

    /// The skew pairing `<u, v> = u.a * v.b - u.b * v.a`.
    pub fn pair(&self, other: &LatticeVec) -> i64 {
        self.a * other.b - self.b * other.a
    }

    pub fn scale(&self, k: i64) -> Self {
        LatticeVec::new(self.a * k, self.b * k)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True when the coordinates are coprime (and not both zero).
    pub fn is_primitive(&self) -> bool {
        gcd(self.a, self.b) == 1
    }

    /// The primitive vector on the same ray, or `None` for the zero vector.
    pub fn primitive(&self) -> Option<LatticeVec> {
        let g = gcd(self.a, self.b);
        if g == 0 {
            None
        } else {
            Some(LatticeVec::new(self.a / g, self.b / g))
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Add for LatticeVec {
    type Output = LatticeVec;
    fn add(self, rhs: LatticeVec) -> LatticeVec {
        LatticeVec::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for LatticeVec {
    type Output = LatticeVec;
    fn sub(self, rhs: LatticeVec) -> LatticeVec {
        LatticeVec::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for LatticeVec {
    type Output = LatticeVec;
    fn neg(self) -> LatticeVec {
        LatticeVec::new(-self.a, -self.b)
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A 2x2 integer matrix, stored by rows; columns are the images of e1, e2.
///
/// Composition follows `(A o B)(v) = A(B(v))`, so `a.mul(&b)` applies `b`
/// first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mat2 {
    pub m: [[i64; 2]; 2],
}

impl Mat2 {
    pub const fn from_rows(m: [[i64; 2]; 2]) -> Self {
        Mat2 { m }
    }

    /// Matrix with columns `u`, `v` (the images of e1 and e2).
    pub const fn from_cols(u: LatticeVec, v: LatticeVec) -> Self {
        Mat2 {
            m: [[u.a, v.a], [u.b, v.b]],
        }
    }

    pub const fn identity() -> Self {
        Mat2 {
            m: [[1, 0], [0, 1]],
        }
    }

    pub fn apply(&self, v: &LatticeVec) -> LatticeVec {
        LatticeVec::new(
            self.m[0][0] * v.a + self.m[0][1] * v.b,
            self.m[1][0] * v.a + self.m[1][1] * v.b,
        )
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let a = &self.m;
        let b = &rhs.m;
        Mat2::from_rows([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> i64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::from_rows([[self.m[0][0], self.m[1][0]], [self.m[0][1], self.m[1][1]]])
    }

    /// Exact inverse; defined only when `det = +-1`.
    pub fn inverse(&self) -> Option<Mat2> {
        let d = self.det();
        if d != 1 && d != -1 {
            return None;
        }
        Some(Mat2::from_rows([
            [self.m[1][1] * d, -self.m[0][1] * d],
            [-self.m[1][0] * d, self.m[0][0] * d],
        ]))
    }

    pub fn pow(&self, k: u32) -> Mat2 {
        let mut out = Mat2::identity();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

/// Smallest `n <= cap` with `M^n = I`, if any.
pub fn map_order(m: &Mat2, cap: u32) -> Option<u32> {
    let mut p = *m;
    for n in 1..=cap {
        if p.is_identity() {
            return Some(n);
        }
        p = p.mul(m);
    }
    None
}

/// The Picard-Lefschetz shear of a class: `v -> v + <gamma, v> * gamma`.
pub fn picard_lefschetz(gamma: &LatticeVec) -> Mat2 {
    let e1 = LatticeVec::e1();
    let e2 = LatticeVec::e2();
    Mat2::from_cols(
        e1 + gamma.scale(gamma.pair(&e1)),
        e2 + gamma.scale(gamma.pair(&e2)),
    )
}

/// Splits a monodromy as `PL(e1) o PL(e2)^d2`, verifying the product.
///
/// Returns the pair `(PL(e1), PL(e2)^d2)`; errs when their product (second
/// applied first) differs from `m`.
pub fn factor_monodromy(m: &Mat2, d2: u32) -> Result<(Mat2, Mat2), Error> {
    let m1 = picard_lefschetz(&LatticeVec::e1());
    let m2 = picard_lefschetz(&LatticeVec::e2()).pow(d2);
    if m1.mul(&m2) == *m {
        Ok((m1, m2))
    } else {
        Err(Error::FactorizationMismatch)
    }
}
