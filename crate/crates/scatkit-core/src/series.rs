//! Truncated power series with exact rational coefficients.
//!
//! Used for the multiple-cover check: exponentiating the generating series of
//! the wall's invariants must reproduce the finite wall function exactly up
//! to the truncation order.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::Error;

/// A series `c_0 + c_1 x + ... + c_N x^N` truncated at order `N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    pub fn zero(trunc: usize) -> Self {
        RationalSeries {
            coeffs: vec![BigRational::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty());
        RationalSeries { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, c: BigRational) {
        self.coeffs[k] = c;
    }

    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        let n = self.trunc().min(other.trunc());
        let coeffs = (0..=n)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        RationalSeries { coeffs }
    }

    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        let n = self.trunc().min(other.trunc());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if !other.coeffs[j].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        RationalSeries { coeffs }
    }
}

/// Exponential of a series with zero constant term.
///
/// Uses the derivative recurrence `n g_n = sum_{k=1..n} k s_k g_{n-k}`.
pub fn series_exp(s: &RationalSeries) -> Result<RationalSeries, Error> {
    if !s.coeffs[0].is_zero() {
        return Err(Error::SeriesDomain("series_exp needs zero constant term"));
    }
    let n = s.trunc();
    let mut g = RationalSeries::zero(n);
    g.coeffs[0] = BigRational::one();
    for m in 1..=n {
        let mut acc = BigRational::zero();
        for k in 1..=m {
            if !s.coeffs[k].is_zero() {
                acc += BigRational::from_integer(k.into()) * &s.coeffs[k] * &g.coeffs[m - k];
            }
        }
        g.coeffs[m] = acc / BigRational::from_integer(m.into());
    }
    Ok(g)
}

/// Logarithm of a series with constant term 1.
///
/// Uses `n f_n = sum_{k=1..n} k g_k f_{n-k}` solved for the log coefficients.
pub fn series_log(f: &RationalSeries) -> Result<RationalSeries, Error> {
    if !f.coeffs[0].is_one() {
        return Err(Error::SeriesDomain("series_log needs constant term 1"));
    }
    let n = f.trunc();
    let mut g = RationalSeries::zero(n);
    for m in 1..=n {
        let mut acc = BigRational::from_integer(m.into()) * &f.coeffs[m];
        for k in 1..m {
            if !g.coeffs[k].is_zero() {
                acc -= BigRational::from_integer(k.into()) * &g.coeffs[k] * &f.coeffs[m - k];
            }
        }
        g.coeffs[m] = acc / BigRational::from_integer(m.into());
    }
    Ok(g)
}

/// Builds a wall function from its invariants: `exp(sum_d d * omega(d) x^d)`.
pub fn wall_function_from_invariants(
    omega: impl Fn(u32) -> BigRational,
    d_max: usize,
) -> RationalSeries {
    let mut s = RationalSeries::zero(d_max);
    for d in 1..=d_max {
        s.coeffs[d] = BigRational::from_integer((d as i64).into()) * omega(d as u32);
    }
    series_exp(&s).expect("constant term is zero by construction")
}

/// The multiple-cover invariants `(-1)^(d-1) / d^2`, scaled by `scale`.
pub fn multiple_cover(scale: i64) -> impl Fn(u32) -> BigRational {
    move |d: u32| {
        let sign = if d % 2 == 1 { 1i64 } else { -1 };
        BigRational::new((sign * scale).into(), (i64::from(d) * i64::from(d)).into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(trunc: usize) -> RationalSeries {
        let mut s = RationalSeries::zero(trunc);
        s.set_coeff(1, BigRational::one());
        s
    }

    #[test]
    fn log_one_plus_x() {
        let f = RationalSeries::one(4).add(&x(4));
        let g = series_log(&f).unwrap();
        assert_eq!(*g.coeff(1), BigRational::one());
        assert_eq!(*g.coeff(2), BigRational::new((-1).into(), 2.into()));
        assert_eq!(*g.coeff(3), BigRational::new(1.into(), 3.into()));
        assert_eq!(*g.coeff(4), BigRational::new((-1).into(), 4.into()));
    }

    #[test]
    fn exp_log_roundtrip() {
        let f = RationalSeries::one(12)
            .add(&x(12))
            .add(&x(12).mul(&x(12)).mul(&x(12)));
        let back = series_exp(&series_log(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn domain_errors() {
        assert!(series_exp(&RationalSeries::one(3)).is_err());
        assert!(series_log(&RationalSeries::zero(3)).is_err());
    }
}
