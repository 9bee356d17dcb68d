//! Exact Laurent polynomials over the rank-2 lattice, and rational functions.
//!
//! A term is `c * z^v * q` with `c` a big integer, `v` a lattice exponent and
//! `q` a coefficient monomial. Rational functions are stored as unreduced
//! numerator/denominator pairs; equality is cross-multiplication, so no
//! multivariate gcd is ever needed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::CoeffMonomial;
use crate::lattice::LatticeVec;
use crate::Error;

type TermKey = (LatticeVec, CoeffMonomial);

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<TermKey, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::term(LatticeVec::zero(), CoeffMonomial::one(), BigInt::from(c))
    }

    /// The monomial `z^v`.
    pub fn monomial(v: LatticeVec) -> Self {
        LaurentPoly::term(v, CoeffMonomial::one(), BigInt::one())
    }

    /// The monomial `q * z^v`.
    pub fn coeff_monomial(v: LatticeVec, q: CoeffMonomial) -> Self {
        LaurentPoly::term(v, q, BigInt::one())
    }

    pub fn term(v: LatticeVec, q: CoeffMonomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((v, q), c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(LatticeVec::zero(), CoeffMonomial::one()))
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeVec, &CoeffMonomial, &BigInt)> {
        self.terms.iter().map(|((v, q), c)| (v, q, c))
    }

    fn insert(terms: &mut BTreeMap<TermKey, BigInt>, key: TermKey, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match terms.entry(key) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (key, c) in &other.terms {
            Self::insert(&mut terms, key.clone(), c.clone());
        }
        LaurentPoly { terms }
    }

    pub fn neg(&self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect();
        LaurentPoly { terms }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for ((v1, q1), c1) in &self.terms {
            for ((v2, q2), c2) in &other.terms {
                Self::insert(&mut terms, (*v1 + *v2, q1.mul(q2)), c1 * c2);
            }
        }
        LaurentPoly { terms }
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(key, c)| (key.clone(), c * k))
            .collect();
        LaurentPoly { terms }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Sets every coefficient generator to 1 and merges like terms.
    pub fn specialize(&self) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for ((v, _), c) in &self.terms {
            Self::insert(&mut terms, (*v, CoeffMonomial::one()), c.clone());
        }
        LaurentPoly { terms }
    }

    /// Rewrites every lattice exponent through `f` (which must be injective
    /// on the exponents present, as any lattice-linear map is).
    pub fn map_exponents(&self, f: impl Fn(&LatticeVec) -> LatticeVec) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for ((v, q), c) in &self.terms {
            Self::insert(&mut terms, (f(v), q.clone()), c.clone());
        }
        LaurentPoly { terms }
    }

    /// Exact division by the binomial `1 + q * z^v` (with `v != 0`), or
    /// `None` when it does not divide.
    ///
    /// Terms are eliminated level by level along the grading `<v, ->`; each
    /// elimination pushes a correction one level up, so the loop either
    /// clears everything (exact) or climbs past the dividend's top level.
    pub fn div_exact_one_plus(&self, v: LatticeVec, q: &CoeffMonomial) -> Option<LaurentPoly> {
        assert!(!v.is_zero(), "binomial direction must be nonzero");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let level = |m: &LatticeVec| v.a * m.a + v.b * m.b;
        let step = level(&v);
        let mut work: BTreeMap<i64, BTreeMap<TermKey, BigInt>> = BTreeMap::new();
        let mut top = i64::MIN;
        for ((m, p), c) in &self.terms {
            let l = level(m);
            top = top.max(l);
            Self::insert(work.entry(l).or_default(), (*m, p.clone()), c.clone());
        }
        let mut quot = BTreeMap::new();
        while let Some((&l, _)) = work.iter().next() {
            if l + step > top {
                return None;
            }
            let slice = work.remove(&l).unwrap();
            let upper = work.entry(l + step).or_default();
            for ((m, p), c) in slice {
                Self::insert(upper, (m + v, p.mul(q)), -&c);
                Self::insert(&mut quot, (m, p), c);
            }
            if work.get(&(l + step)).is_some_and(|s| s.is_empty()) {
                work.remove(&(l + step));
            }
        }
        Some(LaurentPoly { terms: quot })
    }

    /// Exact division by an arbitrary nonzero coefficient-free polynomial,
    /// or `None` when it does not divide. Long division under the
    /// lexicographic exponent order; quotient exponents are confined to the
    /// coordinate box forced by the support bounds, which caps the loop.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        debug_assert!(
            self.terms
                .keys()
                .chain(divisor.terms.keys())
                .all(|(_, q)| q.is_one()),
            "exact division is only supported for coefficient-free polynomials"
        );
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let bounds = |p: &LaurentPoly| {
            let mut it = p.terms.keys();
            let (m0, _) = it.next().unwrap();
            it.fold((m0.a, m0.a, m0.b, m0.b), |(a0, a1, b0, b1), (m, _)| {
                (a0.min(m.a), a1.max(m.a), b0.min(m.b), b1.max(m.b))
            })
        };
        let (pa0, pa1, pb0, pb1) = bounds(self);
        let (da0, da1, db0, db1) = bounds(divisor);
        let (lo_a, hi_a) = (pa0 - da0, pa1 - da1);
        let (lo_b, hi_b) = (pb0 - db0, pb1 - db1);
        if lo_a > hi_a || lo_b > hi_b {
            return None;
        }
        let ((lt_v, _), lt_c) = divisor.terms.iter().next_back().unwrap();
        let (lt_v, lt_c) = (*lt_v, lt_c.clone());
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rv, rc)) = rem
            .terms
            .iter()
            .next_back()
            .map(|((v, _), c)| (*v, c.clone()))
        {
            let qv = rv - lt_v;
            if qv.a < lo_a || qv.a > hi_a || qv.b < lo_b || qv.b > hi_b {
                return None;
            }
            let (qc, r) = rc.div_rem(&lt_c);
            if !r.is_zero() {
                return None;
            }
            let t = LaurentPoly::term(qv, CoeffMonomial::one(), qc.clone());
            Self::insert(&mut quot, (qv, CoeffMonomial::one()), qc);
            rem = rem.sub(&divisor.mul(&t));
        }
        Some(LaurentPoly { terms: quot })
    }

    /// The largest monomial `q * z^v` dividing every term (`None` if zero).
    pub fn monomial_content(&self) -> Option<(LatticeVec, CoeffMonomial)> {
        let mut it = self.terms.keys();
        let (m0, q0) = it.next()?;
        let mut v = *m0;
        let mut q = q0.clone();
        for (m, p) in it {
            v = LatticeVec::new(v.a.min(m.a), v.b.min(m.b));
            q = q.gcd(p);
        }
        Some((v, q))
    }

    /// Divides every term by `q * z^v`; panics if some coefficient monomial
    /// lacks a factor (lattice exponents are unconstrained).
    pub fn div_by_monomial(&self, v: LatticeVec, q: &CoeffMonomial) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|((m, p), c)| {
                let pd = p.try_div(q).expect("monomial does not divide term");
                ((*m - v, pd), c.clone())
            })
            .collect();
        LaurentPoly { terms }
    }
}

/// Cancels shared binomial factors `1 + q * z^v` and the shared monomial
/// content from a numerator/denominator pair, leaving the fraction's value
/// unchanged. Size control only: equality stays cross-multiplicative.
pub fn cancel_common(
    mut num: LaurentPoly,
    mut den: LaurentPoly,
    binomials: &[(LatticeVec, CoeffMonomial)],
) -> (LaurentPoly, LaurentPoly) {
    for (v, q) in binomials {
        while let (Some(n), Some(d)) =
            (num.div_exact_one_plus(*v, q), den.div_exact_one_plus(*v, q))
        {
            num = n;
            den = d;
        }
    }
    if let (Some((vn, qn)), Some((vd, qd))) = (num.monomial_content(), den.monomial_content()) {
        let v = LatticeVec::new(vn.a.min(vd.a), vn.b.min(vd.b));
        let q = qn.gcd(&qd);
        if !v.is_zero() || !q.is_one() {
            num = num.div_by_monomial(v, &q);
            den = den.div_by_monomial(v, &q);
        }
    }
    (num, den)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((v, q), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut printed = false;
            if !mag.is_one() {
                write!(f, "{mag}")?;
                printed = true;
            }
            if !v.is_zero() {
                if printed {
                    write!(f, "*")?;
                }
                write!(f, "z^{v}")?;
                printed = true;
            }
            if !q.is_one() {
                if printed {
                    write!(f, "*")?;
                }
                write!(f, "{q}")?;
                printed = true;
            }
            if !printed {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

/// An unreduced rational function `num / den` with `den != 0`.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFn {
    /// Panics when `den` is zero; all engine constructions keep it nonzero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function denominator is zero");
        RatFn { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn monomial(v: LatticeVec) -> Self {
        Self::from_poly(LaurentPoly::monomial(v))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rf_eq(&RatFn::one())
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        RatFn {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        RatFn {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }

    pub fn recip(&self) -> Result<RatFn, Error> {
        if self.num.is_zero() {
            return Err(Error::ZeroToNegativePower);
        }
        Ok(RatFn {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    /// Integer powers; negative exponents swap numerator and denominator.
    pub fn pow(&self, k: i64) -> Result<RatFn, Error> {
        if k < 0 {
            return self.recip()?.pow(-k);
        }
        Ok(RatFn {
            num: self.num.pow(k as u32),
            den: self.den.pow(k as u32),
        })
    }

    /// Cross-multiplication equality: `p/q = r/s` iff `p*s = r*q`.
    pub fn rf_eq(&self, other: &RatFn) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn specialize(&self) -> RatFn {
        RatFn {
            num: self.num.specialize(),
            den: self.den.specialize(),
        }
    }

    pub fn map_exponents(&self, f: impl Fn(&LatticeVec) -> LatticeVec) -> RatFn {
        RatFn {
            num: self.num.map_exponents(&f),
            den: self.den.map_exponents(&f),
        }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Convenience product `prod (1 + q_i * z^v)^k_i` used for wall functions.
pub fn one_plus_products(v: LatticeVec, factors: &[(CoeffMonomial, u32)]) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for (q, mult) in factors {
        let f = LaurentPoly::one().add(&LaurentPoly::coeff_monomial(v, q.clone()));
        out = out.mul(&f.pow(*mult));
    }
    out
}

/// Collects a polynomial's terms as display-friendly rows (sorted).
pub fn term_rows(p: &LaurentPoly) -> Vec<(LatticeVec, CoeffMonomial, BigInt)> {
    p.terms()
        .map(|(v, q, c)| (*v, q.clone(), c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn z(a: i64, b: i64) -> LaurentPoly {
        LaurentPoly::monomial(LatticeVec::new(a, b))
    }

    #[test]
    fn distributes() {
        let lhs = LaurentPoly::one()
            .add(&z(0, 1))
            .mul(&LaurentPoly::one().add(&z(1, 0)));
        let rhs = LaurentPoly::one().add(&z(1, 0)).add(&z(0, 1)).add(&z(1, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cancels_to_zero() {
        let p = z(2, -1).add(&LaurentPoly::constant(3));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn binomial_square() {
        let sq = LaurentPoly::one().add(&z(0, 1)).pow(2);
        let expect = LaurentPoly::one()
            .add(&z(0, 1).scale(&BigInt::from(2)))
            .add(&z(0, 2));
        assert_eq!(sq, expect);
    }

    #[test]
    fn rf_eq_common_factor() {
        let f = RatFn::new(
            z(1, 0).mul(&LaurentPoly::one().add(&z(0, 1))),
            LaurentPoly::one().add(&z(0, 1)),
        );
        assert!(f.rf_eq(&RatFn::monomial(LatticeVec::e1())));
        let g = RatFn::new(LaurentPoly::one(), LaurentPoly::one().add(&z(0, 1)));
        assert!(!g.rf_eq(&RatFn::from_poly(LaurentPoly::one().add(&z(0, 1)))));
    }

    #[test]
    fn rf_pow_negative() {
        let f = RatFn::from_poly(LaurentPoly::one().add(&z(0, 1)));
        let inv = f.pow(-1).unwrap();
        assert!(f.mul(&inv).is_one());
        assert!(f.pow(0).unwrap().is_one());
        assert!(RatFn::zero().pow(-1).is_err());
    }

    #[test]
    fn specialize_merges() {
        let p =
            LaurentPoly::coeff_monomial(LatticeVec::zero(), CoeffMonomial::generator("E1")).add(
                &LaurentPoly::coeff_monomial(LatticeVec::zero(), CoeffMonomial::generator("E2")),
            );
        assert_eq!(p.specialize(), LaurentPoly::constant(2));
    }

    #[test]
    fn display_reads_naturally() {
        let p = z(1, 0).scale(&BigInt::from(-2)).add(&LaurentPoly::one());
        assert_eq!(p.to_string(), "1 - 2*z^(1,0)");
    }

    #[test]
    fn binomial_division_inverts_multiplication() {
        let v = LatticeVec::new(1, 1);
        let b = LaurentPoly::one().add(&z(1, 1));
        let small = z(-2, 0).add(&LaurentPoly::constant(5));
        let mut p = b.pow(3).mul(&small);
        for _ in 0..3 {
            p = p.div_exact_one_plus(v, &CoeffMonomial::one()).unwrap();
        }
        assert_eq!(p, small);
        assert!(p.div_exact_one_plus(v, &CoeffMonomial::one()).is_none());
    }

    #[test]
    fn binomial_division_tracks_coefficients() {
        let v = LatticeVec::new(0, -1);
        let q = CoeffMonomial::generator("D2");
        let b = LaurentPoly::one().add(&LaurentPoly::coeff_monomial(v, q.clone()));
        let p = b.mul(&z(3, 1));
        assert_eq!(p.div_exact_one_plus(v, &q), Some(z(3, 1)));
        assert!(p.div_exact_one_plus(v, &CoeffMonomial::one()).is_none());
    }

    #[test]
    fn general_division_inverts_multiplication() {
        let tri = LaurentPoly::one().add(&z(1, 0)).add(&z(0, 1));
        let other = z(-1, 0).add(&z(0, 1));
        let p = tri.pow(2).mul(&other);
        assert_eq!(p.div_exact(&tri.pow(2)), Some(other.clone()));
        assert_eq!(p.div_exact(&tri), Some(tri.mul(&other)));
        assert!(tri.div_exact(&other).is_none());
        assert_eq!(
            LaurentPoly::zero().div_exact(&tri),
            Some(LaurentPoly::zero())
        );
    }

    #[test]
    fn cancel_common_strips_shared_factors() {
        let v = LatticeVec::new(1, 0);
        let b = LaurentPoly::one().add(&z(1, 0));
        let num = b
            .pow(2)
            .mul(&z(0, 3))
            .mul(&LaurentPoly::one().add(&z(0, 1)));
        let den = b.mul(&z(0, 2));
        let (n, d) = cancel_common(num, den, &[(v, CoeffMonomial::one())]);
        assert_eq!(n, b.mul(&z(0, 1)).mul(&LaurentPoly::one().add(&z(0, 1))));
        assert_eq!(d, LaurentPoly::one());
    }
}
