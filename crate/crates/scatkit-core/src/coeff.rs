//! Formal coefficient monomials over named curve-class generators.
//!
//! Generators are names like `D1` or `E3`; a monomial is a finite product
//! with nonnegative exponents (the coefficient monoid is toric, only monoid
//! elements appear in ring data). Displayed with brackets, `[D1][E3]^2`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct CoeffMonomial {
    exps: BTreeMap<String, u32>,
}

impl CoeffMonomial {
    /// The empty product.
    pub fn one() -> Self {
        CoeffMonomial::default()
    }

    pub fn generator(name: &str) -> Self {
        Self::from_pairs(&[(name, 1)])
    }

    pub fn from_pairs(pairs: &[(&str, u32)]) -> Self {
        let mut exps = BTreeMap::new();
        for (name, k) in pairs {
            if *k > 0 {
                *exps.entry(String::from(*name)).or_insert(0) += k;
            }
        }
        CoeffMonomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &CoeffMonomial) -> CoeffMonomial {
        let mut exps = self.exps.clone();
        for (name, k) in &other.exps {
            *exps.entry(name.clone()).or_insert(0) += k;
        }
        CoeffMonomial { exps }
    }

    pub fn pow(&self, k: u32) -> CoeffMonomial {
        if k == 0 {
            return CoeffMonomial::one();
        }
        let exps = self.exps.iter().map(|(n, e)| (n.clone(), e * k)).collect();
        CoeffMonomial { exps }
    }

    pub fn degree_of(&self, name: &str) -> u32 {
        self.exps.get(name).copied().unwrap_or(0)
    }

    /// Per-generator minimum, the monoid gcd.
    pub fn gcd(&self, other: &CoeffMonomial) -> CoeffMonomial {
        let exps = self
            .exps
            .iter()
            .filter_map(|(n, e)| {
                let m = (*e).min(other.degree_of(n));
                (m > 0).then(|| (n.clone(), m))
            })
            .collect();
        CoeffMonomial { exps }
    }

    /// `self / other`, or `None` when some exponent would go negative.
    pub fn try_div(&self, other: &CoeffMonomial) -> Option<CoeffMonomial> {
        let mut exps = self.exps.clone();
        for (name, k) in &other.exps {
            let e = exps.get_mut(name)?;
            *e = e.checked_sub(*k)?;
            if *e == 0 {
                exps.remove(name);
            }
        }
        Some(CoeffMonomial { exps })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.exps.iter().map(|(n, e)| (n.as_str(), *e))
    }
}

impl fmt::Display for CoeffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (name, e) in &self.exps {
            write!(f, "[{name}]")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn multiplication_merges_exponents() {
        let d = CoeffMonomial::generator("D1");
        let e = CoeffMonomial::generator("E1");
        let m = d.mul(&e).mul(&d);
        assert_eq!(m.degree_of("D1"), 2);
        assert_eq!(m.degree_of("E1"), 1);
        assert_eq!(m.to_string(), "[D1]^2[E1]");
    }

    #[test]
    fn powers() {
        let d = CoeffMonomial::from_pairs(&[("D1", 2), ("E2", 1)]);
        assert_eq!(d.pow(3).degree_of("D1"), 6);
        assert!(d.pow(0).is_one());
        assert_eq!(CoeffMonomial::one().to_string(), "1");
    }
}
