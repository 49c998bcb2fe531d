use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer Laurent polynomial in t. Only nonzero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "BTreeMap<i64, i64>", into = "BTreeMap<i64, i64>")]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl From<BTreeMap<i64, i64>> for LaurentPoly {
    fn from(mut coeffs: BTreeMap<i64, i64>) -> Self {
        coeffs.retain(|_, c| *c != 0);
        LaurentPoly { coeffs }
    }
}

impl From<LaurentPoly> for BTreeMap<i64, i64> {
    fn from(p: LaurentPoly) -> Self {
        p.coeffs
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        Self::from_terms([(exp, coeff)])
    }

    /// Sums repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, c * k)))
    }

    /// Multiplies by t^k.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        let mut out = BTreeMap::new();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e = e1.checked_add(e2).ok_or(Error::Overflow("laurent exponent"))?;
                let c = c1.checked_mul(c2).ok_or(Error::Overflow("laurent coefficient"))?;
                let slot = out.entry(e).or_insert(0i64);
                *slot = slot.checked_add(c).ok_or(Error::Overflow("laurent coefficient"))?;
            }
        }
        Ok(LaurentPoly::from(out))
    }

    /// p(t^k).
    pub fn stretch(&self, k: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// p(t^-1).
    pub fn invert(&self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.invert()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if var.is_empty() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{a}{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let trefoil = LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(trefoil.to_string(), "t - 1 + t^-1");
        assert!(trefoil.is_symmetric());
        assert_eq!(trefoil.eval_one(), 1);
        let fig8 = LaurentPoly::from_terms([(1, -1), (0, 3), (-1, -1)]);
        let sq = fig8.mul(&fig8).unwrap();
        assert_eq!(sq, LaurentPoly::from_terms([(2, 1), (1, -6), (0, 11), (-1, -6), (-2, 1)]));
        let json = serde_json::to_string(&sq).unwrap();
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sq);
    }
}
