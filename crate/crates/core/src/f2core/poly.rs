use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial in U over GF(2), bit i is the coefficient of U^i.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Poly {
    words: Vec<u64>,
}

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// U^k.
    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0; k / 64 + 1];
        words[k / 64] = 1u64 << (k % 64);
        F2Poly { words }
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = F2Poly::zero();
        for &e in exps {
            p.toggle(e);
        }
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn toggle(&mut self, k: usize) {
        if self.words.len() <= k / 64 {
            self.words.resize(k / 64 + 1, 0);
        }
        self.words[k / 64] ^= 1u64 << (k % 64);
        self.trim();
    }

    pub fn coeff(&self, k: usize) -> bool {
        self.words.get(k / 64).is_some_and(|w| (w >> (k % 64)) & 1 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Some(k) when the polynomial is exactly U^k.
    pub fn as_monomial(&self) -> Option<usize> {
        let v = self.valuation()?;
        (self.degree() == Some(v)).then_some(v)
    }

    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(i * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &F2Poly) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
        self.trim();
    }

    fn shifted(&self, k: usize) -> F2Poly {
        if self.is_zero() {
            return F2Poly::zero();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs > 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = F2Poly { words };
        p.trim();
        p
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        let mut out = F2Poly::zero();
        for e in other.exponents() {
            out.add_assign(&self.shifted(e));
        }
        out
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &F2Poly) -> (F2Poly, F2Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut q = F2Poly::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            q.toggle(rd - dd);
            r.add_assign(&d.shifted(rd - dd));
        }
        (q, r)
    }

    pub fn divides(&self, other: &F2Poly) -> bool {
        other.divrem(self).1.is_zero()
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "U".to_string(),
                _ => format!("U^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

// Serialized as the sorted list of exponents with coefficient 1.
impl Serialize for F2Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.exponents().serialize(s)
    }
}

impl<'de> Deserialize<'de> for F2Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let exps = Vec::<usize>::deserialize(d)?;
        Ok(F2Poly::from_exponents(&exps))
    }
}
