use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;

#[derive(Serialize, Deserialize)]
struct MaEntry {
    maslov: i64,
    alexander: i64,
    rank: usize,
}

/// Ranks indexed by (maslov, alexander). Stored ranks are positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<MaEntry>", into = "Vec<MaEntry>")]
pub struct BigradedGroup {
    ranks: BTreeMap<(i64, i64), usize>,
}

impl From<Vec<MaEntry>> for BigradedGroup {
    fn from(v: Vec<MaEntry>) -> Self {
        BigradedGroup::from_ranks(v.into_iter().map(|e| ((e.maslov, e.alexander), e.rank)))
    }
}

impl From<BigradedGroup> for Vec<MaEntry> {
    fn from(g: BigradedGroup) -> Self {
        g.ranks.into_iter().map(|((m, a), rank)| MaEntry { maslov: m, alexander: a, rank }).collect()
    }
}

/// `{(m,a):rank, ...}`
impl std::fmt::Display for BigradedGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_ranks(f, self.iter())
    }
}

pub(crate) fn fmt_ranks(f: &mut std::fmt::Formatter<'_>, it: impl Iterator<Item = ((i64, i64), usize)>) -> std::fmt::Result {
    write!(f, "{{")?;
    for (n, ((x, y), r)) in it.enumerate() {
        if n > 0 {
            write!(f, ", ")?;
        }
        write!(f, "({x},{y}):{r}")?;
    }
    write!(f, "}}")
}

impl BigradedGroup {
    pub fn new() -> Self {
        Self::default()
    }

    /// Ranks at repeated positions are summed; zeros are dropped.
    pub fn from_ranks<I: IntoIterator<Item = ((i64, i64), usize)>>(it: I) -> Self {
        let mut g = Self::new();
        for (k, r) in it {
            g.add(k.0, k.1, r);
        }
        g
    }

    pub fn add(&mut self, maslov: i64, alexander: i64, r: usize) {
        if r > 0 {
            *self.ranks.entry((maslov, alexander)).or_insert(0) += r;
        }
    }

    pub fn rank(&self, maslov: i64, alexander: i64) -> usize {
        self.ranks.get(&(maslov, alexander)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), usize)> + '_ {
        self.ranks.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Total rank in each Alexander grading.
    pub fn by_alexander(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for ((_, a), r) in self.iter() {
            *out.entry(a).or_insert(0) += r;
        }
        out
    }

    pub fn max_alexander(&self) -> Option<i64> {
        self.ranks.keys().map(|k| k.1).max()
    }

    /// Bigraded tensor product.
    pub fn tensor(&self, other: &BigradedGroup) -> BigradedGroup {
        let mut out = BigradedGroup::new();
        for ((m1, a1), r1) in self.iter() {
            for ((m2, a2), r2) in other.iter() {
                out.add(m1 + m2, a1 + a2, r1 * r2);
            }
        }
        out
    }

    /// (m, a) -> (-m, -a).
    pub fn negate(&self) -> BigradedGroup {
        BigradedGroup::from_ranks(self.iter().map(|((m, a), r)| ((-m, -a), r)))
    }
}

/// rank(m, a) = rank(m - 2a, -a) everywhere.
pub fn symmetry_check(g: &BigradedGroup) -> bool {
    g.iter().all(|((m, a), r)| g.rank(m - 2 * a, -a) == r)
}

/// Sum over gradings of (-1)^m rank t^a.
pub fn euler_characteristic(g: &BigradedGroup) -> LaurentPoly {
    LaurentPoly::from_terms(g.iter().map(|((m, a), r)| {
        let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
        (a, sign * r as i64)
    }))
}

/// Total homology is a single F in Maslov grading 0.
pub fn canceling_check(h: &BigradedGroup) -> bool {
    h.total_rank() == 1 && h.iter().all(|((m, _), _)| m == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> BigradedGroup {
        BigradedGroup::from_ranks([((0, 1), 1), ((-1, 0), 1), ((-2, -1), 1)])
    }

    #[test]
    fn symmetry_and_euler() {
        assert!(symmetry_check(&trefoil()));
        assert!(!symmetry_check(&BigradedGroup::from_ranks([((0, 1), 1)])));
        let fig5 = BigradedGroup::from_ranks([((0, 2), 1), ((-3, 0), 1), ((-4, -2), 1)]);
        assert!(symmetry_check(&fig5));
        assert_eq!(
            euler_characteristic(&trefoil()),
            LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)])
        );
    }

    #[test]
    fn json_round_trip() {
        let g = trefoil();
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.contains("\"maslov\""));
        let back: BigradedGroup = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
