//! Finite models of CFK-infinity complexes over GF(2)[U, U^-1].
//!
//! A term `(from, to, k)` means U^k * to appears in the differential of
//! `from`. Generators sit in the i = 0 column; U moves (i, j) by (-1, -1).

mod hat;
mod ops;
mod reduce;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use crate::group::{canceling_check, euler_characteristic, symmetry_check, BigradedGroup};
pub use crate::laurent::LaurentPoly;
pub use hat::{hat, hat_homology, VerticalComplex, VerticalTerm};
pub use ops::{mirror_dual, tensor, transpose};
pub use reduce::reduce;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CfkGenerator {
    pub name: String,
    pub maslov: i64,
    pub alexander: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CfkTerm {
    pub from: String,
    pub to: String,
    pub upower: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfkComplex {
    pub generators: Vec<CfkGenerator>,
    pub differential: Vec<CfkTerm>,
}

/// One failed invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DuplicateName { name: String },
    UnknownGenerator { name: String },
    DuplicateTerm { from: String, to: String, upower: u32 },
    MaslovDrop { from: String, to: String, upower: u32 },
    Filtration { from: String, to: String, upower: u32 },
    /// Nonzero coefficient of U^upower * to in the square of the differential.
    DSquared { from: String, to: String, upower: u64 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl CfkComplex {
    /// Convenience constructor from (name, maslov, alexander) and
    /// (from, to, upower) tuples. No validation is performed.
    pub fn build(gens: &[(&str, i64, i64)], terms: &[(&str, &str, u32)]) -> Self {
        CfkComplex {
            generators: gens
                .iter()
                .map(|&(n, m, a)| CfkGenerator { name: n.to_string(), maslov: m, alexander: a })
                .collect(),
            differential: terms
                .iter()
                .map(|&(f, t, k)| CfkTerm { from: f.to_string(), to: t.to_string(), upower: k })
                .collect(),
        }
    }

    pub fn unknot() -> Self {
        Self::build(&[("x", 0, 0)], &[])
    }

    /// Generators sorted by (alexander, maslov, name), terms by (from, to, upower).
    pub fn canonical(&self) -> Self {
        let mut c = self.clone();
        c.generators.sort_by(|x, y| {
            (x.alexander, x.maslov, &x.name).cmp(&(y.alexander, y.maslov, &y.name))
        });
        c.differential.sort();
        c
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.canonical()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Hat-level ranks of the generators themselves.
    pub fn generator_group(&self) -> BigradedGroup {
        BigradedGroup::from_ranks(self.generators.iter().map(|g| ((g.maslov, g.alexander), 1)))
    }
}

/// Every violated invariant; empty iff the complex is valid.
pub fn validate(c: &CfkComplex) -> ValidationReport {
    let mut v = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, g) in c.generators.iter().enumerate() {
        if index.insert(g.name.as_str(), i).is_some() {
            v.push(Violation::DuplicateName { name: g.name.clone() });
        }
    }
    let mut seen = std::collections::HashSet::new();
    // from -> list of (to, k) for the composition check
    let mut out: Vec<Vec<(usize, u32)>> = vec![Vec::new(); c.generators.len()];
    for t in &c.differential {
        let (Some(&f), Some(&to)) = (index.get(t.from.as_str()), index.get(t.to.as_str())) else {
            for n in [&t.from, &t.to] {
                if !index.contains_key(n.as_str()) {
                    v.push(Violation::UnknownGenerator { name: n.clone() });
                }
            }
            continue;
        };
        if !seen.insert((f, to, t.upower)) {
            v.push(Violation::DuplicateTerm { from: t.from.clone(), to: t.to.clone(), upower: t.upower });
            continue;
        }
        let (gf, gt) = (&c.generators[f], &c.generators[to]);
        if gt.maslov - 2 * t.upower as i64 != gf.maslov - 1 {
            v.push(Violation::MaslovDrop { from: t.from.clone(), to: t.to.clone(), upower: t.upower });
        }
        if (t.upower as i64) < gt.alexander - gf.alexander {
            v.push(Violation::Filtration { from: t.from.clone(), to: t.to.clone(), upower: t.upower });
        }
        out[f].push((to, t.upower));
    }
    for x in 0..out.len() {
        let mut acc: BTreeMap<(usize, u64), bool> = BTreeMap::new();
        for &(y, k1) in &out[x] {
            for &(z, k2) in &out[y] {
                let e = acc.entry((z, k1 as u64 + k2 as u64)).or_insert(false);
                *e = !*e;
            }
        }
        for ((z, k), odd) in acc {
            if odd {
                v.push(Violation::DSquared {
                    from: c.generators[x].name.clone(),
                    to: c.generators[z].name.clone(),
                    upower: k,
                });
            }
        }
    }
    ValidationReport { violations: v }
}

pub(crate) fn ensure_valid(c: &CfkComplex) -> Result<()> {
    let r = validate(c);
    match r.violations.first() {
        None => Ok(()),
        Some(first) => Err(Error::InvalidComplex(format!(
            "{} violation(s), first: {}",
            r.violations.len(),
            serde_json::to_string(first).unwrap_or_default()
        ))),
    }
}

/// Index-based working copy: out[x] maps target index to U-power.
#[derive(Clone, Debug)]
pub(crate) struct Indexed {
    pub gens: Vec<CfkGenerator>,
    pub out: Vec<BTreeMap<usize, u32>>,
}

impl Indexed {
    pub fn from_complex(c: &CfkComplex) -> Self {
        let index: HashMap<&str, usize> =
            c.generators.iter().enumerate().map(|(i, g)| (g.name.as_str(), i)).collect();
        let mut out = vec![BTreeMap::new(); c.generators.len()];
        for t in &c.differential {
            out[index[t.from.as_str()]].insert(index[t.to.as_str()], t.upower);
        }
        Indexed { gens: c.generators.clone(), out }
    }
}

#[cfg(test)]
mod tests;
