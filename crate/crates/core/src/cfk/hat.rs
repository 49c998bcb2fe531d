use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{reduce, CfkComplex, CfkGenerator};
use crate::error::{Error, Result};
use crate::f2core::{kernel_basis, rank_of_bitrows, BitRow, SparseF2Matrix};
use crate::group::BigradedGroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VerticalTerm {
    pub from: String,
    pub to: String,
}

/// HFK-hat on a named basis together with the induced differential.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerticalComplex {
    pub generators: Vec<CfkGenerator>,
    pub differential: Vec<VerticalTerm>,
}

impl VerticalComplex {
    pub fn group(&self) -> BigradedGroup {
        BigradedGroup::from_ranks(self.generators.iter().map(|g| ((g.maslov, g.alexander), 1)))
    }

    fn check(&self) -> Result<HashMap<&str, usize>> {
        let mut index = HashMap::new();
        for (i, g) in self.generators.iter().enumerate() {
            if index.insert(g.name.as_str(), i).is_some() {
                return Err(Error::InvalidComplex(format!("duplicate generator {}", g.name)));
            }
        }
        let mut out: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.generators.len()];
        for t in &self.differential {
            let (Some(&f), Some(&to)) = (index.get(t.from.as_str()), index.get(t.to.as_str())) else {
                return Err(Error::InvalidComplex(format!("unknown generator in {t:?}")));
            };
            let (gf, gt) = (&self.generators[f], &self.generators[to]);
            if gt.alexander >= gf.alexander || gt.maslov != gf.maslov - 1 {
                return Err(Error::InvalidComplex(format!("bad vertical term {} -> {}", t.from, t.to)));
            }
            if !out[f].insert(to) {
                return Err(Error::InvalidComplex(format!("duplicate term {} -> {}", t.from, t.to)));
            }
        }
        for x in 0..out.len() {
            let mut acc: BTreeMap<usize, bool> = BTreeMap::new();
            for &y in &out[x] {
                for &z in &out[y] {
                    let e = acc.entry(z).or_insert(false);
                    *e = !*e;
                }
            }
            if acc.values().any(|&b| b) {
                return Err(Error::InvalidComplex("vertical differential does not square to zero".into()));
            }
        }
        Ok(index)
    }
}

/// Reduces, then keeps the U^0 terms as the vertical differential.
pub fn hat(c: &CfkComplex) -> Result<VerticalComplex> {
    let r = reduce(c)?;
    let differential = r
        .differential
        .iter()
        .filter(|t| t.upower == 0)
        .map(|t| VerticalTerm { from: t.from.clone(), to: t.to.clone() })
        .collect();
    Ok(VerticalComplex { generators: r.generators, differential })
}

/// Homology of the vertical complex, placed at the Alexander filtration
/// level where each class first appears.
///
/// For each Maslov grading m the rank at (m, a) is
/// dim im(H(F_a) -> H) - dim im(H(F_{a-1}) -> H), F_a being the span of
/// generators with Alexander grading at most a.
pub fn hat_homology(v: &VerticalComplex) -> Result<BigradedGroup> {
    let index = v.check()?;
    let mut by_m: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, g) in v.generators.iter().enumerate() {
        by_m.entry(g.maslov).or_default().push(i);
    }
    // position of each generator within its Maslov grading
    let mut pos = vec![0usize; v.generators.len()];
    for list in by_m.values_mut() {
        list.sort_by_key(|&i| (v.generators[i].alexander, i));
        for (p, &i) in list.iter().enumerate() {
            pos[i] = p;
        }
    }
    let mut out = BigradedGroup::new();
    for (&m, gens) in &by_m {
        let n = gens.len();
        // boundary vectors from Maslov m+1, expressed on the degree-m basis
        let mut bvec: BTreeMap<usize, BitRow> = BTreeMap::new();
        // columns of d: degree m -> degree m-1
        let below = by_m.get(&(m - 1)).map_or(0, |l| l.len());
        let mut dcols: Vec<Vec<usize>> = vec![Vec::new(); n];
        for t in &v.differential {
            let f = index[t.from.as_str()];
            let to = index[t.to.as_str()];
            if v.generators[f].maslov == m + 1 {
                bvec.entry(f).or_insert_with(|| BitRow::zeros(n)).flip(pos[to]);
            } else if v.generators[f].maslov == m {
                dcols[pos[f]].push(pos[to]);
            }
        }
        let boundaries: Vec<BitRow> = bvec.into_values().collect();
        let rank_b = rank_of_bitrows(&boundaries, n);

        let alexanders: BTreeSet<i64> = gens.iter().map(|&i| v.generators[i].alexander).collect();
        let mut prev = 0usize;
        for &a in &alexanders {
            // sublevel: first `k` basis elements (sorted by Alexander)
            let k = gens.iter().take_while(|&&i| v.generators[i].alexander <= a).count();
            let entries = (0..k).flat_map(|c| dcols[c].iter().map(move |&r| (r, c)));
            let d = SparseF2Matrix::from_entries(below, k, entries)
                .map_err(|e| Error::InvalidComplex(e.to_string()))?;
            let mut span: Vec<BitRow> = boundaries.clone();
            for z in kernel_basis(&d) {
                span.push(BitRow::from_support(n, &z.support()));
            }
            let im = rank_of_bitrows(&span, n) - rank_b;
            if im > prev {
                out.add(m, a, im - prev);
            }
            prev = im;
        }
    }
    Ok(out)
}
