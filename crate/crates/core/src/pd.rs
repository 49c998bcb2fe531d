//! Oriented planar diagrams in PD notation.
//!
//! A crossing `[a, b, c, d]` lists its edges counterclockwise starting from
//! the incoming under-strand: `a` enters under, `c` leaves under. The over
//! strand runs `d -> b` on a positive crossing and `b -> d` on a negative one.
//! A join `[e_in, e_out]` is a crossingless point where edge `e_in` ends and
//! `e_out` begins; `[e, e]` is a circle without crossings.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlanarDiagram {
    pub crossings: Vec<[u32; 4]>,
    pub signs: Vec<i8>,
    #[serde(default)]
    pub basepoints: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub joins: Vec<[u32; 2]>,
}

/// Where an edge ends or starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Crossing(usize, usize),
    Join(usize, usize),
}

/// Head (end) and tail (start) of every edge.
#[derive(Clone, Debug)]
pub struct Endpoints {
    pub head: BTreeMap<u32, Slot>,
    pub tail: BTreeMap<u32, Slot>,
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<[u32; 4]>, signs: Vec<i8>) -> Self {
        let basepoints = crossings.first().map(|c| vec![c[0]]).unwrap_or_default();
        PlanarDiagram { crossings, signs, basepoints, joins: Vec::new() }
    }

    /// Crossingless unknot.
    pub fn circle() -> Self {
        PlanarDiagram { crossings: vec![], signs: vec![], basepoints: vec![1], joins: vec![[1, 1]] }
    }

    /// Builds signs from labels running 1..2n along the orientation with
    /// each crossing's under-strand going i -> i+1.
    pub fn from_sequential(crossings: Vec<[u32; 4]>) -> Self {
        let signs = crossings
            .iter()
            .map(|&[_, j, _, l]| if j == l + 1 || l > j + 1 { 1 } else { -1 })
            .collect();
        Self::new(crossings, signs)
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn n_plus(&self) -> usize {
        self.signs.iter().filter(|&&s| s > 0).count()
    }

    pub fn n_minus(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn writhe(&self) -> i64 {
        self.n_plus() as i64 - self.n_minus() as i64
    }

    /// Slot index (0..4) where the over strand enters.
    pub fn over_in(&self, x: usize) -> usize {
        if self.signs[x] > 0 {
            3
        } else {
            1
        }
    }

    pub fn over_out(&self, x: usize) -> usize {
        if self.signs[x] > 0 {
            1
        } else {
            3
        }
    }

    pub fn edges(&self) -> BTreeSet<u32> {
        self.crossings.iter().flatten().chain(self.joins.iter().flatten()).copied().collect()
    }

    pub fn endpoints(&self) -> Result<Endpoints> {
        let bad = |m: String| Err(Error::InvalidDiagram(m));
        if self.signs.len() != self.crossings.len() {
            return bad(format!("{} crossings but {} signs", self.crossings.len(), self.signs.len()));
        }
        let mut head = BTreeMap::new();
        let mut tail = BTreeMap::new();
        let put = |map: &mut BTreeMap<u32, Slot>, e: u32, s: Slot, what: &str| {
            if e == 0 {
                return Err(Error::InvalidDiagram("edge labels must be positive".into()));
            }
            if map.insert(e, s).is_some() {
                return Err(Error::InvalidDiagram(format!("edge {e} has two {what}s")));
            }
            Ok(())
        };
        for (x, c) in self.crossings.iter().enumerate() {
            if self.signs[x] != 1 && self.signs[x] != -1 {
                return bad(format!("sign {} at crossing {x}", self.signs[x]));
            }
            put(&mut head, c[0], Slot::Crossing(x, 0), "head")?;
            put(&mut tail, c[2], Slot::Crossing(x, 2), "tail")?;
            put(&mut head, c[self.over_in(x)], Slot::Crossing(x, self.over_in(x)), "head")?;
            put(&mut tail, c[self.over_out(x)], Slot::Crossing(x, self.over_out(x)), "tail")?;
        }
        for (j, &[ein, eout]) in self.joins.iter().enumerate() {
            put(&mut head, ein, Slot::Join(j, 0), "head")?;
            put(&mut tail, eout, Slot::Join(j, 1), "tail")?;
        }
        let hs: BTreeSet<u32> = head.keys().copied().collect();
        let ts: BTreeSet<u32> = tail.keys().copied().collect();
        if hs != ts {
            let e = hs.symmetric_difference(&ts).next().copied().unwrap_or(0);
            return bad(format!("edge {e} is not oriented consistently"));
        }
        Ok(Endpoints { head, tail })
    }

    /// Checks edge bookkeeping, orientation and basepoints.
    pub fn validate(&self) -> Result<()> {
        let ends = self.endpoints()?;
        for b in &self.basepoints {
            if !ends.head.contains_key(b) {
                return Err(Error::InvalidDiagram(format!("basepoint on unknown edge {b}")));
            }
        }
        Ok(())
    }

    /// The edge that follows `e` along the orientation.
    pub fn next_edge(&self, ends: &Endpoints, e: u32) -> u32 {
        match ends.head[&e] {
            Slot::Crossing(x, 0) => self.crossings[x][2],
            Slot::Crossing(x, _) => self.crossings[x][self.over_out(x)],
            Slot::Join(j, _) => self.joins[j][1],
        }
    }

    /// Edge cycles of the link components, each starting at its least edge.
    pub fn components(&self) -> Result<Vec<Vec<u32>>> {
        let ends = self.endpoints()?;
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for &e in ends.head.keys() {
            if seen.contains(&e) {
                continue;
            }
            let mut comp = vec![e];
            seen.insert(e);
            let mut cur = self.next_edge(&ends, e);
            while cur != e {
                seen.insert(cur);
                comp.push(cur);
                cur = self.next_edge(&ends, cur);
            }
            comps.push(comp);
        }
        Ok(comps)
    }

    pub fn is_knot(&self) -> Result<bool> {
        Ok(self.components()?.len() == 1)
    }

    /// Relabels edges 1..E in order of first appearance along the
    /// components, keeping basepoints attached to their edges.
    pub fn relabeled(&self) -> Result<PlanarDiagram> {
        let comps = self.components()?;
        let mut map = BTreeMap::new();
        for comp in &comps {
            for &e in comp {
                let next = map.len() as u32 + 1;
                map.entry(e).or_insert(next);
            }
        }
        Ok(self.map_edges(|e| map[&e]))
    }

    pub fn map_edges(&self, f: impl Fn(u32) -> u32) -> PlanarDiagram {
        PlanarDiagram {
            crossings: self.crossings.iter().map(|c| c.map(&f)).collect(),
            signs: self.signs.clone(),
            basepoints: self.basepoints.iter().map(|&b| f(b)).collect(),
            joins: self.joins.iter().map(|j| j.map(&f)).collect(),
        }
    }

    pub fn max_label(&self) -> u32 {
        self.edges().into_iter().max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let d: PlanarDiagram = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }
}

/// Closure of a braid on `strands` strands. Generator `k > 0` is sigma_k
/// (positive crossing between positions k and k+1), `-k` its inverse.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<PlanarDiagram> {
    let mut next = strands as u32 + 1;
    let mut cur: Vec<u32> = (1..=strands as u32).collect();
    let mut crossings = Vec::new();
    let mut signs = Vec::new();
    for &g in word {
        let k = g.unsigned_abs() as usize;
        if k == 0 || k >= strands {
            return Err(Error::InvalidDiagram(format!("braid generator {g} on {strands} strands")));
        }
        let (li, ri) = (cur[k - 1], cur[k]);
        let (lo, ro) = (next, next + 1);
        next += 2;
        // left strand moves right and vice versa
        if g > 0 {
            crossings.push([ri, ro, lo, li]);
            signs.push(1);
        } else {
            crossings.push([li, ri, ro, lo]);
            signs.push(-1);
        }
        cur[k - 1] = lo;
        cur[k] = ro;
    }
    // close up: the final label on each position is the initial one
    let mut rename: BTreeMap<u32, u32> = BTreeMap::new();
    let mut joins = Vec::new();
    for (p, &e) in cur.iter().enumerate() {
        let start = p as u32 + 1;
        if e == start {
            joins.push([e, e]);
        } else {
            rename.insert(e, start);
        }
    }
    let f = |e: u32| rename.get(&e).copied().unwrap_or(e);
    let d = PlanarDiagram {
        crossings: crossings.iter().map(|c| c.map(f)).collect(),
        signs,
        basepoints: vec![1],
        joins,
    };
    d.relabeled()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kink_and_circle() {
        let kink = PlanarDiagram::new(vec![[1, 1, 2, 2]], vec![1]);
        kink.validate().unwrap();
        assert!(kink.is_knot().unwrap());
        assert!(PlanarDiagram::circle().is_knot().unwrap());
        let bad = PlanarDiagram::new(vec![[1, 1, 2, 2]], vec![-1]);
        assert!(bad.validate().is_err());
    }

    #[test]
    fn braids() {
        let t = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(t.n_plus(), 3);
        assert!(t.is_knot().unwrap());
        let f8 = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        assert!(f8.is_knot().unwrap());
        assert_eq!(f8.writhe(), 0);
        let unlink = braid_closure(2, &[]).unwrap();
        assert_eq!(unlink.components().unwrap().len(), 2);
        let t34 = braid_closure(3, &[1, 2, 1, 2, 1, 2, 1, 2]).unwrap();
        assert!(t34.is_knot().unwrap());
    }

    #[test]
    fn sequential_signs() {
        // trefoil from a standard table: all crossings of one sign
        let t = PlanarDiagram::from_sequential(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]);
        t.validate().unwrap();
        assert!(t.signs.iter().all(|&s| s == t.signs[0]));
    }
}
