//! Cancellation over F2[h] at h = 1, ordered by the power of h.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Filtered, KhGroup};

/// Pages E1, E2, ... of Turner's spectral sequence, ending with E-infinity.
/// `collapse_page` is the last page carrying a nonzero differential (1 if
/// there is none); `survivor` is (delta, q) of the generator left at the end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsPages {
    pub pages: Vec<KhGroup>,
    pub collapse_page: usize,
    pub survivor: (i64, i64),
}

struct Work {
    gens: Vec<(i64, i64)>,
    alive: Vec<bool>,
    out: Vec<BTreeSet<usize>>,
    inc: Vec<BTreeSet<usize>>,
}

impl Work {
    fn new(f: &Filtered) -> Work {
        let n = f.gens.len();
        let mut w = Work { gens: f.gens.clone(), alive: vec![true; n], out: vec![BTreeSet::new(); n], inc: vec![BTreeSet::new(); n] };
        for &(a, b) in &f.arrows {
            w.toggle(a, b);
        }
        w
    }

    fn jump(&self, a: usize, b: usize) -> i64 {
        (self.gens[b].1 - self.gens[a].1) / 2
    }

    fn toggle(&mut self, a: usize, b: usize) {
        if !self.out[a].remove(&b) {
            self.out[a].insert(b);
            self.inc[b].insert(a);
        } else {
            self.inc[b].remove(&a);
        }
    }

    /// Cancels a -> b; returns the new arrows created.
    fn cancel(&mut self, a: usize, b: usize) -> Vec<(usize, usize)> {
        let xs: Vec<usize> = self.inc[b].iter().copied().filter(|&x| x != a).collect();
        let ys: Vec<usize> = self.out[a].iter().copied().filter(|&y| y != b).collect();
        let mut touched = Vec::new();
        for &x in &xs {
            for &y in &ys {
                self.toggle(x, y);
                touched.push((x, y));
            }
        }
        for v in [a, b] {
            for y in std::mem::take(&mut self.out[v]) {
                self.inc[y].remove(&v);
            }
            for x in std::mem::take(&mut self.inc[v]) {
                self.out[x].remove(&v);
            }
            self.alive[v] = false;
        }
        touched
    }

    /// Cancels every arrow of jump `k`; true if any was cancelled.
    fn level(&mut self, k: i64) -> bool {
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for a in 0..self.gens.len() {
            for &b in &self.out[a] {
                if self.jump(a, b) == k {
                    stack.push((a, b));
                }
            }
        }
        let mut any = false;
        while let Some((a, b)) = stack.pop() {
            if !self.alive[a] || !self.alive[b] || !self.out[a].contains(&b) {
                continue;
            }
            any = true;
            for (x, y) in self.cancel(a, b) {
                if self.out[x].contains(&y) && self.jump(x, y) == k {
                    stack.push((x, y));
                }
            }
        }
        any
    }

    fn has_arrows(&self) -> bool {
        self.out.iter().any(|s| !s.is_empty())
    }

    fn group(&self) -> KhGroup {
        let mut g = KhGroup::new();
        for (i, &(u, j)) in self.gens.iter().enumerate() {
            if self.alive[i] {
                let q = j.div_euclid(2);
                g.add(u - q, q, 1);
            }
        }
        g
    }
}

pub(crate) fn pages(f: &Filtered, first_only: bool) -> SsPages {
    let mut w = Work::new(f);
    w.level(0);
    let mut pages = vec![w.group()];
    let mut collapse = 1;
    let mut k = 1;
    while !first_only && w.has_arrows() {
        if w.level(k) {
            collapse = k as usize;
        }
        pages.push(w.group());
        k += 1;
    }
    if pages.len() > 1 {
        pages.truncate(collapse + 1);
    }
    let last = w.group();
    let survivor = last.iter().next().map(|(g, _)| g).unwrap_or((0, 0));
    SsPages { pages, collapse_page: collapse, survivor }
}

/// Homology at h = 0 keyed by doubled (delta, q).
pub(crate) fn first_page_doubled(f: &Filtered) -> BTreeMap<(i64, i64), usize> {
    let mut w = Work::new(f);
    w.level(0);
    let mut out = BTreeMap::new();
    for (i, &(u, j)) in w.gens.iter().enumerate() {
        if w.alive[i] {
            *out.entry((2 * u - j, j)).or_insert(0) += 1;
        }
    }
    out
}
