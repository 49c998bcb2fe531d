use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{GridDiagram, DEFAULT_MAX_GRID, HARD_MAX_GRID};
use crate::error::{Error, Result};
use crate::f2core::rank_of_rows;
use crate::group::{euler_characteristic, BigradedGroup};
use crate::laurent::LaurentPoly;

/// #{(p, q) : p in a, q in b, p < q in both coordinates}; doubled coordinates.
fn count_below(a: &[(i64, i64)], b: &[(i64, i64)]) -> i64 {
    let mut n = 0;
    for p in a {
        for q in b {
            if p.0 < q.0 && p.1 < q.1 {
                n += 1;
            }
        }
    }
    n
}

fn markings(v: &[usize]) -> Vec<(i64, i64)> {
    v.iter().enumerate().map(|(c, &r)| (2 * c as i64 + 1, 2 * r as i64 + 1)).collect()
}

struct Gradings {
    os: Vec<(i64, i64)>,
    xs: Vec<(i64, i64)>,
    oo: i64,
    xx: i64,
    n: i64,
}

impl Gradings {
    fn new(g: &GridDiagram) -> Self {
        let os = markings(&g.os);
        let xs = markings(&g.xs);
        let oo = count_below(&os, &os);
        let xx = count_below(&xs, &xs);
        Gradings { os, xs, oo, xx, n: g.size as i64 }
    }

    /// (Maslov, Alexander) of the generator `perm` (column -> row).
    fn of(&self, perm: &[u8]) -> (i64, i64) {
        let pts: Vec<(i64, i64)> = perm.iter().enumerate().map(|(i, &r)| (2 * i as i64, 2 * r as i64)).collect();
        let pp = count_below(&pts, &pts);
        let mo = pp - count_below(&pts, &self.os) - count_below(&self.os, &pts) + self.oo + 1;
        let mx = pp - count_below(&pts, &self.xs) - count_below(&self.xs, &pts) + self.xx + 1;
        (mo, (mo - mx - (self.n - 1)) / 2)
    }
}

/// Lexicographic rank of a permutation.
fn perm_rank(p: &[u8], fact: &[usize]) -> usize {
    let n = p.len();
    let mut r = 0;
    let mut used = 0u32;
    for (i, &v) in p.iter().enumerate() {
        let smaller = (used & ((1u32 << v) - 1)).count_ones() as usize;
        r += (v as usize - smaller) * fact[n - 1 - i];
        used |= 1 << v;
    }
    r
}

fn next_perm(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else { return false };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// `blocked[((i * n + j) * n + r0) * n + r1]`: the rectangle with columns
/// [i, j) and rows [r0, r1) (cyclic) contains a marking.
fn blocked_table(g: &GridDiagram) -> Vec<bool> {
    let n = g.size;
    let mut t = vec![false; n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let w = (j + n - i) % n;
            for r0 in 0..n {
                for r1 in 0..n {
                    if r0 == r1 {
                        continue;
                    }
                    let h = (r1 + n - r0) % n;
                    let hit = (0..w).any(|k| {
                        let c = (i + k) % n;
                        (g.xs[c] + n - r0) % n < h || (g.os[c] + n - r0) % n < h
                    });
                    t[((i * n + j) * n + r0) * n + r1] = hit;
                }
            }
        }
    }
    t
}

/// Targets of the empty, marking-free rectangles out of `x`.
fn rectangles(x: &[u8], blocked: &[bool], out: &mut Vec<(usize, usize)>) {
    let n = x.len();
    out.clear();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (r0, r1) = (x[i] as usize, x[j] as usize);
            if blocked[((i * n + j) * n + r0) * n + r1] {
                continue;
            }
            let w = (j + n - i) % n;
            let h = (r1 + n - r0) % n;
            let empty = (1..w).all(|k| {
                let c = (i + k) % n;
                let dr = (x[c] as usize + n - r0) % n;
                dr == 0 || dr >= h
            });
            if empty {
                out.push((i, j));
            }
        }
    }
}

fn check_size(g: &GridDiagram, bound: usize) -> Result<()> {
    let bound = bound.min(HARD_MAX_GRID);
    if g.size > bound {
        return Err(Error::GridTooLarge { size: g.size, bound });
    }
    Ok(())
}

/// Homology of the fully blocked grid complex, before removing V factors.
pub fn grid_tilde_homology(g: &GridDiagram, bound: usize) -> Result<BigradedGroup> {
    g.check_knot()?;
    check_size(g, bound)?;
    let n = g.size;
    let gr = Gradings::new(g);
    let mut fact = vec![1usize; n + 1];
    for k in 1..=n {
        fact[k] = fact[k - 1] * k;
    }
    // bucket every generator by grading
    let mut slot: Vec<(u32, u32)> = vec![(0, 0); fact[n]];
    let mut buckets: BTreeMap<(i64, i64), Vec<Vec<u8>>> = BTreeMap::new();
    let mut p: Vec<u8> = (0..n as u8).collect();
    let mut idx = 0usize;
    let mut keys: Vec<(i64, i64)> = Vec::new();
    let mut key_of: BTreeMap<(i64, i64), u32> = BTreeMap::new();
    loop {
        let gd = gr.of(&p);
        let k = *key_of.entry(gd).or_insert_with(|| {
            keys.push(gd);
            keys.len() as u32 - 1
        });
        let b = buckets.entry(gd).or_default();
        slot[idx] = (k, b.len() as u32);
        b.push(p.clone());
        idx += 1;
        if !next_perm(&mut p) {
            break;
        }
    }
    let blocked = blocked_table(g);
    let sizes: BTreeMap<(i64, i64), usize> = buckets.iter().map(|(k, v)| (*k, v.len())).collect();
    // rank of the differential leaving each bucket
    let ranks: BTreeMap<(i64, i64), usize> = buckets
        .par_iter()
        .map(|(&(m, a), gens)| {
            let Some(&ncols) = sizes.get(&(m - 1, a)) else { return Ok(((m, a), 0)) };
            let mut rows = Vec::with_capacity(gens.len());
            let mut rects = Vec::new();
            let mut y = vec![0u8; n];
            for x in gens {
                rectangles(x, &blocked, &mut rects);
                let mut row: Vec<u32> = Vec::with_capacity(rects.len());
                for &(i, j) in &rects {
                    y.copy_from_slice(x);
                    y.swap(i, j);
                    let (k, local) = slot[perm_rank(&y, &fact)];
                    if keys[k as usize] != (m - 1, a) {
                        return Err(Error::FactorizationFailure(format!(
                            "rectangle from grading {:?} lands in {:?}",
                            (m, a),
                            keys[k as usize]
                        )));
                    }
                    row.push(local);
                }
                row.sort_unstable();
                let mut dedup: Vec<u32> = Vec::with_capacity(row.len());
                for c in row {
                    if dedup.last() == Some(&c) {
                        dedup.pop();
                    } else {
                        dedup.push(c);
                    }
                }
                rows.push(dedup);
            }
            Ok(((m, a), rank_of_rows(&rows, ncols)))
        })
        .collect::<Result<_>>()?;
    let mut h = BigradedGroup::new();
    for (&(m, a), &size) in &sizes {
        let out = ranks[&(m, a)];
        let inc = ranks.get(&(m + 1, a)).copied().unwrap_or(0);
        let r = size - out - inc;
        if r > 0 {
            h.add(m, a, r);
        }
    }
    Ok(h)
}

/// Divides a rank table by V^k with V = F(0,0) + F(-1,-1).
fn divide_v(p: &BigradedGroup, k: usize) -> Result<BigradedGroup> {
    let mut cur: BTreeMap<(i64, i64), i64> = p.iter().map(|(g, r)| (g, r as i64)).collect();
    for _ in 0..k {
        let mut q: BTreeMap<(i64, i64), i64> = BTreeMap::new();
        // descending Maslov grading: q(m, a) = p(m, a) - q(m + 1, a + 1)
        for (&(m, a), &v) in cur.iter().rev() {
            let above = q.get(&(m + 1, a + 1)).copied().unwrap_or(0);
            let val = v - above;
            if val < 0 {
                return Err(Error::FactorizationFailure(format!("negative rank at {:?}", (m, a))));
            }
            if val > 0 {
                q.insert((m, a), val);
            }
        }
        // q * V must reproduce p exactly
        let mut back: BTreeMap<(i64, i64), i64> = BTreeMap::new();
        for (&(m, a), &v) in &q {
            *back.entry((m, a)).or_default() += v;
            *back.entry((m - 1, a - 1)).or_default() += v;
        }
        if back != cur {
            return Err(Error::FactorizationFailure("residual after dividing by V".into()));
        }
        cur = q;
    }
    Ok(BigradedGroup::from_ranks(cur.into_iter().map(|(g, v)| (g, v as usize))))
}

/// HFK-hat ranks with an explicit grid size bound (at most 12).
pub fn grid_hfk_bounded(g: &GridDiagram, bound: usize) -> Result<BigradedGroup> {
    let tilde = grid_tilde_homology(g, bound)?;
    divide_v(&tilde, g.size - 1)
}

/// HFK-hat ranks of a knot grid of size at most 9.
pub fn grid_hfk(g: &GridDiagram) -> Result<BigradedGroup> {
    grid_hfk_bounded(g, DEFAULT_MAX_GRID)
}

pub fn alexander_from_grid(g: &GridDiagram) -> Result<LaurentPoly> {
    Ok(euler_characteristic(&grid_hfk(g)?))
}
