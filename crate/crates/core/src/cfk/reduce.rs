use std::collections::{BTreeMap, BTreeSet};

use super::{ensure_valid, CfkComplex, CfkTerm, Indexed};
use crate::error::{Error, Result};

/// Cancels every differential term that stays in its lattice point
/// (U-power 0, equal Alexander grading) until none is left.
///
/// The term canceled next is the least by (alexander, maslov of source,
/// source name, target name).
pub fn reduce(c: &CfkComplex) -> Result<CfkComplex> {
    ensure_valid(c)?;
    let Indexed { gens, mut out } = Indexed::from_complex(c);
    let n = gens.len();
    let mut inc: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (x, m) in out.iter().enumerate() {
        for &y in m.keys() {
            inc[y].insert(x);
        }
    }
    let mut alive = vec![true; n];

    let key = |x: usize, y: usize| {
        (gens[x].alexander, gens[x].maslov, gens[x].name.clone(), gens[y].name.clone())
    };
    let is_candidate =
        |x: usize, y: usize, k: u32| k == 0 && gens[x].alexander == gens[y].alexander;

    let mut cands: BTreeSet<(i64, i64, String, String, usize, usize)> = BTreeSet::new();
    for (x, m) in out.iter().enumerate() {
        for (&y, &k) in m {
            if is_candidate(x, y, k) {
                let (a, mm, nx, ny) = key(x, y);
                cands.insert((a, mm, nx, ny, x, y));
            }
        }
    }

    while let Some(top) = cands.pop_first() {
        let (x, y) = (top.4, top.5);
        if !alive[x] || !alive[y] || out[x].get(&y) != Some(&0) {
            continue;
        }
        let sources: Vec<(usize, u32)> =
            inc[y].iter().filter(|&&w| w != x).map(|&w| (w, out[w][&y])).collect();
        let targets: Vec<(usize, u32)> =
            out[x].iter().filter(|(&z, _)| z != y).map(|(&z, &k)| (z, k)).collect();
        // remove x and y
        for v in [x, y] {
            alive[v] = false;
            let outs: Vec<usize> = out[v].keys().copied().collect();
            for z in outs {
                inc[z].remove(&v);
            }
            out[v].clear();
            let ins: Vec<usize> = inc[v].iter().copied().collect();
            for w in ins {
                out[w].remove(&v);
            }
            inc[v].clear();
        }
        for &(w, p) in &sources {
            for &(z, r) in &targets {
                let k = p.checked_add(r).ok_or(Error::Overflow("U power"))?;
                match out[w].get(&z) {
                    Some(&old) => {
                        debug_assert_eq!(old, k);
                        out[w].remove(&z);
                        inc[z].remove(&w);
                    }
                    None => {
                        out[w].insert(z, k);
                        inc[z].insert(w);
                        if is_candidate(w, z, k) {
                            let (a, mm, nw, nz) = key(w, z);
                            cands.insert((a, mm, nw, nz, w, z));
                        }
                    }
                }
            }
        }
    }

    let generators: Vec<_> = (0..n).filter(|&i| alive[i]).map(|i| gens[i].clone()).collect();
    let mut differential = Vec::new();
    for x in 0..n {
        if !alive[x] {
            continue;
        }
        let m: &BTreeMap<usize, u32> = &out[x];
        for (&y, &k) in m {
            differential.push(CfkTerm { from: gens[x].name.clone(), to: gens[y].name.clone(), upower: k });
        }
    }
    Ok(CfkComplex { generators, differential })
}
