use super::{inverse, GridDiagram};
use crate::error::Result;
use crate::pd::PlanarDiagram;

struct Passage {
    crossing: (usize, usize),
    over: bool,
    /// east for horizontal, north for vertical
    positive_dir: bool,
}

/// Planar diagram of a knot grid.
pub fn grid_to_pd(g: &GridDiagram) -> Result<PlanarDiagram> {
    g.check_knot()?;
    let xinv = inverse(&g.xs);
    let oinv = inverse(&g.os);
    let between = |p: usize, a: usize, b: usize| a.min(b) < p && p < a.max(b);
    // crossing at (column c, row r)
    let crosses = |c: usize, r: usize| between(r, g.xs[c], g.os[c]) && between(c, oinv[r], xinv[r]);
    let mut passages: Vec<Passage> = Vec::new();
    let mut c = 0;
    loop {
        // vertical from X to O in column c
        let (r0, r1) = (g.xs[c], g.os[c]);
        let north = r1 > r0;
        let rows: Vec<usize> =
            if north { (r0 + 1..r1).collect() } else { (r1 + 1..r0).rev().collect() };
        for r in rows {
            if crosses(c, r) {
                passages.push(Passage { crossing: (c, r), over: true, positive_dir: north });
            }
        }
        // horizontal from O to X in row r1
        let c1 = xinv[r1];
        let east = c1 > c;
        let cols: Vec<usize> = if east { (c + 1..c1).collect() } else { (c1 + 1..c).rev().collect() };
        for k in cols {
            if crosses(k, r1) {
                passages.push(Passage { crossing: (k, r1), over: false, positive_dir: east });
            }
        }
        c = c1;
        if c == 0 {
            break;
        }
    }
    if passages.is_empty() {
        return Ok(PlanarDiagram::circle());
    }
    let total = passages.len() as u32;
    let e_in = |p: usize| if p == 0 { total } else { p as u32 };
    let e_out = |p: usize| p as u32 + 1;
    let mut crossings = Vec::new();
    let mut signs = Vec::new();
    for (p, under) in passages.iter().enumerate() {
        if under.over {
            continue;
        }
        let q = passages
            .iter()
            .position(|o| o.over && o.crossing == under.crossing)
            .expect("every crossing has an over passage");
        let north = passages[q].positive_dir;
        let (s, nn) = if north { (e_in(q), e_out(q)) } else { (e_out(q), e_in(q)) };
        let (entry, sign) = if under.positive_dir {
            ([e_in(p), s, e_out(p), nn], if north { -1 } else { 1 })
        } else {
            ([e_in(p), nn, e_out(p), s], if north { 1 } else { -1 })
        };
        crossings.push(entry);
        signs.push(sign);
    }
    let d = PlanarDiagram { crossings, signs, basepoints: vec![1], joins: vec![] };
    d.relabeled()
}
