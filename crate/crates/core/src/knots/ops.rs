use crate::error::{Error, Result};
use crate::pd::{PlanarDiagram, Slot};

/// Flips every crossing.
pub fn mirror(d: &PlanarDiagram) -> PlanarDiagram {
    let mut out = d.clone();
    for (x, c) in out.crossings.iter_mut().enumerate() {
        let [a, b, cc, dd] = *c;
        *c = if d.signs[x] > 0 { [dd, a, b, cc] } else { [b, cc, dd, a] };
        out.signs[x] = -d.signs[x];
    }
    out
}

/// Reverses the orientation of every edge.
pub fn reverse(d: &PlanarDiagram) -> PlanarDiagram {
    let mut out = d.clone();
    for c in out.crossings.iter_mut() {
        let [a, b, cc, dd] = *c;
        *c = [cc, dd, a, b];
    }
    for j in out.joins.iter_mut() {
        j.swap(0, 1);
    }
    out
}

fn set_head(d: &mut PlanarDiagram, slot: Slot, e: u32) {
    match slot {
        Slot::Crossing(x, p) => d.crossings[x][p] = e,
        Slot::Join(j, p) => d.joins[j][p] = e,
    }
}

/// Connected sum spliced at the first basepoint of each diagram.
pub fn connected_sum(d1: &PlanarDiagram, d2: &PlanarDiagram) -> Result<PlanarDiagram> {
    for d in [d1, d2] {
        if !d.is_knot()? {
            return Err(Error::NotAKnot("connected sum of a link".into()));
        }
    }
    let (Some(&e1), Some(&b2)) = (d1.basepoints.first(), d2.basepoints.first()) else {
        return Err(Error::NoBasepoint);
    };
    let off = d1.max_label();
    let d2 = d2.map_edges(|e| e + off);
    let e2 = b2 + off;
    let h1 = d1.endpoints()?.head[&e1];
    let h2 = d2.endpoints()?.head[&e2];
    let mut out = PlanarDiagram {
        crossings: d1.crossings.iter().chain(&d2.crossings).copied().collect(),
        signs: d1.signs.iter().chain(&d2.signs).copied().collect(),
        basepoints: vec![e1],
        joins: d1.joins.iter().chain(&d2.joins).copied().collect(),
    };
    let shift = |s: Slot| match s {
        Slot::Crossing(x, p) => Slot::Crossing(x + d1.crossings.len(), p),
        Slot::Join(j, p) => Slot::Join(j + d1.joins.len(), p),
    };
    set_head(&mut out, h1, e2);
    set_head(&mut out, shift(h2), e1);
    // drop crossingless circles that became plain joins inside a longer knot
    simplify_joins(&mut out);
    out.relabeled()
}

/// Removes joins `[a, b]` with `a != b` by merging the two edge labels.
pub fn simplify_joins(d: &mut PlanarDiagram) {
    while let Some(pos) = d.joins.iter().position(|j| j[0] != j[1]) {
        let [a, b] = d.joins.remove(pos);
        let f = |e: u32| if e == b { a } else { e };
        *d = d.map_edges(f);
    }
}
