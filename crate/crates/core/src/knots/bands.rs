//! Faces of a planar diagram and full twists inserted between two strands
//! on a common face.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::ops::reverse;
use crate::error::{Error, Result};
use crate::pd::{PlanarDiagram, Slot};

/// Faces as cycles of (edge, forward): the face lies to the left of the
/// edge when it is traversed forward, to the right otherwise.
pub fn faces(d: &PlanarDiagram) -> Result<Vec<Vec<(u32, bool)>>> {
    let ends = d.endpoints()?;
    let leave = |s: Slot| -> (u32, bool) {
        match s {
            Slot::Crossing(x, p) => {
                let e = d.crossings[x][p];
                (e, ends.tail[&e] == Slot::Crossing(x, p))
            }
            Slot::Join(j, p) => (d.joins[j][p], p == 1),
        }
    };
    let step = |(e, fwd): (u32, bool)| -> (u32, bool) {
        let arrive = if fwd { ends.head[&e] } else { ends.tail[&e] };
        match arrive {
            // turning left from slot p leaves through the clockwise neighbour
            Slot::Crossing(x, p) => leave(Slot::Crossing(x, (p + 3) % 4)),
            Slot::Join(j, p) => leave(Slot::Join(j, 1 - p)),
        }
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &e in ends.head.keys() {
        for fwd in [true, false] {
            if seen.contains(&(e, fwd)) {
                continue;
            }
            let mut face = vec![(e, fwd)];
            seen.insert((e, fwd));
            let mut cur = step((e, fwd));
            while cur != (e, fwd) {
                seen.insert(cur);
                face.push(cur);
                cur = step(cur);
            }
            out.push(face);
        }
    }
    Ok(out)
}

/// Pairs of distinct edges on a common face, both bounding it from the same
/// side: the strands run antiparallel across the face.
pub fn band_sites(d: &PlanarDiagram) -> Result<Vec<[u32; 2]>> {
    let mut out = BTreeSet::new();
    for f in faces(d)? {
        for (i, &(a, fa)) in f.iter().enumerate() {
            for &(b, fb) in &f[i + 1..] {
                if a != b && fa == fb {
                    out.insert([a.min(b), a.max(b)]);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Sites reachable from `site` by sliding along the band: past a strand
/// that crosses both edges on the same side, or through a half twist.
pub fn band_class(d: &PlanarDiagram, site: [u32; 2]) -> Result<BTreeSet<[u32; 2]>> {
    let ends = d.endpoints()?;
    let prev: std::collections::BTreeMap<u32, u32> =
        ends.head.keys().map(|&e| (d.next_edge(&ends, e), e)).collect();
    let next = |e: u32| d.next_edge(&ends, e);
    let sites: BTreeSet<[u32; 2]> = band_sites(d)?.into_iter().collect();
    let norm = |a: u32, b: u32| [a.min(b), a.max(b)];
    // (crossing, over?) where the edge ends or starts
    let at = |s: Slot| match s {
        Slot::Crossing(x, p) => Some((x, p % 2 == 1)),
        Slot::Join(..) => None,
    };
    let mut seen = BTreeSet::from([norm(site[0], site[1])]);
    let mut stack = vec![(site[0], site[1])];
    while let Some((a, b)) = stack.pop() {
        for (a, b) in [(a, b), (b, a)] {
            // move forward along a and backward along b
            let (na, pb) = (next(a), prev[&b]);
            let (xa, xb) = (at(ends.head[&a]), at(ends.tail[&b]));
            let slides = match (xa, xb) {
                (None, None) => true,
                (Some((x, _)), Some((y, _))) if x == y => true,
                (Some((x, oa)), Some((y, ob))) if oa == ob => {
                    // a strand running straight from one crossing to the other
                    let cx = d.crossings[x];
                    let cy = d.crossings[y];
                    cx.iter().any(|e| *e != a && *e != na && cy.contains(e) && *e != b && *e != pb)
                }
                _ => false,
            };
            let n = norm(na, pb);
            if slides && sites.contains(&n) && seen.insert(n) {
                stack.push((na, pb));
            }
        }
    }
    Ok(seen)
}

/// Side of the common face for a site: Some(true) when both edges have it
/// on their left.
fn site_side(d: &PlanarDiagram, site: [u32; 2]) -> Result<Option<bool>> {
    for f in faces(d)? {
        for fwd in [true, false] {
            if f.contains(&(site[0], fwd)) && f.contains(&(site[1], fwd)) {
                return Ok(Some(fwd));
            }
        }
    }
    Ok(None)
}

/// Crosses the strands of a left site twice. `over` says whether the first
/// edge of the site passes over at each of the two crossings; returns the
/// diagram and the continuation of the first edge.
fn cross_twice(d: &mut PlanarDiagram, [b, t]: [u32; 2], over: [bool; 2]) -> u32 {
    let ends = d.endpoints().expect("valid diagram");
    let m = d.max_label();
    let (b_out, b_mid, t_mid, t_out) = (m + 1, m + 2, m + 3, m + 4);
    for (e, l) in [(b, b_out), (t, t_out)] {
        match ends.head[&e] {
            Slot::Crossing(x, p) => d.crossings[x][p] = l,
            Slot::Join(j, p) => d.joins[j][p] = l,
        }
    }
    let (x1, s1) = if over[0] { ([t_mid, b_mid, t_out, b], 1) } else { ([b, t_mid, b_mid, t_out], -1) };
    let (x2, s2) = if over[1] { ([t, b_mid, t_mid, b_out], -1) } else { ([b_mid, t_mid, b_out, t], 1) };
    d.crossings.extend([x1, x2]);
    d.signs.extend([s1, s2]);
    b_out
}

/// Inserts `count` full twists of crossing sign `sign` between the edges of
/// `site`, which must both have a common face on their left.
fn twist_left(d: &PlanarDiagram, site: [u32; 2], count: usize, sign: i8) -> PlanarDiagram {
    let mut d = d.clone();
    let [mut b, t] = site;
    for _ in 0..count {
        b = cross_twice(&mut d, [b, t], [sign > 0, sign < 0]);
    }
    d
}

/// Pushes the first edge of a left site across the second (a Reidemeister
/// II move), over or under.
#[cfg(test)]
pub(crate) fn clasp(d: &PlanarDiagram, site: [u32; 2], over: bool) -> Result<PlanarDiagram> {
    let Some(left) = site_side(d, site)? else {
        return Err(Error::InvalidDiagram("not a site".into()));
    };
    Ok(if left {
        let mut d = d.clone();
        cross_twice(&mut d, site, [over, over]);
        d
    } else {
        let mut r = reverse(d);
        cross_twice(&mut r, site, [over, over]);
        reverse(&r)
    })
}

/// Inserts `twists` full twists at `site`; each positive twist adds two
/// negative crossings.
pub fn insert_twists(d: &PlanarDiagram, site: [u32; 2], twists: i64) -> Result<PlanarDiagram> {
    let Some(left) = site_side(d, site)? else {
        return Err(Error::InvalidDiagram(format!("edges {} and {} do not form a twist site", site[0], site[1])));
    };
    if twists == 0 {
        return Ok(d.clone());
    }
    let sign = if twists > 0 { -1 } else { 1 };
    let n = twists.unsigned_abs() as usize;
    Ok(if left {
        twist_left(d, site, n, sign)
    } else {
        reverse(&twist_left(&reverse(d), site, n, sign))
    })
}

/// Where `site` of `before` sits in `after`, a diagram obtained from
/// `before` by inserting twists elsewhere: an edge that was split is
/// replaced by whichever of its pieces still bounds the common face.
pub(crate) fn relocate(before: &PlanarDiagram, after: &PlanarDiagram, site: [u32; 2]) -> Result<[u32; 2]> {
    let eb = before.endpoints()?;
    let ea = after.endpoints()?;
    let pieces = |e: u32| -> Vec<u32> {
        let mut v = vec![e];
        let mut cur = e;
        // follow new edges until reaching the old head slot
        while ea.head[&cur] != eb.head[&e] {
            cur = after.next_edge(&ea, cur);
            v.push(cur);
            if v.len() > after.edges().len() {
                break;
            }
        }
        v
    };
    for a in pieces(site[0]) {
        for b in pieces(site[1]) {
            if site_side(after, [a, b])?.is_some() {
                return Ok([a, b]);
            }
        }
    }
    Err(Error::InvalidDiagram(format!("site {site:?} is lost")))
}

/// A knot diagram with a marked band site.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTemplate")]
pub struct BandTemplate {
    base_name: String,
    pd: PlanarDiagram,
    site: [u32; 2],
}

#[derive(Deserialize)]
struct RawTemplate {
    base_name: String,
    pd: PlanarDiagram,
    site: [u32; 2],
}

impl TryFrom<RawTemplate> for BandTemplate {
    type Error = Error;
    fn try_from(r: RawTemplate) -> Result<Self> {
        BandTemplate::new(&r.base_name, r.pd, r.site)
    }
}

impl BandTemplate {
    pub fn new(base_name: &str, pd: PlanarDiagram, site: [u32; 2]) -> Result<Self> {
        pd.validate()?;
        if !pd.is_knot()? {
            return Err(Error::NotAKnot(format!("template {base_name}")));
        }
        if site_side(&pd, site)?.is_none() {
            return Err(Error::InvalidDiagram(format!("edges {} and {} do not form a twist site", site[0], site[1])));
        }
        Ok(BandTemplate { base_name: base_name.to_string(), pd, site })
    }

    pub fn base_name(&self) -> &str {
        &self.base_name
    }

    pub fn pd(&self) -> &PlanarDiagram {
        &self.pd
    }

    pub fn site(&self) -> [u32; 2] {
        self.site
    }

    /// The same site on the mirror diagram.
    pub fn mirror(&self) -> BandTemplate {
        BandTemplate { base_name: format!("{}m", self.base_name), pd: super::mirror(&self.pd), site: self.site }
    }
}

/// K_i: the template with `i` full twists in the band.
pub fn band_family(t: &BandTemplate, i: i64) -> PlanarDiagram {
    insert_twists(&t.pd, t.site, i).expect("template site was validated")
}
