//! Reduced Khovanov homology over GF(2) by Bar-Natan scanning, Turner's
//! spectral sequence, basepoint cones and skein triples.
//!
//! Gradings: u is homological, q is half the quantum grading and
//! delta = u - q. The deformation parameter h has q-degree 1, so an arrow
//! carrying h^k raises q by k; setting h = 0 gives Khovanov's differential
//! and h = 1 gives Turner's.

mod cob;
mod scan;
mod ss;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knots::simplify_joins;
use crate::laurent::LaurentPoly;
use crate::pd::{PlanarDiagram, Slot};

use scan::{Complex, Piece};
pub use ss::SsPages;

/// Largest diagram accepted without an explicit override.
pub const DEFAULT_MAX_CROSSINGS: usize = 18;

/// Bigraded ranks keyed by (delta, q).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KhGroup {
    ranks: BTreeMap<(i64, i64), usize>,
}

#[derive(Serialize, Deserialize)]
struct KhEntry {
    delta: i64,
    q: i64,
    rank: usize,
}

impl Serialize for KhGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<KhEntry> = self.iter().map(|((delta, q), rank)| KhEntry { delta, q, rank }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for KhGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<KhEntry> = Vec::deserialize(d)?;
        Ok(KhGroup::from_ranks(v.into_iter().map(|e| ((e.delta, e.q), e.rank))))
    }
}

impl KhGroup {
    pub fn new() -> Self {
        KhGroup::default()
    }

    pub fn from_ranks<I: IntoIterator<Item = ((i64, i64), usize)>>(it: I) -> Self {
        let mut g = KhGroup::new();
        for ((d, q), r) in it {
            g.add(d, q, r);
        }
        g
    }

    pub fn add(&mut self, delta: i64, q: i64, r: usize) {
        if r > 0 {
            *self.ranks.entry((delta, q)).or_insert(0) += r;
        }
    }

    pub fn rank(&self, delta: i64, q: i64) -> usize {
        self.ranks.get(&(delta, q)).copied().unwrap_or(0)
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

    /// The group shifted by [i, j]: the rank at (delta, q) moves to
    /// (delta + i, q + j).
    pub fn shift(&self, i: i64, j: i64) -> KhGroup {
        KhGroup::from_ranks(self.iter().map(|((d, q), r)| ((d + i, q + j), r)))
    }

    /// Ranks with q = `q`, keyed by delta.
    pub fn column(&self, q: i64) -> BTreeMap<i64, usize> {
        self.iter().filter(|((_, qq), _)| *qq == q).map(|((d, _), r)| (d, r)).collect()
    }
}

/// `{(delta,q):rank, ...}`
impl std::fmt::Display for KhGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        crate::group::fmt_ranks(f, self.iter())
    }
}

/// Graded Euler characteristic: sum of (-1)^(delta + q) rank t^q.
pub fn jones(g: &KhGroup) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for ((d, q), r) in g.iter() {
        let sign = if (d + q).rem_euclid(2) == 0 { 1 } else { -1 };
        p.add_term(q, sign * r as i64);
    }
    p
}

/// Homology of the basepoint cone, with doubled gradings (2 delta, 2 q).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConeHomology {
    ranks: BTreeMap<(i64, i64), usize>,
}

#[derive(Serialize, Deserialize)]
struct ConeEntry {
    delta2: i64,
    q2: i64,
    rank: usize,
}

impl Serialize for ConeHomology {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<ConeEntry> =
            self.ranks.iter().map(|(&(delta2, q2), &rank)| ConeEntry { delta2, q2, rank }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConeHomology {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<ConeEntry> = Vec::deserialize(d)?;
        let mut ranks = BTreeMap::new();
        for e in v.into_iter().filter(|e| e.rank > 0) {
            *ranks.entry((e.delta2, e.q2)).or_insert(0) += e.rank;
        }
        Ok(ConeHomology { ranks })
    }
}

impl ConeHomology {
    fn from_doubled(ranks: BTreeMap<(i64, i64), usize>) -> Self {
        ConeHomology { ranks }
    }

    /// Ranks keyed by (2 delta, 2 q).
    pub fn doubled_ranks(&self) -> &BTreeMap<(i64, i64), usize> {
        &self.ranks
    }

    /// The group with integer gradings, if every grading is integral.
    pub fn integral(&self) -> Option<KhGroup> {
        if self.ranks.keys().any(|&(d, q)| d % 2 != 0 || q % 2 != 0) {
            return None;
        }
        Some(KhGroup::from_ranks(self.ranks.iter().map(|(&(d, q), &r)| ((d / 2, q / 2), r))))
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }

    /// Euler characteristic; `None` for half-integral gradings.
    pub fn euler(&self) -> Option<LaurentPoly> {
        self.integral().map(|g| jones(&g))
    }
}

/// Exported reduced complex over F2[h]: generators (u, doubled q) and arrows
/// carrying h^k with k fixed by the gradings.
pub(crate) struct Filtered {
    pub gens: Vec<(i64, i64)>,
    pub arrows: Vec<(usize, usize)>,
}

const CUT_HEAD: u32 = u32::MAX - 2;
const CUT_TAIL: u32 = u32::MAX - 1;
const DOT_SPLIT: u32 = u32::MAX - 3;

fn prepare(d: &PlanarDiagram, max_crossings: usize) -> Result<PlanarDiagram> {
    d.validate()?;
    if d.n_crossings() > max_crossings {
        return Err(Error::DiagramTooLarge { crossings: d.n_crossings(), bound: max_crossings });
    }
    let mut d = d.clone();
    simplify_joins(&mut d);
    Ok(d)
}

/// Pieces of a diagram cut open at `p1`, with a dot on `p2` if given.
fn pieces(d: &PlanarDiagram, p1: u32, p2: Option<u32>) -> Result<Vec<Piece>> {
    let ends = d.endpoints()?;
    let mut slots: Vec<Vec<u32>> = d.crossings.iter().map(|c| c.to_vec()).collect();
    let mut join_slots: Vec<Vec<u32>> = d.joins.iter().map(|j| j.to_vec()).collect();
    let mut set = |s: Slot, l: u32| match s {
        Slot::Crossing(x, p) => slots[x][p] = l,
        Slot::Join(j, p) => join_slots[j][p] = l,
    };
    let head = |e: u32| ends.head.get(&e).copied().ok_or_else(|| Error::InvalidDiagram(format!("no edge {e}")));
    let tail = |e: u32| ends.tail.get(&e).copied().ok_or_else(|| Error::InvalidDiagram(format!("no edge {e}")));
    set(head(p1)?, CUT_HEAD);
    set(tail(p1)?, CUT_TAIL);
    if let Some(p2) = p2 {
        set(head(p2)?, DOT_SPLIT);
    }
    let mut out: Vec<Piece> = slots.iter().map(|s| Piece::crossing([s[0], s[1], s[2], s[3]])).collect();
    out.extend(join_slots.iter().map(|s| Piece::vertex(s[0], s[1])));
    if let Some(p2) = p2 {
        out.push(Piece::dot(p2, DOT_SPLIT));
    }
    Ok(out)
}

/// Scans the pieces greedily, keeping the boundary small.
fn scan(pieces: &[Piece]) -> Complex {
    let mut cx = Complex::new();
    let mut done = vec![false; pieces.len()];
    for _ in 0..pieces.len() {
        let bset: std::collections::HashSet<u32> = cx.boundary().iter().copied().collect();
        let best = (0..pieces.len())
            .filter(|&i| !done[i])
            .max_by_key(|&i| {
                let shared = pieces[i].labels.iter().filter(|l| bset.contains(l)).count() as i64;
                let fresh = pieces[i].labels.len() as i64 - shared;
                (shared, -fresh, -(i as i64))
            })
            .expect("a piece is left");
        done[best] = true;
        cx = cx.attach(&pieces[best]);
    }
    cx
}

/// Reduced complex of `d` (a knot or link) with basepoint `p1` and an
/// optional cone on `p2`; gradings (u, doubled q) before the cone shift.
fn reduced_complex(d: &PlanarDiagram, p1: u32, p2: Option<u32>) -> Result<Filtered> {
    let ps = pieces(d, p1, p2)?;
    let cx = scan(&ps);
    let (gens, arrows) = cx.export();
    let (np, nm) = (d.n_plus() as i64, d.n_minus() as i64);
    let gens: Vec<(i64, i64)> = gens.iter().map(|&(h, j)| (h as i64 - nm, j as i64 + np - 2 * nm)).collect();
    let mut out = Vec::new();
    for (a, b, m) in arrows {
        // x acts by 0 at the cut: dotted terms vanish
        let plain: Vec<_> = m.iter().filter(|t| t.mask == 0).collect();
        if plain.len() % 2 == 1 {
            out.push((a, b));
        }
    }
    Ok(Filtered { gens, arrows: out })
}

fn knot_basepoint(d: &PlanarDiagram) -> Result<()> {
    if !d.is_knot()? {
        return Err(Error::NotAKnot(format!("{} components", d.components()?.len())));
    }
    if d.basepoints.is_empty() {
        return Err(Error::NoBasepoint);
    }
    Ok(())
}

fn knot_complex(d: &PlanarDiagram, max_crossings: usize) -> Result<Filtered> {
    d.validate()?;
    knot_basepoint(d)?;
    let d2 = prepare(d, max_crossings)?;
    reduced_complex(&d2, d2.basepoints[0], None)
}

pub fn kh_reduced_bounded(d: &PlanarDiagram, max_crossings: usize) -> Result<KhGroup> {
    let f = knot_complex(d, max_crossings)?;
    Ok(ss::pages(&f, true).pages.remove(0))
}

/// Reduced Khovanov homology of a knot diagram.
pub fn kh_reduced(d: &PlanarDiagram) -> Result<KhGroup> {
    kh_reduced_bounded(d, DEFAULT_MAX_CROSSINGS)
}

pub fn turner_ss_bounded(d: &PlanarDiagram, max_crossings: usize) -> Result<SsPages> {
    let f = knot_complex(d, max_crossings)?;
    Ok(ss::pages(&f, false))
}

/// Pages of Turner's spectral sequence, from E1 = reduced Kh.
pub fn turner_ss(d: &PlanarDiagram) -> Result<SsPages> {
    turner_ss_bounded(d, DEFAULT_MAX_CROSSINGS)
}

/// q-grading of the generator surviving Turner's spectral sequence.
pub fn stilde(d: &PlanarDiagram) -> Result<i64> {
    Ok(turner_ss(d)?.survivor.1)
}

pub fn basepoint_cone_bounded(d: &PlanarDiagram, max_crossings: usize) -> Result<ConeHomology> {
    let p1 = *d.basepoints.first().ok_or(Error::NoBasepoint)?;
    let p2 = *d.basepoints.get(1).ok_or(Error::NoSecondBasepoint)?;
    if p1 == p2 {
        return Err(Error::DegenerateBasepoints(p1));
    }
    let d2 = prepare(d, max_crossings)?;
    let (q1, q2) = (d2.basepoints[0], d2.basepoints[1]);
    if q1 == q2 {
        return Err(Error::DegenerateBasepoints(p1));
    }
    let f = reduced_complex(&d2, q1, Some(q2))?;
    // cone shift: q moves up by one half
    let f = Filtered { gens: f.gens.iter().map(|&(u, j)| (u, j + 1)).collect(), arrows: f.arrows };
    let e1 = ss::first_page_doubled(&f);
    Ok(ConeHomology::from_doubled(e1))
}

/// Homology of the cone of the second basepoint map on the complex reduced
/// at the first basepoint.
pub fn basepoint_cone(d: &PlanarDiagram) -> Result<ConeHomology> {
    basepoint_cone_bounded(d, DEFAULT_MAX_CROSSINGS)
}

mod skein;
pub use skein::{skein_triple_at, skein_triple_check, skein_triple_check_bounded, SkeinReport};

#[cfg(test)]
mod tests;
