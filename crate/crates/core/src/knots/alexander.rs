use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::pd::PlanarDiagram;

/// Integer polynomial in t, index = exponent, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct ZPoly(Vec<i128>);

const OVERFLOW: Error = Error::Overflow("alexander determinant");

impl ZPoly {
    fn from(c: &[i128]) -> Self {
        let mut p = ZPoly(c.to_vec());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, o: &ZPoly) -> Result<ZPoly> {
        if self.is_zero() || o.is_zero() {
            return Ok(ZPoly::default());
        }
        let mut out = vec![0i128; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in o.0.iter().enumerate() {
                let p = a.checked_mul(b).ok_or(OVERFLOW)?;
                out[i + j] = out[i + j].checked_add(p).ok_or(OVERFLOW)?;
            }
        }
        Ok(ZPoly::from(&out))
    }

    fn add(&self, o: &ZPoly) -> Result<ZPoly> {
        let n = self.0.len().max(o.0.len());
        let mut out = vec![0i128; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = o.0.get(i).copied().unwrap_or(0);
            *slot = a.checked_add(b).ok_or(OVERFLOW)?;
        }
        Ok(ZPoly::from(&out))
    }

    fn sub(&self, o: &ZPoly) -> Result<ZPoly> {
        let n = self.0.len().max(o.0.len());
        let mut out = vec![0i128; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = o.0.get(i).copied().unwrap_or(0);
            *slot = a.checked_sub(b).ok_or(OVERFLOW)?;
        }
        Ok(ZPoly::from(&out))
    }

    /// Exact division; errors if `d` does not divide.
    fn div_exact(&self, d: &ZPoly) -> Result<ZPoly> {
        if self.is_zero() {
            return Ok(ZPoly::default());
        }
        let dl = *d.0.last().expect("nonzero divisor");
        let dn = d.0.len();
        let mut r = self.0.clone();
        if r.len() < dn {
            return Err(Error::InvalidDiagram("inexact division in determinant".into()));
        }
        let mut q = vec![0i128; r.len() - dn + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + dn - 1];
            if c % dl != 0 {
                return Err(Error::InvalidDiagram("inexact division in determinant".into()));
            }
            let f = c / dl;
            q[k] = f;
            for (j, &dj) in d.0.iter().enumerate() {
                r[k + j] = r[k + j].checked_sub(f.checked_mul(dj).ok_or(OVERFLOW)?).ok_or(OVERFLOW)?;
            }
        }
        if r.iter().any(|&c| c != 0) {
            return Err(Error::InvalidDiagram("inexact division in determinant".into()));
        }
        Ok(ZPoly::from(&q))
    }
}

/// Fraction-free determinant.
fn bareiss(mut m: Vec<Vec<ZPoly>>) -> Result<ZPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(ZPoly::from(&[1]));
    }
    let mut sign = 1i128;
    let mut prev = ZPoly::from(&[1]);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(ZPoly::default());
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k])?.sub(&m[i][k].mul(&m[k][j])?)?;
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { ZPoly::default().sub(&d)? } else { d })
}

/// Symmetric Alexander polynomial normalized by Delta(1) = 1.
pub fn alexander_from_pd(d: &PlanarDiagram) -> Result<LaurentPoly> {
    d.validate()?;
    let comps = d.components()?;
    if comps.len() != 1 {
        return Err(Error::NotAKnot(format!("{} components", comps.len())));
    }
    if d.crossings.is_empty() {
        return Ok(LaurentPoly::one());
    }
    // arcs: edges glued through over-passes and joins
    let edges: Vec<u32> = d.edges().into_iter().collect();
    let pos: BTreeMap<u32, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    let union = |a: u32, b: u32, p: &mut Vec<usize>| {
        let (ra, rb) = (find(p, pos[&a]), find(p, pos[&b]));
        p[ra] = rb;
    };
    for c in &d.crossings {
        union(c[1], c[3], &mut parent);
    }
    for j in &d.joins {
        union(j[0], j[1], &mut parent);
    }
    let mut arc_of = BTreeMap::new();
    for &e in &edges {
        let r = find(&mut parent, pos[&e]);
        let next = arc_of.len();
        arc_of.entry(r).or_insert(next);
    }
    let arc = |e: u32, p: &mut Vec<usize>| arc_of[&find(p, pos[&e])];
    let n = d.crossings.len();
    if arc_of.len() != n {
        return Err(Error::InvalidDiagram(format!("{} arcs for {n} crossings", arc_of.len())));
    }
    let mut rows = vec![vec![ZPoly::default(); n]; n];
    for (x, c) in d.crossings.iter().enumerate() {
        let over = arc(c[1], &mut parent);
        let (inc, out) = (arc(c[0], &mut parent), arc(c[2], &mut parent));
        let add = |slot: &mut ZPoly, v: &[i128]| -> Result<()> {
            *slot = slot.add(&ZPoly::from(v))?;
            Ok(())
        };
        add(&mut rows[x][over], &[1, -1])?;
        if d.signs[x] > 0 {
            add(&mut rows[x][inc], &[0, 1])?;
            add(&mut rows[x][out], &[-1])?;
        } else {
            add(&mut rows[x][inc], &[-1])?;
            add(&mut rows[x][out], &[0, 1])?;
        }
    }
    let minor: Vec<Vec<ZPoly>> = rows[1..].iter().map(|r| r[1..].to_vec()).collect();
    let det = bareiss(minor)?;
    normalize(&det)
}

fn normalize(p: &ZPoly) -> Result<LaurentPoly> {
    let at_one: i128 = p.0.iter().sum();
    let s = match at_one {
        1 => 1,
        -1 => -1,
        v => return Err(Error::NotAKnot(format!("Alexander determinant has value {v} at t = 1"))),
    };
    let lo = p.0.iter().position(|&c| c != 0).expect("nonzero") as i64;
    let hi = p.0.len() as i64 - 1;
    if (lo + hi) % 2 != 0 {
        return Err(Error::NotAKnot("Alexander polynomial of odd span".into()));
    }
    let mid = (lo + hi) / 2;
    let mut terms = Vec::new();
    for (e, &c) in p.0.iter().enumerate() {
        let c = i64::try_from(c * s).map_err(|_| OVERFLOW)?;
        terms.push((e as i64 - mid, c));
    }
    let out = LaurentPoly::from_terms(terms);
    if !out.is_symmetric() {
        return Err(Error::NotAKnot(format!("non-symmetric Alexander polynomial {out}")));
    }
    Ok(out)
}
