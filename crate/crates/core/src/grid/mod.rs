//! Knot Floer homology from grid diagrams.
//!
//! Column `c` carries an X in row `xs[c]` and an O in row `os[c]`. The knot
//! runs vertically from X to O inside each column and horizontally from O to
//! X inside each row; vertical segments cross over horizontal ones.

mod homology;
mod topd;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use homology::{alexander_from_grid, grid_hfk, grid_hfk_bounded, grid_tilde_homology};
pub use topd::grid_to_pd;

/// Largest grid accepted without an explicit override.
pub const DEFAULT_MAX_GRID: usize = 9;
/// Hard ceiling for the override.
pub const HARD_MAX_GRID: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridDiagram {
    pub size: usize,
    pub xs: Vec<usize>,
    pub os: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GridViolation {
    TooSmall { size: usize },
    LengthMismatch { xs: usize, os: usize, size: usize },
    NotPermutation { which: String },
    SharedCell { column: usize },
    MultiComponent { components: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridReport {
    pub violations: Vec<GridViolation>,
}

impl GridReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn is_perm(v: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    v.iter().all(|&r| r < n && !std::mem::replace(&mut seen[r], true))
}

fn inverse(v: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; v.len()];
    for (i, &r) in v.iter().enumerate() {
        inv[r] = i;
    }
    inv
}

impl GridDiagram {
    pub fn new(xs: Vec<usize>, os: Vec<usize>) -> Self {
        GridDiagram { size: xs.len(), xs, os }
    }

    /// Grid of the (p, q) torus knot: an X on the diagonal and the O shifted
    /// by `k` columns, size p + q.
    pub fn torus(size: usize, k: usize) -> Self {
        let xs = (0..size).collect();
        let os = (0..size).map(|i| (i + k) % size).collect();
        GridDiagram::new(xs, os)
    }

    /// Column reversal.
    pub fn mirror(&self) -> Self {
        let r = |v: &Vec<usize>| v.iter().rev().copied().collect();
        GridDiagram::new(r(&self.xs), r(&self.os))
    }

    /// Cyclic shift: column c moves to c + dc, row r to r + dr.
    pub fn translate(&self, dc: usize, dr: usize) -> Self {
        let n = self.size;
        let mut xs = vec![0; n];
        let mut os = vec![0; n];
        for c in 0..n {
            xs[(c + dc) % n] = (self.xs[c] + dr) % n;
            os[(c + dc) % n] = (self.os[c] + dr) % n;
        }
        GridDiagram::new(xs, os)
    }

    /// Swaps columns c and c + 1 when their marking intervals are nested or
    /// disjoint (a commutation move); `None` if they interleave.
    pub fn commute_columns(&self, c: usize) -> Option<Self> {
        let n = self.size;
        let d = (c + 1) % n;
        let span = |k: usize| (self.xs[k].min(self.os[k]), self.xs[k].max(self.os[k]));
        let (a, b) = (span(c), span(d));
        let inside = |p: usize, s: (usize, usize)| s.0 < p && p < s.1;
        let touching = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
        if touching || inside(b.0, a) != inside(b.1, a) {
            return None;
        }
        let mut g = self.clone();
        g.xs.swap(c, d);
        g.os.swap(c, d);
        Some(g)
    }

    /// Number of link components.
    pub fn components(&self) -> usize {
        let n = self.size;
        let xinv = inverse(&self.xs);
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut c = s;
            while !seen[c] {
                seen[c] = true;
                c = xinv[self.os[c]];
            }
        }
        count
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub(crate) fn check_knot(&self) -> Result<()> {
        let r = validate_grid(self);
        match r.violations.first() {
            None => Ok(()),
            Some(GridViolation::MultiComponent { components }) => {
                Err(Error::NotAKnot(format!("grid has {components} components")))
            }
            Some(v) => Err(Error::InvalidGrid(format!("{v:?}"))),
        }
    }
}

pub fn validate_grid(g: &GridDiagram) -> GridReport {
    let mut v = Vec::new();
    let n = g.size;
    if n < 2 {
        v.push(GridViolation::TooSmall { size: n });
    }
    if g.xs.len() != n || g.os.len() != n {
        v.push(GridViolation::LengthMismatch { xs: g.xs.len(), os: g.os.len(), size: n });
        return GridReport { violations: v };
    }
    let mut perms = true;
    for (which, p) in [("xs", &g.xs), ("os", &g.os)] {
        if !is_perm(p, n) {
            v.push(GridViolation::NotPermutation { which: which.into() });
            perms = false;
        }
    }
    for c in 0..n {
        if g.xs[c] == g.os[c] {
            v.push(GridViolation::SharedCell { column: c });
        }
    }
    if perms && n >= 1 {
        let k = g.components();
        if k != 1 {
            v.push(GridViolation::MultiComponent { components: k });
        }
    }
    GridReport { violations: v }
}

#[cfg(test)]
mod tests;
