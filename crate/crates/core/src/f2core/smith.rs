use serde::{Deserialize, Serialize};

use super::poly::F2Poly;
use super::umatrix::F2UMatrix;
use crate::error::{Error, Result};

/// Diagonal form m = row_transform * diag(invariant_factors) * col_transform.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithForm {
    pub invariant_factors: Vec<F2Poly>,
    pub row_transform: F2UMatrix,
    pub col_transform: F2UMatrix,
}

struct Engine {
    a: Vec<Vec<F2Poly>>,
    // R and C are kept so that the original matrix equals R * a * C.
    r: Option<Vec<Vec<F2Poly>>>,
    c: Option<Vec<Vec<F2Poly>>>,
    rowlab: Vec<usize>,
    collab: Vec<usize>,
    // Set once an operation moved a pivot by something other than a swap
    // or a clearing step.
    irregular: bool,
}

fn ident(n: usize) -> Vec<Vec<F2Poly>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { F2Poly::one() } else { F2Poly::zero() }).collect())
        .collect()
}

impl Engine {
    fn new(m: &F2UMatrix, track: bool) -> Self {
        Engine {
            a: m.to_dense(),
            r: track.then(|| ident(m.rows())),
            c: track.then(|| ident(m.cols())),
            rowlab: (0..m.rows()).collect(),
            collab: (0..m.cols()).collect(),
            irregular: false,
        }
    }

    fn nrows(&self) -> usize {
        self.a.len()
    }

    fn ncols(&self) -> usize {
        self.collab.len()
    }

    fn swap_rows(&mut self, p: usize, t: usize) {
        if p == t {
            return;
        }
        self.a.swap(p, t);
        self.rowlab.swap(p, t);
        if let Some(r) = &mut self.r {
            for row in r.iter_mut() {
                row.swap(p, t);
            }
        }
    }

    fn swap_cols(&mut self, q: usize, t: usize) {
        if q == t {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(q, t);
        }
        self.collab.swap(q, t);
        if let Some(c) = &mut self.c {
            c.swap(q, t);
        }
    }

    /// row dst += f * row src
    fn add_row(&mut self, src: usize, dst: usize, f: &F2Poly) {
        let add: Vec<F2Poly> = self.a[src].iter().map(|x| x.mul(f)).collect();
        for (x, y) in self.a[dst].iter_mut().zip(&add) {
            x.add_assign(y);
        }
        if let Some(r) = &mut self.r {
            for row in r.iter_mut() {
                let v = row[dst].mul(f);
                row[src].add_assign(&v);
            }
        }
    }

    /// col dst += f * col src
    fn add_col(&mut self, src: usize, dst: usize, f: &F2Poly) {
        for row in self.a.iter_mut() {
            let v = row[src].mul(f);
            row[dst].add_assign(&v);
        }
        if let Some(c) = &mut self.c {
            let add: Vec<F2Poly> = c[dst].iter().map(|x| x.mul(f)).collect();
            for (x, y) in c[src].iter_mut().zip(&add) {
                x.add_assign(y);
            }
        }
    }

    /// Minimal-degree nonzero entry of the trailing submatrix, ties to the
    /// lowest (row, col).
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in t..self.nrows() {
            for j in t..self.ncols() {
                if let Some(d) = self.a[i][j].degree() {
                    if best.is_none_or(|(bd, _, _)| d < bd) {
                        best = Some((d, i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Minimal-degree nonzero entry in row t / column t (from index t on).
    fn min_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (self.a[t][t].degree().unwrap_or(usize::MAX), t, t);
        for i in t + 1..self.nrows() {
            if let Some(d) = self.a[i][t].degree() {
                if d < best.0 {
                    best = (d, i, t);
                }
            }
        }
        for j in t + 1..self.ncols() {
            if let Some(d) = self.a[t][j].degree() {
                if d < best.0 {
                    best = (d, t, j);
                }
            }
        }
        (best.1, best.2)
    }

    fn run(&mut self) -> usize {
        let mut t = 0;
        while t < self.nrows().min(self.ncols()) {
            let Some((p, q)) = self.min_pivot(t) else { break };
            self.swap_rows(p, t);
            self.swap_cols(q, t);
            loop {
                let piv = self.a[t][t].clone();
                let mut remainder = false;
                for i in t + 1..self.nrows() {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let (quo, rem) = self.a[i][t].divrem(&piv);
                    self.add_row(t, i, &quo);
                    remainder |= !rem.is_zero();
                }
                for j in t + 1..self.ncols() {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let (quo, rem) = self.a[t][j].divrem(&piv);
                    self.add_col(t, j, &quo);
                    remainder |= !rem.is_zero();
                }
                if remainder {
                    self.irregular = true;
                    let (i, j) = self.min_cross(t);
                    self.swap_rows(i, t);
                    self.swap_cols(j, t);
                    continue;
                }
                let bad = (t + 1..self.nrows())
                    .find(|&i| (t + 1..self.ncols()).any(|j| !piv.divides(&self.a[i][j])));
                match bad {
                    Some(i) => {
                        self.irregular = true;
                        self.add_row(i, t, &F2Poly::one());
                    }
                    None => break,
                }
            }
            t += 1;
        }
        t
    }
}

/// Smith normal form over GF(2)[U].
///
/// Pivots are chosen of minimal degree with ties broken by lowest (row, col).
pub fn smith_form_fu(m: &F2UMatrix) -> SmithForm {
    let mut e = Engine::new(m, true);
    let r = e.run();
    let invariant_factors = (0..r).map(|t| e.a[t][t].clone()).collect();
    let to_matrix = |d: Vec<Vec<F2Poly>>| F2UMatrix::from_dense(&d).expect("square transform");
    SmithForm {
        invariant_factors,
        row_transform: to_matrix(e.r.take().unwrap_or_default()),
        col_transform: to_matrix(e.c.take().unwrap_or_default()),
    }
}

/// Free summand of a bigraded F[U]-module, located at its generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FreeSummand {
    pub maslov: i64,
    pub alexander: i64,
}

/// F[U]/U^order generated in the given bigrading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TorsionSummand {
    pub order: u32,
    pub maslov: i64,
    pub alexander: i64,
}

/// Finitely generated bigraded F[U]-module, free part plus torsion.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UModule {
    pub free_summands: Vec<FreeSummand>,
    pub torsion_summands: Vec<TorsionSummand>,
}

impl UModule {
    pub fn new(mut free: Vec<FreeSummand>, mut torsion: Vec<TorsionSummand>) -> Self {
        free.sort_by_key(|f| (f.alexander, f.maslov));
        torsion.sort_by_key(|t| (t.alexander, t.maslov, t.order));
        UModule { free_summands: free, torsion_summands: torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_summands.len()
    }
}

fn step(g: (i64, i64), k: usize, u: (i64, i64)) -> Result<(i64, i64)> {
    let k = i64::try_from(k).map_err(|_| Error::Overflow("U exponent"))?;
    let m = u.0.checked_mul(k).and_then(|x| x.checked_add(g.0));
    let a = u.1.checked_mul(k).and_then(|x| x.checked_add(g.1));
    match (m, a) {
        (Some(m), Some(a)) => Ok((m, a)),
        _ => Err(Error::Overflow("grading")),
    }
}

/// Homology of a free bigraded F[U]-complex.
///
/// `d` is square with d[to][from] = U^k; the basis element i sits in
/// bigrading `gradings[i]`, multiplication by U shifts by `ustep` and the
/// differential shifts by (-1, 0). Every entry must be a monomial respecting
/// these gradings.
pub fn graded_homology_fu(
    d: &F2UMatrix,
    gradings: &[(i64, i64)],
    ustep: (i64, i64),
) -> Result<UModule> {
    let n = gradings.len();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} differential for {} generators",
            d.rows(),
            d.cols(),
            n
        )));
    }
    for (&(to, from), p) in d.entries() {
        let k = p.as_monomial().ok_or(Error::NonHomogeneous)?;
        let lhs = step(gradings[to], k, ustep)?;
        let rhs = (gradings[from].0 - 1, gradings[from].1);
        if lhs != rhs {
            return Err(Error::NonHomogeneous);
        }
    }
    let square = d.mul(d)?;
    if square.entries().next().is_some() {
        return Err(Error::CompositionNonzero);
    }

    let mut e = Engine::new(d, false);
    let r = e.run();
    if e.irregular {
        return Err(Error::NonHomogeneous);
    }

    let mut torsion = Vec::new();
    let mut boundary_labels = Vec::new();
    for t in 0..r {
        let g = gradings[e.rowlab[t]];
        boundary_labels.push(g);
        let k = e.a[t][t].as_monomial().ok_or(Error::NonHomogeneous)?;
        if k > 0 {
            let order = u32::try_from(k).map_err(|_| Error::Overflow("torsion order"))?;
            torsion.push(TorsionSummand { order, maslov: g.0, alexander: g.1 });
        }
    }
    let mut cycles: Vec<(i64, i64)> = (r..n).map(|j| gradings[e.collab[j]]).collect();
    cycles.sort();
    boundary_labels.sort();
    let mut free = Vec::new();
    let mut bi = boundary_labels.into_iter().peekable();
    for g in cycles {
        match bi.peek() {
            Some(&b) if b == g => {
                bi.next();
            }
            _ => free.push(FreeSummand { maslov: g.0, alexander: g.1 }),
        }
    }
    if bi.next().is_some() {
        return Err(Error::NonHomogeneous);
    }
    Ok(UModule::new(free, torsion))
}
