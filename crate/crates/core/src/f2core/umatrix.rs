use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::poly::F2Poly;
use crate::error::{Error, Result};

/// Sparse matrix over GF(2)[U]; stored entries are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct F2UMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), F2Poly>,
}

impl F2UMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2UMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), F2Poly::one());
        }
        m
    }

    /// Zero polynomials are dropped; repeated positions are an error.
    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), F2Poly)>,
    {
        let mut m = Self::zeros(rows, cols);
        for ((r, c), p) in entries {
            if r >= rows || c >= cols {
                return Err(Error::OutOfBounds { row: r, col: c, rows, cols });
            }
            if m.entries.contains_key(&(r, c)) {
                return Err(Error::DuplicateEntry(r, c));
            }
            if !p.is_zero() {
                m.entries.insert((r, c), p);
            }
        }
        Ok(m)
    }

    pub fn from_dense(dense: &[Vec<F2Poly>]) -> Result<Self> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.len());
        if dense.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged dense matrix".into()));
        }
        let it = dense
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, p)| ((i, j), p.clone())));
        Self::from_entries(rows, cols, it)
    }

    pub fn to_dense(&self) -> Vec<Vec<F2Poly>> {
        let mut d = vec![vec![F2Poly::zero(); self.cols]; self.rows];
        for (&(r, c), p) in &self.entries {
            d[r][c] = p.clone();
        }
        d
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> F2Poly {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &F2Poly)> {
        self.entries.iter()
    }

    pub fn mul(&self, other: &F2UMatrix) -> Result<F2UMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: Vec<Vec<(usize, &F2Poly)>> = vec![Vec::new(); other.rows];
        for (&(k, j), p) in &other.entries {
            by_row[k].push((j, p));
        }
        let mut acc: BTreeMap<(usize, usize), F2Poly> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &by_row[k] {
                acc.entry((i, j)).or_default().add_assign(&a.mul(b));
            }
        }
        acc.retain(|_, p| !p.is_zero());
        Ok(F2UMatrix { rows: self.rows, cols: other.cols, entries: acc })
    }

    /// rows x cols matrix with the given polynomials on the diagonal.
    pub fn diagonal(rows: usize, cols: usize, diag: &[F2Poly]) -> Result<Self> {
        Self::from_entries(rows, cols, diag.iter().enumerate().map(|(i, p)| ((i, i), p.clone())))
    }
}
