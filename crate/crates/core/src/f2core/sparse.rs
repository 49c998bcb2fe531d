use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::bits::{rank_of_rows, BitRow};
use crate::error::{Error, Result};

/// Sparse matrix over GF(2) stored as the set of positions holding 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseF2Matrix {
    rows: usize,
    cols: usize,
    entries: BTreeSet<(usize, usize)>,
}

impl SparseF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseF2Matrix { rows, cols, entries: BTreeSet::new() }
    }

    pub fn identity(n: usize) -> Self {
        SparseF2Matrix { rows: n, cols: n, entries: (0..n).map(|i| (i, i)).collect() }
    }

    /// Builds a matrix from explicit positions; duplicates and out-of-range
    /// positions are rejected.
    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (r, c) in entries {
            if r >= rows || c >= cols {
                return Err(Error::OutOfBounds { row: r, col: c, rows, cols });
            }
            if !set.insert((r, c)) {
                return Err(Error::DuplicateEntry(r, c));
            }
        }
        Ok(SparseF2Matrix { rows, cols, entries: set })
    }

    pub fn from_dense(dense: &[Vec<u8>]) -> Result<Self> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.len());
        let mut entries = Vec::new();
        for (i, row) in dense.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch("ragged dense matrix".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if v & 1 == 1 {
                    entries.push((i, j));
                }
            }
        }
        Self::from_entries(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().copied()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.entries.contains(&(r, c))
    }

    /// Adds 1 at (r, c).
    pub fn toggle(&mut self, r: usize, c: usize) -> Result<()> {
        if r >= self.rows || c >= self.cols {
            return Err(Error::OutOfBounds { row: r, col: c, rows: self.rows, cols: self.cols });
        }
        if !self.entries.remove(&(r, c)) {
            self.entries.insert((r, c));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        SparseF2Matrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }

    /// Sorted column indices of each row.
    pub fn row_lists(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.rows];
        for &(r, c) in &self.entries {
            out[r].push(c as u32);
        }
        out
    }

    pub fn mul(&self, other: &SparseF2Matrix) -> Result<SparseF2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let rhs = other.row_lists();
        let mut out = SparseF2Matrix::zeros(self.rows, other.cols);
        for &(i, k) in &self.entries {
            for &j in &rhs[k] {
                out.toggle(i, j as usize)?;
            }
        }
        Ok(out)
    }
}

/// GF(2) rank; deterministic lowest-index pivoting.
pub fn rank_f2(m: &SparseF2Matrix) -> usize {
    // Reduce along the shorter side.
    if m.rows() <= m.cols() {
        rank_of_rows(&m.row_lists(), m.cols())
    } else {
        rank_of_rows(&m.transpose().row_lists(), m.rows())
    }
}

/// dim ker(d_out) - rank(d_in) for a pair of composable differentials.
pub fn homology_dims_f2(d_in: &SparseF2Matrix, d_out: &SparseF2Matrix) -> Result<usize> {
    if d_in.rows() != d_out.cols() {
        return Err(Error::DimensionMismatch(format!(
            "d_in has {} rows but d_out has {} columns",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::CompositionNonzero);
    }
    let n = d_out.cols();
    Ok(n - rank_f2(d_out) - rank_f2(d_in))
}

/// Basis of the kernel of `m` (vectors over the column index set).
pub fn kernel_basis(m: &SparseF2Matrix) -> Vec<BitRow> {
    let rows = m.rows();
    let cols = m.cols();
    let t = m.transpose().row_lists();
    // pivot row index -> (reduced column, combination of original columns)
    let mut pivots: Vec<Option<(BitRow, BitRow)>> = vec![None; rows];
    let mut kernel = Vec::new();
    for (j, col) in t.iter().enumerate() {
        let mut v = BitRow::zeros(rows);
        for &r in col {
            v.flip(r as usize);
        }
        let mut comb = BitRow::zeros(cols);
        comb.flip(j);
        loop {
            match v.lowest() {
                None => {
                    kernel.push(comb);
                    break;
                }
                Some(lead) => match &pivots[lead] {
                    Some((pv, pc)) => {
                        v.xor_assign(pv);
                        comb.xor_assign(pc);
                    }
                    None => {
                        pivots[lead] = Some((v, comb));
                        break;
                    }
                },
            }
        }
    }
    kernel
}

/// Rank of a list of dense vectors of common length.
pub fn rank_of_bitrows(vs: &[BitRow], len: usize) -> usize {
    let mut pivots: Vec<Option<BitRow>> = vec![None; len];
    let mut rank = 0;
    for v in vs {
        let mut row = v.clone();
        while let Some(lead) = row.lowest() {
            match &pivots[lead] {
                Some(p) => row.xor_assign(p),
                None => {
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
