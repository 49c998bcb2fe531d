/// Dense packed bit vector used for row reduction over GF(2).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut r = Self::zeros(len);
        for &i in support {
            r.flip(i);
        }
        r
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set index.
    pub fn lowest(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (k, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let t = w.trailing_zeros() as usize;
                out.push(k * 64 + t);
                w &= w - 1;
            }
        }
        out
    }
}

/// XOR of two sorted index lists.
pub(crate) fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Rank of a family of sparse rows (sorted column indices) over GF(2).
///
/// Pivots on the lowest column index. Rows are packed into bitsets when the
/// dense footprint is small, otherwise reduced sparsely.
pub fn rank_of_rows(rows: &[Vec<u32>], ncols: usize) -> usize {
    let dense_bits = rows.len().saturating_mul(ncols);
    if dense_bits <= (1 << 27) {
        rank_dense(rows, ncols)
    } else {
        rank_sparse(rows, ncols)
    }
}

fn rank_dense(rows: &[Vec<u32>], ncols: usize) -> usize {
    let mut pivots: Vec<Option<BitRow>> = vec![None; ncols];
    let mut rank = 0;
    for r in rows {
        let mut row = BitRow::zeros(ncols);
        for &c in r {
            row.flip(c as usize);
        }
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

fn rank_sparse(rows: &[Vec<u32>], ncols: usize) -> usize {
    let mut pivots: Vec<Option<Vec<u32>>> = vec![None; ncols];
    let mut rank = 0;
    for r in rows {
        let mut row = r.clone();
        while let Some(&lead) = row.first() {
            match &pivots[lead as usize] {
                Some(p) => row = xor_sorted(&row, p),
                None => {
                    pivots[lead as usize] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
