//! Row-compressed sparse matrices with sorted column indices.
//!
//! This is the storage backing all networks. Weights are `f64` even for
//! count networks so that count-valued and normalized networks share one
//! representation.

/// Compressed sparse row matrix. Entries within a row are sorted by
/// column index and duplicates are pre-summed; explicit zeros are never
/// stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Csr {
    nrows: usize,
    ncols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<f64>,
}

impl Csr {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Csr {
            nrows,
            ncols,
            row_ptr: vec![0; nrows + 1],
            col_idx: Vec::new(),
            values: Vec::new(),
        }
    }

    /// Build from (row, col, weight) triplets. Duplicates are summed,
    /// entries that sum to zero are dropped.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: Vec<(usize, usize, f64)>) -> Self {
        let mut triplets = triplets;
        for &(r, c, _) in &triplets {
            assert!(r < nrows && c < ncols, "triplet out of bounds");
        }
        triplets.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));

        let mut row_ptr = vec![0usize; nrows + 1];
        let mut col_idx = Vec::with_capacity(triplets.len());
        let mut values = Vec::with_capacity(triplets.len());
        let mut iter = triplets.into_iter().peekable();
        while let Some((r, c, mut w)) = iter.next() {
            while let Some(&(r2, c2, w2)) = iter.peek() {
                if r2 == r && c2 == c {
                    w += w2;
                    iter.next();
                } else {
                    break;
                }
            }
            if w != 0.0 {
                row_ptr[r + 1] += 1;
                col_idx.push(c);
                values.push(w);
            }
        }
        for i in 0..nrows {
            row_ptr[i + 1] += row_ptr[i];
        }
        Csr {
            nrows,
            ncols,
            row_ptr,
            col_idx,
            values,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.col_idx.len()
    }

    /// Entries of one row as (col, weight) pairs, sorted by column.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let span = self.row_ptr[r]..self.row_ptr[r + 1];
        self.col_idx[span.clone()]
            .iter()
            .copied()
            .zip(self.values[span].iter().copied())
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        let span = self.row_ptr[r]..self.row_ptr[r + 1];
        match self.col_idx[span.clone()].binary_search(&c) {
            Ok(i) => self.values[span.start + i],
            Err(_) => 0.0,
        }
    }

    /// All entries as (row, col, weight), row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.nrows).flat_map(move |r| self.row(r).map(move |(c, w)| (r, c, w)))
    }

    pub fn transpose(&self) -> Csr {
        let mut row_ptr = vec![0usize; self.ncols + 1];
        for &c in &self.col_idx {
            row_ptr[c + 1] += 1;
        }
        for i in 0..self.ncols {
            row_ptr[i + 1] += row_ptr[i];
        }
        let mut col_idx = vec![0usize; self.nnz()];
        let mut values = vec![0.0; self.nnz()];
        let mut next = row_ptr.clone();
        for (r, c, w) in self.entries() {
            let pos = next[c];
            col_idx[pos] = r;
            values[pos] = w;
            next[c] += 1;
        }
        Csr {
            nrows: self.ncols,
            ncols: self.nrows,
            row_ptr,
            col_idx,
            values,
        }
    }

    /// Sparse matrix product with a dense per-row accumulator.
    pub fn multiply(&self, other: &Csr) -> Csr {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let n = other.ncols;
        let mut acc = vec![0.0f64; n];
        let mut seen = vec![false; n];
        let mut touched: Vec<usize> = Vec::new();

        let mut row_ptr = vec![0usize; self.nrows + 1];
        let mut col_idx = Vec::new();
        let mut values = Vec::new();
        for r in 0..self.nrows {
            for (k, w1) in self.row(r) {
                for (c, w2) in other.row(k) {
                    if !seen[c] {
                        seen[c] = true;
                        touched.push(c);
                    }
                    acc[c] += w1 * w2;
                }
            }
            touched.sort_unstable();
            for &c in &touched {
                if acc[c] != 0.0 {
                    col_idx.push(c);
                    values.push(acc[c]);
                }
                acc[c] = 0.0;
                seen[c] = false;
            }
            touched.clear();
            row_ptr[r + 1] = col_idx.len();
        }
        Csr {
            nrows: self.nrows,
            ncols: n,
            row_ptr,
            col_idx,
            values,
        }
    }

    /// Replace every stored weight with 1.
    pub fn binarize(&self) -> Csr {
        let mut out = self.clone();
        for v in &mut out.values {
            *v = 1.0;
        }
        out
    }

    /// Multiply row `r` by `factors[r]`. Rows whose factor is 0 are dropped.
    pub fn scale_rows(&self, factors: &[f64]) -> Csr {
        assert_eq!(factors.len(), self.nrows);
        let triplets = self
            .entries()
            .map(|(r, c, w)| (r, c, w * factors[r]))
            .collect();
        Csr::from_triplets(self.nrows, self.ncols, triplets)
    }

    /// Unweighted (count) or weighted row sums.
    pub fn row_degrees(&self, weighted: bool) -> Vec<f64> {
        let mut out = vec![0.0; self.nrows];
        for (r, _, w) in self.entries() {
            out[r] += if weighted { w } else { 1.0 };
        }
        out
    }

    pub fn col_degrees(&self, weighted: bool) -> Vec<f64> {
        let mut out = vec![0.0; self.ncols];
        for (_, c, w) in self.entries() {
            out[c] += if weighted { w } else { 1.0 };
        }
        out
    }

    /// Re-map rows and columns: entries whose row or column maps to `None`
    /// are dropped, the rest are re-indexed (duplicates summed).
    pub fn remap(
        &self,
        nrows: usize,
        ncols: usize,
        row_map: impl Fn(usize) -> Option<usize>,
        col_map: impl Fn(usize) -> Option<usize>,
    ) -> Csr {
        let triplets = self
            .entries()
            .filter_map(|(r, c, w)| Some((row_map(r)?, col_map(c)?, w)))
            .collect();
        Csr::from_triplets(nrows, ncols, triplets)
    }

    pub fn total_weight(&self) -> f64 {
        self.values.iter().sum()
    }
}
