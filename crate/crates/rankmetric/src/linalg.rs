//! Dense matrices over the prime field GF(q): Gaussian elimination, reduced
//! row echelon form, rank, and inversion. All arithmetic is exact.
//!
//! Pivoting is deterministic (first nonzero column, first usable row), so
//! RREF output is the canonical representative of a row space and can be
//! compared for equality directly.

use crate::gf::{sadd, sinv, smul, ssub};

/// Row-major matrix over GF(q).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    q: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Outcome of reduced row echelon elimination.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: QMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl QMatrix {
    pub fn zeros(q: u64, rows: usize, cols: usize) -> Self {
        QMatrix {
            q,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(q: u64, n: usize) -> Self {
        let mut m = Self::zeros(q, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from explicit rows; entries are reduced mod q.
    pub fn from_rows(q: u64, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row.iter().map(|&x| x % q));
        }
        QMatrix {
            q,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.q;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zeros(self.q, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.q, other.q, "mixed moduli");
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = QMatrix::zeros(self.q, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let add = smul(self.q, a, other.get(k, c));
                    let idx = r * other.cols + c;
                    out.data[idx] = sadd(self.q, out.data[idx], add);
                }
            }
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.q, other.q, "mixed moduli");
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        QMatrix {
            q: self.q,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Rank by forward elimination on a scratch copy.
    pub fn rank(&self) -> usize {
        let q = self.q;
        let mut data = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot = (rank..rows).find(|&r| data[r * cols + col] != 0);
            let Some(p) = pivot else { continue };
            if p != rank {
                for c in col..cols {
                    data.swap(rank * cols + c, p * cols + c);
                }
            }
            let inv = sinv(q, data[rank * cols + col]);
            for r in rank + 1..rows {
                let factor = data[r * cols + col];
                if factor == 0 {
                    continue;
                }
                let scale = smul(q, factor, inv);
                for c in col..cols {
                    let sub = smul(q, scale, data[rank * cols + c]);
                    data[r * cols + c] = ssub(q, data[r * cols + c], sub);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form with deterministic pivot order.
    pub fn rref(&self) -> Rref {
        let q = self.q;
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| m.get(i, col) != 0) else {
                continue;
            };
            if p != r {
                for c in 0..cols {
                    m.data.swap(r * cols + c, p * cols + c);
                }
            }
            let inv = sinv(q, m.get(r, col));
            for c in col..cols {
                let v = smul(q, m.get(r, c), inv);
                m.data[r * cols + c] = v;
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, col);
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = smul(q, factor, m.get(r, c));
                    m.data[i * cols + c] = ssub(q, m.get(i, c), sub);
                }
            }
            pivots.push(col);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_space_basis(&self) -> QMatrix {
        let rref = self.rref();
        let mut data = Vec::with_capacity(rref.rank * self.cols);
        for r in 0..rref.rank {
            data.extend_from_slice(rref.matrix.row(r));
        }
        QMatrix {
            q: self.q,
            rows: rref.rank,
            cols: self.cols,
            data,
        }
    }

    /// Inverse of a square matrix, or None if singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        // Eliminate on [A | I].
        let mut aug = QMatrix::zeros(self.q, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let rref = aug.rref();
        if rref.rank < n || rref.pivots.iter().take(n).ne((0..n).by_ref()) {
            return None;
        }
        let mut out = QMatrix::zeros(self.q, n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, rref.matrix.get(r, n + c));
            }
        }
        Some(out)
    }
}
