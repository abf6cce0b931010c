use alloc::vec;
use alloc::vec::Vec;

use super::{Fel, FieldCtx};
use crate::{Error, Result};

/// Dense row-major matrix over a finite field. The field is supplied to each
/// operation rather than stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fel>,
}

/// Result of row reduction: rank, pivot columns and the reduced matrix.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: Matrix,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Fel::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Fel::ONE);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Fel>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Fel>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(alloc::format!("row of length {} in {cols} columns", r.len())));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fel {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fel) {
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[Fel] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Fel] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Fel> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix, f: &FieldCtx) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix, f: &FieldCtx) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: Fel, f: &FieldCtx) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(s, a)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: Fel, other: &Matrix, f: &FieldCtx) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(s, b));
        }
    }

    pub fn mul(&self, other: &Matrix, f: &FieldCtx) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, &b) in orow.iter().enumerate() {
                    out.data[base + j] = f.add(out.data[base + j], f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Fel], f: &FieldCtx) -> Vec<Fel> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(Fel::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn pow(&self, mut n: u64, f: &FieldCtx) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    /// Reduced row echelon form.
    pub fn rref(&self, f: &FieldCtx) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place(f);
        Rref { rank: pivots.len(), pivots, reduced: m }
    }

    /// Row reduces in place and returns the pivot columns.
    pub fn rref_in_place(&mut self, f: &FieldCtx) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv_nz(self.get(r, c));
            for j in c..cols {
                let v = f.mul(inv, self.get(r, j));
                self.set(r, j, v);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                let nf = f.neg(factor);
                for j in c..cols {
                    let v = f.add(self.get(i, j), f.mul(nf, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &FieldCtx) -> usize {
        self.clone().rref_in_place(f).len()
    }

    pub fn is_invertible(&self, f: &FieldCtx) -> bool {
        self.is_square() && self.rank(f) == self.rows
    }

    /// Basis (as rows) of the right null space `{x : self · x = 0}`.
    pub fn kernel_basis(&self, f: &FieldCtx) -> Matrix {
        let Rref { pivots, reduced, .. } = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, Fel::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(reduced.get(i, fc)));
            }
        }
        out
    }

    pub fn inverse(&self, f: &FieldCtx) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(alloc::format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Fel::ONE);
        }
        let piv = aug.rref_in_place(f);
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::DivisionByZero);
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(out)
    }

    /// One solution of `self · x = b`, if any.
    pub fn solve(&self, b: &[Fel], f: &FieldCtx) -> Option<Vec<Fel>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let piv = aug.rref_in_place(f);
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Fel::ZERO; self.cols];
        for (i, &pc) in piv.iter().enumerate() {
            x[pc] = aug.get(i, self.cols);
        }
        Some(x)
    }

    /// Block diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Upper Hessenberg form similar to `self`.
    fn hessenberg(&self, f: &FieldCtx) -> Matrix {
        let n = self.rows;
        let mut h = self.clone();
        for k in 0..n.saturating_sub(2) {
            let Some(i) = (k + 1..n).find(|&i| !h.get(i, k).is_zero()) else {
                continue;
            };
            if i != k + 1 {
                for j in 0..n {
                    h.data.swap(i * n + j, (k + 1) * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + k + 1);
                }
            }
            let piv_inv = f.inv_nz(h.get(k + 1, k));
            for r in k + 2..n {
                let u = f.mul(h.get(r, k), piv_inv);
                if u.is_zero() {
                    continue;
                }
                // row_r -= u row_{k+1}; then col_{k+1} += u col_r
                for j in 0..n {
                    let v = f.sub(h.get(r, j), f.mul(u, h.get(k + 1, j)));
                    h.set(r, j, v);
                }
                for s in 0..n {
                    let v = f.add(h.get(s, k + 1), f.mul(u, h.get(s, r)));
                    h.set(s, k + 1, v);
                }
            }
        }
        h
    }

    /// Characteristic polynomial `det(t·I − self)`, ascending coefficients,
    /// monic of degree `n`.
    pub fn char_poly(&self, f: &FieldCtx) -> Vec<Fel> {
        assert!(self.is_square());
        let n = self.rows;
        let h = self.hessenberg(f);
        // p[m] = char poly of the leading m×m block
        let mut p: Vec<Vec<Fel>> = Vec::with_capacity(n + 1);
        p.push(vec![Fel::ONE]);
        for m in 1..=n {
            let prev = &p[m - 1];
            let mut cur = vec![Fel::ZERO; m + 1];
            let hmm = h.get(m - 1, m - 1);
            for (i, &c) in prev.iter().enumerate() {
                cur[i + 1] = f.add(cur[i + 1], c);
                cur[i] = f.sub(cur[i], f.mul(hmm, c));
            }
            let mut prod = Fel::ONE;
            for i in (1..m).rev() {
                prod = f.mul(prod, h.get(i, i - 1));
                if prod.is_zero() {
                    break;
                }
                let coef = f.mul(h.get(i - 1, m - 1), prod);
                for (k, &c) in p[i - 1].iter().enumerate() {
                    cur[k] = f.sub(cur[k], f.mul(coef, c));
                }
            }
            p.push(cur);
        }
        p.pop().unwrap()
    }
}
