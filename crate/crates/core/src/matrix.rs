//! Dense matrices over the Gaussian rationals.
//!
//! Row reduction, kernels, inverses and characteristic polynomials are all
//! exact. The characteristic polynomial goes through a similarity reduction
//! to Hessenberg form followed by the column recurrence, which keeps the cost
//! at O(n^3) coefficient operations; the cofactor expansion only appears in
//! tests as an independent oracle.
//!
//! Target sizes are desk scale (ad operators of the classical algebras up to
//! a few dozen rows), so everything is dense and row major.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;



use crate::poly::Poly;
use crate::scalar::{GaussianRational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixError {
    NonSquare,
    DimensionMismatch,
    DependentVectors,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::NonSquare => write!(f, "matrix is not square"),
            MatrixError::DimensionMismatch => write!(f, "matrix dimensions do not match"),
            MatrixError::DependentVectors => write!(f, "vectors are linearly dependent"),
        }
    }
}

/// Dense matrix over Q(i), entries row major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::DimensionMismatch);
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer test matrices; rows of equal length required.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussianRational::from_int(v)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// True when every entry has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|e| e.is_real())
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn trace(&self) -> GaussianRational {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut acc = GaussianRational::zero();
        for i in 0..self.rows {
            acc = &acc + self.at(i, i);
        }
        acc
    }

    pub fn scale(&self, c: &GaussianRational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "dimension mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "dimension mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.cols == rhs.rows, "dimension mismatch in product");
        let mut out = ExactMatrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let cur = out.at(r, c) + &prod;
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    /// `[A, B] = AB - BA`.
    pub fn bracket(&self, rhs: &ExactMatrix) -> ExactMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn pow(&self, mut k: usize) -> ExactMatrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = ExactMatrix::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for (c, entry) in v.iter().enumerate() {
                    if !entry.is_zero() && !self.at(r, c).is_zero() {
                        let prod = self.at(r, c) * entry;
                        acc = &acc + &prod;
                    }
                }
                acc
            })
            .collect()
    }

    /// Row-major flattening.
    pub fn vectorize(&self) -> Vec<GaussianRational> {
        self.entries.clone()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m.at(row, col).inv().unwrap();
            for c in col..m.cols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c) - &(&factor * m.at(row, c));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the right null space `{v : Mv = 0}`.
    ///
    /// Size is `cols - rank`; each vector has a 1 in its free coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussianRational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().copied().peekable();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let _ = &mut pivot_iter;
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[free] = GaussianRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant by fraction-producing elimination; exact.
    pub fn det(&self) -> Result<GaussianRational, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare);
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = GaussianRational::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(GaussianRational::zero());
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = -&det;
            }
            let pivot = m.at(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inv().unwrap();
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col) * &inv;
                for c in col..n {
                    let v = m.at(r, c) - &(&factor * m.at(col, c));
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse; `None` when singular, error when non-square.
    pub fn inverse(&self) -> Result<Option<ExactMatrix>, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare);
        }
        let n = self.rows;
        let mut aug = ExactMatrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Ok(None);
        }
        aug = red;
        Ok(Some(ExactMatrix::from_fn(n, n, |r, c| {
            aug.at(r, n + c).clone()
        })))
    }

    /// Characteristic polynomial `det(tI - M)`, monic of degree `rows`.
    pub fn charpoly(&self) -> Result<Poly, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        let h = self.hessenberg();
        // Column recurrence: p_0 = 1 and
        //   p_m = (t - h[m-1][m-1]) p_{m-1}
        //         - sum_{j=1}^{m-1} h[m-1-j][m-1] (prod_{l=1}^{j} h[m-l][m-l-1]) p_{m-1-j}.
        let t = Poly::monomial(GaussianRational::one(), 1);
        let mut ps: Vec<Poly> = vec![Poly::one()];
        for m in 1..=n {
            let head = &(&t - &Poly::constant(h.at(m - 1, m - 1).clone())) * &ps[m - 1];
            let mut acc = head;
            let mut subdiag = GaussianRational::one();
            for j in 1..m {
                subdiag = &subdiag * h.at(m - j, m - j - 1);
                if subdiag.is_zero() {
                    break;
                }
                let coeff = &subdiag * h.at(m - 1 - j, m - 1);
                if coeff.is_zero() {
                    continue;
                }
                let term = ps[m - 1 - j].scale(&coeff);
                acc = &acc - &term;
            }
            ps.push(acc);
        }
        Ok(ps.pop().unwrap())
    }

    /// Similarity reduction to upper Hessenberg form by exact elimination.
    fn hessenberg(&self) -> ExactMatrix {
        let n = self.rows;
        let mut h = self.clone();
        for col in 0..n.saturating_sub(2) {
            let Some(pr) = (col + 1..n).find(|&r| !h.at(r, col).is_zero()) else {
                continue;
            };
            if pr != col + 1 {
                // Similarity swap: rows and the matching columns.
                h.swap_rows(col + 1, pr);
                for r in 0..n {
                    let a = h.at(r, col + 1).clone();
                    let b = h.at(r, pr).clone();
                    h.set(r, col + 1, b);
                    h.set(r, pr, a);
                }
            }
            let inv = h.at(col + 1, col).inv().unwrap();
            for r in col + 2..n {
                if h.at(r, col).is_zero() {
                    continue;
                }
                let factor = h.at(r, col) * &inv;
                // Row operation: row r -= factor * row col+1 ...
                for c in 0..n {
                    let v = h.at(r, c) - &(&factor * h.at(col + 1, c));
                    h.set(r, c, v);
                }
                // ... and the inverse column operation: col col+1 += factor * col r.
                for rr in 0..n {
                    let v = h.at(rr, col + 1) + &(&factor * h.at(rr, r));
                    h.set(rr, col + 1, v);
                }
            }
        }
        h
    }

    /// Evaluates a polynomial at a square matrix by Horner's rule.
    pub fn eval_poly(&self, p: &Poly) -> ExactMatrix {
        assert!(self.is_square(), "polynomial of a non-square matrix");
        let n = self.rows;
        let mut acc = ExactMatrix::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = acc.at(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Real part check helper used by the real-form interfaces.
    pub fn real_entries(&self) -> Option<Vec<Rational>> {
        if !self.is_real() {
            return None;
        }
        Some(self.entries.iter().map(|e| e.re.clone()).collect())
    }

    /// Stacks matrices of equal width on top of each other.
    pub fn stack_vertical(parts: &[ExactMatrix]) -> Result<ExactMatrix, MatrixError> {
        let Some(first) = parts.first() else {
            return Ok(ExactMatrix::zero(0, 0));
        };
        let cols = first.cols;
        if parts.iter().any(|p| p.cols != cols) {
            return Err(MatrixError::DimensionMismatch);
        }
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for p in parts {
            entries.extend(p.entries.iter().cloned());
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<GaussianRational>]) -> Result<ExactMatrix, MatrixError> {
        let Some(first) = cols.first() else {
            return Ok(ExactMatrix::zero(0, 0));
        };
        let len = first.len();
        if cols.iter().any(|c| c.len() != len) {
            return Err(MatrixError::DimensionMismatch);
        }
        Ok(ExactMatrix::from_fn(len, cols.len(), |r, c| cols[c][r].clone()))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} matrix:", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// Coordinate solver for a fixed independent spanning set.
///
/// Construction row-reduces once; every later `coords` query is a single
/// back-substitution plus a full residual check, so membership in the span is
/// decided exactly.
pub struct SpanSolver {
    matrix: ExactMatrix,
    selected_rows: Vec<usize>,
    inverse: ExactMatrix,
}

impl SpanSolver {
    pub fn new(vectors: &[Vec<GaussianRational>]) -> Result<Self, MatrixError> {
        let matrix = ExactMatrix::from_columns(vectors)?;
        let m = vectors.len();
        // Pivot columns of the transpose are independent rows of `matrix`.
        let (_, selected_rows) = matrix.transpose().rref();
        if selected_rows.len() != m {
            return Err(MatrixError::DependentVectors);
        }
        let square = ExactMatrix::from_fn(m, m, |r, c| matrix.at(selected_rows[r], c).clone());
        let inverse = square
            .inverse()?
            .expect("selected rows form an invertible matrix");
        Ok(SpanSolver {
            matrix,
            selected_rows,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.selected_rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selected_rows.is_empty()
    }

    /// Coordinates of `v` in the spanning set, or `None` if `v` is outside
    /// the span.
    pub fn coords(&self, v: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        if v.len() != self.matrix.rows() {
            return None;
        }
        let rhs: Vec<GaussianRational> = self
            .selected_rows
            .iter()
            .map(|&r| v[r].clone())
            .collect();
        let x = self.inverse.apply(&rhs);
        let reconstructed = self.matrix.apply(&x);
        if reconstructed
            .iter()
            .zip(v)
            .all(|(a, b)| a == b)
        {
            Some(x)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        self.coords(v).is_some()
    }
}
