//! Dense rectangular matrices over a [`Scalar`] ring.
//!
//! Products keep the left-to-right order of ring factors, which matters over `Λ_N`.
//! Determinants and inverses assume the entries commute, i.e. they are meant for
//! matrices over `ℚ` or over the even part of `Λ_N`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Parity, Rational, Scalar};

/// Blocks up to this size use cofactor expansion; larger ones go through Bareiss.
pub const COFACTOR_LIMIT: usize = 4;

#[derive(Clone, PartialEq)]
pub struct Matrix<R: Scalar> {
    rows: usize,
    cols: usize,
    ctx: R::Ctx,
    data: Vec<R>,
}

impl<R: Scalar> Matrix<R> {
    pub fn zeros(ctx: R::Ctx, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, ctx, data: vec![R::zero_in(ctx); rows * cols] }
    }

    pub fn identity(ctx: R::Ctx, size: usize) -> Self {
        let mut out = Self::zeros(ctx, size, size);
        for i in 0..size {
            out.data[i * size + i] = R::one_in(ctx);
        }
        out
    }

    pub fn from_fn(ctx: R::Ctx, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, ctx, data }
    }

    /// Builds from row vectors; every entry must belong to `ctx`.
    pub fn from_rows(ctx: R::Ctx, rows: Vec<Vec<R>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Dimension("ragged rows".into()));
            }
            for entry in row {
                if entry.ctx() != ctx {
                    return Err(Error::Dimension(format!(
                        "entry context {:?} differs from {:?}",
                        entry.ctx(),
                        ctx
                    )));
                }
                data.push(entry);
            }
        }
        Ok(Matrix { rows: nrows, cols: ncols, ctx, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> R::Ctx {
        self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::vanishes)
    }

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::Dimension(format!(
                "coefficient rings differ: {:?} vs {:?}",
                self.ctx, other.ctx
            )));
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        self.check_ctx(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, R::add))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, R::sub))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        Matrix { rows: self.rows, cols: self.cols, ctx: self.ctx, data: self.data.iter().map(f).collect() }
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    /// `c · A` with `c` multiplied from the left of every entry.
    pub fn scale_left(&self, c: &R) -> Self {
        self.map(|x| c.mul(x))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.vanishes() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.vanishes() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(self.ctx, rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn trace(&self) -> R {
        (0..self.rows.min(self.cols)).fold(R::zero_in(self.ctx), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn all_have_parity(&self, parity: Parity) -> bool {
        self.data.iter().all(|x| x.has_parity(parity))
    }

    /// Entry-wise body, a matrix over `ℚ`.
    pub fn body(&self) -> Matrix<Rational> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: (),
            data: self.data.iter().map(R::body).collect(),
        }
    }

    fn require_even_square(&self, what: &str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("{what} of a {}x{} matrix", self.rows, self.cols)));
        }
        if !self.all_have_parity(Parity::Even) {
            return Err(Error::Parity(format!("{what} needs even (commuting) entries")));
        }
        Ok(())
    }

    /// Determinant of a matrix with even entries.
    ///
    /// Cofactor expansion up to [`COFACTOR_LIMIT`], Bareiss elimination with
    /// body-invertible pivots above it, falling back to expansion when no such pivot
    /// exists (the determinant is then nilpotent but possibly nonzero).
    pub fn even_det(&self) -> Result<R> {
        self.require_even_square("determinant")?;
        if self.rows <= COFACTOR_LIMIT {
            Ok(self.det_cofactor())
        } else {
            Ok(self.det_bareiss().unwrap_or_else(|| self.det_cofactor()))
        }
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> R {
        let idx: Vec<usize> = (0..self.rows).collect();
        self.cofactor_rec(1, &idx)
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> R {
        let r = row - 1;
        if cols.is_empty() {
            return R::one_in(self.ctx);
        }
        let mut acc = R::zero_in(self.ctx);
        for (pos, &c) in cols.iter().enumerate() {
            let a = self.get(r, c);
            if a.vanishes() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a.mul(&self.cofactor_rec(row + 1, &rest));
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    /// Fraction-free elimination; `None` if some step has no body-invertible pivot.
    pub fn det_bareiss(&self) -> Option<R> {
        let n = self.rows;
        if n == 0 {
            return Some(R::one_in(self.ctx));
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev_inv = R::one_in(self.ctx);
        for k in 0..n - 1 {
            let pivot_row = (k..n).find(|&i| !num_traits::Zero::is_zero(&m.get(i, k).body()))?;
            if pivot_row != k {
                for j in 0..n {
                    m.data.swap(k * n + j, pivot_row * n + j);
                }
                negate = !negate;
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = pivot.mul(m.get(i, j)).sub(&m.get(i, k).mul(m.get(k, j)));
                    m.set(i, j, v.mul(&prev_inv));
                }
                m.set(i, k, R::zero_in(self.ctx));
            }
            prev_inv = pivot.inverse().ok()?;
        }
        Some(m.get(n - 1, n - 1).signed(negate))
    }

    /// Inverse of a matrix with even entries and invertible body, by Gauss-Jordan.
    pub fn even_inverse(&self) -> Result<Self> {
        self.require_even_square("inverse")?;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(self.ctx, n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&i| !num_traits::Zero::is_zero(&a.get(i, col).body()))
                .ok_or_else(|| Error::NotInvertible("singular body".into()))?;
            a.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            let p_inv = a.get(col, col).inverse()?;
            a.scale_row(col, &p_inv);
            inv.scale_row(col, &p_inv);
            for i in 0..n {
                if i == col || a.get(i, col).vanishes() {
                    continue;
                }
                let factor = a.get(i, col).clone();
                a.sub_row_multiple(i, col, &factor);
                inv.sub_row_multiple(i, col, &factor);
            }
        }
        Ok(inv)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: &R) {
        for j in 0..self.cols {
            let v = c.mul(self.get(i, j));
            self.set(i, j, v);
        }
    }

    /// `row_i -= factor · row_src`.
    fn sub_row_multiple(&mut self, i: usize, src: usize, factor: &R) {
        for j in 0..self.cols {
            let v = self.get(i, j).sub(&factor.mul(self.get(src, j)));
            self.set(i, j, v);
        }
    }
}

impl Matrix<Rational> {
    /// Re-reads a rational matrix with entries in another ring.
    pub fn lift<S: Scalar>(&self, ctx: S::Ctx) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx,
            data: self.data.iter().map(|x| S::from_rational(ctx, x.clone())).collect(),
        }
    }
}

impl<R: Scalar> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        f.write_str("]")
    }
}
