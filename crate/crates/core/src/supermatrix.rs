//! Supermatrices over `ℚ` or `Λ_N`.
//!
//! A supermatrix on `k^{m|n}` is split as `[[X, Y], [Z, W]]` with `X` of size `m×m`
//! and `W` of size `n×n`. Indices are 0-based; index `i` is odd iff `i ≥ m`.
//! Entries act on basis vectors from the right (`g(v_j) = Σ_i v_i g_ij`), so the
//! composition of points is the ordinary matrix product.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Parity, Rational, Scalar};

/// Superdimension `m|n` of `k^{m|n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperDim {
    m: usize,
    n: usize,
}

impl SuperDim {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::Dimension("superdimension 0|0".into()));
        }
        Ok(SuperDim { m, n })
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn size(self) -> usize {
        self.m + self.n
    }

    /// Parity of the basis index `i` (0-based).
    pub fn parity(self, i: usize) -> Parity {
        if i < self.m {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Grade of the elementary matrix `e_ij`.
    pub fn entry_parity(self, i: usize, j: usize) -> Parity {
        self.parity(i) + self.parity(j)
    }

    pub fn check_index(self, i: usize) -> Result<()> {
        if i >= self.size() {
            return Err(Error::Index(format!("index {i} outside 0..{} for {self}", self.size())));
        }
        Ok(())
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.m, self.n)
    }
}

#[derive(Clone, PartialEq)]
pub struct SuperMatrix<R: Scalar> {
    dim: SuperDim,
    matrix: Matrix<R>,
}

impl<R: Scalar> fmt::Debug for SuperMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperMatrix({}) {:?}", self.dim, self.matrix)
    }
}

/// The three factors of `g = upper · blockdiag · lower`.
#[derive(Debug, Clone, PartialEq)]
pub struct LduFactors<R: Scalar> {
    pub upper: SuperMatrix<R>,
    pub blockdiag: SuperMatrix<R>,
    pub lower: SuperMatrix<R>,
}

impl<R: Scalar> LduFactors<R> {
    pub fn product(&self) -> Result<SuperMatrix<R>> {
        self.upper.mul(&self.blockdiag)?.mul(&self.lower)
    }
}

/// A value of one of the one-parameter subgroup functors `E_ij` or `H_i`.
#[derive(Debug, Clone, PartialEq)]
pub enum Generator<R: Scalar> {
    E { row: usize, col: usize, value: R },
    H { index: usize, value: R },
}

impl<R: Scalar> Generator<R> {
    pub fn to_matrix(&self, dim: SuperDim) -> Result<SuperMatrix<R>> {
        match self {
            Generator::E { row, col, value } => one_param_e(dim, *row, *col, value.clone()),
            Generator::H { index, value } => one_param_h(dim, *index, value.clone()),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(match self {
            Generator::E { row, col, value } => Generator::E { row: *row, col: *col, value: value.neg() },
            Generator::H { index, value } => Generator::H { index: *index, value: value.inverse()? },
        })
    }
}

impl<R: Scalar> SuperMatrix<R> {
    pub fn new(dim: SuperDim, matrix: Matrix<R>) -> Result<Self> {
        if matrix.rows() != dim.size() || matrix.cols() != dim.size() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for superdimension {dim}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(SuperMatrix { dim, matrix })
    }

    pub fn from_rows(dim: SuperDim, ctx: R::Ctx, rows: Vec<Vec<R>>) -> Result<Self> {
        Self::new(dim, Matrix::from_rows(ctx, rows)?)
    }

    pub fn identity(dim: SuperDim, ctx: R::Ctx) -> Self {
        SuperMatrix { dim, matrix: Matrix::identity(ctx, dim.size()) }
    }

    pub fn zeros(dim: SuperDim, ctx: R::Ctx) -> Self {
        SuperMatrix { dim, matrix: Matrix::zeros(ctx, dim.size(), dim.size()) }
    }

    /// Reassembles `[[x, y], [z, w]]`.
    pub fn from_blocks(dim: SuperDim, x: &Matrix<R>, y: &Matrix<R>, z: &Matrix<R>, w: &Matrix<R>) -> Result<Self> {
        let (m, n) = (dim.m, dim.n);
        let shapes = [(x, m, m), (y, m, n), (z, n, m), (w, n, n)];
        if shapes.iter().any(|(b, r, c)| b.rows() != *r || b.cols() != *c) {
            return Err(Error::Dimension(format!("block shapes do not match {dim}")));
        }
        let ctx = x.ctx();
        let matrix = Matrix::from_fn(ctx, m + n, m + n, |i, j| match (i < m, j < m) {
            (true, true) => x.get(i, j).clone(),
            (true, false) => y.get(i, j - m).clone(),
            (false, true) => z.get(i - m, j).clone(),
            (false, false) => w.get(i - m, j - m).clone(),
        });
        Ok(SuperMatrix { dim, matrix })
    }

    pub fn dim(&self) -> SuperDim {
        self.dim
    }

    pub fn ctx(&self) -> R::Ctx {
        self.matrix.ctx()
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        self.matrix.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.matrix.set(i, j, value);
    }

    pub fn x_block(&self) -> Matrix<R> {
        self.matrix.submatrix(0..self.dim.m, 0..self.dim.m)
    }

    pub fn y_block(&self) -> Matrix<R> {
        self.matrix.submatrix(0..self.dim.m, self.dim.m..self.dim.size())
    }

    pub fn z_block(&self) -> Matrix<R> {
        self.matrix.submatrix(self.dim.m..self.dim.size(), 0..self.dim.m)
    }

    pub fn w_block(&self) -> Matrix<R> {
        self.matrix.submatrix(self.dim.m..self.dim.size(), self.dim.m..self.dim.size())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!("superdimensions {} and {}", self.dim, other.dim)));
        }
        Ok(())
    }

    /// Ordinary product, ring factors kept in row-then-column order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(SuperMatrix { dim: self.dim, matrix: self.matrix.mul(&other.matrix)? })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(SuperMatrix { dim: self.dim, matrix: self.matrix.add(&other.matrix)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(SuperMatrix { dim: self.dim, matrix: self.matrix.sub(&other.matrix)? })
    }

    /// Even diagonal blocks and odd off-diagonal blocks: a point of `End(V)(A)_0`.
    pub fn is_even_point(&self) -> bool {
        let size = self.dim.size();
        (0..size).all(|i| (0..size).all(|j| self.get(i, j).has_parity(self.dim.entry_parity(i, j))))
    }

    /// Even point whose diagonal blocks have invertible bodies: a point of `GL(m|n)(A)`.
    pub fn is_gl_point(&self) -> bool {
        self.is_even_point() && body_invertible(&self.x_block()) && body_invertible(&self.w_block())
    }

    fn require_gl(&self) -> Result<()> {
        if !self.is_even_point() {
            return Err(Error::NotInvertible("not an even point of End(V)(A)".into()));
        }
        if !self.is_gl_point() {
            return Err(Error::NotInvertible("a diagonal block has singular body".into()));
        }
        Ok(())
    }

    /// `str = tr(X) − tr(W)`.
    pub fn supertrace(&self) -> R {
        self.x_block().trace().sub(&self.w_block().trace())
    }

    /// Schur complement `X − Y W⁻¹ Z` together with `W⁻¹`.
    fn schur_complement(&self) -> Result<(Matrix<R>, Matrix<R>)> {
        let w_inv = self.w_block().even_inverse()?;
        let correction = self.y_block().mul(&w_inv)?.mul(&self.z_block())?;
        Ok((self.x_block().sub(&correction)?, w_inv))
    }

    /// `Ber(g) = det(W)⁻¹ · det(X − Y W⁻¹ Z)`.
    pub fn berezinian(&self) -> Result<R> {
        self.require_gl()?;
        let (schur, _) = self.schur_complement()?;
        let det_w_inv = self.w_block().even_det()?.inverse()?;
        Ok(det_w_inv.mul(&schur.even_det()?))
    }

    /// `g = [[I, YW⁻¹], [0, I]] · [[X − YW⁻¹Z, 0], [0, W]] · [[I, 0], [W⁻¹Z, I]]`.
    pub fn ldu_factor(&self) -> Result<LduFactors<R>> {
        self.require_gl()?;
        let (m, n, ctx) = (self.dim.m, self.dim.n, self.ctx());
        let (schur, w_inv) = self.schur_complement()?;
        let zero_mn = Matrix::zeros(ctx, m, n);
        let zero_nm = Matrix::zeros(ctx, n, m);
        let im = Matrix::identity(ctx, m);
        let in_ = Matrix::identity(ctx, n);
        let upper = Self::from_blocks(self.dim, &im, &self.y_block().mul(&w_inv)?, &zero_nm, &in_)?;
        let blockdiag = Self::from_blocks(self.dim, &schur, &zero_mn, &zero_nm, &self.w_block())?;
        let lower = Self::from_blocks(self.dim, &im, &zero_mn, &w_inv.mul(&self.z_block())?, &in_)?;
        Ok(LduFactors { upper, blockdiag, lower })
    }

    /// Writes a GL point as a product of `E_ij` and `H_i` values.
    ///
    /// The off-diagonal factors of [`ldu_factor`](Self::ldu_factor) split into odd
    /// `E_ij`; each diagonal block is reduced to the identity by body-pivoted row
    /// operations, which are themselves even `E_ij` and `H_i`.
    pub fn generator_word(&self) -> Result<Vec<Generator<R>>> {
        let f = self.ldu_factor()?;
        let (m, size) = (self.dim.m, self.dim.size());
        let mut word = Vec::new();
        for i in 0..m {
            for j in m..size {
                push_e(&mut word, i, j, f.upper.get(i, j));
            }
        }
        word.extend(diagonal_block_word(&f.blockdiag.x_block(), 0)?);
        word.extend(diagonal_block_word(&f.blockdiag.w_block(), m)?);
        for i in m..size {
            for j in 0..m {
                push_e(&mut word, i, j, f.lower.get(i, j));
            }
        }
        Ok(word)
    }
}

fn push_e<R: Scalar>(word: &mut Vec<Generator<R>>, row: usize, col: usize, value: &R) {
    if !value.vanishes() {
        word.push(Generator::E { row, col, value: value.clone() });
    }
}

fn body_invertible<R: Scalar>(block: &Matrix<R>) -> bool {
    use num_traits::Zero;
    block.body().even_det().map(|d| !d.is_zero()).unwrap_or(false)
}

/// Word for an invertible even block placed at diagonal offset `offset`.
fn diagonal_block_word<R: Scalar>(block: &Matrix<R>, offset: usize) -> Result<Vec<Generator<R>>> {
    use num_traits::Zero;
    let k = block.rows();
    let ctx = block.ctx();
    let mut a = block.clone();
    let mut ops: Vec<Generator<R>> = Vec::new();
    // left-multiplies `a` by I + x e_ij
    let add_row = |a: &mut Matrix<R>, i: usize, j: usize, x: &R| {
        for c in 0..k {
            let v = a.get(i, c).add(&x.mul(a.get(j, c)));
            a.set(i, c, v);
        }
    };
    for col in 0..k {
        if a.get(col, col).body().is_zero() {
            let src = (col + 1..k)
                .find(|&r| !a.get(r, col).body().is_zero())
                .ok_or_else(|| Error::NotInvertible("diagonal block has singular body".into()))?;
            let one = R::one_in(ctx);
            add_row(&mut a, col, src, &one);
            ops.push(Generator::E { row: offset + col, col: offset + src, value: one });
        }
        let pivot_inv = a.get(col, col).inverse()?;
        for c in 0..k {
            let v = pivot_inv.mul(a.get(col, c));
            a.set(col, c, v);
        }
        if !pivot_inv.equals_one() {
            ops.push(Generator::H { index: offset + col, value: pivot_inv });
        }
        for row in 0..k {
            if row == col || a.get(row, col).vanishes() {
                continue;
            }
            let x = a.get(row, col).neg();
            add_row(&mut a, row, col, &x);
            ops.push(Generator::E { row: offset + row, col: offset + col, value: x });
        }
    }
    // ops_t ⋯ ops_1 · block = I, so block = ops_1⁻¹ ⋯ ops_t⁻¹
    ops.iter().map(Generator::inverse).collect()
}

/// Multiplies out a generator word.
pub fn word_product<R: Scalar>(dim: SuperDim, ctx: R::Ctx, word: &[Generator<R>]) -> Result<SuperMatrix<R>> {
    word.iter()
        .try_fold(SuperMatrix::identity(dim, ctx), |acc, g| acc.mul(&g.to_matrix(dim)?))
}

/// `E_ij(x) = I + x e_ij`, with `x` of parity `p(i) + p(j)`.
pub fn one_param_e<R: Scalar>(dim: SuperDim, i: usize, j: usize, x: R) -> Result<SuperMatrix<R>> {
    dim.check_index(i)?;
    dim.check_index(j)?;
    if i == j {
        return Err(Error::Index("E_ij needs i ≠ j".into()));
    }
    let want = dim.entry_parity(i, j);
    if !x.has_parity(want) {
        return Err(Error::Parity(format!("E_{i}{j} needs an {want} parameter, got {x:?}")));
    }
    let mut g = SuperMatrix::identity(dim, x.ctx());
    g.set(i, j, x);
    Ok(g)
}

/// `H_i(x) = I + (x − 1) e_ii` for even invertible `x`.
pub fn one_param_h<R: Scalar>(dim: SuperDim, i: usize, x: R) -> Result<SuperMatrix<R>> {
    dim.check_index(i)?;
    if !x.has_parity(Parity::Even) {
        return Err(Error::Parity(format!("H_{i} needs an even parameter, got {x:?}")));
    }
    if num_traits::Zero::is_zero(&x.body()) {
        return Err(Error::NotInvertible(format!("H_{i} parameter {x:?} has zero body")));
    }
    let mut g = SuperMatrix::identity(dim, x.ctx());
    g.set(i, i, x);
    Ok(g)
}

impl SuperMatrix<Rational> {
    pub fn lift<S: Scalar>(&self, ctx: S::Ctx) -> SuperMatrix<S> {
        SuperMatrix { dim: self.dim, matrix: self.matrix.lift(ctx) }
    }
}

/// A homogeneous element of `gl(m|n)` over `ℚ`.
///
/// Even elements live in the diagonal blocks, odd ones in the off-diagonal blocks.
/// The zero matrix is homogeneous of both parities and keeps the declared one.
#[derive(Debug, Clone, PartialEq)]
pub struct GlElement {
    matrix: SuperMatrix<Rational>,
    parity: Parity,
}

impl GlElement {
    pub fn new(matrix: SuperMatrix<Rational>, parity: Parity) -> Result<Self> {
        let dim = matrix.dim();
        let size = dim.size();
        for i in 0..size {
            for j in 0..size {
                if dim.entry_parity(i, j) != parity && !num_traits::Zero::is_zero(matrix.get(i, j)) {
                    return Err(Error::Parity(format!(
                        "entry ({i},{j}) is nonzero in an {parity} element of gl({dim})"
                    )));
                }
            }
        }
        Ok(GlElement { matrix, parity })
    }

    /// Reads off the parity from the block pattern; zero counts as even.
    pub fn infer(matrix: SuperMatrix<Rational>) -> Result<Self> {
        Self::new(matrix.clone(), Parity::Even).or_else(|_| Self::new(matrix, Parity::Odd)).map_err(|_| {
            Error::Parity("matrix has both diagonal and off-diagonal entries".into())
        })
    }

    /// The graded basis element `e_ij`, of parity `p(i) + p(j)`.
    pub fn elementary(dim: SuperDim, i: usize, j: usize) -> Result<Self> {
        dim.check_index(i)?;
        dim.check_index(j)?;
        let mut matrix = SuperMatrix::zeros(dim, ());
        matrix.set(i, j, Rational::from_integer(1.into()));
        Ok(GlElement { matrix, parity: dim.entry_parity(i, j) })
    }

    /// All `e_ij`, row-major.
    pub fn elementary_basis(dim: SuperDim) -> Vec<Self> {
        let size = dim.size();
        (0..size)
            .flat_map(|i| (0..size).map(move |j| (i, j)))
            .map(|(i, j)| Self::elementary(dim, i, j).expect("index in range"))
            .collect()
    }

    pub fn zero(dim: SuperDim, parity: Parity) -> Self {
        GlElement { matrix: SuperMatrix::zeros(dim, ()), parity }
    }

    pub fn dim(&self) -> SuperDim {
        self.matrix.dim()
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn matrix(&self) -> &SuperMatrix<Rational> {
        &self.matrix
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        GlElement { matrix: SuperMatrix { dim: self.dim(), matrix: self.matrix.matrix.map(|x| x * c) }, parity: self.parity }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.parity != other.parity {
            return Err(Error::Parity("sum of elements of different parity".into()));
        }
        Ok(GlElement { matrix: self.matrix.add(&other.matrix)?, parity: self.parity })
    }

    /// Superbracket `{X, Y} = XY − (−1)^{p(X)p(Y)} YX`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        let xy = self.matrix.mul(&other.matrix)?;
        let yx = other.matrix.mul(&self.matrix)?;
        let matrix = if self.parity.koszul(other.parity) { xy.add(&yx)? } else { xy.sub(&yx)? };
        Ok(GlElement { matrix, parity: self.parity + other.parity })
    }

    /// The point `a·X` of `gl(m|n)(A)`: every entry multiplied by `a`.
    pub fn point<R: Scalar>(&self, a: &R) -> Result<SuperMatrix<R>> {
        if !a.has_parity(self.parity) {
            return Err(Error::Parity(format!("coefficient {a:?} does not match an {} element", self.parity)));
        }
        let lifted: SuperMatrix<R> = self.matrix.lift(a.ctx());
        Ok(SuperMatrix { dim: self.dim(), matrix: lifted.matrix.scale_left(a) })
    }

    /// Image of `a ⊗ X` in supermatrices: entry `(i, j)` is `(−1)^{p(a)p(i)} a X_ij`.
    ///
    /// This embedding turns the super tensor product `A ⊗ End(V)` into ordinary
    /// matrix multiplication, so brackets of points follow the even rules.
    pub fn tensor_point<R: Scalar>(&self, a: &R) -> Result<SuperMatrix<R>> {
        let dim = self.dim();
        let mut out = self.point(a)?;
        let a_odd = self.parity.is_odd() && !a.vanishes();
        for i in dim.m..dim.size() {
            for j in 0..dim.size() {
                let v = out.get(i, j).signed(a_odd);
                out.set(i, j, v);
            }
        }
        Ok(out)
    }
}

/// Superbracket on homogeneous elements of `gl(m|n)`.
pub fn gl_superbracket(x: &GlElement, y: &GlElement) -> Result<GlElement> {
    x.bracket(y)
}
