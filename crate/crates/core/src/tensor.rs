//! The tensor superspace `T^r(k^{m|n})` and the three actions on it.
//!
//! Basis words are indexed lexicographically, so `T^r(V)` has basis indices
//! `0..(m+n)^r`. A [`TensorOperator`] stores the image of word `k` in column `k`.
//!
//! - `τ_r`: the signed right action of `S_r`, `w·σ = ε w_{σ(1)} ⊗ ⋯ ⊗ w_{σ(r)}`,
//!   where `ε` is the Koszul sign of the rearrangement.
//! - `θ_r`: the derivation action of a homogeneous `X ∈ gl(m|n)`, with sign
//!   `(−1)^{p(X)·o(i)}` and `o(i)` the number of odd letters strictly before `i`.
//! - `ρ_r`: the diagonal action `g(v_1) ⊗ ⋯ ⊗ g(v_r)` of a point of `GL(m|n)(A)`.
//!   Coefficients are collected on the right of the basis word, which makes `ρ_r`
//!   multiplicative for the ordinary supermatrix product.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Parity, Rational, Scalar};
use crate::supermatrix::{GlElement, SuperDim, SuperMatrix};

/// `(m+n)^r`, the dimension of `T^r(V)`.
pub fn tensor_dim(dim: SuperDim, r: usize) -> Result<usize> {
    u32::try_from(r)
        .ok()
        .and_then(|r| dim.size().checked_pow(r))
        .ok_or_else(|| Error::Dimension(format!("({dim})^{r} overflows")))
}

/// A basis tensor `v_{l_1} ⊗ ⋯ ⊗ v_{l_r}`, letters 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisWord {
    dim: SuperDim,
    letters: Vec<usize>,
}

impl BasisWord {
    pub fn new(dim: SuperDim, letters: Vec<usize>) -> Result<Self> {
        for &l in &letters {
            dim.check_index(l)?;
        }
        Ok(BasisWord { dim, letters })
    }

    pub fn from_index(dim: SuperDim, r: usize, mut index: usize) -> Self {
        let base = dim.size();
        let mut letters = vec![0; r];
        for slot in letters.iter_mut().rev() {
            *slot = index % base;
            index /= base;
        }
        BasisWord { dim, letters }
    }

    pub fn index(&self) -> usize {
        let base = self.dim.size();
        self.letters.iter().fold(0, |acc, &l| acc * base + l)
    }

    pub fn dim(&self) -> SuperDim {
        self.dim
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    pub fn letter_parity(&self, pos: usize) -> Parity {
        self.dim.parity(self.letters[pos])
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.odd_count(0..self.degree()))
    }

    /// Number of odd letters at the given positions.
    pub fn odd_count(&self, positions: std::ops::Range<usize>) -> usize {
        self.letters[positions].iter().filter(|&&l| self.dim.parity(l).is_odd()).count()
    }

    fn with_letter(&self, pos: usize, letter: usize) -> Self {
        let mut letters = self.letters.clone();
        letters[pos] = letter;
        BasisWord { dim: self.dim, letters }
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| format!("v{}", l + 1)).collect();
        f.write_str(&parts.join("⊗"))
    }
}

/// All basis words of `T^r(V)` in index order.
pub fn words(dim: SuperDim, r: usize) -> Result<impl Iterator<Item = BasisWord>> {
    let total = tensor_dim(dim, r)?;
    Ok((0..total).map(move |k| BasisWord::from_index(dim, r, k)))
}

/// A permutation of `{0, …, r−1}` given by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

/// How to split a permutation into transpositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decomposition {
    /// Adjacent transpositions, from bubble sort.
    Adjacent,
    /// Arbitrary transpositions, one per misplaced point, following the cycles.
    Cycles,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &x in &images {
            if x >= r || seen[x] {
                return Err(Error::Permutation(format!("{images:?} is not a permutation of 0..{r}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    /// 1-based images, as usually written.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Permutation("0 in a 1-based permutation".into()));
        }
        Self::new(images.iter().map(|x| x - 1).collect())
    }

    pub fn identity(r: usize) -> Self {
        Permutation((0..r).collect())
    }

    pub fn transposition(r: usize, i: usize, j: usize) -> Result<Self> {
        if i >= r || j >= r {
            return Err(Error::Index(format!("transposition ({i} {j}) in S_{r}")));
        }
        let mut images: Vec<usize> = (0..r).collect();
        images.swap(i, j);
        Ok(Permutation(images))
    }

    /// All of `S_r` in lexicographic order of the image list.
    pub fn all(r: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..r).collect();
        loop {
            out.push(Permutation(current.clone()));
            // next lexicographic permutation
            let Some(i) = (1..r).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..r).rev().find(|&j| current[j] > current[i - 1]).expect("successor exists");
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k]
    }

    /// `σπ`, the composite `k ↦ σ(π(k))`; with it `(w·σ)·π = w·(σπ)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::Permutation("composing permutations of different degree".into()));
        }
        Ok(Permutation(other.0.iter().map(|&k| self.0[k]).collect()))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (k, &x) in self.0.iter().enumerate() {
            inv[x] = k;
        }
        Permutation(inv)
    }

    /// Transpositions `t_1, …, t_k` with `σ = t_1 t_2 ⋯ t_k`.
    pub fn transpositions(&self, strategy: Decomposition) -> Vec<(usize, usize)> {
        // sort the image list by right-multiplying with transpositions:
        // σ t'_1 ⋯ t'_k = id, hence σ = t'_k ⋯ t'_1
        let mut cur = self.0.clone();
        let mut swaps = Vec::new();
        match strategy {
            Decomposition::Adjacent => {
                let r = cur.len();
                for pass in 0..r {
                    for k in 0..r.saturating_sub(pass + 1) {
                        if cur[k] > cur[k + 1] {
                            cur.swap(k, k + 1);
                            swaps.push((k, k + 1));
                        }
                    }
                }
            }
            Decomposition::Cycles => {
                for k in 0..cur.len() {
                    if cur[k] != k {
                        let p = cur.iter().position(|&x| x == k).expect("permutation");
                        cur.swap(k, p);
                        swaps.push((k, p));
                    }
                }
            }
        }
        swaps.reverse();
        swaps
    }
}

/// `w·(i j)`: swaps the letters at positions `i` and `j` with the Koszul sign.
///
/// For adjacent positions the sign is `−1` exactly when both letters are odd; in
/// general the two letters also pass the odd letters between them.
/// Returns `(negative, word)`.
pub fn tau_transposition(i: usize, j: usize, word: &BasisWord) -> Result<(bool, BasisWord)> {
    let r = word.degree();
    if i >= r || j >= r || i == j {
        return Err(Error::Index(format!("positions ({i}, {j}) for a word of length {r}")));
    }
    let (lo, hi) = (i.min(j), i.max(j));
    let p_lo = word.letter_parity(lo).bit();
    let p_hi = word.letter_parity(hi).bit();
    let between = word.odd_count(lo + 1..hi);
    let negative = (p_lo * p_hi + (p_lo + p_hi) * between) % 2 == 1;
    let mut letters = word.letters.clone();
    letters.swap(lo, hi);
    Ok((negative, BasisWord { dim: word.dim, letters }))
}

/// Applies `t_1`, then `t_2`, …: `w·(t_1 t_2 ⋯ t_k)`.
pub fn act_by_transpositions(word: &BasisWord, ts: &[(usize, usize)]) -> Result<(bool, BasisWord)> {
    ts.iter().try_fold((false, word.clone()), |(neg, w), &(i, j)| {
        let (flip, next) = tau_transposition(i, j, &w)?;
        Ok((neg ^ flip, next))
    })
}

/// An endomorphism of `T^r(V)` as a dense `(m+n)^r` square matrix.
#[derive(Clone, PartialEq)]
pub struct TensorOperator<R: Scalar> {
    dim: SuperDim,
    degree: usize,
    matrix: Matrix<R>,
}

impl<R: Scalar> fmt::Debug for TensorOperator<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorOperator(T^{}({})) {:?}", self.degree, self.dim, self.matrix)
    }
}

impl<R: Scalar> TensorOperator<R> {
    pub fn new(dim: SuperDim, degree: usize, matrix: Matrix<R>) -> Result<Self> {
        let size = tensor_dim(dim, degree)?;
        if matrix.rows() != size || matrix.cols() != size {
            return Err(Error::Dimension(format!("operator on T^{degree}({dim}) must be {size}x{size}")));
        }
        Ok(TensorOperator { dim, degree, matrix })
    }

    pub fn zeros(dim: SuperDim, degree: usize, ctx: R::Ctx) -> Result<Self> {
        let size = tensor_dim(dim, degree)?;
        Ok(TensorOperator { dim, degree, matrix: Matrix::zeros(ctx, size, size) })
    }

    pub fn identity(dim: SuperDim, degree: usize, ctx: R::Ctx) -> Result<Self> {
        let size = tensor_dim(dim, degree)?;
        Ok(TensorOperator { dim, degree, matrix: Matrix::identity(ctx, size) })
    }

    pub fn dim(&self) -> SuperDim {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.matrix
    }

    pub fn get(&self, row: &BasisWord, col: &BasisWord) -> &R {
        self.matrix.get(row.index(), col.index())
    }

    /// Nonzero coefficients of the image of `word`.
    pub fn image(&self, word: &BasisWord) -> Vec<(BasisWord, R)> {
        let col = word.index();
        (0..self.size())
            .filter(|&row| !self.matrix.get(row, col).vanishes())
            .map(|row| (BasisWord::from_index(self.dim, self.degree, row), self.matrix.get(row, col).clone()))
            .collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(Error::Dimension(format!(
                "operators on T^{}({}) and T^{}({})",
                self.degree, self.dim, other.degree, other.dim
            )));
        }
        Ok(())
    }

    /// Composite `self ∘ other` (apply `other` first).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(TensorOperator { dim: self.dim, degree: self.degree, matrix: self.matrix.mul(&other.matrix)? })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(TensorOperator { dim: self.dim, degree: self.degree, matrix: self.matrix.add(&other.matrix)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(TensorOperator { dim: self.dim, degree: self.degree, matrix: self.matrix.sub(&other.matrix)? })
    }

    pub fn scale_left(&self, c: &R) -> Self {
        TensorOperator { dim: self.dim, degree: self.degree, matrix: self.matrix.scale_left(c) }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `AB − (−1)^{pq} BA`.
    pub fn supercommutator(&self, other: &Self, p: Parity, q: Parity) -> Result<Self> {
        let ab = self.mul(other)?;
        let ba = other.mul(self)?;
        if p.koszul(q) {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }
}

impl TensorOperator<Rational> {
    pub fn lift<S: Scalar>(&self, ctx: S::Ctx) -> TensorOperator<S> {
        TensorOperator { dim: self.dim, degree: self.degree, matrix: self.matrix.lift(ctx) }
    }
}

/// `τ_r(σ)`, built by composing [`tau_transposition`] along a decomposition of `σ`.
pub fn tau_permutation(dim: SuperDim, sigma: &Permutation) -> Result<TensorOperator<Rational>> {
    tau_permutation_via(dim, sigma, Decomposition::Adjacent)
}

pub fn tau_permutation_via(
    dim: SuperDim,
    sigma: &Permutation,
    strategy: Decomposition,
) -> Result<TensorOperator<Rational>> {
    let r = sigma.degree();
    let ts = sigma.transpositions(strategy);
    let mut op = TensorOperator::zeros(dim, r, ())?;
    for w in words(dim, r)? {
        let (negative, image) = act_by_transpositions(&w, &ts)?;
        let v = if negative { -Rational::one() } else { Rational::one() };
        op.matrix.set(image.index(), w.index(), v);
    }
    Ok(op)
}

/// `τ_r(σ)` from the closed form: the sign is `(−1)^k` with `k` the number of
/// pairs `a < b` with `σ(a) > σ(b)` whose letters `w_{σ(a)}, w_{σ(b)}` are both odd.
pub fn tau_closed_form(dim: SuperDim, sigma: &Permutation) -> Result<TensorOperator<Rational>> {
    let r = sigma.degree();
    let mut op = TensorOperator::zeros(dim, r, ())?;
    for w in words(dim, r)? {
        let odd = |k: usize| w.letter_parity(sigma.apply(k)).is_odd();
        let mut negative = false;
        for a in 0..r {
            for b in a + 1..r {
                if sigma.apply(a) > sigma.apply(b) && odd(a) && odd(b) {
                    negative = !negative;
                }
            }
        }
        let image = BasisWord { dim, letters: (0..r).map(|k| w.letters[sigma.apply(k)]).collect() };
        let v = if negative { -Rational::one() } else { Rational::one() };
        op.matrix.set(image.index(), w.index(), v);
    }
    Ok(op)
}

/// Which letters `o(i)` counts in the sign `(−1)^{p(X)·o(i)}` of the derivation action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OddCount {
    /// Odd letters strictly before position `i`; the one making `θ` a homomorphism.
    Exclusive,
    /// Odd letters at positions up to and including `i`.
    Inclusive,
}

/// `θ_r(X)` for homogeneous `X ∈ gl(m|n)`.
pub fn theta_derivation(x: &GlElement, r: usize) -> Result<TensorOperator<Rational>> {
    theta_derivation_with(x, r, OddCount::Exclusive)
}

pub fn theta_derivation_with(x: &GlElement, r: usize, convention: OddCount) -> Result<TensorOperator<Rational>> {
    let dim = x.dim();
    let size = dim.size();
    let mut op = TensorOperator::<Rational>::zeros(dim, r, ())?;
    for w in words(dim, r)? {
        for pos in 0..r {
            let upto = match convention {
                OddCount::Exclusive => pos,
                OddCount::Inclusive => pos + 1,
            };
            let negative = x.parity().is_odd() && w.odd_count(0..upto) % 2 == 1;
            let src = w.letters[pos];
            for a in 0..size {
                let c = x.matrix().get(a, src);
                if c.is_zero() {
                    continue;
                }
                let out = w.with_letter(pos, a);
                let cell = op.matrix.get(out.index(), w.index()).clone();
                op.matrix.set(out.index(), w.index(), if negative { cell - c } else { cell + c });
            }
        }
    }
    Ok(op)
}

/// `ρ_r(g)` for a point `g` of `GL(m|n)(A)`.
pub fn rho_group<R: Scalar>(g: &SuperMatrix<R>, r: usize) -> Result<TensorOperator<R>> {
    if !g.is_gl_point() {
        return Err(Error::NotInvertible("ρ needs a point of GL(m|n)(A)".into()));
    }
    Ok(diagonal_action(g, r))
}

/// `g ⊗ ⋯ ⊗ g` for an even point `g` (no invertibility required).
///
/// Expanding `(v_{a_1} g_{a_1 w_1}) ⊗ ⋯ ⊗ (v_{a_r} g_{a_r w_r})` and moving each
/// coefficient to the right end passes it over the later letters, so letter `a_l`
/// contributes `(−1)^{p(a_l)·(p(c_1)+⋯+p(c_{l−1}))}`.
pub fn diagonal_action<R: Scalar>(g: &SuperMatrix<R>, r: usize) -> TensorOperator<R> {
    let dim = g.dim();
    let ctx = g.ctx();
    let mut op = TensorOperator::<R>::zeros(dim, r, ctx).expect("dimension checked by caller");
    let size = dim.size();
    for w in words(dim, r).expect("dimension checked") {
        let col = w.index();
        // depth-first over output letters: (partial index, coefficient, parity of coefficient)
        let mut stack: Vec<(usize, usize, R, Parity)> = vec![(0, 0, R::one_in(ctx), Parity::Even)];
        while let Some((pos, index, coeff, cpar)) = stack.pop() {
            if pos == r {
                let cell = op.matrix.get(index, col).add(&coeff);
                op.matrix.set(index, col, cell);
                continue;
            }
            let src = w.letters[pos];
            for a in 0..size {
                let entry = g.get(a, src);
                if entry.vanishes() {
                    continue;
                }
                let flip = dim.parity(a).koszul(cpar);
                let next = coeff.mul(entry).signed(flip);
                if next.vanishes() {
                    continue;
                }
                stack.push((pos + 1, index * size + a, next, cpar + dim.entry_parity(a, src)));
            }
        }
    }
    op
}

/// Derivation action of the point `αX ∈ gl(m|n)(A)_0` on `T^r(V) ⊗ A`.
///
/// Term `i` applies `X` at position `i` and carries `α` to the right end past the
/// later letters: coefficient `X_{a,w_i} · α · (−1)^{p(α)·#odd(w_{i+1..r})}`. For
/// even `α` this is `α·θ_r(X)`, and for `E_ij(α)` with `α² = 0` one has
/// `ρ_r(E_ij(α)) = id + theta_at_point(e_ij, α)`.
pub fn theta_at_point<R: Scalar>(x: &GlElement, alpha: &R, r: usize) -> Result<TensorOperator<R>> {
    if !alpha.has_parity(x.parity()) {
        return Err(Error::Parity(format!("coefficient {alpha:?} for an {} element", x.parity())));
    }
    let dim = x.dim();
    let ctx = alpha.ctx();
    let alpha_odd = x.parity().is_odd();
    let mut op = TensorOperator::zeros(dim, r, ctx)?;
    if alpha.vanishes() {
        return Ok(op);
    }
    for w in words(dim, r)? {
        for pos in 0..r {
            let negative = alpha_odd && w.odd_count(pos + 1..r) % 2 == 1;
            let src = w.letters[pos];
            for a in 0..dim.size() {
                let c = x.matrix().get(a, src);
                if c.is_zero() {
                    continue;
                }
                let out = w.with_letter(pos, a);
                let term = alpha.scale(c).signed(negative);
                let cell = op.matrix.get(out.index(), w.index()).add(&term);
                op.matrix.set(out.index(), w.index(), cell);
            }
        }
    }
    Ok(op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::GrassmannElement;
    use crate::scalar::q;
    use crate::supermatrix::one_param_e;

    fn d11() -> SuperDim {
        SuperDim::new(1, 1).unwrap()
    }

    fn word(dim: SuperDim, letters: &[usize]) -> BasisWord {
        BasisWord::new(dim, letters.to_vec()).unwrap()
    }

    #[test]
    fn word_indexing_is_lexicographic() {
        let dim = SuperDim::new(2, 1).unwrap();
        let all: Vec<BasisWord> = words(dim, 2).unwrap().collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[5].letters(), &[1, 2]);
        for (k, w) in all.iter().enumerate() {
            assert_eq!(w.index(), k);
        }
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn transposition_examples() {
        let dim = d11();
        let (e, f) = (0, 1);
        assert_eq!(tau_transposition(0, 1, &word(dim, &[f, f])).unwrap(), (true, word(dim, &[f, f])));
        assert_eq!(tau_transposition(0, 1, &word(dim, &[e, f])).unwrap(), (false, word(dim, &[f, e])));
        assert_eq!(tau_transposition(0, 1, &word(dim, &[e, e])).unwrap(), (false, word(dim, &[e, e])));
        assert!(tau_transposition(0, 2, &word(dim, &[e, e])).is_err());
        // non-adjacent: f e f → f e f passes the middle letter (even) only
        assert_eq!(tau_transposition(0, 2, &word(dim, &[f, e, f])).unwrap(), (true, word(dim, &[f, e, f])));
        // e f f → f f e: e passes two odd letters, f passes one odd letter
        assert_eq!(tau_transposition(0, 2, &word(dim, &[e, f, f])).unwrap(), (true, word(dim, &[f, f, e])));
    }

    #[test]
    fn three_cycle_on_odd_word() {
        let dim = d11();
        let sigma = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let op = tau_permutation(dim, &sigma).unwrap();
        let fff = word(dim, &[1, 1, 1]);
        // (1 2 3) = (1 2)(2 3)... both steps swap two odd letters
        let via = act_by_transpositions(&fff, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(Permutation::transposition(3, 0, 1).unwrap().compose(&Permutation::transposition(3, 1, 2).unwrap()).unwrap(), sigma);
        assert_eq!(via, (false, fff.clone()));
        assert_eq!(op.image(&fff), vec![(fff, q(1))]);
    }

    #[test]
    fn identity_permutation_gives_identity() {
        let dim = SuperDim::new(1, 2).unwrap();
        let op = tau_permutation(dim, &Permutation::identity(3)).unwrap();
        assert_eq!(op, TensorOperator::identity(dim, 3, ()).unwrap());
    }

    #[test]
    fn permutation_validation_and_enumeration() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert_eq!(Permutation::all(4).len(), 24);
        let s = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(s.compose(&s.inverse()).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn decompositions_multiply_back() {
        for sigma in Permutation::all(4) {
            for strategy in [Decomposition::Adjacent, Decomposition::Cycles] {
                let product = sigma.transpositions(strategy).iter().fold(Permutation::identity(4), |acc, &(i, j)| {
                    acc.compose(&Permutation::transposition(4, i, j).unwrap()).unwrap()
                });
                assert_eq!(product, sigma);
            }
        }
    }

    #[test]
    fn theta_examples() {
        let dim = d11();
        let e12 = GlElement::elementary(dim, 0, 1).unwrap();
        let th = theta_derivation(&e12, 2).unwrap();
        let mut img = th.image(&word(dim, &[1, 1]));
        img.sort();
        assert_eq!(img, vec![(word(dim, &[0, 1]), q(1)), (word(dim, &[1, 0]), q(-1))]);

        let e11 = GlElement::elementary(dim, 0, 0).unwrap();
        let th11 = theta_derivation(&e11, 2).unwrap();
        assert_eq!(th11.image(&word(dim, &[0, 1])), vec![(word(dim, &[0, 1]), q(1))]);

        let zero = GlElement::zero(dim, Parity::Odd);
        assert!(theta_derivation(&zero, 2).unwrap().is_zero());
    }

    #[test]
    fn rho_identity_and_checks() {
        let dim = d11();
        let id = SuperMatrix::<GrassmannElement>::identity(dim, 2);
        assert_eq!(rho_group(&id, 2).unwrap(), TensorOperator::identity(dim, 2, 2).unwrap());
        let sing = SuperMatrix::<GrassmannElement>::zeros(dim, 2);
        assert!(rho_group(&sing, 2).is_err());
    }

    #[test]
    fn rho_of_odd_elementary_is_identity_plus_derivation() {
        let dim = d11();
        let xi = GrassmannElement::generator(1, 1).unwrap();
        let g = one_param_e(dim, 0, 1, xi.clone()).unwrap();
        let lhs = rho_group(&g, 2).unwrap().sub(&TensorOperator::identity(dim, 2, 1).unwrap()).unwrap();
        let e12 = GlElement::elementary(dim, 0, 1).unwrap();
        assert_eq!(lhs, theta_at_point(&e12, &xi, 2).unwrap());
    }

    #[test]
    fn theta_at_point_examples() {
        let dim = d11();
        let e12 = GlElement::elementary(dim, 0, 1).unwrap();
        assert!(theta_at_point(&e12, &GrassmannElement::zero(2), 2).unwrap().is_zero());
        assert!(theta_at_point(&e12, &GrassmannElement::one(2), 2).is_err());
        let e11 = GlElement::elementary(dim, 0, 0).unwrap();
        let op = theta_at_point(&e11, &q(2), 2).unwrap();
        assert_eq!(op.image(&word(dim, &[0, 0])), vec![(word(dim, &[0, 0]), q(4))]);
    }
}
