//! Seeded random elements for property suites and the CLI.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grassmann::GrassmannElement;
use crate::scalar::{q, Parity, Rational};
use crate::supermatrix::{GlElement, SuperDim, SuperMatrix};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(rng: &mut SeededRng) -> Rational {
    q(rng.gen_range(-3..=3))
}

/// Random element of `Λ_N` whose terms all have the given parity; each monomial is
/// kept with probability one half.
pub fn grassmann(rng: &mut SeededRng, big_n: usize, parity: Option<Parity>) -> GrassmannElement {
    let mut out = GrassmannElement::zero(big_n);
    for mask in 0u32..(1u32 << big_n) {
        let p = Parity::from_bit(mask.count_ones() as usize);
        if parity.is_some_and(|want| want != p) || !rng.gen_bool(0.5) {
            continue;
        }
        let gens: Vec<usize> = (0..big_n).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect();
        let term = GrassmannElement::monomial(big_n, &gens, small(rng)).expect("valid monomial");
        out = out.try_add(&term).expect("same algebra");
    }
    out
}

/// Random even point of `End(k^{m|n})(Λ_N)`.
pub fn even_point(rng: &mut SeededRng, dim: SuperDim, big_n: usize) -> SuperMatrix<GrassmannElement> {
    let size = dim.size();
    let rows = (0..size)
        .map(|i| (0..size).map(|j| grassmann(rng, big_n, Some(dim.entry_parity(i, j)))).collect())
        .collect();
    SuperMatrix::from_rows(dim, big_n, rows).expect("square")
}

/// Random point of `GL(m|n)(Λ_N)`; resamples until both diagonal bodies are invertible.
pub fn gl_point(rng: &mut SeededRng, dim: SuperDim, big_n: usize) -> SuperMatrix<GrassmannElement> {
    loop {
        let g = even_point(rng, dim, big_n);
        if g.is_gl_point() {
            return g;
        }
    }
}

/// Random invertible rational block-diagonal matrix, i.e. a point of `GL(m) × GL(n)`.
pub fn classical_gl_point(rng: &mut SeededRng, dim: SuperDim) -> SuperMatrix<Rational> {
    let size = dim.size();
    loop {
        let rows = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if dim.entry_parity(i, j) == Parity::Even { small(rng) } else { q(0) })
                    .collect()
            })
            .collect();
        let g = SuperMatrix::from_rows(dim, (), rows).expect("square");
        if g.is_gl_point() {
            return g;
        }
    }
}

/// Random homogeneous element of `gl(m|n)` over `ℚ`.
pub fn gl_element(rng: &mut SeededRng, dim: SuperDim, parity: Parity) -> GlElement {
    let size = dim.size();
    let rows = (0..size)
        .map(|i| (0..size).map(|j| if dim.entry_parity(i, j) == parity { small(rng) } else { q(0) }).collect())
        .collect();
    let m = SuperMatrix::from_rows(dim, (), rows).expect("square");
    GlElement::new(m, parity).expect("homogeneous by construction")
}

/// Random element with nonzero body.
pub fn invertible_grassmann(rng: &mut SeededRng, big_n: usize) -> GrassmannElement {
    loop {
        let g = grassmann(rng, big_n, None);
        if !g.body_soul().0.is_zero() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic_and_valid() {
        let dim = SuperDim::new(2, 1).unwrap();
        let a = gl_point(&mut rng(7), dim, 4);
        let b = gl_point(&mut rng(7), dim, 4);
        assert_eq!(a, b);
        assert!(a.is_gl_point());
        assert!(grassmann(&mut rng(1), 4, Some(Parity::Odd)).is_odd());
        assert!(classical_gl_point(&mut rng(3), dim).is_gl_point());
    }
}
