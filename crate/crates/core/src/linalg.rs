//! Exact sparse row reduction over `ℚ`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

/// Turns a dense slice into a sparse vector, dropping zeros.
pub fn sparse(dense: &[Rational]) -> SparseVec {
    dense.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k, v.clone())).collect()
}

pub fn dense(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (&k, x) in v {
        out[k] = x.clone();
    }
    out
}

/// `target -= factor · row`, pruning zeros.
fn axpy(target: &mut SparseVec, factor: &Rational, row: &SparseVec) {
    for (&k, x) in row {
        let slot = target.entry(k).or_insert_with(Rational::zero);
        *slot -= factor * x;
        if slot.is_zero() {
            target.remove(&k);
        }
    }
}

/// A row space kept in reduced row echelon form.
///
/// Every stored row has a leading 1 at its pivot and zeros at every other pivot.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Rational)> =
            v.iter().filter(|(k, _)| self.rows.contains_key(k)).map(|(&k, x)| (k, x.clone())).collect();
        let mut out = v.clone();
        for (pivot, factor) in hits {
            axpy(&mut out, &factor, &self.rows[&pivot]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the row space; `false` if it was already there.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        debug_assert!(v.keys().all(|&k| k < self.ncols));
        let mut residual = self.reduce(v);
        let Some((&pivot, lead)) = residual.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for x in residual.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(factor) = row.get(&pivot).cloned() {
                axpy(row, &factor, &residual);
            }
        }
        self.rows.insert(pivot, residual);
        true
    }

    /// A basis of `{x : row · x = 0 for every row}`.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        (0..self.ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|free| {
                let mut x = SparseVec::new();
                x.insert(free, Rational::one());
                for (&pivot, row) in &self.rows {
                    if let Some(v) = row.get(&free) {
                        x.insert(pivot, -v.clone());
                    }
                }
                x
            })
            .collect()
    }
}
