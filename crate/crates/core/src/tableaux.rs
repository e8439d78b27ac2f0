//! Partitions, standard Young tableaux and semistandard super-tableaux.
//!
//! A super-tableau for `gl(m|n)` is filled with symbols `t_1 < ⋯ < t_m < u_1 < ⋯ < u_n`.
//! The `t`-cells form a Young subdiagram, the `t`'s are weakly increasing along rows
//! and strictly down columns, and the `u`'s are strictly increasing along rows and
//! weakly down columns. Enumeration walks the cells row by row and tries symbols
//! in increasing order, so the output order is deterministic.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of column `c` (0-based).
    pub fn column_len(&self, c: usize) -> usize {
        self.0.iter().take_while(|&&p| p > c).count()
    }

    /// Cells `(row, col)` in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `r`, in reverse lexicographic order.
pub fn partitions(r: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    out
}

/// Number of standard fillings of `shape` with `1..r`, by backtracking.
///
/// Places the numbers in increasing order; each one must go at an outer corner of
/// the cells filled so far.
pub fn count_syt(shape: &Partition) -> u64 {
    fn rec(filled: &mut Vec<usize>, shape: &[usize], remaining: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for row in 0..shape.len() {
            let fits_row = filled[row] < shape[row];
            let fits_col = row == 0 || filled[row - 1] > filled[row];
            if fits_row && fits_col {
                filled[row] += 1;
                total += rec(filled, shape, remaining - 1);
                filled[row] -= 1;
            }
        }
        total
    }
    let parts = shape.parts();
    rec(&mut vec![0; parts.len()], parts, shape.weight())
}

/// A symbol of the super alphabet `t_1 < ⋯ < t_m < u_1 < ⋯ < u_n` (1-based labels).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    T(usize),
    U(usize),
}

impl Symbol {
    pub fn is_even(self) -> bool {
        matches!(self, Symbol::T(_))
    }

    fn alphabet(m: usize, n: usize) -> Vec<Symbol> {
        (1..=m).map(Symbol::T).chain((1..=n).map(Symbol::U)).collect()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::T(k) => write!(f, "t{k}"),
            Symbol::U(k) => write!(f, "u{k}"),
        }
    }
}

/// A filling of a Young diagram by super symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperFilling {
    shape: Partition,
    rows: Vec<Vec<Symbol>>,
}

impl SuperFilling {
    /// Checks the three semistandard conditions.
    pub fn new(shape: Partition, rows: Vec<Vec<Symbol>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens != shape.parts() {
            return Err(Error::Dimension(format!("row lengths {lens:?} do not match {shape}")));
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &s) in row.iter().enumerate() {
                let left = (c > 0).then(|| row[c - 1]);
                let up = (r > 0).then(|| rows[r - 1][c]);
                if !admissible_after(s, left, up) {
                    return Err(Error::Parse(format!("cell ({r},{c}) = {s} breaks the semistandard rules")));
                }
            }
        }
        Ok(SuperFilling { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> Symbol {
        self.rows[row][col]
    }
}

impl fmt::Display for SuperFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            let syms: Vec<String> = row.iter().map(Symbol::to_string).collect();
            f.write_str(&syms.join(","))?;
        }
        Ok(())
    }
}

/// Whether `s` may sit right of `left` and below `up`.
///
/// `t`'s: weak in rows, strict in columns. `u`'s: strict in rows, weak in columns.
/// Because every `t` precedes every `u`, a `t` can never follow a `u`, which keeps the
/// `t`-cells a top-left-justified subdiagram.
fn admissible_after(s: Symbol, left: Option<Symbol>, up: Option<Symbol>) -> bool {
    let row_ok = left.is_none_or(|l| if s.is_even() { l <= s } else { l < s });
    let col_ok = up.is_none_or(|u| if s.is_even() { u < s } else { u <= s });
    row_ok && col_ok
}

fn fill<F: FnMut(&[Vec<Symbol>])>(shape: &Partition, m: usize, n: usize, mut visit: F) {
    let alphabet = Symbol::alphabet(m, n);
    let cells = shape.cells();
    let mut rows: Vec<Vec<Symbol>> = shape.parts().iter().map(|&len| Vec::with_capacity(len)).collect();

    fn rec<F: FnMut(&[Vec<Symbol>])>(
        k: usize,
        cells: &[(usize, usize)],
        alphabet: &[Symbol],
        rows: &mut Vec<Vec<Symbol>>,
        visit: &mut F,
    ) {
        let Some(&(r, c)) = cells.get(k) else {
            visit(rows);
            return;
        };
        for &s in alphabet {
            let left = (c > 0).then(|| rows[r][c - 1]);
            let up = (r > 0).then(|| rows[r - 1][c]);
            if admissible_after(s, left, up) {
                rows[r].push(s);
                rec(k + 1, cells, alphabet, rows, visit);
                rows[r].pop();
            }
        }
    }
    rec(0, &cells, &alphabet, &mut rows, &mut visit);
}

/// All semistandard super-fillings of `shape` for `gl(m|n)`.
pub fn enumerate_ssyt(shape: &Partition, m: usize, n: usize) -> Vec<SuperFilling> {
    let mut out = Vec::new();
    fill(shape, m, n, |rows| out.push(SuperFilling { shape: shape.clone(), rows: rows.to_vec() }));
    out
}

/// Number of semistandard super-fillings; the dimension of the matching irreducible.
pub fn count_ssyt(shape: &Partition, m: usize, n: usize) -> u64 {
    let mut count = 0;
    fill(shape, m, n, |_| count += 1);
    count
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeRow {
    pub shape: Partition,
    pub syt: u64,
    pub ssyt: u64,
    pub admissible: bool,
}

/// One row per partition of `r`, zero counts included.
pub fn dimension_table(m: usize, n: usize, r: usize) -> Result<Vec<ShapeRow>> {
    if r == 0 {
        return Err(Error::Dimension("dimension table needs r ≥ 1".into()));
    }
    Ok(partitions(r)
        .into_iter()
        .map(|shape| {
            let syt = count_syt(&shape);
            let ssyt = count_ssyt(&shape, m, n);
            ShapeRow { shape, syt, ssyt, admissible: ssyt > 0 }
        })
        .collect())
}

/// `Σ_λ syt(λ)·ssyt(λ)`, which must equal `(m+n)^r`.
pub fn weighted_total(table: &[ShapeRow]) -> u64 {
    table.iter().map(|row| row.syt * row.ssyt).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partitions(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions(0), vec![p(&[])]);
        assert_eq!(partitions(6).len(), 11);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn syt_examples() {
        assert_eq!(count_syt(&p(&[2])), 1);
        assert_eq!(count_syt(&p(&[2, 1])), 2);
        let sum: u64 = partitions(4).iter().map(|l| count_syt(l).pow(2)).sum();
        assert_eq!(sum, 24);
    }

    #[test]
    fn ssyt_examples_for_gl_1_1() {
        use Symbol::{T, U};
        let two = enumerate_ssyt(&p(&[2]), 1, 1);
        assert_eq!(two.iter().map(|f| f.rows().to_vec()).collect::<Vec<_>>(), vec![
            vec![vec![T(1), T(1)]],
            vec![vec![T(1), U(1)]]
        ]);
        let col = enumerate_ssyt(&p(&[1, 1]), 1, 1);
        assert_eq!(col.iter().map(|f| f.rows().to_vec()).collect::<Vec<_>>(), vec![
            vec![vec![T(1)], vec![U(1)]],
            vec![vec![U(1)], vec![U(1)]]
        ]);
        assert_eq!(count_ssyt(&p(&[1, 1, 1]), 1, 0), 0);
        assert_eq!(count_ssyt(&p(&[3]), 1, 1), 2);
        for (m, n) in [(1, 0), (0, 3), (2, 2)] {
            assert_eq!(count_ssyt(&p(&[1]), m, n), (m + n) as u64);
        }
    }

    #[test]
    fn dimension_table_examples() {
        let t = dimension_table(1, 1, 2).unwrap();
        assert_eq!(t.iter().map(|r| (r.shape.clone(), r.syt, r.ssyt)).collect::<Vec<_>>(), vec![
            (p(&[2]), 1, 2),
            (p(&[1, 1]), 1, 2)
        ]);
        let classical = dimension_table(1, 0, 2).unwrap();
        assert_eq!(classical.iter().map(|r| (r.ssyt, r.admissible)).collect::<Vec<_>>(), vec![(1, true), (0, false)]);
        assert_eq!(weighted_total(&dimension_table(2, 1, 3).unwrap()), 27);
        assert!(dimension_table(1, 1, 0).is_err());
    }

    #[test]
    fn filling_validation() {
        use Symbol::{T, U};
        assert!(SuperFilling::new(p(&[2]), vec![vec![U(1), U(1)]]).is_err());
        assert!(SuperFilling::new(p(&[1, 1]), vec![vec![U(1)], vec![U(1)]]).is_ok());
        assert!(SuperFilling::new(p(&[1, 1]), vec![vec![U(1)], vec![T(1)]]).is_err());
        assert!(SuperFilling::new(p(&[2]), vec![vec![U(1), T(1)]]).is_err());
        let f = SuperFilling::new(p(&[2, 1]), vec![vec![T(1), U(1)], vec![U(1)]]).unwrap();
        assert_eq!(f.to_string(), "t1,u1\nu1");
    }
}
