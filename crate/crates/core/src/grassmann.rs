//! The finite Grassmann algebra `Λ_N = ∧(ξ_1, …, ξ_N)` over `ℚ`.
//!
//! Monomials are encoded as bitmasks (bit `k` ↔ generator `ξ_{k+1}`) and are always
//! read in ascending generator order. A product of two monomials is zero when the
//! masks intersect; otherwise its sign is the parity of the number of inversions in
//! the concatenation of the two ascending index lists.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Parity, Rational, Scalar};

/// Upper bound on `N`; monomials live in a `u32` mask.
pub const MAX_GENERATORS: usize = 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrassmannElement {
    n: usize,
    terms: BTreeMap<u32, Rational>,
}

/// Sign of `ξ_A ξ_B` after sorting into ascending order, for disjoint masks.
fn merge_sign_is_negative(a: u32, b: u32) -> bool {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let y = rest.trailing_zeros();
        rest &= rest - 1;
        // generators of `a` with index greater than y
        let above = if y >= 31 { 0 } else { a & !((1u32 << (y + 1)) - 1) };
        inversions += above.count_ones();
    }
    inversions % 2 == 1
}

impl GrassmannElement {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        GrassmannElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, value: Rational) -> Self {
        let mut out = Self::zero(n);
        out.add_term(0, value);
        out
    }

    /// The generator `ξ_k` for `1 ≤ k ≤ n`.
    pub fn generator(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::Index(format!("generator ξ_{k} not in Λ_{n}")));
        }
        Self::monomial(n, &[k], Rational::one())
    }

    /// `coeff · ξ_{i1} ξ_{i2} ⋯` for 1-based, strictly increasing indices.
    pub fn monomial(n: usize, gens: &[usize], coeff: Rational) -> Result<Self> {
        let mask = Self::mask_of(n, gens)?;
        let mut out = Self::zero(n);
        out.add_term(mask, coeff);
        Ok(out)
    }

    fn mask_of(n: usize, gens: &[usize]) -> Result<u32> {
        if n > MAX_GENERATORS {
            return Err(Error::Dimension(format!("N = {n} exceeds {MAX_GENERATORS}")));
        }
        let mut mask = 0u32;
        let mut last = 0usize;
        for &g in gens {
            if g == 0 || g > n {
                return Err(Error::Index(format!("generator index {g} outside 1..={n}")));
            }
            if g <= last {
                return Err(Error::Parse(format!(
                    "generator indices must be strictly increasing, got {gens:?}"
                )));
            }
            last = g;
            mask |= 1 << (g - 1);
        }
        Ok(mask)
    }

    fn add_term(&mut self, mask: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    /// Nonzero terms as `(ascending 1-based generator list, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> + '_ {
        self.terms.iter().map(|(&mask, c)| {
            let gens = (0..32).filter(|b| mask & (1 << b) != 0).map(|b| b as usize + 1).collect();
            (gens, c)
        })
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, gens: &[usize]) -> Rational {
        Self::mask_of(self.n, gens)
            .ok()
            .and_then(|m| self.terms.get(&m).cloned())
            .unwrap_or_else(Rational::zero)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension(format!(
                "Grassmann elements from Λ_{} and Λ_{}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&mask, c) in &other.terms {
            out.add_term(mask, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.negated())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.n);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let c = ca * cb;
                let c = if merge_sign_is_negative(a, b) { -c } else { c };
                out.add_term(a | b, c);
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Self {
        GrassmannElement {
            n: self.n,
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }

    /// Splits into `(even, odd)` with `self = even + odd`.
    pub fn parity_parts(&self) -> (Self, Self) {
        let mut even = Self::zero(self.n);
        let mut odd = Self::zero(self.n);
        for (&mask, c) in &self.terms {
            let part = if mask.count_ones() % 2 == 0 { &mut even } else { &mut odd };
            part.terms.insert(mask, c.clone());
        }
        (even, odd)
    }

    /// `(body, soul)`: the empty-monomial coefficient and the nilpotent rest.
    pub fn body_soul(&self) -> (Rational, Self) {
        let body = self.terms.get(&0).cloned().unwrap_or_else(Rational::zero);
        let mut soul = self.clone();
        soul.terms.remove(&0);
        (body, soul)
    }

    /// `a⁻¹ = b⁻¹ Σ_k (−s/b)^k`, truncated once the power vanishes.
    pub fn try_inverse(&self) -> Result<Self> {
        let (body, soul) = self.body_soul();
        if body.is_zero() {
            return Err(Error::NotInvertible(format!("{self} has zero body")));
        }
        let inv_body = body.recip();
        let step = soul.scaled(&-inv_body.clone());
        let mut power = Self::one(self.n);
        let mut sum = Self::one(self.n);
        loop {
            power = power.try_mul(&step)?;
            if power.is_zero() {
                break;
            }
            sum = sum.try_add(&power)?;
        }
        Ok(sum.scaled(&inv_body))
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (&mask, v) in &self.terms {
            out.add_term(mask, v * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.n);
        for _ in 0..k {
            out = out.try_mul(self).expect("same algebra");
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 1)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_even() || self.is_odd()
    }

    /// Re-reads the element in `Λ_n` for `n ≥ N`; the canonical inclusion.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::Dimension(format!("cannot embed Λ_{} into Λ_{n}", self.n)));
        }
        Ok(GrassmannElement { n, terms: self.terms.clone() })
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (gens, c)) in self.terms().enumerate() {
            let negative = c < &Rational::zero();
            if idx > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let mag = if negative { -c.clone() } else { c.clone() };
            let monomial: String = gens.iter().map(|g| format!("ξ{g}")).collect();
            match (monomial.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&monomial)?,
                (false, false) => write!(f, "{mag}{monomial}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ{}[{}]", self.n, self)
    }
}

impl Scalar for GrassmannElement {
    type Ctx = usize;

    fn ctx(&self) -> usize {
        self.n
    }

    fn zero_in(n: usize) -> Self {
        GrassmannElement::zero(n)
    }

    fn one_in(n: usize) -> Self {
        GrassmannElement::one(n)
    }

    fn from_rational(n: usize, value: Rational) -> Self {
        GrassmannElement::constant(n, value)
    }

    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("operands from the same Λ_N")
    }

    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("operands from the same Λ_N")
    }

    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("operands from the same Λ_N")
    }

    fn neg(&self) -> Self {
        self.negated()
    }

    fn vanishes(&self) -> bool {
        GrassmannElement::is_zero(self)
    }

    fn has_parity(&self, parity: Parity) -> bool {
        match parity {
            Parity::Even => self.is_even(),
            Parity::Odd => self.is_odd(),
        }
    }

    fn body(&self) -> Rational {
        self.body_soul().0
    }

    fn inverse(&self) -> Result<Self> {
        self.try_inverse()
    }

    fn scale(&self, c: &Rational) -> Self {
        self.scaled(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    fn xi(n: usize, k: usize) -> GrassmannElement {
        GrassmannElement::generator(n, k).unwrap()
    }

    fn c(n: usize, v: i64) -> GrassmannElement {
        GrassmannElement::constant(n, q(v))
    }

    #[test]
    fn addition_examples() {
        let x1 = xi(2, 1);
        assert_eq!(x1.try_add(&x1).unwrap(), x1.scaled(&q(2)));
        let a = c(2, 1).try_add(&x1).unwrap();
        let b = c(2, -1).try_add(&xi(2, 2)).unwrap();
        assert_eq!(a.try_add(&b).unwrap(), x1.try_add(&xi(2, 2)).unwrap());
        assert_eq!(a.try_add(&GrassmannElement::zero(2)).unwrap(), a);
        assert!(matches!(x1.try_add(&xi(3, 1)), Err(Error::Dimension(_))));
    }

    #[test]
    fn multiplication_examples() {
        let x12 = GrassmannElement::monomial(2, &[1, 2], q(1)).unwrap();
        assert_eq!(xi(2, 1).try_mul(&xi(2, 2)).unwrap(), x12);
        assert_eq!(xi(2, 2).try_mul(&xi(2, 1)).unwrap(), x12.negated());
        let a = c(2, 1).try_add(&xi(2, 1)).unwrap();
        let expected = c(2, 1).try_add(&xi(2, 1).scaled(&q(2))).unwrap();
        assert_eq!(a.try_mul(&a).unwrap(), expected);
        assert!(xi(2, 1).try_mul(&xi(2, 1)).unwrap().is_zero());
        assert!(xi(2, 1).try_mul(&xi(1, 1)).is_err());
    }

    #[test]
    fn merge_sign_counts_inversions() {
        // ξ2ξ3 · ξ1 = ξ1ξ2ξ3 (two inversions), ξ3 · ξ1ξ2 = ξ1ξ2ξ3 (two), ξ2 · ξ1ξ3 = -ξ1ξ2ξ3
        let m = |g: &[usize]| GrassmannElement::monomial(3, g, q(1)).unwrap();
        assert_eq!(m(&[2, 3]).try_mul(&m(&[1])).unwrap(), m(&[1, 2, 3]));
        assert_eq!(m(&[3]).try_mul(&m(&[1, 2])).unwrap(), m(&[1, 2, 3]));
        assert_eq!(m(&[2]).try_mul(&m(&[1, 3])).unwrap(), m(&[1, 2, 3]).negated());
    }

    #[test]
    fn parity_parts_examples() {
        let x12 = GrassmannElement::monomial(3, &[1, 2], q(1)).unwrap();
        let a = c(3, 1).try_add(&xi(3, 1)).unwrap().try_add(&x12).unwrap();
        let (even, odd) = a.parity_parts();
        assert_eq!(even, c(3, 1).try_add(&x12).unwrap());
        assert_eq!(odd, xi(3, 1));
        let (e0, o0) = GrassmannElement::zero(3).parity_parts();
        assert!(e0.is_zero() && o0.is_zero());
        let x123 = GrassmannElement::monomial(3, &[1, 2, 3], q(1)).unwrap();
        let (e, o) = x123.parity_parts();
        assert!(e.is_zero());
        assert_eq!(o, x123);
    }

    #[test]
    fn body_soul_examples() {
        let x12 = GrassmannElement::monomial(2, &[1, 2], q(1)).unwrap();
        let a = c(2, 3).try_add(&x12).unwrap();
        assert_eq!(a.body_soul(), (q(3), x12));
        assert_eq!(xi(2, 1).body_soul(), (q(0), xi(2, 1)));
    }

    #[test]
    fn inverse_examples() {
        let x12 = GrassmannElement::monomial(2, &[1, 2], q(1)).unwrap();
        let a = c(2, 1).try_add(&x12).unwrap();
        assert_eq!(a.try_inverse().unwrap(), c(2, 1).try_sub(&x12).unwrap());
        assert_eq!(c(2, 2).try_inverse().unwrap(), GrassmannElement::constant(2, qf(1, 2)));
        assert!(matches!(xi(2, 1).try_inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn monomial_rejects_bad_indices() {
        assert!(GrassmannElement::monomial(3, &[2, 1], q(1)).is_err());
        assert!(GrassmannElement::monomial(3, &[1, 1], q(1)).is_err());
        assert!(GrassmannElement::monomial(3, &[4], q(1)).is_err());
        assert!(GrassmannElement::generator(3, 0).is_err());
    }

    #[test]
    fn display() {
        let a = c(3, 2)
            .try_sub(&xi(3, 1))
            .unwrap()
            .try_add(&GrassmannElement::monomial(3, &[2, 3], qf(1, 2)).unwrap())
            .unwrap();
        assert_eq!(a.to_string(), "2 - ξ1 + 1/2ξ2ξ3");
        assert_eq!(GrassmannElement::zero(1).to_string(), "0");
    }
}
