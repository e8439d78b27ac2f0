//! Coefficient rings: exact rationals and the Grassmann algebra share one trait.

use std::fmt;
use std::ops::Add;

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rationals with arbitrary precision, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Shorthand for `num / den`.
pub fn qf(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed: Rational = t
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    Ok(parsed)
}

/// The `Z/2` grade of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Self {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^{p q}` as a boolean "flip the sign".
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A (super)commutative coefficient ring with exact arithmetic.
///
/// `Ctx` carries whatever is needed to build constants: nothing for `ℚ`, the number
/// of generators for `Λ_N`. The infix-style methods panic when two operands come from
/// different contexts; containers validate contexts once at construction and use the
/// `try_` variants at their boundaries.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Ctx: Copy + PartialEq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: Self::Ctx) -> Self;
    fn one_in(ctx: Self::Ctx) -> Self;
    fn from_rational(ctx: Self::Ctx, value: Rational) -> Self;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn vanishes(&self) -> bool;

    /// Whether the element lies in the graded piece of the given parity (zero lies in both).
    fn has_parity(&self, parity: Parity) -> bool;

    /// Scalar part; invertibility is decided by it.
    fn body(&self) -> Rational;

    fn inverse(&self) -> Result<Self>;

    fn equals_one(&self) -> bool {
        *self == Self::one_in(self.ctx())
    }

    fn scale(&self, c: &Rational) -> Self {
        self.mul(&Self::from_rational(self.ctx(), c.clone()))
    }

    /// Homogeneous parity, `None` for mixed elements; zero reports even.
    fn parity(&self) -> Option<Parity> {
        if self.has_parity(Parity::Even) {
            Some(Parity::Even)
        } else if self.has_parity(Parity::Odd) {
            Some(Parity::Odd)
        } else {
            None
        }
    }

    fn signed(&self, flip: bool) -> Self {
        if flip {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl Scalar for Rational {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero_in(_: ()) -> Self {
        Zero::zero()
    }

    fn one_in(_: ()) -> Self {
        One::one()
    }

    fn from_rational(_: (), value: Rational) -> Self {
        value
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }

    fn has_parity(&self, parity: Parity) -> bool {
        parity == Parity::Even || Zero::is_zero(self)
    }

    fn body(&self) -> Rational {
        self.clone()
    }

    fn inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::NotInvertible("zero rational".into()))
        } else {
            Ok(self.recip())
        }
    }
}
