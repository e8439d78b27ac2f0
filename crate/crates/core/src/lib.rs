//! Exact computations around super Schur-Weyl duality for `GL(m|n)` and `gl(m|n)`.
//!
//! Everything is evaluated over the rationals or over a finite Grassmann algebra
//! `Λ_N = ∧(ξ_1, …, ξ_N)`, which stands in for an arbitrary commutative superalgebra
//! when taking points of the supergroup and of its Lie superalgebra.
//!
//! - [`grassmann`]: the Grassmann algebra `Λ_N` with exact rational coefficients.
//! - [`supermatrix`]: block supermatrices, supertrace, Berezinian, one-parameter
//!   subgroups and the block LDU factorization.
//! - [`tensor`]: the tensor superspace `T^r(k^{m|n})` with the signed symmetric group
//!   action, the derivation action of `gl(m|n)` and the diagonal group action.
//! - [`tableaux`]: partitions, standard and semistandard super-tableaux.
//! - [`commutant`]: exact subalgebras and centralizers inside `End(T^r(V))`.
//! - [`cli`]: the `superschur` command-line front end.

pub mod cli;
pub mod commutant;
pub mod error;
pub mod grassmann;
pub mod json;
pub mod linalg;
pub mod matrix;
pub mod random;
pub mod scalar;
pub mod supermatrix;
pub mod tableaux;
pub mod tensor;

pub use error::{Error, Result};
pub use grassmann::GrassmannElement;
pub use matrix::Matrix;
pub use scalar::{Parity, Rational, Scalar};
pub use supermatrix::{GlElement, SuperDim, SuperMatrix};
pub use tensor::{BasisWord, Permutation, TensorOperator};
