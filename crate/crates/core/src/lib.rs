//! Decide, certify and catalog the (non-)sum-freedom of the inverse map
//! `x -> x^(2^n - 2)` over GF(2^n).
//!
//! The inverse fails to be `k`th order sum-free exactly when some
//! `k`-dimensional GF(2)-subspace `E` satisfies `sum_{0 != x in E} 1/x = 0`.
//! This crate builds such subspaces ([`witness`]), checks them through the
//! Moore-determinant machinery ([`moore`]) and reproduces the factor-based
//! catalogs of admissible dimensions ([`catalog`]).

pub mod arith;
pub mod binpoly;
pub mod catalog;
pub mod clmul;
pub mod error;
pub mod gf2n;
pub mod linalg;
pub mod moore;
pub mod witness;

pub use binpoly::BinPoly;
pub use error::{Error, Result};
pub use gf2n::{FieldCtx, FieldElem};
