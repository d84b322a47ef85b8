//! Exact construction and verification of q-congruences for the generalized
//! w-polynomials `w_n^(α)(x)` and their q-analogues `w_k^(α)(x;q)`.
//!
//! The crate is layered bottom-up:
//!
//! - [`arith`]: big-integer combinatorics (binomials, Möbius, lcm, w(n,k), Narayana).
//! - [`poly`]: exact rings ℤ[x], ℤ[q] and ℤ[x][q, q⁻¹] with monic reduction and a
//!   canonical text form.
//! - [`qobjects`]: q-integers, q-binomials, cyclotomic polynomials.
//! - [`wpoly`]: the polynomial families and the cyclotomic reduction lemmas.
//! - [`engine`]: theorem sums, integrality checks, conjecture checks and grid sweeps.
//! - [`report`]: JSON-lines and text report emission.

pub mod arith;
pub mod engine;
mod error;
pub mod memo;
pub mod poly;
pub mod qobjects;
pub mod report;
pub mod wpoly;

pub use error::{Error, Result};
pub use num_bigint::BigInt as Int;
