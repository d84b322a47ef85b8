//! Exact polynomial rings over big integers.
//!
//! - [`XPoly`]: dense elements of ℤ[x].
//! - [`QPoly`]: dense elements of ℤ[q], used for moduli such as Φ_d(q) and [n].
//! - [`QLaurent`]: Laurent polynomials in q with [`XPoly`] coefficients, stored
//!   sparsely by q-exponent.
//!
//! All three share a canonical text form (see [`text`]) that parses back to an
//! equal value.

mod dense;
mod laurent;
mod qpoly;
pub mod text;
mod xpoly;

pub use dense::{mul as mul_dense, mul_schoolbook};
pub use laurent::{LaurentDivision, QLaurent};
pub use qpoly::QPoly;
pub use xpoly::{DivisionWitness, ExactDivision, XPoly};
