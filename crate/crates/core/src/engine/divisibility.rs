//! Divisibility decisions for Laurent sums.
//!
//! A witness is the residue of the value in ℤ[x][q, q⁻¹]/(m): exponents are
//! first folded modulo a period `L` with `m | q^L − 1` (legal because `q` is
//! a unit there) and the folded polynomial is reduced by `m`. This makes the
//! witness independent of how the value was evaluated.

use std::time::Instant;

use crate::arith::divisors;
use crate::engine::ring::fold;
use crate::engine::Verdict;
use crate::error::{require_min, Result};
use crate::poly::{QLaurent, QPoly};
use crate::qobjects::{cyclotomic, q_integer_poly};

/// One modulus to test together with a period `L` such that it divides `q^L - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus {
    pub label: String,
    pub poly: QPoly,
    pub period: i64,
}

impl Modulus {
    pub fn q_integer(n: i64) -> Self {
        Self {
            label: format!("[{n}]"),
            poly: q_integer_poly(n as u64),
            period: n,
        }
    }

    pub fn cyclotomic(d: i64) -> Result<Self> {
        Ok(Self {
            label: format!("Phi_{d}"),
            poly: cyclotomic(d)?.as_ref().clone(),
            period: d,
        })
    }
}

/// The moduli of the mixed cyclotomic product: `Φ_d(q)` for odd `d | n` and
/// `Φ_{2d}(q) = Φ_d(q²)` for even `d | n`, `d > 1`.
pub fn cyclotomic_product_moduli(n: i64) -> Result<Vec<Modulus>> {
    require_min("n", n, 2)?;
    divisors(n)?
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| Modulus::cyclotomic(if d % 2 == 0 { 2 * d } else { d }))
        .collect()
}

/// Residue of `value` modulo `modulus`; `value` may already be folded by any
/// multiple of `modulus.period`.
pub fn residue(value: &QLaurent, modulus: &Modulus) -> Result<QLaurent> {
    fold(value, modulus.period).rem_monic(&modulus.poly)
}

/// Laurent quotient `Q` with `Q · m + witness = input`, or `None` if no such
/// quotient exists.
pub fn witness_quotient(
    input: &QLaurent,
    modulus: &QPoly,
    witness: &QLaurent,
) -> Result<Option<QLaurent>> {
    let diff = input - witness;
    let division = diff.div_rem_monic(modulus)?;
    if !division.remainder.is_zero() {
        return Ok(None);
    }
    let quotient = division.quotient.shift(-division.shift);
    let rebuilt = &(&quotient * &modulus.to_laurent()) + witness;
    Ok((rebuilt == *input).then_some(quotient))
}

pub(crate) fn first_failure(value: &QLaurent, moduli: &[Modulus]) -> Result<Option<String>> {
    for m in moduli {
        let r = residue(value, m)?;
        if !r.is_zero() {
            return Ok(Some(r.to_string()));
        }
    }
    Ok(None)
}

fn verdict(statement: &str, n: i64, witness: Option<String>, start: Instant) -> Verdict {
    Verdict::new(statement, &[("n", n)], witness, start.elapsed())
}

/// Passes iff `[n]` divides `sum` in ℤ[x][q, q⁻¹].
pub fn verify_divisible_by_qn(sum: &QLaurent, n: i64) -> Result<Verdict> {
    require_min("n", n, 2)?;
    let start = Instant::now();
    let witness = first_failure(sum, &[Modulus::q_integer(n)])?;
    Ok(verdict("divisible-by-[n]", n, witness, start))
}

/// Passes iff every factor of the mixed cyclotomic product for `n` divides
/// `sum`. The witness is the residue modulo the first failing factor, taken
/// in ascending divisor order.
pub fn verify_cyclotomic_product(sum: &QLaurent, n: i64) -> Result<Verdict> {
    let start = Instant::now();
    let witness = first_failure(sum, &cyclotomic_product_moduli(n)?)?;
    Ok(verdict(
        "divisible-by-cyclotomic-product",
        n,
        witness,
        start,
    ))
}
