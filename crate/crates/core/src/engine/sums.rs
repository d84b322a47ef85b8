//! The four theorem sums. Each is written once over [`SumRing`] so the exact
//! value and its cyclic image share the same summand code.

use crate::arith::rising_factorial;
use crate::engine::ring::{Exact, SumRing};
use crate::error::{require_min, Error, Result};
use crate::poly::QLaurent;
use crate::wpoly::q_w_poly_shared;

fn check_params(n: i64, alpha: i64, m: i64, r: i64) -> Result<()> {
    require_min("n", n, 1)?;
    require_min("alpha", alpha, 1)?;
    require_min("m", m, 1)?;
    require_min("r", r, 1)
}

fn exponent(v: i64, name: &'static str) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Domain(format!("{name} = {v} too large")))
}

fn to_u64(v: i64) -> u64 {
    u64::try_from(v).expect("nonnegative bracket argument")
}

/// `w_k^(α)(x; q^step)^m` in the ring.
fn w_power<R: SumRing>(ring: &R, k: i64, alpha: i64, m: u32, step: i64) -> Result<QLaurent> {
    let w = q_w_poly_shared(k, alpha)?;
    let w = if step == 1 {
        ring.embed(&w)
    } else {
        ring.embed(&w.subst_q_power(step))
    };
    Ok(ring.pow(&w, m))
}

pub(crate) fn plain_in<R: SumRing>(
    ring: &R,
    n: i64,
    alpha: i64,
    m: i64,
    r: i64,
) -> Result<QLaurent> {
    check_params(n, alpha, m, r)?;
    let (mu, ru) = (exponent(m, "m")?, exponent(r, "r")?);
    let mut acc = ring.embed(&QLaurent::zero());
    // k = 0 vanishes through [0].
    for k in 1..n {
        let w = w_power(ring, k, alpha, mu, 1)?;
        let term = ring.mul_q_integer(&w, to_u64(k * (k + 1)), 1, ru);
        let term = ring.mul_q_integer(&term, to_u64(2 * k + 1), 1, 1);
        acc += &ring.shift(&term, (n - 1 - k) * (alpha * m + 1));
    }
    Ok(acc)
}

pub(crate) fn alternating_in<R: SumRing>(
    ring: &R,
    n: i64,
    alpha: i64,
    m: i64,
    r: i64,
) -> Result<QLaurent> {
    check_params(n, alpha, m, r)?;
    let (mu, ru) = (exponent(m, "m")?, exponent(r, "r")?);
    let mut acc = ring.embed(&QLaurent::zero());
    for k in 1..n {
        let w = w_power(ring, k, alpha, mu, 2)?;
        let term = ring.mul_q_integer(&w, to_u64(k * (k + 1)), 2, ru);
        let term = ring.mul_q_integer(&term, to_u64(2 * k + 1), 1, 1);
        let term = ring.shift(&term, (n - 1 - k) * (2 * alpha * m + 1));
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    Ok(acc)
}

pub(crate) fn product_in<R: SumRing>(
    ring: &R,
    n: i64,
    alpha: i64,
    m: i64,
    r: i64,
) -> Result<QLaurent> {
    check_params(n, alpha, m, r)?;
    let (mu, ru) = (exponent(m, "m")?, exponent(r, "r")?);
    let mut acc = ring.embed(&QLaurent::zero());
    for k in 1..n {
        let w = ring.mul(
            &w_power(ring, k, alpha, mu, 1)?,
            &w_power(ring, k + 1, alpha, mu, 1)?,
        );
        let term = ring.mul_q_integer(&w, to_u64(k * (k + 2)), 1, ru);
        let term = ring.mul_q_integer(&term, to_u64(2 * (k + 1)), 1, 1);
        acc += &ring.shift(&term, (n - 2 - k) * (2 * alpha * m + 1));
    }
    Ok(acc)
}

/// `(k)_β (k+β+1)_β` as a machine integer.
fn rising_pair(k: i64, beta: i64) -> Result<u64> {
    let value = rising_factorial(&k.into(), to_u64(beta))
        * rising_factorial(&(k + beta + 1).into(), to_u64(beta));
    u64::try_from(value)
        .map_err(|_| Error::Domain(format!("(k)_β(k+β+1)_β overflows at k={k}, β={beta}")))
}

pub(crate) fn general_in<R: SumRing>(
    ring: &R,
    n: i64,
    alpha: i64,
    beta: i64,
    m: i64,
    r: i64,
) -> Result<QLaurent> {
    check_params(n, alpha, m, r)?;
    require_min("beta", beta, 1)?;
    let (mu, ru) = (exponent(m, "m")?, exponent(r, "r")?);
    let mut acc = ring.embed(&QLaurent::zero());
    // k = 0 vanishes through (0)_β = 0.
    for k in 1..n {
        let mut w = ring.embed(&QLaurent::one());
        for i in 0..2 * beta {
            w = ring.mul(&w, &w_power(ring, k + i, alpha, mu, 1)?);
        }
        let term = ring.mul_q_integer(&w, rising_pair(k, beta)?, 1, ru);
        let term = ring.mul_q_integer(&term, to_u64(2 * (k + beta)), 1, 1);
        acc += &ring.shift(&term, (n - 2 * beta - k) * (2 * beta * alpha * m + 1));
    }
    Ok(acc)
}

/// `∑_{k=0}^{n-1} [k(k+1)]^r [2k+1] q^{(n-1-k)(αm+1)} w_k^(α)(x;q)^m`.
pub fn qsum_plain(n: i64, alpha: i64, m: i64, r: i64) -> Result<QLaurent> {
    plain_in(&Exact, n, alpha, m, r)
}

/// `∑_{k=0}^{n-1} (-1)^k [k(k+1)]^r_{q²} [2k+1] q^{(n-1-k)(2αm+1)} w_k^(α)(x;q²)^m`.
pub fn qsum_alternating(n: i64, alpha: i64, m: i64, r: i64) -> Result<QLaurent> {
    alternating_in(&Exact, n, alpha, m, r)
}

/// `∑_{k=0}^{n-1} [k(k+2)]^r [2(k+1)] q^{(n-2-k)(2αm+1)} (w_k^(α)(x;q) w_{k+1}^(α)(x;q))^m`.
pub fn qsum_product(n: i64, alpha: i64, m: i64, r: i64) -> Result<QLaurent> {
    product_in(&Exact, n, alpha, m, r)
}

/// `∑_{k=0}^{n-1} [(k)_β (k+β+1)_β]^r [2(k+β)] q^{(n-2β-k)(2βαm+1)} ∏_{i<2β} w_{k+i}^(α)(x;q)^m`,
/// where the first bracket is the q-integer of the integer product.
pub fn qsum_general(n: i64, alpha: i64, beta: i64, m: i64, r: i64) -> Result<QLaurent> {
    general_in(&Exact, n, alpha, beta, m, r)
}
