//! Two evaluation rings for the theorem sums.
//!
//! [`Exact`] works in ℤ[x][q, q⁻¹] and yields the sum itself. [`Cyclic`]
//! works in ℤ[x][q]/(q^L − 1): every modulus the theorems use divides
//! `q^L − 1` for a suitable period `L`, so the residue of the cyclic image
//! equals the residue of the exact sum while every intermediate stays below
//! degree `L`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{QLaurent, XPoly};
use crate::qobjects::q_integer_poly;

pub(crate) trait SumRing {
    /// Image of an exact Laurent polynomial.
    fn embed(&self, p: &QLaurent) -> QLaurent;

    fn mul(&self, a: &QLaurent, b: &QLaurent) -> QLaurent;

    /// Image of `q^e · a`.
    fn shift(&self, a: &QLaurent, e: i64) -> QLaurent;

    /// Image of `[value]_{q^step}` for `value >= 0`.
    fn q_integer(&self, value: u64, step: u64) -> QLaurent;

    /// Image of `[value]_{q^step}^times · a`.
    fn mul_q_integer(&self, a: &QLaurent, value: u64, step: u64, times: u32) -> QLaurent {
        self.mul(a, &self.pow(&self.q_integer(value, step), times))
    }

    fn pow(&self, a: &QLaurent, e: u32) -> QLaurent {
        let mut acc = self.embed(&QLaurent::one());
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Exact;

impl SumRing for Exact {
    fn embed(&self, p: &QLaurent) -> QLaurent {
        p.clone()
    }

    fn mul(&self, a: &QLaurent, b: &QLaurent) -> QLaurent {
        a * b
    }

    fn shift(&self, a: &QLaurent, e: i64) -> QLaurent {
        a.shift(e)
    }

    fn q_integer(&self, value: u64, step: u64) -> QLaurent {
        q_integer_poly(value)
            .subst_power(step as usize)
            .to_laurent()
    }

    fn mul_q_integer(&self, a: &QLaurent, value: u64, step: u64, times: u32) -> QLaurent {
        (0..times).fold(a.clone(), |acc, _| acc.mul_geometric(value, step))
    }

    fn pow(&self, a: &QLaurent, e: u32) -> QLaurent {
        a.pow(e)
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Cyclic {
    pub period: i64,
}

impl Cyclic {
    pub fn new(period: i64) -> Result<Self> {
        if period < 1 {
            return Err(Error::Domain(format!(
                "cyclic period {period} must be positive"
            )));
        }
        Ok(Self { period })
    }
}

/// Folds every exponent into `[0, period)`, i.e. reduces modulo `q^period - 1`.
pub(crate) fn fold(p: &QLaurent, period: i64) -> QLaurent {
    QLaurent::from_terms(
        p.terms()
            .iter()
            .map(|(e, c)| (e.rem_euclid(period), c.clone())),
    )
}

impl SumRing for Cyclic {
    fn embed(&self, p: &QLaurent) -> QLaurent {
        fold(p, self.period)
    }

    fn mul(&self, a: &QLaurent, b: &QLaurent) -> QLaurent {
        fold(&(a * b), self.period)
    }

    fn shift(&self, a: &QLaurent, e: i64) -> QLaurent {
        fold(&a.shift(e), self.period)
    }

    fn q_integer(&self, value: u64, step: u64) -> QLaurent {
        // Count the exponents step·i, 0 <= i < value, landing in each residue class.
        let period = self.period as u64;
        let mut counts = vec![0u64; period as usize];
        let cycle = period / gcd(step % period, period);
        let full = value / cycle;
        let partial = value % cycle;
        for i in 0..cycle {
            let slot = ((i % period) * (step % period) % period) as usize;
            counts[slot] += full + u64::from(i < partial);
        }
        QLaurent::from_terms(
            counts
                .into_iter()
                .enumerate()
                .map(|(e, c)| (e as i64, XPoly::constant(BigInt::from(c)))),
        )
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if a == 0 {
        b
    } else {
        gcd(b % a, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_q_integer_matches_folded_exact() {
        for period in 1..=9 {
            let ring = Cyclic::new(period).unwrap();
            for value in 0..=40 {
                for step in 1..=3 {
                    assert_eq!(
                        ring.q_integer(value, step),
                        fold(&Exact.q_integer(value, step), period),
                        "period {period} value {value} step {step}"
                    );
                }
            }
        }
    }

    #[test]
    fn fold_is_a_ring_morphism() {
        let a = QLaurent::from_terms([
            (-3, XPoly::from_i64(&[1, 2])),
            (5, XPoly::from_i64(&[0, -1])),
        ]);
        let b = QLaurent::from_terms([(-1, XPoly::from_i64(&[4])), (2, XPoly::from_i64(&[1, 1]))]);
        let ring = Cyclic::new(4).unwrap();
        assert_eq!(
            ring.mul(&ring.embed(&a), &ring.embed(&b)),
            fold(&(&a * &b), 4)
        );
        assert_eq!(ring.pow(&ring.embed(&a), 3), fold(&a.pow(3), 4));
    }
}
