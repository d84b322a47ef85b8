use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{dense, QLaurent, XPoly};
use crate::error::{Error, Result};
use crate::poly::xpoly::forward_owned_binop;

/// Element of ℤ[q], coefficients lowest degree first, trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        dense::trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c·q^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `q -> q^k` for `k >= 1`.
    pub fn subst_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution power must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self { coeffs }
    }

    /// Multiplies by `1 - q^e` in place.
    pub fn mul_one_minus_q_pow(&mut self, e: usize) {
        let n = self.coeffs.len();
        if n == 0 {
            return;
        }
        self.coeffs.resize(n + e, BigInt::zero());
        for i in (e..n + e).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - e];
        }
        dense::trim(&mut self.coeffs);
    }

    /// Divides by `1 - q^e` in place, panicking if the division is not exact.
    pub fn div_one_minus_q_pow(&mut self, e: usize) {
        assert!(e >= 1);
        let n = self.coeffs.len();
        for i in e..n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - e];
        }
        // The last e coefficients of the running series must vanish.
        let keep = n.saturating_sub(e);
        assert!(
            self.coeffs[keep..].iter().all(Zero::is_zero),
            "division by 1 - q^{e} is not exact"
        );
        self.coeffs.truncate(keep);
        dense::trim(&mut self.coeffs);
    }

    /// Division with remainder by a monic polynomial of degree at least 1.
    pub fn div_rem_monic(&self, m: &QPoly) -> Result<(QPoly, QPoly)> {
        let deg = match m.degree() {
            Some(d) if d >= 1 && m.is_monic() => d,
            _ => return Err(Error::NonMonicModulus),
        };
        let mut rem = self.coeffs.clone();
        if rem.len() <= deg {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - deg];
        for i in (deg..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let t = std::mem::take(&mut rem[i]);
            let shift = i - deg;
            for (j, mc) in m.coeffs[..deg].iter().enumerate() {
                if !mc.is_zero() {
                    rem[shift + j] -= &t * mc;
                }
            }
            quot[shift] = t;
        }
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Exact quotient by a monic divisor, `None` if a remainder is left.
    pub fn div_exact_monic(&self, m: &QPoly) -> Result<Option<QPoly>> {
        let (q, r) = self.div_rem_monic(m)?;
        Ok(r.is_zero().then_some(q))
    }

    /// The sum of the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn to_laurent(&self) -> QLaurent {
        QLaurent::from_qpoly(self, 0)
    }

    /// `self · q^shift · x^x_degree` as a Laurent polynomial.
    pub fn to_laurent_at(&self, shift: i64, x_degree: usize) -> QLaurent {
        QLaurent::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 + shift, XPoly::monomial(c.clone(), x_degree))),
        )
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        dense::add_assign(&mut coeffs, &rhs.coeffs);
        QPoly { coeffs }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        dense::sub_assign(&mut coeffs, &rhs.coeffs);
        QPoly { coeffs }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        QPoly {
            coeffs: dense::mul(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned_binop!(QPoly, Add, add);
forward_owned_binop!(QPoly, Sub, sub);
forward_owned_binop!(QPoly, Mul, mul);

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_dense(&self.coeffs, "q"))
    }
}

impl std::str::FromStr for QPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::text::parse_dense(s, 'q').map(Self::from_coeffs)
    }
}
