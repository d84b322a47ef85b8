use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dense;
use crate::error::{Error, Result};

/// Element of ℤ[x], coefficients lowest degree first, never with a stored
/// leading zero. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XPoly {
    coeffs: Vec<BigInt>,
}

/// Why an exact division in ℤ[x] failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionWitness {
    /// Degree whose leading coefficient was not divisible by the divisor's
    /// leading coefficient; `None` if the quotient was integral but a nonzero
    /// remainder of lower degree was left.
    pub obstructed_degree: Option<usize>,
    /// Partial remainder at the point of failure.
    pub remainder: XPoly,
}

impl fmt::Display for DivisionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.obstructed_degree {
            Some(d) => write!(f, "obstructed at x^{d}; remainder {}", self.remainder),
            None => write!(f, "remainder {}", self.remainder),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactDivision {
    Quotient(XPoly),
    Witness(DivisionWitness),
}

impl ExactDivision {
    pub fn quotient(self) -> Option<XPoly> {
        match self {
            ExactDivision::Quotient(q) => Some(q),
            ExactDivision::Witness(_) => None,
        }
    }
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        dense::trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial, which orders below every `Some(d)`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
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

    pub fn checked_pow(&self, exponent: i64) -> Result<Self> {
        let e = u32::try_from(exponent).map_err(|_| Error::NegativeExponent(exponent))?;
        Ok(self.pow(e))
    }

    /// Returns `p(c0 + c1·x)`.
    pub fn affine_subst(&self, c0: &BigInt, c1: &BigInt) -> Self {
        let inner = Self::from_coeffs(vec![c0.clone(), c1.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &inner;
            acc += &Self::constant(c.clone());
        }
        acc
    }

    /// Exact division in ℤ[x]: the quotient when `d` divides `self` with an
    /// integral quotient, otherwise the point where long division got stuck.
    pub fn div_exact(&self, d: &XPoly) -> Result<ExactDivision> {
        let d_deg = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = &d.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree() else {
            return Ok(ExactDivision::Quotient(Self::zero()));
        };
        if top < d_deg {
            return Ok(ExactDivision::Witness(DivisionWitness {
                obstructed_degree: None,
                remainder: self.clone(),
            }));
        }
        let mut quot = vec![BigInt::zero(); top - d_deg + 1];
        for i in (d_deg..=top).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (t, r) = rem[i].div_rem(lead);
            if !r.is_zero() {
                return Ok(ExactDivision::Witness(DivisionWitness {
                    obstructed_degree: Some(i),
                    remainder: Self::from_coeffs(rem),
                }));
            }
            let shift = i - d_deg;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[shift + j] -= &t * dc;
            }
            quot[shift] = t;
        }
        let rem = Self::from_coeffs(rem);
        if rem.is_zero() {
            Ok(ExactDivision::Quotient(Self::from_coeffs(quot)))
        } else {
            Ok(ExactDivision::Witness(DivisionWitness {
                obstructed_degree: None,
                remainder: rem,
            }))
        }
    }

    /// Coefficient-wise floor division by a nonzero integer:
    /// `self = d·quotient + remainder` with remainder coefficients in `[0, |d|)`.
    pub fn div_rem_int(&self, d: &BigInt) -> Result<(XPoly, XPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus = d.abs();
        let (q, r): (Vec<BigInt>, Vec<BigInt>) = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&modulus);
                ((c - &r) / d, r)
            })
            .unzip();
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// Value at `x = v`.
    pub fn eval(&self, v: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * v + c)
    }
}

impl From<BigInt> for XPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for XPoly {
    fn from(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

impl AddAssign<&XPoly> for XPoly {
    fn add_assign(&mut self, rhs: &XPoly) {
        dense::add_assign(&mut self.coeffs, &rhs.coeffs);
    }
}

impl SubAssign<&XPoly> for XPoly {
    fn sub_assign(&mut self, rhs: &XPoly) {
        dense::sub_assign(&mut self.coeffs, &rhs.coeffs);
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        XPoly {
            coeffs: dense::mul(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(mut self) -> XPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(XPoly, Add, add);
forward_owned_binop!(XPoly, Sub, sub);
forward_owned_binop!(XPoly, Mul, mul);

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_dense(&self.coeffs, "x"))
    }
}

impl std::str::FromStr for XPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::text::parse_dense(s, 'x').map(Self::from_coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> XPoly {
        XPoly::from_i64(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&p(&[1, 2]) + &p(&[-1, -2])).is_zero());
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 2]).pow(0), XPoly::one());
        assert_eq!(p(&[1, 2]).scale(&BigInt::from(-3)), p(&[-3, -6]));
        assert!(p(&[1, 2]).checked_pow(-1).is_err());
        assert_eq!(p(&[1, 1]).checked_pow(3).unwrap(), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(XPoly::zero().degree(), None);
        assert!(XPoly::zero().degree() < XPoly::one().degree());
        assert_eq!(p(&[0, 0, 3, 0, 0]).degree(), Some(2));
    }

    #[test]
    fn affine_substitution_examples() {
        let m1 = BigInt::from(-1);
        assert_eq!(p(&[1, 5, 5]).affine_subst(&m1, &m1), p(&[1, 5, 5]));
        let q = p(&[4, -3, 0, 7]);
        assert_eq!(q.affine_subst(&BigInt::zero(), &BigInt::one()), q);
        assert_eq!(XPoly::x().affine_subst(&m1, &m1), p(&[-1, -1]));
        // (1+x)^2 at x -> 2 + 3x
        assert_eq!(
            p(&[1, 2, 1]).affine_subst(&BigInt::from(2), &BigInt::from(3)),
            p(&[9, 18, 9])
        );
    }

    #[test]
    fn exact_division_examples() {
        let two_x_plus_one = p(&[1, 2]);
        assert_eq!(
            p(&[1, 2]).div_exact(&two_x_plus_one).unwrap(),
            ExactDivision::Quotient(XPoly::one())
        );
        match p(&[1, 1]).div_exact(&two_x_plus_one).unwrap() {
            ExactDivision::Witness(w) => assert_eq!(w.obstructed_degree, Some(1)),
            other => panic!("expected witness, got {other:?}"),
        }
        // x^2 + 1 by x + 1 has integral quotient x - 1 but remainder 2
        match p(&[1, 0, 1]).div_exact(&p(&[1, 1])).unwrap() {
            ExactDivision::Witness(w) => {
                assert_eq!(w.obstructed_degree, None);
                assert_eq!(w.remainder, p(&[2]));
            }
            other => panic!("expected witness, got {other:?}"),
        }
        assert_eq!(
            p(&[1]).div_exact(&XPoly::zero()),
            Err(Error::DivisionByZero)
        );
        // integer divisor: every coefficient must be divisible
        assert_eq!(
            p(&[6, 12]).div_exact(&p(&[3])).unwrap(),
            ExactDivision::Quotient(p(&[2, 4]))
        );
        assert!(p(&[6, 13])
            .div_exact(&p(&[3]))
            .unwrap()
            .quotient()
            .is_none());
        assert_eq!(
            XPoly::zero().div_exact(&two_x_plus_one).unwrap(),
            ExactDivision::Quotient(XPoly::zero())
        );
    }

    #[test]
    fn integer_division_remainder_is_nonnegative() {
        let (q, r) = p(&[-7, 7, 12]).div_rem_int(&BigInt::from(-4)).unwrap();
        assert_eq!(r, p(&[1, 3]));
        assert_eq!(&q.scale(&BigInt::from(-4)) + &r, p(&[-7, 7, 12]));
    }

    fn arb_poly() -> impl Strategy<Value = XPoly> {
        proptest::collection::vec(-9i64..=9, 0..=9).prop_map(|c| XPoly::from_i64(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn div_exact_recovers_factor(a in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let prod = &a * &d;
            prop_assert_eq!(prod.div_exact(&d).unwrap(), ExactDivision::Quotient(a));
        }
    }
}
