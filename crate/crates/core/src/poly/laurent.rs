use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{dense, QPoly, XPoly};
use crate::error::{Error, Result};
use crate::poly::xpoly::forward_owned_binop;

/// Element of ℤ[x][q, q⁻¹]: a sparse map from q-exponent to a nonzero
/// x-polynomial. Two values are equal iff their term maps are identical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    terms: BTreeMap<i64, XPoly>,
}

/// Result of dividing a Laurent polynomial by a monic modulus `m` with unit
/// constant term: `q^shift · input = quotient · m + remainder`, where `shift`
/// clears every negative exponent and the remainder has q-degrees in
/// `[0, deg m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentDivision {
    pub shift: i64,
    pub quotient: QLaurent,
    pub remainder: QLaurent,
}

impl LaurentDivision {
    /// Checks `quotient · modulus + remainder == q^shift · input`.
    pub fn reconstructs(&self, input: &QLaurent, modulus: &QPoly) -> bool {
        &(&self.quotient * &modulus.to_laurent()) + &self.remainder == input.shift(self.shift)
    }
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, XPoly::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(0, XPoly::constant(c))
    }

    pub fn from_xpoly(p: XPoly) -> Self {
        Self::monomial(0, p)
    }

    /// `q^exponent · coeff`.
    pub fn monomial(exponent: i64, coeff: XPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { terms }
    }

    /// `q^exponent`.
    pub fn q_power(exponent: i64) -> Self {
        Self::monomial(exponent, XPoly::one())
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, XPoly)>) -> Self {
        let mut out = Self::zero();
        for (e, p) in terms {
            out.add_term(e, &p);
        }
        out
    }

    /// `q^shift · p(q)` with integer coefficients.
    pub fn from_qpoly(p: &QPoly, shift: i64) -> Self {
        p.to_laurent_at(shift, 0)
    }

    pub fn terms(&self) -> &BTreeMap<i64, XPoly> {
        &self.terms
    }

    pub fn coeff(&self, exponent: i64) -> Option<&XPoly> {
        self.terms.get(&exponent)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Number of stored coefficients summed over all q-exponents.
    pub fn coefficient_count(&self) -> usize {
        self.terms.values().map(|p| p.coeffs().len()).sum()
    }

    fn x_len(&self) -> usize {
        self.terms
            .values()
            .map(|p| p.coeffs().len())
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, exponent: i64, coeff: &XPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponent) {
            Some(slot) => {
                *slot += coeff;
                if slot.is_zero() {
                    self.terms.remove(&exponent);
                }
            }
            None => {
                self.terms.insert(exponent, coeff.clone());
            }
        }
    }

    /// `self += q^shift · other`.
    pub fn add_shifted(&mut self, other: &QLaurent, shift: i64) {
        for (e, p) in &other.terms {
            self.add_term(e + shift, p);
        }
    }

    /// Multiplication by `q^e` for any sign of `e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, p)| (k + e, p.clone())).collect(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, p)| (*k, p.scale(c))).collect(),
        }
    }

    /// Multiplication by `∑_{i<count} q^{step·i}`, i.e. by `[count]_{q^step}`,
    /// in time linear in the size of the result.
    pub fn mul_geometric(&self, count: u64, step: u64) -> Self {
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Self::zero();
        };
        if count == 0 {
            return Self::zero();
        }
        if step == 0 {
            return self.scale_int(&BigInt::from(count));
        }
        let step = step as usize;
        let span = step * (count as usize - 1);
        let len = (hi - lo) as usize + 1 + span;
        let mut out: Vec<XPoly> = vec![XPoly::zero(); len];
        for i in 0..len {
            let mut acc = if i >= step {
                out[i - step].clone()
            } else {
                XPoly::zero()
            };
            if let Some(p) = self.terms.get(&(lo + i as i64)) {
                acc += p;
            }
            if i >= span + step {
                if let Some(p) = self.terms.get(&(lo + (i - span - step) as i64)) {
                    acc -= p;
                }
            }
            out[i] = acc;
        }
        Self::from_terms(out.into_iter().enumerate().map(|(i, p)| (lo + i as i64, p)))
    }

    pub fn mul_xpoly(&self, p: &XPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c * p)))
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

    /// Substitutes `q -> q^k` for `k >= 1`.
    pub fn subst_q_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitution power must be positive");
        Self {
            terms: self.terms.iter().map(|(e, p)| (e * k, p.clone())).collect(),
        }
    }

    /// Substitutes `q -> q²`, doubling every exponent.
    pub fn subst_q_squared(&self) -> Self {
        self.subst_q_power(2)
    }

    /// Specializes `q = 1`.
    pub fn eval_q_one(&self) -> XPoly {
        let mut acc = XPoly::zero();
        for p in self.terms.values() {
            acc += p;
        }
        acc
    }

    fn check_modulus(m: &QPoly) -> Result<usize> {
        let deg = match m.degree() {
            Some(d) if d >= 1 && m.is_monic() => d,
            _ => return Err(Error::NonMonicModulus),
        };
        if !m.constant_term().abs().is_one() {
            return Err(Error::NonUnitConstant);
        }
        Ok(deg)
    }

    /// Remainder of `q^N · self` modulo `m`, where `N` clears the negative
    /// exponents. Zero iff `m` divides `self` in ℤ[x][q, q⁻¹], since `q` is a
    /// unit modulo `m` when `m(0) = ±1`.
    pub fn rem_monic(&self, m: &QPoly) -> Result<QLaurent> {
        Ok(self.reduce(m, false)?.remainder)
    }

    /// Like [`QLaurent::rem_monic`] but also returns the quotient.
    pub fn div_rem_monic(&self, m: &QPoly) -> Result<LaurentDivision> {
        self.reduce(m, true)
    }

    fn reduce(&self, m: &QPoly, keep_quotient: bool) -> Result<LaurentDivision> {
        let deg = Self::check_modulus(m)?;
        let shift = (-self.min_exponent().unwrap_or(0)).max(0);
        let top = match self.max_exponent() {
            Some(e) => (e + shift) as usize,
            None => {
                return Ok(LaurentDivision {
                    shift,
                    quotient: Self::zero(),
                    remainder: Self::zero(),
                })
            }
        };
        let mut rem: Vec<XPoly> = vec![XPoly::zero(); top + 1];
        for (e, p) in &self.terms {
            rem[(e + shift) as usize] = p.clone();
        }
        let mut quotient = BTreeMap::new();
        let lower = &m.coeffs()[..deg];
        if top >= deg {
            for i in (deg..=top).rev() {
                if rem[i].is_zero() {
                    continue;
                }
                let t = std::mem::take(&mut rem[i]);
                let base = i - deg;
                for (j, mc) in lower.iter().enumerate() {
                    if mc.is_zero() {
                    } else if mc.is_one() {
                        rem[base + j] -= &t;
                    } else if (-mc).is_one() {
                        rem[base + j] += &t;
                    } else {
                        rem[base + j] -= &t.scale(mc);
                    }
                }
                if keep_quotient {
                    quotient.insert(base as i64, t);
                }
            }
        }
        let remainder = Self {
            terms: rem
                .into_iter()
                .take(deg)
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(i, p)| (i as i64, p))
                .collect(),
        };
        Ok(LaurentDivision {
            shift,
            quotient: Self { terms: quotient },
            remainder,
        })
    }

    fn mul_impl(&self, rhs: &QLaurent) -> QLaurent {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 || rhs.terms.len() == 1 {
            let (single, other) = if self.terms.len() == 1 {
                (self, rhs)
            } else {
                (rhs, self)
            };
            let (e, p) = single.terms.iter().next().expect("one term");
            return Self::from_terms(other.terms.iter().map(|(k, c)| (k + e, c * p)));
        }
        let (a_min, a_max) = (self.min_exponent().unwrap(), self.max_exponent().unwrap());
        let (b_min, b_max) = (rhs.min_exponent().unwrap(), rhs.max_exponent().unwrap());
        let stride = self.x_len() + rhs.x_len() - 1;
        let pack = |p: &QLaurent, lo: i64, hi: i64| {
            let mut flat = vec![BigInt::zero(); (hi - lo + 1) as usize * stride];
            for (e, xp) in &p.terms {
                let base = (e - lo) as usize * stride;
                for (j, c) in xp.coeffs().iter().enumerate() {
                    flat[base + j] = c.clone();
                }
            }
            flat
        };
        let product = dense::mul(&pack(self, a_min, a_max), &pack(rhs, b_min, b_max));
        let offset = a_min + b_min;
        Self {
            terms: product
                .chunks(stride)
                .enumerate()
                .filter_map(|(i, chunk)| {
                    let p = XPoly::from_coeffs(chunk.to_vec());
                    (!p.is_zero()).then_some((i as i64 + offset, p))
                })
                .collect(),
        }
    }
}

impl From<XPoly> for QLaurent {
    fn from(p: XPoly) -> Self {
        Self::from_xpoly(p)
    }
}

impl From<&QPoly> for QLaurent {
    fn from(p: &QPoly) -> Self {
        Self::from_qpoly(p, 0)
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        self.add_shifted(rhs, 0);
    }
}

impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &QLaurent) {
        for (e, p) in &rhs.terms {
            self.add_term(*e, &-p);
        }
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        self.mul_impl(rhs)
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.iter().map(|(e, p)| (*e, -p)).collect(),
        }
    }
}

forward_owned_binop!(QLaurent, Add, add);
forward_owned_binop!(QLaurent, Sub, sub);
forward_owned_binop!(QLaurent, Mul, mul);

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_laurent(&self.terms))
    }
}

impl std::str::FromStr for QLaurent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::text::parse_laurent(s).map(|terms| Self { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xp(c: &[i64]) -> XPoly {
        XPoly::from_i64(c)
    }

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_i64(c)
    }

    #[test]
    fn geometric_multiplication_matches_product() {
        let a = QLaurent::from_terms([
            (-3, XPoly::from_i64(&[1, 2])),
            (0, XPoly::from_i64(&[-4])),
            (5, XPoly::x()),
        ]);
        for count in 0..7u64 {
            for step in 0..4u64 {
                let g = QLaurent::from_terms((0..count).map(|i| ((step * i) as i64, XPoly::one())));
                assert_eq!(
                    a.mul_geometric(count, step),
                    &a * &g,
                    "count={count} step={step}"
                );
            }
        }
        assert!(QLaurent::zero().mul_geometric(5, 2).is_zero());
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(QLaurent::one().shift(-2), QLaurent::q_power(-2));
        let a = QLaurent::monomial(-1, xp(&[1, 1]));
        let b = QLaurent::monomial(1, xp(&[1, -1]));
        assert_eq!(&a * &b, QLaurent::from_xpoly(xp(&[1, 0, -1])));
        assert_eq!(a.pow(1), a);
        assert_eq!(a.pow(0), QLaurent::one());
        assert!(a.checked_pow(-2).is_err());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn map_examples() {
        let a = QLaurent::from_terms([(1, XPoly::one()), (-1, XPoly::x())]);
        let expected = QLaurent::from_terms([(2, XPoly::one()), (-2, XPoly::x())]);
        assert_eq!(a.subst_q_squared(), expected);
        let w2 = QLaurent::from_terms([(3, XPoly::one()), (2, XPoly::x()), (4, XPoly::x())]);
        assert_eq!(w2.eval_q_one(), xp(&[1, 2]));
        assert!(QLaurent::zero().eval_q_one().is_zero());
    }

    #[test]
    fn monic_remainder_examples() {
        let phi3 = qp(&[1, 1, 1]);
        let a = QLaurent::from_qpoly(&qp(&[0, 1, 1, 1]), 0);
        assert!(a.rem_monic(&phi3).unwrap().is_zero());
        assert!(QLaurent::from_qpoly(&phi3, 0)
            .rem_monic(&phi3)
            .unwrap()
            .is_zero());
        assert_eq!(
            QLaurent::one().rem_monic(&qp(&[1, 1])).unwrap(),
            QLaurent::one()
        );
        // q^-3 · q^2 (1 + q + q^2) is still divisible by Φ_3
        assert!(a.shift(-5).rem_monic(&phi3).unwrap().is_zero());
        assert_eq!(a.rem_monic(&qp(&[2, 1])), Err(Error::NonUnitConstant));
        assert_eq!(a.rem_monic(&qp(&[1, 2])), Err(Error::NonMonicModulus));
        assert_eq!(a.rem_monic(&qp(&[1])), Err(Error::NonMonicModulus));
    }

    #[test]
    fn division_reconstructs_input() {
        let a = QLaurent::from_terms([(-3, xp(&[1, 2])), (0, xp(&[5])), (7, xp(&[0, -4, 9]))]);
        let m = qp(&[1, -1, 0, 1]);
        let div = a.div_rem_monic(&m).unwrap();
        assert_eq!(div.shift, 3);
        assert!(div.reconstructs(&a, &m));
        assert!(div.remainder.max_exponent().unwrap() < 3);
    }

    #[test]
    fn canonical_text() {
        let a = QLaurent::from_terms([(-1, xp(&[1, 2])), (3, xp(&[5]))]);
        assert_eq!(a.to_string(), "q^-1*(1 + 2*x) + q^3*(5)");
        assert_eq!(a.to_string().parse::<QLaurent>().unwrap(), a);
        assert_eq!(QLaurent::zero().to_string(), "0");
    }

    #[test]
    fn large_product_matches_termwise_expansion() {
        let a = QLaurent::from_terms((-20..40).map(|e| (e, xp(&[e, 1 - e, 3, e * e]))));
        let b = QLaurent::from_terms((0..50).map(|e| (e - 7, xp(&[2 * e - 1, 0, -e]))));
        let mut expected = QLaurent::zero();
        for (ea, pa) in a.terms() {
            for (eb, pb) in b.terms() {
                expected.add_term(ea + eb, &(pa * pb));
            }
        }
        assert_eq!(&a * &b, expected);
    }

    fn arb_laurent() -> impl Strategy<Value = QLaurent> {
        proptest::collection::vec(
            (-4i64..=4, proptest::collection::vec(-9i64..=9, 0..=8)),
            0..=8,
        )
        .prop_map(|terms| QLaurent::from_terms(terms.into_iter().map(|(e, c)| (e, xp(&c)))))
    }

    fn arb_rem(deg: usize) -> impl Strategy<Value = QLaurent> {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, 0..=4), deg).prop_map(|cs| {
            QLaurent::from_terms(cs.into_iter().enumerate().map(|(i, c)| (i as i64, xp(&c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn eval_q_one_is_a_morphism(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!((&a * &b).eval_q_one(), &a.eval_q_one() * &b.eval_q_one());
            prop_assert_eq!((&a + &b).eval_q_one(), &a.eval_q_one() + &b.eval_q_one());
        }

        #[test]
        fn q_squared_is_an_injective_morphism(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!((&a * &b).subst_q_squared(), &a.subst_q_squared() * &b.subst_q_squared());
            prop_assert_eq!((&a + &b).subst_q_squared(), &a.subst_q_squared() + &b.subst_q_squared());
            prop_assert_eq!(a.subst_q_squared() == b.subst_q_squared(), a == b);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn remainder_of_multiple_plus_r(a in arb_laurent(), r in arb_rem(3)) {
            // Keep the multiplier polynomial in q so no shift is applied.
            let a = a.shift(4);
            for m in [qp(&[1, 1, 1, 1]), qp(&[-1, 0, 2, 1]), qp(&[1, -1, 0, 1])] {
                let value = &(&a * &m.to_laurent()) + &r;
                prop_assert_eq!(value.rem_monic(&m).unwrap(), r.clone());
                let div = value.div_rem_monic(&m).unwrap();
                prop_assert!(div.reconstructs(&value, &m));
            }
        }

        #[test]
        fn laurent_divisibility_ignores_unit_shifts(a in arb_laurent(), e in -6i64..=6) {
            let m = qp(&[1, 1, 1]);
            let multiple = &a * &m.to_laurent();
            prop_assert!(multiple.shift(e).rem_monic(&m).unwrap().is_zero());
            let div = multiple.shift(e).div_rem_monic(&m).unwrap();
            prop_assert!(div.reconstructs(&multiple.shift(e), &m));
        }
    }
}
