//! Integrality statements at `q = 1` and the conjecture variants.

use std::sync::{Arc, LazyLock};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{lcm_range, rising_factorial};
use crate::engine::{Status, Verdict};
use crate::error::{require_min, Error, Result};
use crate::memo::MemoTable;
use crate::poly::{ExactDivision, XPoly};
use crate::wpoly::w_alpha_poly_shared;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Alternating,
}

impl Sign {
    fn at(self, k: i64) -> i64 {
        match self {
            Sign::Alternating if k % 2 == 1 => -1,
            _ => 1,
        }
    }
}

/// `numerator / (x_divisor · denominator)`, claimed to lie in ℤ[x].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSum {
    pub numerator: XPoly,
    pub x_divisor: Option<XPoly>,
    pub denominator: BigInt,
}

impl RationalSum {
    /// The quotient in ℤ[x], or a witness: the obstruction of the division
    /// by `x_divisor`, else the nonzero coefficient residues modulo
    /// `denominator`.
    pub fn reduce(&self) -> Result<std::result::Result<XPoly, String>> {
        let numerator = match &self.x_divisor {
            Some(d) => match self.numerator.div_exact(d)? {
                ExactDivision::Quotient(q) => q,
                ExactDivision::Witness(w) => return Ok(Err(w.to_string())),
            },
            None => self.numerator.clone(),
        };
        let (quotient, remainder) = numerator.div_rem_int(&self.denominator)?;
        Ok(if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(remainder.to_string())
        })
    }

    pub(crate) fn witness(&self) -> Result<Option<String>> {
        Ok(self.reduce()?.err())
    }
}

static W_POWERS: LazyLock<MemoTable<(i64, i64, i64), XPoly>> = LazyLock::new(MemoTable::new);

/// `w_k^(α)(x)^m`, memoized.
fn w_power(k: i64, alpha: i64, m: i64) -> Result<Arc<XPoly>> {
    let base = w_alpha_poly_shared(k, alpha)?;
    let e = u32::try_from(m).map_err(|_| Error::Domain(format!("m = {m} too large")))?;
    Ok(W_POWERS.get_or_insert_with((k, alpha, m), || base.pow(e)))
}

fn positive(params: &[(&'static str, i64)]) -> Result<()> {
    params
        .iter()
        .try_for_each(|&(name, v)| require_min(name, v, 1))
}

fn gcd2(n: i64) -> i64 {
    2.gcd(&n)
}

fn n3(n: i64) -> BigInt {
    BigInt::from(n) * (n + 1) * (n + 2)
}

/// `(2,n) ∑_{k=1}^{n} (±1)^k k^r (k+1)^r (2k+1) w_k^(α)(x)^m` over `n(n+1)(n+2)`.
pub fn int_plain_sum(n: i64, alpha: i64, m: i64, r: i64, sign: Sign) -> Result<RationalSum> {
    positive(&[("n", n), ("alpha", alpha), ("m", m), ("r", r)])?;
    let ru = u32::try_from(r).map_err(|_| Error::Domain(format!("r = {r} too large")))?;
    let mut acc = XPoly::zero();
    for k in 1..=n {
        let c = BigInt::from(k * (k + 1)).pow(ru) * (2 * k + 1) * sign.at(k);
        acc += &w_power(k, alpha, m)?.scale(&c);
    }
    Ok(RationalSum {
        numerator: acc.scale(&gcd2(n).into()),
        x_divisor: None,
        denominator: n3(n),
    })
}

/// `2 ∑_{k=1}^{n} (k)_β^r (k+β+1)_β^r (k+β) ∏_{i<2β} w_{k+i}^(α)(x)^m` over
/// `lcm(n, n+1, …, n+2β+1)`.
pub fn int_lcm_sum(n: i64, alpha: i64, beta: i64, m: i64, r: i64) -> Result<RationalSum> {
    positive(&[
        ("n", n),
        ("alpha", alpha),
        ("beta", beta),
        ("m", m),
        ("r", r),
    ])?;
    let ru = u32::try_from(r).map_err(|_| Error::Domain(format!("r = {r} too large")))?;
    let bu = beta as u64;
    let mut acc = XPoly::zero();
    for k in 1..=n {
        let c = (rising_factorial(&k.into(), bu) * rising_factorial(&(k + beta + 1).into(), bu))
            .pow(ru)
            * (k + beta);
        let mut prod = XPoly::constant(c);
        for i in 0..2 * beta {
            prod = &prod * &*w_power(k + i, alpha, m)?;
        }
        acc += &prod;
    }
    Ok(RationalSum {
        numerator: acc.scale(&2.into()),
        x_divisor: None,
        denominator: lcm_range(n, n + 2 * beta + 1)?,
    })
}

fn timed(
    statement: &str,
    params: &[(&str, i64)],
    start: Instant,
    sum: Result<RationalSum>,
) -> Result<Verdict> {
    let witness = sum?.witness()?;
    Ok(Verdict::new(statement, params, witness, start.elapsed()))
}

/// Integrality of the plain (`Sign::Plus`) or alternating weighted sum.
pub fn int_sum_plain(n: i64, alpha: i64, m: i64, r: i64, sign: Sign) -> Result<Verdict> {
    let start = Instant::now();
    let id = match sign {
        Sign::Plus => "thm-int-plain",
        Sign::Alternating => "thm-int-alternating",
    };
    let sum = int_plain_sum(n, alpha, m, r, sign);
    timed(
        id,
        &[("n", n), ("alpha", alpha), ("m", m), ("r", r)],
        start,
        sum,
    )
}

/// Integrality of the `2/lcm(n, …, n+2β+1)` product sum.
pub fn int_sum_lcm(n: i64, alpha: i64, beta: i64, m: i64, r: i64) -> Result<Verdict> {
    let start = Instant::now();
    let sum = int_lcm_sum(n, alpha, beta, m, r);
    timed(
        "thm-int-lcm",
        &[
            ("n", n),
            ("alpha", alpha),
            ("beta", beta),
            ("m", m),
            ("r", r),
        ],
        start,
        sum,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjectureVariant {
    /// `∑ (−1)^k k(k+1)(2k+1) w_k^(α)(x)^m / (n(n+1)(n+2))` for `α > 1`.
    C52Eq14EvenN,
    /// `2(2,n) ∑ k(k+1)(k+2) (w_k w_{k+1})^m / (n(n+1)(n+2)(2x+1)^m)`.
    C54Ii,
    /// `4 ∑ k(k+1)(k+2) w_k w_{k+1} / (n(n+1)(n+2)(2x+1)^3)` for even `n`.
    C54Iii,
}

impl ConjectureVariant {
    pub fn statement(self) -> &'static str {
        match self {
            ConjectureVariant::C52Eq14EvenN => "conj-52-even",
            ConjectureVariant::C54Ii => "conj-54-ii",
            ConjectureVariant::C54Iii => "conj-54-iii",
        }
    }
}

/// The rational sum of a conjecture variant. The two variants built from
/// `w_k w_{k+1}` are stated for `α = 1` only, and the third fixes `m = 1`.
pub fn conjecture_sum(
    variant: ConjectureVariant,
    n: i64,
    alpha: i64,
    m: i64,
) -> Result<RationalSum> {
    positive(&[("n", n), ("alpha", alpha), ("m", m)])?;
    match variant {
        ConjectureVariant::C52Eq14EvenN => {
            if alpha == 1 {
                return Err(Error::Domain("conj-52-even needs alpha > 1".into()));
            }
            let mut acc = XPoly::zero();
            for k in 1..=n {
                let c = BigInt::from(k * (k + 1) * (2 * k + 1) * Sign::Alternating.at(k));
                acc += &w_power(k, alpha, m)?.scale(&c);
            }
            Ok(RationalSum {
                numerator: acc,
                x_divisor: None,
                denominator: n3(n),
            })
        }
        ConjectureVariant::C54Ii | ConjectureVariant::C54Iii => {
            if alpha != 1 {
                return Err(Error::Domain(format!(
                    "{} needs alpha = 1",
                    variant.statement()
                )));
            }
            let (prefactor, power, m) = if variant == ConjectureVariant::C54Ii {
                (2 * gcd2(n), m, m)
            } else {
                if n % 2 == 1 {
                    return Err(Error::Domain("conj-54-iii needs even n".into()));
                }
                if m != 1 {
                    return Err(Error::Domain("conj-54-iii fixes m = 1".into()));
                }
                (4, 3, 1)
            };
            let mut acc = XPoly::zero();
            for k in 1..=n {
                let c = BigInt::from(k * (k + 1) * (k + 2));
                acc += &(&*w_power(k, 1, m)? * &*w_power(k + 1, 1, m)?).scale(&c);
            }
            Ok(RationalSum {
                numerator: acc.scale(&prefactor.into()),
                x_divisor: Some(XPoly::from_i64(&[1, 2]).pow(power as u32)),
                denominator: n3(n),
            })
        }
    }
}

/// Empirical check of one conjecture instance; the verdict is marked as such.
pub fn conjecture_checks(
    variant: ConjectureVariant,
    n: i64,
    alpha: i64,
    m: i64,
) -> Result<Verdict> {
    let start = Instant::now();
    let sum = conjecture_sum(variant, n, alpha, m);
    Ok(timed(
        variant.statement(),
        &[("n", n), ("alpha", alpha), ("m", m)],
        start,
        sum,
    )?
    .with_status(Status::ConjectureEmpirical))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quotient(s: RationalSum) -> XPoly {
        s.reduce().unwrap().expect("integral")
    }

    #[test]
    fn plain_examples() {
        assert_eq!(
            quotient(int_plain_sum(1, 1, 1, 1, Sign::Plus).unwrap()),
            XPoly::one()
        );
        assert_eq!(
            quotient(int_plain_sum(2, 1, 1, 1, Sign::Plus).unwrap()),
            XPoly::from_i64(&[3, 5])
        );
        assert_eq!(
            quotient(int_plain_sum(2, 1, 1, 1, Sign::Alternating).unwrap()),
            XPoly::from_i64(&[2, 5])
        );
        let v = int_sum_plain(2, 1, 1, 1, Sign::Alternating).unwrap();
        assert!(v.pass);
        assert_eq!(v.statement, "thm-int-alternating");
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(
            quotient(int_lcm_sum(1, 1, 1, 1, 1).unwrap()),
            XPoly::from_i64(&[1, 2])
        );
        assert!(int_sum_lcm(2, 1, 1, 1, 1).unwrap().pass);
        assert!(int_sum_lcm(2, 1, 2, 1, 1).unwrap().pass);
    }

    #[test]
    fn plain_sum_matches_direct_rational_arithmetic() {
        for n in 1..=10 {
            for sign in [Sign::Plus, Sign::Alternating] {
                let s = int_plain_sum(n, 2, 2, 1, sign).unwrap();
                let q = quotient(s);
                for x in [-2i64, 0, 3] {
                    let mut total = BigInt::from(0);
                    for k in 1..=n {
                        let w: BigInt = (1..=k)
                            .map(|j| {
                                crate::arith::w_number(k, j).unwrap().pow(2)
                                    * BigInt::from(x).pow((j - 1) as u32)
                            })
                            .sum();
                        total += w.pow(2) * (k * (k + 1)) * (2 * k + 1) * sign.at(k);
                    }
                    assert_eq!(q.eval(&x.into()) * n * (n + 1) * (n + 2), total * gcd2(n));
                }
            }
        }
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(
            quotient(conjecture_sum(ConjectureVariant::C54Ii, 1, 1, 1).unwrap()),
            XPoly::from_i64(&[2])
        );
        let v = conjecture_checks(ConjectureVariant::C54Iii, 2, 1, 1).unwrap();
        assert!(v.pass);
        assert_eq!(v.status, Status::ConjectureEmpirical);
        assert!(
            conjecture_checks(ConjectureVariant::C52Eq14EvenN, 2, 2, 1)
                .unwrap()
                .pass
        );
        assert!(conjecture_checks(ConjectureVariant::C52Eq14EvenN, 2, 1, 1).is_err());
        assert!(conjecture_checks(ConjectureVariant::C54Iii, 3, 1, 1).is_err());
        assert!(conjecture_checks(ConjectureVariant::C54Ii, 3, 2, 1).is_err());
    }

    #[test]
    fn corrupted_sums_fail_with_a_witness() {
        let mut s = int_plain_sum(5, 1, 2, 1, Sign::Plus).unwrap();
        s.numerator += &XPoly::one();
        assert_eq!(s.witness().unwrap().as_deref(), Some("1"));
        let mut c = conjecture_sum(ConjectureVariant::C54Ii, 4, 1, 2).unwrap();
        c.numerator += &XPoly::one();
        assert!(c.witness().unwrap().is_some());
    }
}
