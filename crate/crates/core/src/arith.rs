//! Exact integer combinatorics: generalized binomials, Möbius function,
//! divisors, lcm of ranges, rising factorials, `w(n,k)` and Narayana numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{require_min, Error, Result};
use crate::poly::XPoly;

/// `C(n, k)` for any integer `n`, using the falling-product definition
/// `n(n-1)…(n-k+1)/k!`. Zero for `k < 0`; for `n ≥ 0` also zero when `k > n`.
pub fn binomial_general(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // Symmetry only applies to nonnegative tops.
    let k = if n >= 0 { k.min(n - k) } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn mobius(n: i64) -> Result<i8> {
    require_min("n", n, 1)?;
    let mut m = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: i64) -> Result<Vec<i64>> {
    require_min("n", n, 1)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Least common multiple of every integer in `lo..=hi`.
pub fn lcm_range(lo: i64, hi: i64) -> Result<BigInt> {
    require_min("lo", lo, 1)?;
    if hi < lo {
        return Err(Error::Domain(format!("empty range {lo}..{hi}")));
    }
    Ok((lo..=hi).fold(BigInt::one(), |acc, v| acc.lcm(&BigInt::from(v))))
}

/// Pochhammer symbol `(x0)_n = x0 (x0+1) … (x0+n-1)`, with `(x0)_0 = 1`.
pub fn rising_factorial(x0: &BigInt, n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut factor = x0.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += 1;
    }
    acc
}

fn check_k_range(n: i64, k: i64) -> Result<()> {
    require_min("n", n, 1)?;
    if !(1..=n).contains(&k) {
        return Err(Error::Domain(format!("k = {k} outside 1..={n}")));
    }
    Ok(())
}

/// `w(n,k) = C(n-1,k-1) C(n+k,k-1) / k`; the division is asserted exact.
pub fn w_number(n: i64, k: i64) -> Result<BigInt> {
    check_k_range(n, k)?;
    let numerator = binomial_general(n - 1, k - 1) * binomial_general(n + k, k - 1);
    let (q, r) = numerator.div_rem(&BigInt::from(k));
    assert!(
        r.is_zero(),
        "w({n},{k}): {k} does not divide the binomial product"
    );
    Ok(q)
}

/// The subtraction form `C(n-1,k-1)C(n+k,k) - C(n,k)C(n+k,k-1)`.
pub fn w_number_difference_form(n: i64, k: i64) -> Result<BigInt> {
    check_k_range(n, k)?;
    Ok(binomial_general(n - 1, k - 1) * binomial_general(n + k, k)
        - binomial_general(n, k) * binomial_general(n + k, k - 1))
}

/// Narayana number `N(n,k) = C(n,k) C(n,k-1) / n`.
pub fn narayana_number(n: i64, k: i64) -> Result<BigInt> {
    check_k_range(n, k)?;
    let numerator = binomial_general(n, k) * binomial_general(n, k - 1);
    let (q, r) = numerator.div_rem(&BigInt::from(n));
    assert!(r.is_zero(), "N({n},{k}) is not integral");
    Ok(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    /// `∑_{k=m}^{n} (-1)^{n-k} C(k-1,m-1) w(n,k) = w(n,m)`.
    AlternatingBinomial,
    /// `w(n,k) = ∑_j C(n-j,k-j) N(n,j)` for every `k`.
    WFromNarayana,
    /// `N(n,k) = ∑_j C(n-j,k-j) (-1)^{k-j} w(n,j)` for every `k`.
    NarayanaFromW,
    /// `∑_{k=0}^{2b} w(n,k+1)` is odd.
    OddRowSum,
    /// `s_n(x) = w_n(x)`.
    SchroderEquality,
    /// `w_n(-1-x) = (-1)^{n-1} w_n(x)`.
    Symmetry,
    /// `(2x+1) ∑ k(k+1)(2k+1)(-1)^{n-k} w_k(x)^2 = n(n+1)(n+2) w_n(x) w_{n+1}(x)`.
    SquaredSum,
    /// `(2x+1)` divides `w_{2j}(x)` in ℤ[x].
    EvenIndexDivisibility,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::AlternatingBinomial => "alternating-binomial",
            IdentityId::WFromNarayana => "w-from-narayana",
            IdentityId::NarayanaFromW => "narayana-from-w",
            IdentityId::OddRowSum => "odd-row-sum",
            IdentityId::SchroderEquality => "schroder-equality",
            IdentityId::Symmetry => "symmetry",
            IdentityId::SquaredSum => "squared-sum",
            IdentityId::EvenIndexDivisibility => "even-index-divisibility",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityValue {
    Int(BigInt),
    Poly(XPoly),
}

impl std::fmt::Display for IdentityValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IdentityValue::Int(v) => write!(f, "{v}"),
            IdentityValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: Vec<(&'static str, i64)>,
    pub holds: bool,
    pub lhs: IdentityValue,
    pub rhs: IdentityValue,
}

impl IdentityReport {
    pub fn new(
        id: IdentityId,
        params: Vec<(&'static str, i64)>,
        lhs: IdentityValue,
        rhs: IdentityValue,
    ) -> Self {
        Self {
            id,
            params,
            holds: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

/// `w(n,j)` with the convention that indices past `n` contribute zero.
fn w_or_zero(n: i64, j: i64) -> BigInt {
    if j > n {
        BigInt::zero()
    } else {
        w_number(n, j).expect("index checked")
    }
}

/// Checks the alternating binomial identity, both Narayana transforms and the
/// odd row-sum claim for one `(n, m, b)`.
pub fn w_identity_suite(n: i64, m: i64, b: i64) -> Result<Vec<IdentityReport>> {
    check_k_range(n, m)?;
    require_min("b", b, 0)?;

    let alternating: BigInt = (m..=n)
        .map(|k| {
            let term = binomial_general(k - 1, m - 1) * w_number(n, k).expect("k in range");
            if (n - k) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    let alt_report = IdentityReport::new(
        IdentityId::AlternatingBinomial,
        vec![("n", n), ("m", m)],
        IdentityValue::Int(alternating),
        IdentityValue::Int(w_number(n, m)?),
    );

    let w_row: Vec<BigInt> = (1..=n)
        .map(|k| w_number(n, k).expect("k in range"))
        .collect();
    let narayana_row: Vec<BigInt> = (1..=n)
        .map(|k| narayana_number(n, k).expect("k in range"))
        .collect();
    let w_from_n: Vec<BigInt> = (1..=n)
        .map(|k| {
            (1..=k)
                .map(|j| binomial_general(n - j, k - j) * &narayana_row[(j - 1) as usize])
                .sum()
        })
        .collect();
    let n_from_w: Vec<BigInt> = (1..=n)
        .map(|k| {
            (1..=k)
                .map(|j| {
                    let term = binomial_general(n - j, k - j) * &w_row[(j - 1) as usize];
                    if (k - j) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();

    let row_sum: BigInt = (0..=2 * b).map(|k| w_or_zero(n, k + 1)).sum();
    let parity = row_sum.mod_floor(&BigInt::from(2));

    Ok(vec![
        alt_report,
        IdentityReport::new(
            IdentityId::WFromNarayana,
            vec![("n", n)],
            IdentityValue::Poly(XPoly::from_coeffs(w_row.clone())),
            IdentityValue::Poly(XPoly::from_coeffs(w_from_n)),
        ),
        IdentityReport::new(
            IdentityId::NarayanaFromW,
            vec![("n", n)],
            IdentityValue::Poly(XPoly::from_coeffs(narayana_row)),
            IdentityValue::Poly(XPoly::from_coeffs(n_from_w)),
        ),
        IdentityReport::new(
            IdentityId::OddRowSum,
            vec![("n", n), ("b", b)],
            IdentityValue::Int(parity),
            IdentityValue::Int(BigInt::one()),
        ),
    ])
}

/// Euler's totient by counting coprime residues; test oracle for cyclotomic degrees.
pub fn totient_by_counting(n: i64) -> i64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Brute-force falling product with rational accumulation, independent of
    /// the incremental division used by `binomial_general`.
    fn binomial_oracle(n: i64, k: i64) -> BigInt {
        if k < 0 {
            return int(0);
        }
        let mut num = int(1);
        let mut den = int(1);
        for i in 1..=k {
            num *= n - i + 1;
            den *= i;
        }
        assert!((&num % &den).is_zero());
        let value = num / den;
        if n >= 0 && k > n {
            assert!(value.is_zero());
        }
        value
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_general(4, 2), int(6));
        assert_eq!(binomial_general(17, 0), int(1));
        assert_eq!(binomial_general(-5, 0), int(1));
        assert_eq!(binomial_general(-2, 3), int(-4));
        assert_eq!(binomial_general(3, 5), int(0));
        assert_eq!(binomial_general(3, -1), int(0));
        // (-1)^k C(-n+k-1, k)
        assert_eq!(binomial_general(-3, 4), int(15));
    }

    #[test]
    fn binomial_matches_oracle_and_pascal() {
        for n in -30..=30 {
            for k in 0..=30 {
                assert_eq!(binomial_general(n, k), binomial_oracle(n, k), "C({n},{k})");
                if k >= 1 {
                    assert_eq!(
                        binomial_general(n, k),
                        binomial_general(n - 1, k - 1) + binomial_general(n - 1, k),
                        "Pascal at ({n},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn mobius_examples_and_sum() {
        assert_eq!(mobius(1), Ok(1));
        assert_eq!(mobius(6), Ok(1));
        assert_eq!(mobius(12), Ok(0));
        assert_eq!(mobius(7), Ok(-1));
        assert!(mobius(0).is_err());
        assert!(mobius(-3).is_err());
        for n in 1..=200 {
            let s: i64 = divisors(n)
                .unwrap()
                .into_iter()
                .map(|d| i64::from(mobius(d).unwrap()))
                .sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(13).unwrap(), vec![1, 13]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divisors(0).is_err());
        for n in 1..=100 {
            let brute: Vec<i64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n).unwrap(), brute);
        }
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_range(1, 4).unwrap(), int(12));
        assert_eq!(lcm_range(2, 5).unwrap(), int(60));
        assert_eq!(lcm_range(9, 9).unwrap(), int(9));
        assert!(lcm_range(0, 3).is_err());
        assert!(lcm_range(5, 4).is_err());
        for lo in 1..=15 {
            for hi in lo..=25 {
                let l = lcm_range(lo, hi).unwrap();
                for v in lo..=hi {
                    assert!((&l % v).is_zero());
                }
            }
        }
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&int(2), 3), int(24));
        assert_eq!(rising_factorial(&int(7), 0), int(1));
        assert_eq!(rising_factorial(&int(1), 5), int(120));
        assert_eq!(rising_factorial(&int(-2), 3), int(0));
    }

    #[test]
    fn w_number_examples() {
        assert_eq!(w_number(3, 2).unwrap(), int(5));
        assert_eq!(w_number(2, 2).unwrap(), int(2));
        assert_eq!(w_number(1, 1).unwrap(), int(1));
        assert!(w_number(3, 4).is_err());
        assert!(w_number(3, 0).is_err());
    }

    #[test]
    fn w_number_forms_agree_and_catalan() {
        for n in 1..=40 {
            for k in 1..=n {
                let num = binomial_general(n - 1, k - 1) * binomial_general(n + k, k - 1);
                assert!((&num % k).is_zero());
                assert_eq!(
                    w_number(n, k).unwrap(),
                    w_number_difference_form(n, k).unwrap()
                );
            }
            assert_eq!(
                w_number(n, n).unwrap() * (n + 1),
                binomial_general(2 * n, n)
            );
        }
    }

    #[test]
    fn narayana_examples() {
        assert_eq!(narayana_number(3, 2).unwrap(), int(3));
        assert_eq!(narayana_number(9, 1).unwrap(), int(1));
        assert_eq!(narayana_number(4, 2).unwrap(), int(6));
        assert!(narayana_number(4, 5).is_err());
    }

    #[test]
    fn identity_suite_examples() {
        let reports = w_identity_suite(3, 2, 1).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.holds));
        assert_eq!(reports[0].lhs, IdentityValue::Int(int(5)));
        // w(3,1)+w(3,2)+w(3,3) = 1+5+5
        let wrow = XPoly::from_i64(&[1, 5, 5]);
        assert_eq!(reports[1].lhs, IdentityValue::Poly(wrow));
        assert!(w_identity_suite(3, 4, 0).is_err());
    }

    #[test]
    fn identity_suite_sweep() {
        for n in 1..=25 {
            for m in 1..=n {
                for r in w_identity_suite(n, m, (n + m) % 13).unwrap() {
                    assert!(r.holds, "{:?} failed at n={n} m={m}", r.id);
                }
            }
        }
    }

    #[test]
    fn totient_oracle() {
        assert_eq!(totient_by_counting(1), 1);
        assert_eq!(totient_by_counting(12), 4);
        assert_eq!(totient_by_counting(13), 12);
    }
}
