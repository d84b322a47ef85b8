//! q-integers, Gaussian binomials, cyclotomic polynomials and the
//! congruence facts about them used by the theorem checks.

use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial_general, divisors, mobius};
use crate::error::{require_min, Error, Result};
use crate::memo::MemoTable;
use crate::poly::{QLaurent, QPoly};

/// `[n] = 1 + q + … + q^{n-1}` for `n >= 0`.
pub fn q_integer_poly(n: u64) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::from(1); n as usize])
}

/// `[n] = (1 - q^n)/(1 - q)` for any integer `n`; for `n < 0` this is
/// `-q^n [-n] = -q^n - … - q^{-1}`.
pub fn q_integer(n: i64) -> QLaurent {
    if n >= 0 {
        q_integer_poly(n as u64).to_laurent()
    } else {
        -&QLaurent::from_qpoly(&q_integer_poly(n.unsigned_abs()), n)
    }
}

static QBINOMIALS: LazyLock<MemoTable<(u64, u64), QPoly>> = LazyLock::new(MemoTable::new);

/// Gaussian binomial for a nonnegative top, as a polynomial in q.
pub fn q_binomial_poly(n: u64, k: u64) -> Arc<QPoly> {
    if k > n {
        return Arc::new(QPoly::zero());
    }
    let k = k.min(n - k);
    QBINOMIALS.get_or_insert_with((n, k), || {
        // Each partial product is itself qbinom(n, j), so every division is exact.
        let mut acc = QPoly::one();
        for j in 1..=k {
            acc.mul_one_minus_q_pow((n - j + 1) as usize);
            acc.div_one_minus_q_pow(j as usize);
        }
        acc
    })
}

/// Generalized Gaussian binomial: zero for `k < 0`, zero for `0 <= n < k`,
/// and for negative tops `qbinom(-a, k) = (-1)^k q^{-ak - C(k,2)} qbinom(a+k-1, k)`.
pub fn q_binomial(n: i64, k: i64) -> QLaurent {
    if k < 0 {
        return QLaurent::zero();
    }
    if n >= 0 {
        return q_binomial_poly(n as u64, k as u64).to_laurent();
    }
    let a = -n;
    let base = q_binomial_poly((a + k - 1) as u64, k as u64);
    let shift = -a * k - k * (k - 1) / 2;
    let value = QLaurent::from_qpoly(&base, shift);
    if k % 2 == 0 {
        value
    } else {
        -&value
    }
}

/// Memo table of cyclotomic polynomials. Every published entry is monic and,
/// for `d > 1`, has constant term 1.
#[derive(Debug, Default)]
pub struct CyclotomicCache {
    table: MemoTable<i64, QPoly>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, d: i64) -> Result<Arc<QPoly>> {
        require_min("d", d, 1)?;
        Ok(self.table.get_or_insert_with(d, || cyclotomic_uncached(d)))
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

static CYCLOTOMICS: LazyLock<CyclotomicCache> = LazyLock::new(CyclotomicCache::new);

/// `Φ_d(q) = ∏_{e | d} (q^e - 1)^{μ(d/e)}`, memoized process-wide.
pub fn cyclotomic(d: i64) -> Result<Arc<QPoly>> {
    CYCLOTOMICS.get(d)
}

fn cyclotomic_uncached(d: i64) -> QPoly {
    if d == 1 {
        return QPoly::from_i64(&[-1, 1]);
    }
    // For d > 1 the Möbius exponents sum to zero, so the signs of
    // (q^e - 1) = -(1 - q^e) cancel and we can work with 1 - q^e throughout.
    let divs = divisors(d).expect("d >= 1");
    let mut acc = QPoly::one();
    let mut denominators = Vec::new();
    for &e in &divs {
        match mobius(d / e).expect("positive") {
            1 => acc.mul_one_minus_q_pow(e as usize),
            -1 => denominators.push(e),
            _ => {}
        }
    }
    for e in denominators {
        acc.div_one_minus_q_pow(e as usize);
    }
    acc
}

/// Checks `[n] = ∏_{d | n, d > 1} Φ_d(q)`.
pub fn qint_factorization_check(n: i64) -> Result<bool> {
    require_min("n", n, 2)?;
    let mut product = QPoly::one();
    for d in divisors(n)?.into_iter().filter(|&d| d > 1) {
        product = &product * &*cyclotomic(d)?;
    }
    Ok(product == q_integer_poly(n as u64))
}

/// q-Lucas: `qbinom(ad+b, sd+t) ≡ C(a,s) qbinom(b,t) (mod Φ_d(q))`, decided by
/// reducing both sides independently and comparing remainders.
pub fn q_lucas_check(d: i64, a: i64, b: i64, s: i64, t: i64) -> Result<bool> {
    require_min("d", d, 2)?;
    require_min("a", a, 0)?;
    require_min("s", s, 0)?;
    if !(0..d).contains(&b) || !(0..d).contains(&t) {
        return Err(Error::Domain(format!(
            "b = {b} and t = {t} must lie in 0..={}",
            d - 1
        )));
    }
    let phi = cyclotomic(d)?;
    let lhs = q_binomial(a * d + b, s * d + t);
    let rhs = q_binomial(b, t).scale_int(&binomial_general(a, s));
    Ok(lhs.rem_monic(&phi)? == rhs.rem_monic(&phi)?)
}

/// Odd `d > 1`: `Φ_d(q)` divides `Φ_d(q²)`. Even `d`: `Φ_d(q²) = Φ_{2d}(q)`.
pub fn lemma31_check(d: i64) -> Result<bool> {
    require_min("d", d, 2)?;
    let phi = cyclotomic(d)?;
    let squared = phi.subst_power(2);
    if d % 2 == 1 {
        Ok(squared.div_rem_monic(&phi)?.1.is_zero())
    } else {
        Ok(squared == *cyclotomic(2 * d)?)
    }
}

/// True when `p` is a polynomial in q whose coefficients are all nonnegative.
pub fn has_nonnegative_coefficients(p: &QLaurent) -> bool {
    p.min_exponent().is_none_or(|e| e >= 0)
        && p.terms()
            .values()
            .all(|x| x.coeffs().iter().all(|c| *c >= BigInt::zero()))
}
