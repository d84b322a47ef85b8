//! The polynomial families `w_n^(α)(x)`, `s_n(x)`, `w_k^(α)(x;q)` (defining
//! and reflected forms) and `B_{a,b,d}^(α)(x;q)`, plus the cyclotomic
//! reduction lemmas relating them.

use std::sync::{Arc, LazyLock};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{
    binomial_general, narayana_number, w_number, IdentityId, IdentityReport, IdentityValue,
};
use crate::engine::Verdict;
use crate::error::{require_min, Error, Result};
use crate::memo::MemoTable;
use crate::poly::{ExactDivision, QLaurent, QPoly, XPoly};
use crate::qobjects::{cyclotomic, q_binomial, q_binomial_poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WPolyKey {
    pub n: i64,
    pub alpha: i64,
}

impl WPolyKey {
    pub fn new(n: i64, alpha: i64) -> Result<Self> {
        require_min("n", n, 1)?;
        require_min("alpha", alpha, 1)?;
        Ok(Self { n, alpha })
    }
}

/// Indices of `B_{a,b,d}^(α)`; valid for `d > 2`, `1 <= b <= d-2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BPolyKey {
    pub a: i64,
    pub b: i64,
    pub d: i64,
    pub alpha: i64,
}

impl BPolyKey {
    pub fn new(a: i64, b: i64, d: i64, alpha: i64) -> Result<Self> {
        require_min("a", a, 0)?;
        require_min("d", d, 3)?;
        require_min("alpha", alpha, 1)?;
        if !(1..=d - 2).contains(&b) {
            return Err(Error::Domain(format!("b = {b} outside 1..={}", d - 2)));
        }
        Ok(Self { a, b, d, alpha })
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn alpha_u32(alpha: i64) -> u32 {
    u32::try_from(alpha).expect("alpha fits in u32")
}

static W_POLYS: LazyLock<MemoTable<WPolyKey, XPoly>> = LazyLock::new(MemoTable::new);
static QW_POLYS: LazyLock<MemoTable<WPolyKey, QLaurent>> = LazyLock::new(MemoTable::new);

/// `w_n^(α)(x) = ∑_{j=1}^{n} w(n,j)^α x^{j-1}`, memoized.
pub fn w_alpha_poly_shared(n: i64, alpha: i64) -> Result<Arc<XPoly>> {
    let key = WPolyKey::new(n, alpha)?;
    Ok(W_POLYS.get_or_insert_with(key, || {
        XPoly::from_coeffs(
            (1..=n)
                .map(|j| num_traits::pow(w_number(n, j).expect("j in range"), alpha as usize))
                .collect(),
        )
    }))
}

pub fn w_alpha_poly(n: i64, alpha: i64) -> Result<XPoly> {
    Ok((*w_alpha_poly_shared(n, alpha)?).clone())
}

/// Little Schröder polynomial `∑_k N(n,k) x^{k-1} (x+1)^{n-k}`, expanded.
pub fn schroder_poly(n: i64) -> Result<XPoly> {
    require_min("n", n, 1)?;
    let x_plus_one = XPoly::from_i64(&[1, 1]);
    let mut acc = XPoly::zero();
    for k in 1..=n {
        let term = XPoly::monomial(narayana_number(n, k)?, (k - 1) as usize)
            * x_plus_one.pow((n - k) as u32);
        acc += &term;
    }
    Ok(acc)
}

/// `qbinom(k-1,j-1) qbinom(k+j,j) - qbinom(k,j) qbinom(k+j,j-1)` for any
/// integer `j`, through the generalized q-binomial.
fn q_w_base_any(k: i64, j: i64) -> QLaurent {
    &(&q_binomial(k - 1, j - 1) * &q_binomial(k + j, j))
        - &(&q_binomial(k, j) * &q_binomial(k + j, j - 1))
}

/// Same as [`q_w_base_any`] for `1 <= j <= k`, where every top is nonnegative.
fn q_w_base(k: i64, j: i64) -> QPoly {
    let qb = |n: i64, r: i64| q_binomial_poly(n as u64, r as u64);
    &(&*qb(k - 1, j - 1) * &*qb(k + j, j)) - &(&*qb(k, j) * &*qb(k + j, j - 1))
}

/// The q-analogue `w_k^(α)(x;q)` from its defining sum over `1 <= j <= k`,
/// memoized per `(k, α)`.
pub fn q_w_poly_shared(k: i64, alpha: i64) -> Result<Arc<QLaurent>> {
    let key = WPolyKey::new(k, alpha)?;
    Ok(QW_POLYS.get_or_insert_with(key, || {
        debug_assert!(q_w_base_any(k, 0).is_zero() && q_w_base_any(k, k + 1).is_zero());
        let a = alpha_u32(alpha);
        let mut acc = QLaurent::zero();
        for j in 1..=k {
            let exponent = alpha * (j * (j + 1) / 2 - (k + 1) * (j - 1));
            let term = q_w_base(k, j)
                .pow(a)
                .to_laurent_at(exponent, (j - 1) as usize);
            acc += &term;
        }
        acc
    }))
}

pub fn q_w_poly(k: i64, alpha: i64) -> Result<QLaurent> {
    Ok((*q_w_poly_shared(k, alpha)?).clone())
}

/// Inner factor of the reflected form:
/// `q^{k+1} qbinom(k-1,j-1) qbinom(-k-1,j) + qbinom(k,j) qbinom(-k-2,j-1)`.
fn q_w_alt_inner(k: i64, j: i64) -> QLaurent {
    &(&q_binomial(k - 1, j - 1) * &q_binomial(-k - 1, j)).shift(k + 1)
        + &(&q_binomial(k, j) * &q_binomial(-k - 2, j - 1))
}

/// The reflected form of `w_k^(α)(x;q)` obtained by rewriting the top-heavy
/// q-binomials with negative tops:
/// `∑_j (-1)^{αj} q^{αj²} (inner_j)^α x^{j-1}`, truncated to its support `1 <= j <= k`.
pub fn q_w_poly_alt(k: i64, alpha: i64) -> Result<QLaurent> {
    WPolyKey::new(k, alpha)?;
    debug_assert!(q_w_alt_inner(k, 0).is_zero() && q_w_alt_inner(k, k + 1).is_zero());
    let a = alpha_u32(alpha);
    let mut acc = QLaurent::zero();
    for j in 1..=k {
        let weight = QLaurent::monomial(
            alpha * j * j,
            XPoly::monomial(BigInt::from(sign(alpha * j)), (j - 1) as usize),
        );
        acc += &(&q_w_alt_inner(k, j).pow(a) * &weight);
    }
    Ok(acc)
}

/// `q^{b+1} qbinom(b-1,t-1) qbinom(d-b-1,t) + qbinom(b,t) qbinom(d-b-2,t-1)`.
fn b_inner(b: i64, d: i64, t: i64) -> QPoly {
    let qb = |n: i64, r: i64| -> QPoly {
        if r < 0 {
            QPoly::zero()
        } else {
            (*q_binomial_poly(n as u64, r as u64)).clone()
        }
    };
    let first = &(&qb(b - 1, t - 1) * &qb(d - b - 1, t))
        * &QPoly::monomial(BigInt::one(), (b + 1) as usize);
    &first + &(&qb(b, t) * &qb(d - b - 2, t - 1))
}

/// `B_{a,b,d}^(α)(x;q)`, summed over `0 <= s <= a` (the binomial `C(a,s)`
/// vanishes elsewhere) and `1 <= t <= d-1`.
pub fn b_poly(key: BPolyKey) -> QLaurent {
    let BPolyKey { a, b, d, alpha } = key;
    debug_assert!(binomial_general(a, -1).is_zero() && binomial_general(a, a + 1).is_zero());
    let pa = alpha_u32(alpha);
    let mut acc = QLaurent::zero();
    for s in 0..=a {
        let scalar = num_traits::pow(
            binomial_general(a, s) * binomial_general(-a - 1, s),
            pa as usize,
        );
        for t in 1..d {
            let inner = b_inner(b, d, t);
            if inner.is_zero() {
                continue;
            }
            let coeff = scalar.clone() * sign(alpha * (s * d + t));
            let powered = inner.pow(pa);
            let term = powered.to_laurent_at(alpha * t * t, (s * d + t - 1) as usize);
            acc += &term.scale_int(&coeff);
        }
    }
    acc
}

/// Which of the four cyclotomic reductions a verdict refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaForm {
    /// `w_{ad+b} ≡ B_{a,b,d}`.
    Direct,
    /// `w_{ad+d-b-1} ≡ q^{-α(2b+1)} B_{a,b,d}`.
    Reflected,
    /// `w_{ad+b+1} ≡ B_{a,b+1,d}`.
    ShiftedDirect,
    /// `w_{ad+d-b-2} ≡ q^{-α(2b+3)} B_{a,b+1,d}`.
    ShiftedReflected,
}

impl LemmaForm {
    pub fn statement(self) -> &'static str {
        match self {
            LemmaForm::Direct => "lemma-23/w[ad+b]",
            LemmaForm::Reflected => "lemma-23/w[ad+d-b-1]",
            LemmaForm::ShiftedDirect => "lemma-23/w[ad+b+1]",
            LemmaForm::ShiftedReflected => "lemma-23/w[ad+d-b-2]",
        }
    }
}

/// The forms applicable to `(b, d)`: the direct pair needs `d > 2` and
/// `1 <= b <= d-2`; the shifted pair needs `d > 3` and `0 <= b <= d-3`.
pub fn applicable_lemma_forms(b: i64, d: i64) -> Vec<LemmaForm> {
    let mut forms = Vec::new();
    if d > 2 && (1..=d - 2).contains(&b) {
        forms.extend([LemmaForm::Direct, LemmaForm::Reflected]);
    }
    if d > 3 && (0..=d - 3).contains(&b) {
        forms.extend([LemmaForm::ShiftedDirect, LemmaForm::ShiftedReflected]);
    }
    forms
}

/// Checks every applicable reduction of `w` modulo `Φ_d(q)` by reducing the
/// difference of both sides.
pub fn lemma_congruence_check(a: i64, b: i64, d: i64, alpha: i64) -> Result<Vec<Verdict>> {
    require_min("a", a, 0)?;
    require_min("alpha", alpha, 1)?;
    let forms = applicable_lemma_forms(b, d);
    if forms.is_empty() {
        return Err(Error::Domain(format!(
            "(b, d) = ({b}, {d}) is outside both lemma domains"
        )));
    }
    let phi = cyclotomic(d)?;
    let params = [("a", a), ("b", b), ("d", d), ("alpha", alpha)];
    forms
        .into_iter()
        .map(|form| {
            let started = Instant::now();
            let (index, b_index, shift) = match form {
                LemmaForm::Direct => (a * d + b, b, 0),
                LemmaForm::Reflected => (a * d + d - b - 1, b, -alpha * (2 * b + 1)),
                LemmaForm::ShiftedDirect => (a * d + b + 1, b + 1, 0),
                LemmaForm::ShiftedReflected => (a * d + d - b - 2, b + 1, -alpha * (2 * b + 3)),
            };
            let w = q_w_poly_shared(index, alpha)?;
            let rhs = b_poly(BPolyKey::new(a, b_index, d, alpha)?).shift(shift);
            let rem = (&*w - &rhs).rem_monic(&phi)?;
            let witness = (!rem.is_zero()).then(|| rem.to_string());
            Ok(Verdict::new(
                form.statement(),
                &params,
                witness,
                started.elapsed(),
            ))
        })
        .collect()
}

fn poly_report(
    id: IdentityId,
    params: Vec<(&'static str, i64)>,
    lhs: XPoly,
    rhs: XPoly,
) -> IdentityReport {
    IdentityReport::new(
        id,
        params,
        IdentityValue::Poly(lhs),
        IdentityValue::Poly(rhs),
    )
}

/// `s_n(x) = w_n(x)`.
pub fn schroder_check(n: i64) -> Result<IdentityReport> {
    Ok(poly_report(
        IdentityId::SchroderEquality,
        vec![("n", n)],
        schroder_poly(n)?,
        w_alpha_poly(n, 1)?,
    ))
}

/// `w_n(-1-x) = (-1)^{n-1} w_n(x)`.
pub fn symmetry_check(n: i64) -> Result<IdentityReport> {
    let w = w_alpha_poly(n, 1)?;
    let minus_one = BigInt::from(-1);
    let lhs = w.affine_subst(&minus_one, &minus_one);
    let rhs = w.scale(&BigInt::from(sign(n - 1)));
    Ok(poly_report(IdentityId::Symmetry, vec![("n", n)], lhs, rhs))
}

/// `(2x+1) ∑_{k=1}^{n} k(k+1)(2k+1)(-1)^{n-k} w_k(x)² = n(n+1)(n+2) w_n(x) w_{n+1}(x)`.
pub fn squared_sum_check(n: i64) -> Result<IdentityReport> {
    require_min("n", n, 1)?;
    let mut sum = XPoly::zero();
    for k in 1..=n {
        let w = w_alpha_poly_shared(k, 1)?;
        let c = BigInt::from(k * (k + 1) * (2 * k + 1) * sign(n - k));
        sum += &(&*w * &*w).scale(&c);
    }
    let lhs = &XPoly::from_i64(&[1, 2]) * &sum;
    let rhs = (&*w_alpha_poly_shared(n, 1)? * &*w_alpha_poly_shared(n + 1, 1)?)
        .scale(&BigInt::from(n * (n + 1) * (n + 2)));
    Ok(poly_report(
        IdentityId::SquaredSum,
        vec![("n", n)],
        lhs,
        rhs,
    ))
}

/// `(2x+1) | w_{2j}(x)` in ℤ[x]; the report compares `(2x+1)·quotient` to `w_{2j}`.
pub fn even_index_check(j: i64) -> Result<IdentityReport> {
    require_min("j", j, 1)?;
    let w = w_alpha_poly(2 * j, 1)?;
    let divisor = XPoly::from_i64(&[1, 2]);
    let rebuilt = match w.div_exact(&divisor)? {
        ExactDivision::Quotient(q) => &q * &divisor,
        ExactDivision::Witness(wit) => wit.remainder,
    };
    Ok(poly_report(
        IdentityId::EvenIndexDivisibility,
        vec![("j", j)],
        rebuilt,
        w,
    ))
}
