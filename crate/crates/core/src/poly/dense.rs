//! Dense coefficient-vector kernels shared by the polynomial types.
//!
//! Large products go through Kronecker substitution: both operands are packed
//! into a single big integer at a bit width wide enough for every output
//! coefficient, multiplied once, and unpacked with balanced digits.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

/// Below this many nonzero coefficient pairs the schoolbook product wins.
const KRONECKER_MIN_PAIRS: usize = 4096;

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn add_assign(acc: &mut Vec<BigInt>, other: &[BigInt]) {
    if acc.len() < other.len() {
        acc.resize(other.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
    trim(acc);
}

pub(crate) fn sub_assign(acc: &mut Vec<BigInt>, other: &[BigInt]) {
    if acc.len() < other.len() {
        acc.resize(other.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a -= b;
    }
    trim(acc);
}

/// Product of two coefficient vectors (lowest degree first). Output is trimmed.
pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let nnz_a = a.iter().filter(|c| !c.is_zero()).count();
    let nnz_b = b.iter().filter(|c| !c.is_zero()).count();
    if nnz_a == 0 || nnz_b == 0 {
        return Vec::new();
    }
    if nnz_a.min(nnz_b) <= 4 || nnz_a * nnz_b < KRONECKER_MIN_PAIRS {
        mul_schoolbook(a, b)
    } else {
        mul_kronecker(a, b, nnz_a.min(nnz_b))
    }
}

pub fn mul_schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    trim(&mut out);
    out
}

fn max_bits(v: &[BigInt]) -> u64 {
    v.iter().map(BigInt::bits).max().unwrap_or(0)
}

fn mul_kronecker(a: &[BigInt], b: &[BigInt], min_nnz: usize) -> Vec<BigInt> {
    let overlap_bits = u64::from(usize::BITS - min_nnz.leading_zeros());
    let width = (max_bits(a) + max_bits(b) + overlap_bits + 1) as usize;
    let product = pack(a, width) * pack(b, width);
    let mut out = unpack(product, width, a.len() + b.len() - 1);
    trim(&mut out);
    out
}

fn pack(coeffs: &[BigInt], width: usize) -> BigInt {
    let words = (coeffs.len() * width) / 32 + 2;
    let mut pos = vec![0u32; words];
    let mut neg: Option<Vec<u32>> = None;
    for (i, c) in coeffs.iter().enumerate() {
        let (sign, digits) = c.to_u32_digits();
        match sign {
            Sign::NoSign => {}
            Sign::Plus => or_at(&mut pos, &digits, i * width),
            Sign::Minus => or_at(
                neg.get_or_insert_with(|| vec![0u32; words]),
                &digits,
                i * width,
            ),
        }
    }
    let packed = BigInt::from_biguint(Sign::Plus, BigUint::new(pos));
    match neg {
        Some(n) => packed - BigInt::from_biguint(Sign::Plus, BigUint::new(n)),
        None => packed,
    }
}

fn or_at(words: &mut [u32], digits: &[u32], bit: usize) {
    let w = bit / 32;
    let s = bit % 32;
    if s == 0 {
        for (j, d) in digits.iter().enumerate() {
            words[w + j] |= d;
        }
    } else {
        for (j, d) in digits.iter().enumerate() {
            words[w + j] |= d << s;
            words[w + j + 1] |= d >> (32 - s);
        }
    }
}

fn extract(words: &[u32], start: usize, width: usize) -> BigUint {
    let w0 = start / 32;
    let s = start % 32;
    let n = width.div_ceil(32);
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let lo = words.get(w0 + j).copied().unwrap_or(0);
        let v = if s == 0 {
            lo
        } else {
            let hi = words.get(w0 + j + 1).copied().unwrap_or(0);
            (lo >> s) | (hi << (32 - s))
        };
        out.push(v);
    }
    let extra = n * 32 - width;
    if extra > 0 {
        if let Some(last) = out.last_mut() {
            *last &= u32::MAX >> extra;
        }
    }
    BigUint::new(out)
}

fn unpack(value: BigInt, width: usize, count: usize) -> Vec<BigInt> {
    let (sign, magnitude) = value.into_parts();
    let words = magnitude.to_u32_digits();
    let half = BigUint::one() << (width - 1);
    let full = BigInt::one() << width;
    let mut out = Vec::with_capacity(count);
    let mut carry = false;
    for i in 0..count {
        let mut chunk = extract(&words, i * width, width);
        if carry {
            chunk += 1u32;
        }
        carry = chunk >= half;
        let digit = BigInt::from_biguint(Sign::Plus, chunk);
        out.push(if carry { digit - &full } else { digit });
    }
    debug_assert!(!carry, "Kronecker unpack overflowed its width");
    if sign == Sign::Minus {
        for c in &mut out {
            *c = -std::mem::take(c);
        }
    }
    out
}
