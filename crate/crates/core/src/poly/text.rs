//! Canonical text form.
//!
//! Dense polynomials print ascending in degree with integer coefficients,
//! `*` between coefficient and variable, and ` + ` / ` - ` separators:
//! `1 - q + q^2`, `1 + 5*x + 5*x^2`. Laurent polynomials print one
//! parenthesized x-polynomial per q-exponent, ascending, joined by ` + `:
//! `q^-1*(1 + 2*x) + q^3*(5)`. Exponent 0 prints as a bare group and
//! exponent 1 as `q*`. A Laurent polynomial free of `x` prints without groups
//! in the dense style with signed exponents: `q^-2 - 3 + q^4`. Zero prints as
//! `0` in every ring.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::XPoly;
use crate::error::{Error, Result};

pub(crate) fn format_dense(coeffs: &[BigInt], var: &str) -> String {
    let mut out = String::new();
    for (deg, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        match deg {
            0 => write!(out, "{mag}").unwrap(),
            _ => {
                if !mag.is_one() {
                    write!(out, "{mag}*").unwrap();
                }
                out.push_str(var);
                if deg > 1 {
                    write!(out, "^{deg}").unwrap();
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn format_laurent(terms: &BTreeMap<i64, XPoly>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    if terms.values().all(|p| p.degree() == Some(0)) {
        return format_sparse_q(terms);
    }
    let mut out = String::new();
    for (i, (e, p)) in terms.iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        match e {
            0 => {}
            1 => out.push_str("q*"),
            _ => write!(out, "q^{e}*").unwrap(),
        }
        write!(out, "({p})").unwrap();
    }
    out
}

fn format_sparse_q(terms: &BTreeMap<i64, XPoly>) -> String {
    let mut out = String::new();
    for (e, p) in terms {
        let c = p.coeff(0);
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        if *e == 0 {
            write!(out, "{mag}").unwrap();
            continue;
        }
        if !mag.is_one() {
            write!(out, "{mag}*").unwrap();
        }
        out.push('q');
        if *e != 1 {
            write!(out, "^{e}").unwrap();
        }
    }
    out
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", b as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} in `{}`", self.pos, self.src))
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn unsigned(&mut self) -> Result<BigInt> {
        Ok(self.digits()?.parse().expect("ascii digits"))
    }

    fn small_signed(&mut self) -> Result<i64> {
        let negative = self.eat(b'-');
        let v: i64 = self
            .digits()?
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(if negative { -v } else { v })
    }

    /// `term := int ["*" var ["^" uint]] | var ["^" uint]`, returning
    /// (unsigned coefficient, degree).
    fn term(&mut self, var: u8) -> Result<(BigInt, usize)> {
        let coeff = if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let c = self.unsigned()?;
            if !self.eat(b'*') {
                return Ok((c, 0));
            }
            c
        } else {
            BigInt::one()
        };
        if !self.eat(var) {
            return Err(self.error(&format!("expected `{}`", var as char)));
        }
        let degree = if self.eat(b'^') {
            self.digits()?
                .parse()
                .map_err(|_| self.error("degree out of range"))?
        } else {
            1
        };
        Ok((coeff, degree))
    }

    /// Dense polynomial up to (not including) a closing parenthesis or end.
    fn dense(&mut self, var: u8) -> Result<Vec<BigInt>> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            let (c, deg) = self.term(var)?;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, BigInt::zero());
            }
            if negative {
                coeffs[deg] -= c;
            } else {
                coeffs[deg] += c;
            }
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        super::dense::trim(&mut coeffs);
        Ok(coeffs)
    }
}

impl Cursor<'_> {
    /// `x`-free Laurent polynomial with signed `q` exponents.
    fn sparse_q(&mut self) -> Result<BTreeMap<i64, XPoly>> {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        let mut negative = self.eat(b'-');
        loop {
            let coeff = if self.peek().is_some_and(|b| b.is_ascii_digit()) {
                let c = self.unsigned()?;
                if self.eat(b'*') {
                    Some(c)
                } else {
                    *acc.entry(0).or_default() += if negative { -c } else { c };
                    None
                }
            } else {
                Some(BigInt::one())
            };
            if let Some(c) = coeff {
                self.expect(b'q')?;
                let e = if self.eat(b'^') {
                    self.small_signed()?
                } else {
                    1
                };
                *acc.entry(e).or_default() += if negative { -c } else { c };
            }
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        if !self.at_end() {
            return Err(self.error("trailing input"));
        }
        Ok(acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, XPoly::constant(c)))
            .collect())
    }
}

pub(crate) fn parse_dense(s: &str, var: char) -> Result<Vec<BigInt>> {
    let mut cur = Cursor::new(s);
    let coeffs = cur.dense(var as u8)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(coeffs)
}

pub(crate) fn parse_laurent(s: &str) -> Result<BTreeMap<i64, XPoly>> {
    let mut cur = Cursor::new(s);
    let mut terms: BTreeMap<i64, XPoly> = BTreeMap::new();
    if cur.peek() == Some(b'0') {
        cur.pos += 1;
        if !cur.at_end() {
            return Err(cur.error("trailing input after 0"));
        }
        return Ok(terms);
    }
    if !s.contains('(') {
        return cur.sparse_q();
    }
    loop {
        let exponent = if cur.eat(b'q') {
            let e = if cur.eat(b'^') {
                cur.small_signed()?
            } else {
                1
            };
            cur.expect(b'*')?;
            e
        } else {
            0
        };
        cur.expect(b'(')?;
        let inner = XPoly::from_coeffs(cur.dense(b'x')?);
        cur.expect(b')')?;
        let slot = terms.entry(exponent).or_default();
        *slot += &inner;
        if slot.is_zero() {
            terms.remove(&exponent);
        }
        if !cur.eat(b'+') {
            break;
        }
    }
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn dense_formatting() {
        assert_eq!(format_dense(&ints(&[1, 5, 5]), "x"), "1 + 5*x + 5*x^2");
        assert_eq!(format_dense(&ints(&[1, -1, 1]), "q"), "1 - q + q^2");
        assert_eq!(format_dense(&ints(&[0, -1, 0, -12]), "x"), "-x - 12*x^3");
        assert_eq!(format_dense(&[], "x"), "0");
    }

    #[test]
    fn dense_parsing() {
        assert_eq!(
            parse_dense("1 + 5*x + 5*x^2", 'x').unwrap(),
            ints(&[1, 5, 5])
        );
        assert_eq!(
            parse_dense("-x - 12*x^3", 'x').unwrap(),
            ints(&[0, -1, 0, -12])
        );
        assert_eq!(parse_dense("0", 'x').unwrap(), Vec::<BigInt>::new());
        assert_eq!(parse_dense("1 - q + q^2", 'q').unwrap(), ints(&[1, -1, 1]));
        assert!(parse_dense("1 + ", 'x').is_err());
        assert!(parse_dense("1 + y", 'x').is_err());
        assert!(parse_dense("3*", 'x').is_err());
    }

    #[test]
    fn laurent_round_trip_of_documented_form() {
        let s = "q^-1*(1 + 2*x) + q^3*(5)";
        let terms = parse_laurent(s).unwrap();
        assert_eq!(terms[&-1], XPoly::from_i64(&[1, 2]));
        assert_eq!(terms[&3], XPoly::from_i64(&[5]));
        assert_eq!(format_laurent(&terms), s);
        let t = parse_laurent("(1) + q*(-x)").unwrap();
        assert_eq!(format_laurent(&t), "(1) + q*(-x)");
        assert!(parse_laurent("0").unwrap().is_empty());
        assert!(parse_laurent("q^2*(1").is_err());
        assert!(parse_laurent("q^2(1)").is_err());
    }

    #[test]
    fn x_free_laurent_prints_without_groups() {
        let terms = parse_laurent("q^-2 - 3 + q + 4*q^7").unwrap();
        assert_eq!(terms.len(), 4);
        assert_eq!(terms[&-2], XPoly::one());
        assert_eq!(terms[&0], XPoly::from_i64(&[-3]));
        assert_eq!(format_laurent(&terms), "q^-2 - 3 + q + 4*q^7");
        assert_eq!(format_laurent(&parse_laurent("1").unwrap()), "1");
        assert_eq!(
            format_laurent(&parse_laurent("(2) + q^3*(-1)").unwrap()),
            "2 - q^3"
        );
        assert!(parse_laurent("1 + x").is_err());
    }
}
