//! Text format for polynomials.
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ['^' uint]          var := 'x' uint   (1-based)
//! coeff  := rat ('*' rad)* | rad     rat := int ['/' uint]
//! rad    := 's2' | 's3' | 's6'
//! ```
//!
//! Whitespace between tokens is ignored. A variable may occur at most once
//! per term; powers must be written with `^`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coefficient::{Coefficient, Radical};
use crate::error::PolyError;
use crate::field::Field;
use crate::monomial::{Monomial, MAX_VARS};
use crate::polynomial::Polynomial;

/// Parses a polynomial in an ambient space of dimension `nvars`.
pub fn parse_poly_in<F: Field>(text: &str, nvars: usize) -> Result<Polynomial<F>, PolyError> {
    if nvars > MAX_VARS {
        return Err(PolyError::TooManyVariables(nvars));
    }
    let terms = Parser::new(text).parse()?;
    build(terms, nvars)
}

/// Parses a polynomial, taking the ambient dimension to be the largest
/// variable index that occurs (at least 1).
pub fn parse_poly<F: Field>(text: &str) -> Result<Polynomial<F>, PolyError> {
    let terms = Parser::new(text).parse()?;
    let n = terms.iter().flat_map(|t| t.factors.iter().map(|f| f.index)).max().unwrap_or(1);
    if n > MAX_VARS {
        return Err(PolyError::TooManyVariables(n));
    }
    build(terms, n)
}

fn build<F: Field>(terms: Vec<RawTerm>, nvars: usize) -> Result<Polynomial<F>, PolyError> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let mut exps = vec![0u32; nvars];
        for f in &t.factors {
            if f.index == 0 || f.index > nvars {
                return Err(PolyError::UnknownVariable { index: f.index, pos: f.pos, nvars });
            }
            exps[f.index - 1] = f.exp;
        }
        let m = Monomial::from_exponents(&exps).ok_or(PolyError::ExponentOverflow)?;
        let c = F::from_radical(t.radical, t.rational).ok_or_else(|| PolyError::Syntax {
            pos: t.pos,
            msg: "radical coefficient is not available in this field".into(),
        })?;
        out.push((m, c));
    }
    Ok(Polynomial::from_terms(nvars, out))
}

struct RawFactor {
    index: usize,
    exp: u32,
    pos: usize,
}

struct RawTerm {
    rational: BigRational,
    radical: Radical,
    factors: Vec<RawFactor>,
    pos: usize,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax { pos, msg: msg.into() })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected digits");
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("decimal digits"))
    }

    fn small_uint(&mut self) -> Result<(usize, usize), PolyError> {
        self.skip_ws();
        let pos = self.pos;
        let v = self.uint()?;
        let v = usize::try_from(v).map_err(|_| PolyError::Syntax { pos, msg: "number too large".into() })?;
        Ok((v, pos))
    }

    fn parse(mut self) -> Result<Vec<RawTerm>, PolyError> {
        let mut terms = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            let mut term = self.term()?;
            if negative {
                term.rational = -term.rational;
            }
            terms.push(term);
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(c) => return self.err(self.pos, format!("unexpected character '{}'", c as char)),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn radical(&mut self) -> Result<Option<Radical>, PolyError> {
        if self.peek() != Some(b's') {
            return Ok(None);
        }
        let pos = self.pos;
        self.pos += 1;
        match self.bytes.get(self.pos) {
            Some(b'2') => {
                self.pos += 1;
                Ok(Some(Radical::Sqrt2))
            }
            Some(b'3') => {
                self.pos += 1;
                Ok(Some(Radical::Sqrt3))
            }
            Some(b'6') => {
                self.pos += 1;
                Ok(Some(Radical::Sqrt6))
            }
            _ => self.err(pos, "expected s2, s3 or s6"),
        }
    }

    fn term(&mut self) -> Result<RawTerm, PolyError> {
        let pos = {
            self.skip_ws();
            self.pos
        };
        let mut rational = BigRational::one();
        let mut radical = Radical::One;
        let mut factors: Vec<RawFactor> = Vec::new();
        let mut expect_factor_only = false;

        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let den = if self.eat(b'/') {
                    let p = self.pos;
                    let d = self.uint()?;
                    if d.is_zero() {
                        return self.err(p, "zero denominator");
                    }
                    d
                } else {
                    BigInt::one()
                };
                rational = BigRational::new(num, den);
            }
            Some(b's') => {
                radical = self.radical()?.expect("peeked s");
            }
            Some(b'x') => {
                factors.push(self.factor()?);
                expect_factor_only = true;
            }
            Some(c) => return self.err(self.pos, format!("unexpected character '{}'", c as char)),
            None => return self.err(self.pos, "unexpected end of input"),
        }

        while self.eat(b'*') {
            match self.peek() {
                Some(b's') if !expect_factor_only && factors.is_empty() => {
                    let r = self.radical()?.expect("peeked s");
                    let (q, r) = multiply_radicals(radical, r);
                    rational *= q;
                    radical = r;
                }
                Some(b'x') => {
                    let f = self.factor()?;
                    if factors.iter().any(|g| g.index == f.index) {
                        return self.err(f.pos, format!("repeated variable x{}; use ^", f.index));
                    }
                    factors.push(f);
                }
                Some(_) => return self.err(self.pos, "expected a variable after '*'"),
                None => return self.err(self.pos, "unexpected end of input"),
            }
        }
        Ok(RawTerm { rational, radical, factors, pos })
    }

    fn factor(&mut self) -> Result<RawFactor, PolyError> {
        let pos = self.pos;
        if !self.eat(b'x') {
            return self.err(pos, "expected a variable");
        }
        if !self.bytes.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            return self.err(self.pos, "expected a variable index");
        }
        let (index, _) = self.small_uint()?;
        let exp = if self.eat(b'^') {
            let e = self.uint()?;
            u32::try_from(e).ok().filter(|&e| e <= u8::MAX as u32).ok_or(PolyError::ExponentOverflow)?
        } else {
            1
        };
        Ok(RawFactor { index, exp, pos })
    }
}

/// Product of two basis radicals as (rational factor, radical).
fn multiply_radicals(a: Radical, b: Radical) -> (BigRational, Radical) {
    use Radical::*;
    let int = |n: i64| BigRational::from_integer(n.into());
    match (a, b) {
        (One, r) | (r, One) => (int(1), r),
        (Sqrt2, Sqrt2) => (int(2), One),
        (Sqrt3, Sqrt3) => (int(3), One),
        (Sqrt6, Sqrt6) => (int(6), One),
        (Sqrt2, Sqrt3) | (Sqrt3, Sqrt2) => (int(1), Sqrt6),
        (Sqrt2, Sqrt6) | (Sqrt6, Sqrt2) => (int(2), Sqrt3),
        (Sqrt3, Sqrt6) | (Sqrt6, Sqrt3) => (int(3), Sqrt2),
    }
}

/// Canonical text of a polynomial.
///
/// Terms appear in descending grevlex order. A coefficient with several
/// radical components is written as several terms on the same monomial.
pub fn format_poly<F: Field>(p: &Polynomial<F>) -> String {
    let mut out = String::new();
    for (m, c) in p.terms() {
        for (r, q) in c.radical_parts() {
            push_signed(&mut out, &q, &body(&Signed::abs(&q), r, Some(m)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses a single field element such as `-3/5` or `1/2*s6`.
pub fn parse_scalar<F: Field>(text: &str) -> Result<F, PolyError> {
    let p = parse_poly_in::<F>(text, 0)?;
    Ok(p.as_constant().expect("no variables in a zero-dimensional space"))
}

/// Canonical text of a single field element, e.g. `3/2*s3` or `1 - s2`.
pub fn format_scalar<F: Field>(c: &F) -> String {
    let mut out = String::new();
    for (r, q) in c.radical_parts() {
        push_signed(&mut out, &q, &body(&Signed::abs(&q), r, None));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_coefficient(c: &Coefficient) -> String {
    format_scalar(c)
}

fn push_signed(out: &mut String, q: &BigRational, body: &str) {
    let negative = q.sign() == Ordering::Less;
    match (out.is_empty(), negative) {
        (true, false) => {}
        (true, true) => out.push('-'),
        (false, false) => out.push_str(" + "),
        (false, true) => out.push_str(" - "),
    }
    out.push_str(body);
}

fn body(q: &BigRational, r: Radical, m: Option<&Monomial>) -> String {
    let mut parts: Vec<String> = Vec::new();
    let has_mono = m.is_some_and(|m| m.degree() > 0);
    if !q.is_one() || (r == Radical::One && !has_mono) {
        parts.push(if q.is_integer() { q.numer().to_string() } else { format!("{}/{}", q.numer(), q.denom()) });
    }
    if let Some(tok) = r.token() {
        parts.push(tok.to_string());
    }
    if let Some(m) = m.filter(|m| m.degree() > 0) {
        parts.push(m.to_string());
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    type P = Polynomial<Coefficient>;

    #[test]
    fn round_trip_simple() {
        let p: P = parse_poly_in("x1^2 - x2^2", 2).unwrap();
        assert_eq!(p.to_string(), "x1^2 - x2^2");
        assert_eq!(parse_poly_in::<Coefficient>(&p.to_string(), 2).unwrap(), p);
    }

    #[test]
    fn radical_coefficient() {
        let p: P = parse_poly_in("3/2*s3*x4*x1^2", 4).unwrap();
        let m = Monomial::from_exponents(&[2, 0, 0, 1]).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.coefficient(&m), Coefficient::with_radical(rat(3, 2), Radical::Sqrt3));
        assert_eq!(p.to_string(), "3/2*s3*x1^2*x4");
    }

    #[test]
    fn repeated_factor_rejected() {
        let err = parse_poly_in::<Coefficient>("x1*x1", 1).unwrap_err();
        assert!(matches!(err, PolyError::Syntax { pos: 3, .. }), "{err:?}");
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_poly_in::<Coefficient>("x1 + + x2", 2), Err(PolyError::Syntax { pos: 5, .. })));
        assert!(matches!(
            parse_poly_in::<Coefficient>("x1 + x3", 2),
            Err(PolyError::UnknownVariable { index: 3, pos: 5, nvars: 2 })
        ));
        assert!(matches!(parse_poly_in::<Coefficient>("x0", 2), Err(PolyError::UnknownVariable { index: 0, .. })));
        assert_eq!(parse_poly_in::<Coefficient>("x1^300", 1), Err(PolyError::ExponentOverflow));
        assert!(parse_poly_in::<Coefficient>("1/0", 1).is_err());
    }

    #[test]
    fn mixed_coefficients_split_into_terms() {
        let p: P = parse_poly_in("x1 + s2*x1 - 1/3*s6", 1).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "x1 + s2*x1 - 1/3*s6");
        assert_eq!(parse_poly_in::<Coefficient>(&p.to_string(), 1).unwrap(), p);
    }

    #[test]
    fn radical_products_in_coefficients() {
        let p: P = parse_poly_in("2*s2*s3*x1", 1).unwrap();
        assert_eq!(p.to_string(), "2*s6*x1");
        let q: P = parse_poly_in("s2*s2", 1).unwrap();
        assert_eq!(q.to_string(), "2");
    }

    #[test]
    fn zero_and_constants() {
        let z: P = parse_poly_in("x1 - x1", 1).unwrap();
        assert_eq!(z.to_string(), "0");
        assert_eq!(parse_poly_in::<Coefficient>("0", 1).unwrap(), z);
        let c: P = parse_poly_in("-7/2", 1).unwrap();
        assert_eq!(c.to_string(), "-7/2");
        assert_eq!(format_coefficient(&Coefficient::from(0)), "0");
    }

    #[test]
    fn rational_field_rejects_radicals() {
        assert!(parse_poly_in::<BigRational>("s2*x1", 1).is_err());
        assert_eq!(parse_poly_in::<BigRational>("1/2*x1", 1).unwrap().to_string(), "1/2*x1");
    }

    #[test]
    fn inferred_dimension() {
        let p: P = parse_poly("x3*x1^2 - x3*x2^2 + 2*x4*x1*x2").unwrap();
        assert_eq!(p.nvars(), 4);
        assert_eq!(p.to_string(), "x1^2*x3 - x2^2*x3 + 2*x1*x2*x4");
    }
}
