//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are kept in a vector sorted strictly descending in graded reverse
//! lexicographic order, with no zero coefficients. Every operation returns a
//! polynomial in that canonical form, so structural equality is polynomial
//! equality.

use std::collections::btree_map::Entry as BEntry;
use std::collections::hash_map::Entry as HEntry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use crate::error::PolyError;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::monomial::{Monomial, MAX_VARS};

/// A sparse polynomial in the variables `x1..xn` over the field `F`.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F> {
    nvars: usize,
    terms: Vec<(Monomial, F)>,
}

fn check_nvars(n: usize) -> Result<(), PolyError> {
    if n > MAX_VARS {
        Err(PolyError::TooManyVariables(n))
    } else {
        Ok(())
    }
}

impl<F: Field> Polynomial<F> {
    /// The zero polynomial in `n` variables. Panics if `n > 64`.
    pub fn zero(nvars: usize) -> Self {
        check_nvars(nvars).expect("ambient dimension");
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(nvars, Monomial::one(), c)
    }

    /// `c · m`.
    pub fn monomial(nvars: usize, m: Monomial, c: F) -> Self {
        let mut p = Self::zero(nvars);
        debug_assert!(m.support_len() <= nvars);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// The variable with 0-based index `i` (printed as `x{i+1}`).
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        Self::monomial(nvars, Monomial::var(i), F::one())
    }

    /// `x1² + … + xn²`.
    pub fn norm_squared(nvars: usize) -> Self {
        Self::sum_of_squares(nvars, 0..nvars)
    }

    /// `Σ x_i²` over the given 0-based indices.
    pub fn sum_of_squares(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        Self::from_terms(nvars, vars.into_iter().map(|i| (Monomial::var(i).mul(&Monomial::var(i)), F::one())))
    }

    /// Builds a polynomial from arbitrary terms: duplicates are combined and
    /// zeros dropped.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        check_nvars(nvars).expect("ambient dimension");
        let mut acc: FxHashMap<Monomial, F> = FxHashMap::default();
        for (m, c) in terms {
            debug_assert!(m.support_len() <= nvars);
            accumulate(&mut acc, m, c);
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: FxHashMap<Monomial, F>) -> Self {
        let mut terms: Vec<(Monomial, F)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == 0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree in one variable.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(i)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|idx| self.terms[idx].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    /// The constant value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.as_slice() {
            [] => Some(F::zero()),
            [(m, c)] if m.degree() == 0 => Some(c.clone()),
            _ => None,
        }
    }

    /// Same polynomial viewed in a different ambient dimension. Fails if a
    /// variable beyond the new dimension occurs.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self, PolyError> {
        check_nvars(nvars)?;
        if let Some(max) = self.terms.iter().map(|(m, _)| m.support_len()).max() {
            if max > nvars {
                return Err(PolyError::IndexOutOfRange { index: max - 1, nvars });
            }
        }
        Ok(Polynomial { nvars, terms: self.terms.clone() })
    }

    /// Renames variables: variable `i` becomes `map[i]` in a space of
    /// dimension `nvars`.
    pub fn remap_variables(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars, "variable map length");
        assert!(map.iter().all(|&j| j < nvars), "variable map target out of range");
        Self::from_terms(nvars, self.terms.iter().map(|(m, c)| (m.remap(self.nvars, map), c.clone())))
    }

    /// Coefficient of `x_i^k`, as a polynomial in the remaining variables.
    pub fn coefficient_in(&self, i: usize, k: u32) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.exponent(i) == k).map(|(m, c)| (m.without(i), c.clone())),
        )
    }

    pub fn map_coefficients<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, c.mul_ref(s))).collect() }
    }

    /// `c · m · self`; term order is preserved, so no re-sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(t, d)| (t.mul(m), d.mul_ref(c))).collect() }
    }

    fn same_dim(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(PolyError::DimensionMismatch { left: self.nvars, right: other.nvars })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_dim(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_dim(other)?;
        Ok(self.merge(other, true))
    }

    /// Product. Every pair of terms contributes exactly one coefficient
    /// multiplication; like monomials are combined afterwards.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_dim(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => terms.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (m, c) = b.next().unwrap();
                    terms.push((*m, if subtract { -c.clone() } else { c.clone() }));
                }
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    std::cmp::Ordering::Greater => terms.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => {
                        let (m, c) = b.next().unwrap();
                        terms.push((*m, if subtract { -c.clone() } else { c.clone() }));
                    }
                    std::cmp::Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let mut c = ca.clone();
                        if subtract {
                            c -= cb;
                        } else {
                            c += cb;
                        }
                        if !c.is_zero() {
                            terms.push((*m, c));
                        }
                    }
                },
            }
        }
        Polynomial { nvars: self.nvars, terms }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: FxHashMap<Monomial, F> = FxHashMap::default();
        acc.reserve(self.terms.len().max(other.terms.len()) * 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut acc, ma.mul(mb), ca.mul_ref(cb));
            }
        }
        Self::from_map(self.nvars, acc)
    }

    pub fn square(&self) -> Self {
        self.mul_impl(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = out.mul_impl(self);
        }
        out
    }

    /// Formal partial derivative with respect to the variable with 0-based
    /// index `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Self, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::IndexOutOfRange { index: i, nvars: self.nvars });
        }
        Ok(self.derivative(i))
    }

    pub(crate) fn derivative(&self, i: usize) -> Self {
        // Differentiation is order preserving on the surviving terms.
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponent(i);
                let lowered = m.lower(i)?;
                Some((lowered, c.mul_ref(&F::from_integer(e as i64))))
            })
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }

    /// Exact value at a point.
    pub fn evaluate(&self, point: &[F]) -> Result<F, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::LengthMismatch { expected: self.nvars, found: point.len() });
        }
        let mut powers: Vec<Vec<F>> = point.iter().map(|v| vec![F::one(), v.clone()]).collect();
        let mut total = F::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents(self.nvars).iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_ref(&point[i]);
                    powers[i].push(next);
                }
                term *= &powers[i][e];
            }
            total += &term;
        }
        Ok(total)
    }

    /// `(f∘M)(x) = f(Mx)`: each `x_i` is replaced by `Σ_j M_ij x_j`.
    pub fn substitute_linear(&self, m: &Matrix<F>) -> Result<Self, PolyError> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(PolyError::DimensionMismatch { left: self.nvars, right: m.rows().max(m.cols()) });
        }
        let n = self.nvars;
        let linear: Vec<Self> = (0..n)
            .map(|i| Self::from_terms(n, (0..n).map(|j| (Monomial::var(j), m.get(i, j).clone()))))
            .collect();
        let mut powers: Vec<Vec<Self>> = linear.iter().map(|l| vec![Self::one(n), l.clone()]).collect();
        let mut acc: FxHashMap<Monomial, F> = FxHashMap::default();
        for (mono, c) in &self.terms {
            let mut prod = Self::constant(n, c.clone());
            for (i, &e) in mono.exponents(n).iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_impl(&linear[i]);
                    powers[i].push(next);
                }
                prod = prod.mul_impl(&powers[i][e]);
            }
            for (t, d) in prod.terms {
                accumulate(&mut acc, t, d);
            }
        }
        Ok(Self::from_map(n, acc))
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Single-divisor reduction: the leading term of the remainder is
    /// cancelled against the divisor's leading term until the remainder
    /// vanishes. Because `lead(q·f) = lead(q)·lead(f)`, the first leading
    /// monomial that the divisor's leading monomial fails to divide proves
    /// non-divisibility; it is returned as the witness.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.same_dim(divisor)?;
        let Some((lead_m, lead_c)) = divisor.terms.first() else {
            return Err(PolyError::ZeroDivisor);
        };
        let lead_inv = lead_c.inverse().expect("nonzero leading coefficient");
        let mut rem: BTreeMap<Monomial, F> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((rm, rc)) = rem.last_key_value() {
            let Some(qm) = rm.checked_div(lead_m) else {
                let witness = Self::monomial(self.nvars, *rm, rc.clone());
                return Err(PolyError::NotDivisible { monomial: *rm, witness: witness.to_string() });
            };
            let qc = rc.mul_ref(&lead_inv);
            rem.pop_last();
            for (m, c) in divisor.terms.iter().skip(1) {
                subtract_into(&mut rem, m.mul(&qm), c.mul_ref(&qc));
            }
            quotient.push((qm, qc));
        }
        Ok(Polynomial { nvars: self.nvars, terms: quotient })
    }

    /// Remainder-free divisibility test.
    pub fn divides(&self, other: &Self) -> bool {
        other.exact_divide(self).is_ok()
    }

    /// Square root with positive leading coefficient, when one exists.
    pub fn sqrt(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let (Some((lead_m, lead_c)), Some((trail_m, _))) = (self.terms.first(), self.terms.last()) else {
            return Err(PolyError::NotSquare);
        };
        let gm = lead_m.sqrt().ok_or(PolyError::NotSquare)?;
        let gc = lead_c.sqrt().ok_or(PolyError::NotSquare)?;
        // Every term of a root lies between its leading and trailing terms,
        // and the trailing term squares to the trailing term of `self`.
        let floor = trail_m.sqrt().ok_or(PolyError::NotSquare)?;
        let two_lead_inv = gc.mul_ref(&F::from_integer(2)).inverse().ok_or(PolyError::NotSquare)?;

        let mut rem: BTreeMap<Monomial, F> = self.terms.iter().cloned().collect();
        subtract_into(&mut rem, gm.mul(&gm), gc.mul_ref(&gc));
        let mut root: Vec<(Monomial, F)> = vec![(gm, gc)];
        while let Some((rm, rc)) = rem.last_key_value() {
            let tm = rm.checked_div(&gm).ok_or(PolyError::NotSquare)?;
            if tm >= root.last().unwrap().0 || tm < floor {
                return Err(PolyError::NotSquare);
            }
            let tc = rc.mul_ref(&two_lead_inv);
            let two_tc = tc.mul_ref(&F::from_integer(2));
            for (m, c) in &root {
                subtract_into(&mut rem, m.mul(&tm), c.mul_ref(&two_tc));
            }
            subtract_into(&mut rem, tm.mul(&tm), tc.mul_ref(&tc));
            root.push((tm, tc));
        }
        Ok(Polynomial { nvars: self.nvars, terms: root })
    }

    /// `Σ x_i ∂f/∂x_i`.
    pub fn euler_operator(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c.mul_ref(&F::from_integer(m.degree() as i64)))).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

#[inline]
fn accumulate<F: Field>(acc: &mut FxHashMap<Monomial, F>, m: Monomial, c: F) {
    match acc.entry(m) {
        HEntry::Occupied(mut e) => *e.get_mut() += &c,
        HEntry::Vacant(e) => {
            e.insert(c);
        }
    }
}

#[inline]
fn subtract_into<F: Field>(rem: &mut BTreeMap<Monomial, F>, m: Monomial, c: F) {
    match rem.entry(m) {
        BEntry::Occupied(mut e) => {
            *e.get_mut() -= &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        BEntry::Vacant(e) => {
            e.insert(-c);
        }
    }
}

impl<F: Field> Polynomial<F> {
    /// Collects a sum of polynomials sharing one ambient dimension.
    pub fn sum<'a>(nvars: usize, parts: impl IntoIterator<Item = &'a Self>) -> Self
    where
        F: 'a,
    {
        let mut acc: FxHashMap<Monomial, F> = FxHashMap::default();
        for p in parts {
            assert_eq!(p.nvars, nvars, "ambient dimension mismatch in sum");
            for (m, c) in &p.terms {
                accumulate(&mut acc, *m, c.clone());
            }
        }
        Self::from_map(nvars, acc)
    }
}

/// Running sum of polynomial terms, finalized into canonical form once.
///
/// Summing many products through an accumulator avoids re-sorting after
/// every intermediate addition.
pub struct Accumulator<F> {
    nvars: usize,
    map: FxHashMap<Monomial, F>,
}

impl<F: Field> Accumulator<F> {
    pub fn new(nvars: usize) -> Self {
        Accumulator { nvars, map: FxHashMap::default() }
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        accumulate(&mut self.map, m, c);
    }

    pub fn add(&mut self, p: &Polynomial<F>) {
        assert_eq!(p.nvars, self.nvars, "ambient dimension mismatch");
        for (m, c) in &p.terms {
            accumulate(&mut self.map, *m, c.clone());
        }
    }

    pub fn add_scaled(&mut self, p: &Polynomial<F>, s: &F) {
        assert_eq!(p.nvars, self.nvars, "ambient dimension mismatch");
        if s.is_zero() {
            return;
        }
        for (m, c) in &p.terms {
            accumulate(&mut self.map, *m, c.mul_ref(s));
        }
    }

    /// Adds `s · a · b`.
    pub fn add_product(&mut self, a: &Polynomial<F>, b: &Polynomial<F>, s: &F) {
        assert!(a.nvars == self.nvars && b.nvars == self.nvars, "ambient dimension mismatch");
        if s.is_zero() {
            return;
        }
        for (ma, ca) in &a.terms {
            let cs = ca.mul_ref(s);
            for (mb, cb) in &b.terms {
                accumulate(&mut self.map, ma.mul(mb), cs.mul_ref(cb));
            }
        }
    }

    pub fn finish(self) -> Polynomial<F> {
        Polynomial::from_map(self.nvars, self.map)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, F: Field> $trait<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;

            /// Panics on ambient dimension mismatch.
            fn $method(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl<F: Field> $trait for Polynomial<F> {
            type Output = Polynomial<F>;

            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        Polynomial { nvars: self.nvars, terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        -self.clone()
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_poly(self))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[n={}]({})", self.nvars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly_in;
    use crate::Coefficient;

    fn p(s: &str, n: usize) -> Polynomial<Coefficient> {
        parse_poly_in(s, n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let f = p("x1 + x2", 2);
        let g = p("x1 - x2", 2);
        assert_eq!(&f * &g, p("x1^2 - x2^2", 2));
        assert!((&f * &Polynomial::zero(2)).is_zero());
    }

    #[test]
    fn lawson_cubic_from_pieces() {
        let lhs = &(&p("x1^2 - x2^2", 4) * &p("x3", 4)) + &p("2*x1*x2*x4", 4);
        assert_eq!(lhs, p("x3*x1^2 - x3*x2^2 + 2*x4*x1*x2", 4));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let f = p("x1", 1);
        let g = p("x1", 2);
        assert_eq!(f.checked_mul(&g), Err(PolyError::DimensionMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x1^2*x3", 3).partial_derivative(0).unwrap(), p("2*x1*x3", 3));
        let lawson = p("x3*x1^2 - x3*x2^2 + 2*x4*x1*x2", 4);
        assert_eq!(lawson.partial_derivative(2).unwrap(), p("x1^2 - x2^2", 4));
        assert!(matches!(lawson.partial_derivative(4), Err(PolyError::IndexOutOfRange { .. })));
    }

    #[test]
    fn division() {
        assert_eq!(p("x1^2 - x2^2", 2).exact_divide(&p("x1 - x2", 2)).unwrap(), p("x1 + x2", 2));
        let err = p("x1^2 + x2^2", 2).exact_divide(&p("x1 + x2", 2)).unwrap_err();
        assert!(matches!(err, PolyError::NotDivisible { .. }), "{err:?}");
        assert_eq!(p("x1", 1).exact_divide(&Polynomial::zero(1)), Err(PolyError::ZeroDivisor));
    }

    #[test]
    fn square_roots() {
        assert_eq!(p("x1^2 + 2*x1*x2 + x2^2", 2).sqrt().unwrap(), p("x1 + x2", 2));
        assert_eq!(p("x1^2", 1).sqrt().unwrap(), p("x1", 1));
        assert_eq!(p("4*x4^2*x3^2 + 4*x4^2*x5^2", 5).sqrt(), Err(PolyError::NotSquare));
        assert_eq!(p("-x1^2", 1).sqrt(), Err(PolyError::NotSquare));
        assert_eq!(p("2*x1^2", 1).sqrt().unwrap(), p("s2*x1", 1));
    }

    #[test]
    fn evaluation() {
        let three_four = [Coefficient::from(3), Coefficient::from(4)];
        assert_eq!(p("x1^2 + x2^2", 2).evaluate(&three_four).unwrap(), Coefficient::from(25));
        let id = [1, 0, 0, 1].map(Coefficient::from);
        assert_eq!(p("x1*x4 - x2*x3", 4).evaluate(&id).unwrap(), Coefficient::from(1));
        let pt = [1, 0, 1, 0].map(Coefficient::from);
        assert_eq!(p("x3*x1^2 - x3*x2^2 + 2*x4*x1*x2", 4).evaluate(&pt).unwrap(), Coefficient::from(1));
        assert!(p("x1", 1).evaluate(&[]).is_err());
    }

    #[test]
    fn linear_substitution() {
        let f = p("x1^2 - x2^2", 2);
        assert_eq!(f.substitute_linear(&Matrix::identity(2)).unwrap(), f);
        let swap = Matrix::from_vec(2, 2, [0, 1, 1, 0].map(Coefficient::from).to_vec());
        assert_eq!(f.substitute_linear(&swap).unwrap(), p("x2^2 - x1^2", 2));
        assert!(f.substitute_linear(&Matrix::identity(3)).is_err());
    }

    #[test]
    fn coefficient_lookup() {
        let f = p("3*x1^2 - x2 + 5", 2);
        assert_eq!(f.coefficient(&Monomial::var(1)), Coefficient::from(-1));
        assert_eq!(f.coefficient(&Monomial::one()), Coefficient::from(5));
        assert_eq!(f.coefficient(&Monomial::var(0)), Coefficient::from(0));
    }
}
