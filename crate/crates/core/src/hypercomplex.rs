//! Cayley–Dickson algebras ℝ, ℂ, ℍ, 𝕆 over an arbitrary commutative ring.
//!
//! Doubling convention: `(a,b)(c,d) = (ac − d̄b, da + bc̄)` and
//! `conj(a,b) = (ā, −b)`. An element of dimension `2^k` is stored as its flat
//! component vector; the first half is `a`, the second half `b`.

use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::Field;
use crate::polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CdError {
    #[error("algebra dimension {0} is not one of 1, 2, 4, 8")]
    InvalidDimension(usize),
    #[error("algebra dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("components live in different ambient spaces")]
    AmbientMismatch,
}

/// Scalars the doubling construction can run over.
pub trait CdScalar: Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {}

impl<T> CdScalar for T where T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T> {}

/// Product of two flat component vectors of equal power-of-two length.
pub fn cd_mul<T: CdScalar>(x: &[T], y: &[T]) -> Vec<T> {
    debug_assert_eq!(x.len(), y.len());
    let n = x.len();
    if n == 1 {
        return vec![x[0].clone() * y[0].clone()];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cd_mul(a, c);
    let dbar_b = cd_mul(&cd_conj(d), b);
    let da = cd_mul(d, a);
    let b_cbar = cd_mul(b, &cd_conj(c));
    let mut out: Vec<T> = ac.into_iter().zip(dbar_b).map(|(p, q)| p - q).collect();
    out.extend(da.into_iter().zip(b_cbar).map(|(p, q)| p + q));
    out
}

/// Conjugate of a flat component vector.
pub fn cd_conj<T: CdScalar>(x: &[T]) -> Vec<T> {
    if x.len() == 1 {
        return vec![x[0].clone()];
    }
    let h = x.len() / 2;
    let mut out = cd_conj(&x[..h]);
    out.extend(x[h..].iter().map(|v| -v.clone()));
    out
}

fn check_dimension(d: usize) -> Result<(), CdError> {
    if matches!(d, 1 | 2 | 4 | 8) {
        Ok(())
    } else {
        Err(CdError::InvalidDimension(d))
    }
}

/// An element of the Cayley–Dickson algebra of dimension 1, 2, 4 or 8 whose
/// components are polynomials.
#[derive(Clone, PartialEq)]
pub struct CdElement<F> {
    components: Vec<Polynomial<F>>,
}

impl<F: Field> CdElement<F> {
    pub fn new(components: Vec<Polynomial<F>>) -> Result<Self, CdError> {
        check_dimension(components.len())?;
        let n = components[0].nvars();
        if components.iter().any(|c| c.nvars() != n) {
            return Err(CdError::AmbientMismatch);
        }
        Ok(CdElement { components })
    }

    /// The generic element `x_{offset+1} + x_{offset+2} e_1 + …` of dimension `d`.
    pub fn symbolic(nvars: usize, offset: usize, d: usize) -> Result<Self, CdError> {
        check_dimension(d)?;
        Ok(CdElement { components: (0..d).map(|i| Polynomial::variable(nvars, offset + i)).collect() })
    }

    /// The basis unit `e_i` (with `e_0 = 1`) as a constant element.
    pub fn unit(nvars: usize, d: usize, i: usize) -> Result<Self, CdError> {
        check_dimension(d)?;
        Ok(CdElement {
            components: (0..d).map(|j| if i == j { Polynomial::one(nvars) } else { Polynomial::zero(nvars) }).collect(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    fn compatible(&self, other: &Self) -> Result<(), CdError> {
        if self.dimension() != other.dimension() {
            return Err(CdError::DimensionMismatch { left: self.dimension(), right: other.dimension() });
        }
        if self.nvars() != other.nvars() {
            return Err(CdError::AmbientMismatch);
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, CdError> {
        self.compatible(other)?;
        Ok(CdElement { components: cd_mul(&self.components, &other.components) })
    }

    pub fn add(&self, other: &Self) -> Result<Self, CdError> {
        self.compatible(other)?;
        Ok(CdElement { components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CdError> {
        self.compatible(other)?;
        Ok(CdElement { components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect() })
    }

    pub fn conjugate(&self) -> Self {
        CdElement { components: cd_conj(&self.components) }
    }

    pub fn real(&self) -> &Polynomial<F> {
        &self.components[0]
    }

    /// `Σ components²`.
    pub fn norm(&self) -> Polynomial<F> {
        let mut acc = crate::polynomial::Accumulator::new(self.nvars());
        for c in &self.components {
            acc.add_product(c, c, &F::one());
        }
        acc.finish()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }
}

impl<F: Field> std::fmt::Debug for CdElement<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.components.iter().map(|c| c.to_string())).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly_in;
    use crate::Coefficient;

    type E = CdElement<Coefficient>;

    #[test]
    fn complex_multiplication() {
        let x = E::symbolic(4, 0, 2).unwrap();
        let y = E::symbolic(4, 2, 2).unwrap();
        let z = x.multiply(&y).unwrap();
        assert_eq!(z.components()[0], parse_poly_in("x1*x3 - x2*x4", 4).unwrap());
        assert_eq!(z.components()[1], parse_poly_in("x1*x4 + x2*x3", 4).unwrap());
    }

    #[test]
    fn quaternion_table() {
        let e = |i| E::unit(1, 4, i).unwrap();
        assert_eq!(e(1).multiply(&e(2)).unwrap(), e(3));
        let ji = e(2).multiply(&e(1)).unwrap();
        assert!(ji.add(&e(3)).unwrap().is_zero());
    }

    #[test]
    fn conjugation_is_an_involution() {
        let x = E::symbolic(8, 0, 8).unwrap();
        assert_eq!(x.conjugate().conjugate(), x);
        assert_eq!(x.norm(), crate::Poly::norm_squared(8));
        let xx = x.multiply(&x.conjugate()).unwrap();
        assert_eq!(xx.real(), &x.norm());
        assert!(xx.components()[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn mismatches_are_errors() {
        let a = E::symbolic(4, 0, 2).unwrap();
        let b = E::symbolic(4, 0, 4).unwrap();
        assert_eq!(a.multiply(&b), Err(CdError::DimensionMismatch { left: 2, right: 4 }));
        assert_eq!(E::symbolic(4, 0, 3), Err(CdError::InvalidDimension(3)));
    }

    #[test]
    fn integer_octonions() {
        let unit = |i: usize| (0..8).map(|j| i64::from(i == j)).collect::<Vec<_>>();
        let e1e2 = cd_mul(&unit(1), &unit(2));
        let lhs = cd_mul(&e1e2, &unit(4));
        let rhs = cd_mul(&unit(1), &cd_mul(&unit(2), &unit(4)));
        assert_ne!(lhs, rhs);
        assert_eq!(lhs.iter().zip(&rhs).map(|(a, b)| a + b).collect::<Vec<_>>(), vec![0; 8]);
    }
}
