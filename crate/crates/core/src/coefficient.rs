//! The coefficient field ℚ(√2,√3).
//!
//! Elements are `a + b√2 + c√3 + d√6` with rational `a..d`. Internally the
//! field is handled as the tower ℚ(√2)(√3): `x = u + v√3` with
//! `u = a + b√2`, `v = c + d√2`. Multiplication, inversion, square roots and
//! the sign test all recurse through that tower.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::{rational_sqrt, Field};

/// Radical basis elements of ℚ(√2,√3) over ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Radical {
    One,
    Sqrt2,
    Sqrt3,
    Sqrt6,
}

impl Radical {
    pub const ALL: [Radical; 4] = [Radical::One, Radical::Sqrt2, Radical::Sqrt3, Radical::Sqrt6];

    /// Token used by the polynomial text format (`s2`, `s3`, `s6`).
    pub fn token(self) -> Option<&'static str> {
        match self {
            Radical::One => None,
            Radical::Sqrt2 => Some("s2"),
            Radical::Sqrt3 => Some("s3"),
            Radical::Sqrt6 => Some("s6"),
        }
    }
}

/// An element `a + b√2 + c√3 + d√6` of ℚ(√2,√3).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coefficient {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

/// Element `p + q√2` of ℚ(√2).
#[derive(Clone, PartialEq)]
struct Q2 {
    p: BigRational,
    q: BigRational,
}

impl Q2 {
    fn zero() -> Self {
        Q2 { p: BigRational::zero(), q: BigRational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    fn add(&self, o: &Q2) -> Q2 {
        Q2 { p: &self.p + &o.p, q: &self.q + &o.q }
    }

    fn sub(&self, o: &Q2) -> Q2 {
        Q2 { p: &self.p - &o.p, q: &self.q - &o.q }
    }

    fn neg(&self) -> Q2 {
        Q2 { p: -&self.p, q: -&self.q }
    }

    fn scale(&self, r: &BigRational) -> Q2 {
        Q2 { p: &self.p * r, q: &self.q * r }
    }

    fn mul(&self, o: &Q2) -> Q2 {
        if self.q.is_zero() && o.q.is_zero() {
            return Q2 { p: &self.p * &o.p, q: BigRational::zero() };
        }
        let two = BigRational::from_integer(2.into());
        Q2 {
            p: &self.p * &o.p + &self.q * &o.q * two,
            q: &self.p * &o.q + &self.q * &o.p,
        }
    }

    fn inverse(&self) -> Option<Q2> {
        if self.is_zero() {
            return None;
        }
        let two = BigRational::from_integer(2.into());
        let norm = &self.p * &self.p - &self.q * &self.q * two;
        let inv = norm.recip();
        Some(Q2 { p: &self.p * &inv, q: -(&self.q * &inv) })
    }

    fn sign(&self) -> Ordering {
        let sp = self.p.sign();
        let sq = self.q.sign();
        if sq == Ordering::Equal || sp == sq {
            return sp;
        }
        if sp == Ordering::Equal {
            return sq;
        }
        let two = BigRational::from_integer(2.into());
        if &self.p * &self.p > &self.q * &self.q * two {
            sp
        } else {
            sq
        }
    }

    /// Non-negative square root inside ℚ(√2).
    fn sqrt(&self) -> Option<Q2> {
        if self.sign() == Ordering::Less {
            return None;
        }
        let two = BigRational::from_integer(2.into());
        let root = if self.q.is_zero() {
            if let Some(g) = rational_sqrt(&self.p) {
                Q2 { p: g, q: BigRational::zero() }
            } else {
                let h = rational_sqrt(&(&self.p / &two))?;
                Q2 { p: BigRational::zero(), q: h }
            }
        } else {
            // (g + h√2)² = g² + 2h² + 2gh√2, so g² is a root of t² − p t + q²/2.
            let disc = &self.p * &self.p - &self.q * &self.q * &two;
            let s = rational_sqrt(&disc)?;
            let candidates = [(&self.p + &s) / &two, (&self.p - &s) / &two];
            let (g, h) = candidates.iter().find_map(|t| {
                let g = rational_sqrt(t)?;
                if g.is_zero() {
                    return None;
                }
                let h = &self.q / (&g * &two);
                Some((g, h))
            })?;
            Q2 { p: g, q: h }
        };
        Some(if root.sign() == Ordering::Less { root.neg() } else { root })
    }
}

impl Coefficient {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Coefficient { a, b, c, d }
    }

    pub fn rational(r: BigRational) -> Self {
        Coefficient { a: r, ..Default::default() }
    }

    /// `r · radical`.
    pub fn with_radical(r: BigRational, radical: Radical) -> Self {
        let mut out = Coefficient::zero();
        match radical {
            Radical::One => out.a = r,
            Radical::Sqrt2 => out.b = r,
            Radical::Sqrt3 => out.c = r,
            Radical::Sqrt6 => out.d = r,
        }
        out
    }

    pub fn sqrt2() -> Self {
        Self::with_radical(BigRational::one(), Radical::Sqrt2)
    }

    pub fn sqrt3() -> Self {
        Self::with_radical(BigRational::one(), Radical::Sqrt3)
    }

    pub fn sqrt6() -> Self {
        Self::with_radical(BigRational::one(), Radical::Sqrt6)
    }

    /// Rational component along a basis radical.
    pub fn component(&self, radical: Radical) -> &BigRational {
        match radical {
            Radical::One => &self.a,
            Radical::Sqrt2 => &self.b,
            Radical::Sqrt3 => &self.c,
            Radical::Sqrt6 => &self.d,
        }
    }

    /// Nonzero components in basis order.
    pub fn parts(&self) -> impl Iterator<Item = (Radical, &BigRational)> {
        Radical::ALL
            .into_iter()
            .map(move |r| (r, self.component(r)))
            .filter(|(_, v)| !v.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Approximate real value, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        f(&self.a) + f(&self.b) * 2f64.sqrt() + f(&self.c) * 3f64.sqrt() + f(&self.d) * 6f64.sqrt()
    }

    fn split(&self) -> (Q2, Q2) {
        (
            Q2 { p: self.a.clone(), q: self.b.clone() },
            Q2 { p: self.c.clone(), q: self.d.clone() },
        )
    }

    fn join(u: Q2, v: Q2) -> Self {
        Coefficient { a: u.p, b: u.q, c: v.p, d: v.q }
    }

    /// Image under √2 ↦ −√2.
    pub fn conjugate_sqrt2(&self) -> Self {
        Coefficient { a: self.a.clone(), b: -&self.b, c: self.c.clone(), d: -&self.d }
    }

    /// Image under √3 ↦ −√3.
    pub fn conjugate_sqrt3(&self) -> Self {
        Coefficient { a: self.a.clone(), b: self.b.clone(), c: -&self.c, d: -&self.d }
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::rational(BigRational::from_integer(n.into()))
    }
}

impl From<BigRational> for Coefficient {
    fn from(r: BigRational) -> Self {
        Coefficient::rational(r)
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_coefficient(self))
    }
}

impl Zero for Coefficient {
    fn zero() -> Self {
        Coefficient::default()
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl One for Coefficient {
    fn one() -> Self {
        Coefficient::rational(BigRational::one())
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;

    fn neg(self) -> Coefficient {
        Coefficient { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }
}

impl Add for Coefficient {
    type Output = Coefficient;

    fn add(mut self, rhs: Coefficient) -> Coefficient {
        self += &rhs;
        self
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;

    fn sub(mut self, rhs: Coefficient) -> Coefficient {
        self -= &rhs;
        self
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;

    fn mul(self, rhs: Coefficient) -> Coefficient {
        self.mul_ref(&rhs)
    }
}

impl<'a> AddAssign<&'a Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &'a Coefficient) {
        self.a += &rhs.a;
        if !rhs.b.is_zero() {
            self.b += &rhs.b;
        }
        if !rhs.c.is_zero() {
            self.c += &rhs.c;
        }
        if !rhs.d.is_zero() {
            self.d += &rhs.d;
        }
    }
}

impl<'a> SubAssign<&'a Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &'a Coefficient) {
        self.a -= &rhs.a;
        if !rhs.b.is_zero() {
            self.b -= &rhs.b;
        }
        if !rhs.c.is_zero() {
            self.c -= &rhs.c;
        }
        if !rhs.d.is_zero() {
            self.d -= &rhs.d;
        }
    }
}

impl<'a> MulAssign<&'a Coefficient> for Coefficient {
    fn mul_assign(&mut self, rhs: &'a Coefficient) {
        *self = self.mul_ref(rhs);
    }
}

impl Field for Coefficient {
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_rational() && rhs.is_rational() {
            return Coefficient::rational(&self.a * &rhs.a);
        }
        let (u, v) = self.split();
        let (u2, v2) = rhs.split();
        let three = BigRational::from_integer(3.into());
        let real = u.mul(&u2).add(&v.mul(&v2).scale(&three));
        let irr = u.mul(&v2).add(&v.mul(&u2));
        Coefficient::join(real, irr)
    }

    fn from_integer(n: i64) -> Self {
        Coefficient::from(n)
    }

    fn from_rational(r: BigRational) -> Self {
        Coefficient::rational(r)
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(u + v√3) = (u − v√3) / (u² − 3v²)
        let (u, v) = self.split();
        let three = BigRational::from_integer(3.into());
        let norm = u.mul(&u).sub(&v.mul(&v).scale(&three));
        let inv = norm.inverse()?;
        Some(Coefficient::join(u.mul(&inv), v.neg().mul(&inv)))
    }

    fn sqrt(&self) -> Option<Self> {
        if self.sign() == Ordering::Less {
            return None;
        }
        let (u, v) = self.split();
        let three = BigRational::from_integer(3.into());
        let two = BigRational::from_integer(2.into());
        let root = if v.is_zero() {
            if let Some(w) = u.sqrt() {
                Coefficient::join(w, Q2::zero())
            } else {
                let w = u.scale(&three.recip()).sqrt()?;
                Coefficient::join(Q2::zero(), w)
            }
        } else {
            // (γ + δ√3)² = γ² + 3δ² + 2γδ√3, so γ² is a root of t² − u t + 3v²/4.
            let disc = u.mul(&u).sub(&v.mul(&v).scale(&three));
            let s = disc.sqrt()?;
            let half = two.recip();
            let candidates = [u.add(&s).scale(&half), u.sub(&s).scale(&half)];
            let (g, h) = candidates.iter().find_map(|t| {
                let g = t.sqrt()?;
                let inv = g.scale(&two).inverse()?;
                Some((g, v.mul(&inv)))
            })?;
            Coefficient::join(g, h)
        };
        Some(if root.sign() == Ordering::Less { -root } else { root })
    }

    fn sign(&self) -> Ordering {
        let (u, v) = self.split();
        let su = u.sign();
        let sv = v.sign();
        if sv == Ordering::Equal || su == sv {
            return su;
        }
        if su == Ordering::Equal {
            return sv;
        }
        let three = BigRational::from_integer(3.into());
        if u.mul(&u).sub(&v.mul(&v).scale(&three)).sign() == Ordering::Greater {
            su
        } else {
            sv
        }
    }

    fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    fn radical_parts(&self) -> Vec<(Radical, BigRational)> {
        self.parts().map(|(r, v)| (r, v.clone())).collect()
    }

    fn from_radical(r: Radical, q: BigRational) -> Option<Self> {
        Some(Coefficient::with_radical(q, r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn k(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Coefficient {
        Coefficient::new(rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1), rat(d.0, d.1))
    }

    #[test]
    fn radical_products() {
        let s2 = Coefficient::sqrt2();
        let s3 = Coefficient::sqrt3();
        let s6 = Coefficient::sqrt6();
        assert_eq!(s2.mul_ref(&s2), Coefficient::from(2));
        assert_eq!(s3.mul_ref(&s3), Coefficient::from(3));
        assert_eq!(s6.mul_ref(&s6), Coefficient::from(6));
        assert_eq!(s2.mul_ref(&s3), s6);
        assert_eq!(s2.mul_ref(&s6), Coefficient::from(2).mul_ref(&s3));
        assert_eq!(s3.mul_ref(&s6), Coefficient::from(3).mul_ref(&s2));
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = k((1, 2), (-3, 1), (2, 5), (7, 3));
        let inv = x.inverse().unwrap();
        assert_eq!(x.mul_ref(&inv), Coefficient::one());
        assert!(Coefficient::zero().inverse().is_none());
    }

    #[test]
    fn sign_is_exact() {
        // 1 + √2 − √3 ≈ 0.682, √2 + √3 − √6 ≈ 0.697, 5 − 2√6 ≈ 0.101
        assert_eq!(k((1, 1), (1, 1), (-1, 1), (0, 1)).sign(), Ordering::Greater);
        assert_eq!(k((0, 1), (1, 1), (1, 1), (-1, 1)).sign(), Ordering::Greater);
        assert_eq!(k((5, 1), (0, 1), (0, 1), (-2, 1)).sign(), Ordering::Greater);
        assert_eq!(k((-5, 1), (0, 1), (0, 1), (2, 1)).sign(), Ordering::Less);
        assert_eq!(Coefficient::zero().sign(), Ordering::Equal);
    }

    #[test]
    fn square_roots() {
        assert_eq!(Coefficient::from(3).sqrt(), Some(Coefficient::sqrt3()));
        assert_eq!(Coefficient::from(6).sqrt(), Some(Coefficient::sqrt6()));
        assert_eq!(Coefficient::from(4).sqrt(), Some(Coefficient::from(2)));
        // (1 + √2)² = 3 + 2√2
        let x = k((3, 1), (2, 1), (0, 1), (0, 1));
        assert_eq!(x.sqrt(), Some(k((1, 1), (1, 1), (0, 1), (0, 1))));
        // (√2 + √3)² = 5 + 2√6
        let y = k((5, 1), (0, 1), (0, 1), (2, 1));
        assert_eq!(y.sqrt(), Some(k((0, 1), (1, 1), (1, 1), (0, 1))));
        // 5 − 2√6 = (√3 − √2)², positive root
        let z = k((5, 1), (0, 1), (0, 1), (-2, 1));
        assert_eq!(z.sqrt(), Some(k((0, 1), (-1, 1), (1, 1), (0, 1))));
        assert_eq!(Coefficient::from(5).sqrt(), None);
        assert_eq!(Coefficient::from(-4).sqrt(), None);
        assert_eq!(Coefficient::sqrt2().sqrt(), None);
    }
}
