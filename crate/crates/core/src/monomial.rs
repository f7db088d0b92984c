use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

/// Largest supported ambient dimension.
pub const MAX_VARS: usize = 64;

/// Dense exponent vector over at most [`MAX_VARS`] variables.
///
/// Ordered by graded reverse lexicographic order with `x1 > x2 > … > xn`.
/// Positions past the ambient dimension of the owning polynomial are zero.
#[derive(Clone, Copy)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    degree: u16,
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], degree: 0 }
    }

    /// The variable with 0-based index `i`.
    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS, "variable index {i} exceeds {MAX_VARS}");
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    /// Builds a monomial from exponents; `None` if a single exponent
    /// exceeds 255 or there are more than [`MAX_VARS`] entries.
    pub fn from_exponents(exps: &[u32]) -> Option<Self> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut m = Monomial::one();
        let mut degree = 0u32;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u8::try_from(e).ok()?;
            degree += e;
        }
        m.degree = u16::try_from(degree).ok()?;
        Some(m)
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    /// Exponents of the first `n` variables.
    pub fn exponents(&self, n: usize) -> &[u8] {
        &self.exps[..n]
    }

    /// Highest variable index with a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1)
    }

    /// Product; `None` on exponent overflow.
    #[inline]
    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b)?;
        }
        out.degree = self.degree.checked_add(other.degree)?;
        Some(out)
    }

    /// Product; panics on exponent overflow (an exponent above 255).
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a -= *b;
        }
        out.degree -= other.degree;
        Some(out)
    }

    /// Square root when every exponent is even.
    pub fn sqrt(&self) -> Option<Monomial> {
        if self.exps.iter().any(|e| e % 2 != 0) {
            return None;
        }
        let mut out = *self;
        for e in out.exps.iter_mut() {
            *e /= 2;
        }
        out.degree /= 2;
        Some(out)
    }

    /// Lowers the exponent of variable `i` by one; `None` if it is zero.
    pub fn lower(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut out = *self;
        out.exps[i] -= 1;
        out.degree -= 1;
        Some(out)
    }

    /// Sets the exponent of variable `i` to zero.
    pub fn without(&self, i: usize) -> Monomial {
        let mut out = *self;
        out.degree -= out.exps[i] as u16;
        out.exps[i] = 0;
        out
    }

    /// Moves exponents according to `map[i] = new index of variable i`.
    pub fn remap(&self, n: usize, map: &[usize]) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..n {
            out.exps[map[i]] = self.exps[i];
        }
        out.degree = self.degree;
        out
    }
}

impl PartialEq for Monomial {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Ties: the last differing variable decides; a smaller exponent there wins.
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate().filter(|(_, &e)| e > 0) {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
