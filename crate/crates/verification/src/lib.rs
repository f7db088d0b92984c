//! Independent oracles for the acceptance suite.
//!
//! Nothing here calls the differential operators, the classification
//! functions or the polynomial substitution of `mincone`. Pointwise
//! derivatives come from forward differences of `t ↦ f(x + t v)`, which are
//! exact for polynomials once `deg f + 1` samples are taken.

use mincone::clifford::CliffordSystem;
use mincone::{Coefficient, Field, Poly};
use num_traits::{One, Zero};

type C = Coefficient;

fn int(v: i64) -> C {
    C::from(v)
}

/// Value of `f` at `x`, term by term.
pub fn eval(f: &Poly, x: &[C]) -> C {
    let mut total = C::zero();
    for (mono, c) in f.terms() {
        let mut t = c.clone();
        for (i, xi) in x.iter().enumerate() {
            for _ in 0..mono.exponent(i) {
                t = t * xi.clone();
            }
        }
        total = total + t;
    }
    total
}

/// First and second derivative at `t = 0` of `t ↦ f(x + t v)`.
pub fn line_derivatives(f: &Poly, deg: usize, x: &[C], v: &[C]) -> (C, C) {
    let mut diffs: Vec<C> = (0..=deg)
        .map(|t| {
            let p: Vec<C> = x.iter().zip(v).map(|(a, b)| a.clone() + b.clone() * int(t as i64)).collect();
            eval(f, &p)
        })
        .collect();
    // Newton basis C(t, k): t-coefficient (-1)^(k-1)/k, t²-coefficient (-1)^k H_{k-1}/k.
    let (mut d1, mut d2) = (C::zero(), C::zero());
    let mut harmonic = C::zero();
    for k in 1..=deg {
        for i in 0..diffs.len() - 1 {
            diffs[i] = diffs[i + 1].clone() - diffs[i].clone();
        }
        diffs.pop();
        let dk = diffs[0].clone();
        let sign = if k % 2 == 1 { 1 } else { -1 };
        d1 = d1 + dk.clone() * C::from_ratio(sign, k as i64);
        if k >= 2 {
            d2 = d2 + dk * harmonic.clone() * C::from_ratio(-2 * sign, k as i64);
        }
        harmonic = harmonic + C::from_ratio(1, k as i64);
    }
    (d1, d2)
}

/// Value, gradient and Hessian of a polynomial at one point.
pub struct Jet {
    pub value: C,
    pub grad: Vec<C>,
    pub hess: Vec<Vec<C>>,
}

/// Jet at `x`; mixed partials by polarization along `e_i + e_j`.
pub fn jet(f: &Poly, x: &[C]) -> Jet {
    let n = x.len();
    let deg = f.degree().unwrap_or(0) as usize;
    let unit = |i: usize| (0..n).map(|j| if i == j { C::one() } else { C::zero() }).collect::<Vec<_>>();
    let mut grad = Vec::with_capacity(n);
    let mut hess = vec![vec![C::zero(); n]; n];
    for i in 0..n {
        let (d1, d2) = line_derivatives(f, deg, x, &unit(i));
        grad.push(d1);
        hess[i][i] = d2;
    }
    for i in 0..n {
        for j in i + 1..n {
            let v: Vec<C> = (0..n).map(|k| if k == i || k == j { C::one() } else { C::zero() }).collect();
            let (_, d2) = line_derivatives(f, deg, x, &v);
            let h = (d2 - hess[i][i].clone() - hess[j][j].clone()) * C::from_ratio(1, 2);
            hess[i][j] = h.clone();
            hess[j][i] = h;
        }
    }
    Jet { value: eval(f, x), grad, hess }
}

impl Jet {
    /// `|∇f|² Δf − ∇fᵀ H ∇f` at the point.
    pub fn mean_curvature(&self) -> C {
        let n = self.grad.len();
        let mut norm = C::zero();
        let mut trace = C::zero();
        let mut quad = C::zero();
        for i in 0..n {
            norm = norm + self.grad[i].clone() * self.grad[i].clone();
            trace = trace + self.hess[i][i].clone();
            for j in 0..n {
                quad = quad + self.grad[i].clone() * self.hess[i][j].clone() * self.grad[j].clone();
            }
        }
        norm * trace - quad
    }

    pub fn laplacian(&self) -> C {
        (0..self.grad.len()).fold(C::zero(), |acc, i| acc + self.hess[i][i].clone())
    }

    pub fn trace_cube(&self) -> C {
        let n = self.grad.len();
        let mut total = C::zero();
        for i in 0..n {
            for j in 0..n {
                if self.hess[i][j].is_zero() {
                    continue;
                }
                for k in 0..n {
                    total = total + self.hess[i][j].clone() * self.hess[j][k].clone() * self.hess[k][i].clone();
                }
            }
        }
        total
    }
}

pub fn norm_sq(x: &[C]) -> C {
    x.iter().fold(C::zero(), |acc, v| acc + v.clone() * v.clone())
}

/// Hurwitz–Radon number by repeated halving.
pub fn radon(m: u64) -> u64 {
    let mut s = 0;
    let mut m = m;
    while m % 2 == 0 {
        m /= 2;
        s += 1;
    }
    let (a, b) = (s / 4, s % 4);
    8 * a + [1, 2, 4, 8][b as usize]
}

/// Every `(q, m)` with `2m + q + 1 = n` and `q ≤ ρ(m)`, by exhaustive search.
pub fn admissible(n: u64) -> Vec<(u64, u64)> {
    (1..n).filter_map(|q| (n > q + 1 && (n - q - 1) % 2 == 0).then(|| (q, (n - q - 1) / 2))).filter(|&(q, m)| m >= 1 && q <= radon(m)).collect()
}

/// `Σ z_i yᵀA_i y` from the matrices directly.
pub fn cubic_at(s: &CliffordSystem, y: &[C], z: &[C]) -> C {
    let mut total = C::zero();
    for (a, zi) in s.matrices.iter().zip(z) {
        let ay = a.apply(y);
        let quad = y.iter().zip(&ay).fold(C::zero(), |acc, (u, v)| acc + u.clone() * v.clone());
        total = total + zi.clone() * quad;
    }
    total
}

/// Hamilton's quaternion product written out by hand.
pub fn hamilton(a: &[i64], b: &[i64]) -> Vec<i64> {
    vec![
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use mincone::text::parse_poly_in;

    #[test]
    fn jet_of_a_small_cubic() {
        let f: Poly = parse_poly_in("x1^2*x2 + 3*x2^3", 2).unwrap();
        let j = jet(&f, &[int(2), int(-1)]);
        assert_eq!(j.value, int(-7));
        assert_eq!(j.grad, [int(-4), int(13)]);
        assert_eq!(j.hess, [[int(-2), int(4)], [int(4), int(-18)]]);
    }

    #[test]
    fn quintic_line_derivatives() {
        let f: Poly = parse_poly_in("x1^5", 1).unwrap();
        let (d1, d2) = line_derivatives(&f, 5, &[int(2)], &[int(1)]);
        assert_eq!((d1, d2), (int(80), int(160)));
    }

    #[test]
    fn radon_values() {
        assert_eq!([1, 2, 4, 8, 16, 128].map(radon), [1, 2, 4, 8, 9, 16]);
        assert_eq!(admissible(12), [(1, 5), (3, 4)]);
    }
}
