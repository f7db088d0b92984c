//! The normalized mean curvature operator and the invariants built on it.
//!
//! For a polynomial `f` on ℝⁿ,
//!
//! ```text
//! L(f) = |∇f|² Δf − Σ_{i,j} f_i f_j f_ij
//! ```
//!
//! The zero set of `f` is a minimal cone exactly when `f` divides `L(f)`; the
//! quotient is the weight `λ(f)`.

use std::fmt;
use std::time::{Duration, Instant};

use crate::field::Field;
use crate::polynomial::{Accumulator, Polynomial};
use crate::text::format_scalar;

/// First and second derivatives of a polynomial.
pub struct Derivatives<F> {
    pub gradient: Vec<Polynomial<F>>,
    /// Upper triangle of the Hessian, row-major: entry `(i, j)` with `i ≤ j`.
    hessian: Vec<Polynomial<F>>,
    n: usize,
}

impl<F: Field> Derivatives<F> {
    pub fn new(f: &Polynomial<F>) -> Self {
        let n = f.nvars();
        let gradient: Vec<_> = (0..n).map(|i| f.derivative(i)).collect();
        let mut hessian = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                hessian.push(gradient[i].derivative(j));
            }
        }
        Derivatives { gradient, hessian, n }
    }

    /// `∂²f/∂x_i∂x_j` (0-based indices).
    pub fn hessian(&self, i: usize, j: usize) -> &Polynomial<F> {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        // Row i of the packed triangle starts at Σ_{r<i} (n − r).
        let start = i * self.n - i * i.saturating_sub(1) / 2;
        &self.hessian[start + (j - i)]
    }
}

/// `Σ_i ∂²f/∂x_i²`.
pub fn laplacian<F: Field>(f: &Polynomial<F>) -> Polynomial<F> {
    let mut acc = Accumulator::new(f.nvars());
    for i in 0..f.nvars() {
        acc.add(&f.derivative(i).derivative(i));
    }
    acc.finish()
}

/// `Σ_i (∂f/∂x_i)²`.
pub fn gradient_norm_sq<F: Field>(f: &Polynomial<F>) -> Polynomial<F> {
    let one = F::one();
    let mut acc = Accumulator::new(f.nvars());
    for i in 0..f.nvars() {
        let g = f.derivative(i);
        acc.add_product(&g, &g, &one);
    }
    acc.finish()
}

/// The operator `L(f)`.
pub fn mean_curvature_operator<F: Field>(f: &Polynomial<F>) -> Polynomial<F> {
    mean_curvature_from(&Derivatives::new(f), f.nvars())
}

fn mean_curvature_from<F: Field>(d: &Derivatives<F>, n: usize) -> Polynomial<F> {
    let one = F::one();
    let mut lap = Accumulator::new(n);
    for i in 0..n {
        lap.add(d.hessian(i, i));
    }
    let lap = lap.finish();

    let mut out = Accumulator::new(n);
    if !lap.is_zero() {
        let mut grad_sq = Accumulator::new(n);
        for g in &d.gradient {
            grad_sq.add_product(g, g, &one);
        }
        out.add_product(&grad_sq.finish(), &lap, &one);
    }
    // Σ_i f_i · v_i with v_i = Σ_j f_ij f_j.
    let minus_one = -F::one();
    for i in 0..n {
        if d.gradient[i].is_zero() {
            continue;
        }
        let mut v = Accumulator::new(n);
        for j in 0..n {
            let h = d.hessian(i, j);
            if !h.is_zero() && !d.gradient[j].is_zero() {
                v.add_product(h, &d.gradient[j], &one);
            }
        }
        out.add_product(&d.gradient[i], &v.finish(), &minus_one);
    }
    out.finish()
}

/// `trace H³ = Σ_{i,j,k} f_ij f_jk f_ki`.
pub fn hessian_trace_cube<F: Field>(f: &Polynomial<F>) -> Polynomial<F> {
    trace_cube_from(&Derivatives::new(f), f.nvars())
}

fn trace_cube_from<F: Field>(d: &Derivatives<F>, n: usize) -> Polynomial<F> {
    let one = F::one();
    let two = F::from_integer(2);
    let mut out = Accumulator::new(n);
    for i in 0..n {
        for k in i..n {
            let hik = d.hessian(i, k);
            if hik.is_zero() {
                continue;
            }
            // (H²)_ik, symmetric in (i, k).
            let mut sq = Accumulator::new(n);
            for j in 0..n {
                let (a, b) = (d.hessian(i, j), d.hessian(j, k));
                if !a.is_zero() && !b.is_zero() {
                    sq.add_product(a, b, &one);
                }
            }
            let weight = if i == k { &one } else { &two };
            out.add_product(&sq.finish(), hik, weight);
        }
    }
    out.finish()
}

/// `τ(f) = (Σx_i²)·trace H³(f) / (3·L(f))` when that ratio is a constant.
///
/// Undefined (`None`) when `L(f) = 0` or the ratio is not constant.
pub fn tau_invariant<F: Field>(f: &Polynomial<F>) -> Option<F> {
    let d = Derivatives::new(f);
    let n = f.nvars();
    tau_from(&mean_curvature_from(&d, n), &trace_cube_from(&d, n))
}

fn tau_from<F: Field>(l: &Polynomial<F>, trace_cube: &Polynomial<F>) -> Option<F> {
    let (lm, lc) = l.leading_term()?;
    let numer = Polynomial::norm_squared(l.nvars()) * trace_cube.clone();
    let ratio = match numer.leading_term() {
        None => F::zero(),
        Some((nm, nc)) if nm == lm => nc.mul_ref(&lc.inverse()?),
        Some(_) => return None,
    };
    if !(numer - l.scale(&ratio)).is_zero() {
        return None;
    }
    Some(ratio.mul_ref(&F::from_ratio(1, 3)))
}

/// Outcome of the eigenfunction test for one polynomial.
#[derive(Clone, PartialEq)]
pub struct VerificationReport<F> {
    pub is_eigenfunction: bool,
    /// `λ(f) = L(f)/f` when the division is exact.
    pub weight: Option<Polynomial<F>>,
    pub is_radial: bool,
    /// The `c` with `λ(f) = c·Σx_i²` when radial.
    pub radial_constant: Option<F>,
    pub tau: Option<F>,
    pub is_harmonic: bool,
    /// Leading term of the remainder that blocked the division.
    pub witness: Option<String>,
    pub elapsed: Duration,
}

/// Decides whether `f` divides `L(f)` and collects the derived invariants.
pub fn verify_eigenfunction<F: Field>(f: &Polynomial<F>) -> VerificationReport<F> {
    let start = Instant::now();
    let n = f.nvars();
    let d = Derivatives::new(f);
    let l = mean_curvature_from(&d, n);
    let mut lap = Accumulator::new(n);
    for i in 0..n {
        lap.add(d.hessian(i, i));
    }
    let is_harmonic = lap.finish().is_zero();

    let (weight, witness) = match l.exact_divide(f) {
        Ok(w) => (Some(w), None),
        Err(e) => (None, Some(witness_text(&e))),
    };
    let (is_radial, radial_constant) = match &weight {
        Some(w) => radiality(w),
        None => (false, None),
    };
    let tau = if l.is_zero() { None } else { tau_from(&l, &trace_cube_from(&d, n)) };
    VerificationReport {
        is_eigenfunction: weight.is_some(),
        weight,
        is_radial,
        radial_constant,
        tau,
        is_harmonic,
        witness,
        elapsed: start.elapsed(),
    }
}

fn witness_text(e: &crate::error::PolyError) -> String {
    match e {
        crate::error::PolyError::NotDivisible { witness, .. } => witness.clone(),
        other => other.to_string(),
    }
}

/// Radial test: `c` is the coefficient of `x1²`; radial iff `λ − c·Σx_i²` vanishes.
pub fn radiality<F: Field>(weight: &Polynomial<F>) -> (bool, Option<F>) {
    let n = weight.nvars();
    if n == 0 {
        return (false, None);
    }
    let x1sq = crate::monomial::Monomial::var(0).mul(&crate::monomial::Monomial::var(0));
    let c = weight.coefficient(&x1sq);
    let diff = weight - &Polynomial::norm_squared(n).scale(&c);
    if diff.is_zero() {
        (true, Some(c))
    } else {
        (false, None)
    }
}

impl<F: Field> VerificationReport<F> {
    /// The report as ordered `(key, value)` pairs.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let opt = |v: &Option<F>| v.as_ref().map_or_else(|| "undefined".to_string(), format_scalar);
        vec![
            ("eigenfunction", self.is_eigenfunction.to_string()),
            ("weight", self.weight.as_ref().map_or_else(|| "none".to_string(), |w| w.to_string())),
            ("radial", self.is_radial.to_string()),
            ("radial_constant", opt(&self.radial_constant)),
            ("tau", opt(&self.tau)),
            ("harmonic", self.is_harmonic.to_string()),
            ("witness", self.witness.clone().unwrap_or_else(|| "none".to_string())),
            ("elapsed_ms", self.elapsed.as_millis().to_string()),
        ]
    }
}

impl<F: Field> fmt::Debug for VerificationReport<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.fields()).finish()
    }
}

impl<F: Field> fmt::Display for VerificationReport<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.fields() {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}
