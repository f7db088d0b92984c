//! Constructors for the concrete cone families and the irreducibility
//! certificate for Clifford cubics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::classify::delta;
use crate::clifford::{direct_sum, system_invariants, verify_system, CliffordError, CliffordSystem, Provenance};
use crate::coefficient::Coefficient;
use crate::error::PolyError;
use crate::field::Field;
use crate::hypercomplex::CdElement;
use crate::matrix::Matrix;
use crate::monomial::Monomial;
use crate::polynomial::{Accumulator, Polynomial};
use crate::text::parse_poly_in;
use crate::Poly;

/// Largest `m` accepted by [`determinant_cone`].
pub const MAX_DET_M: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConeError {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid Clifford system: {0}")]
    InvalidSystem(String),
    #[error("non-canonical coordinates: {0}")]
    NonCanonical(String),
    #[error("malformed cone header: {0}")]
    Header(String),
}

/// Which family a cone polynomial belongs to, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Clifford { q: usize, m: usize, k_plus: usize, k_minus: usize },
    Quadric { p: usize, q: usize },
    Determinant { m: usize },
    Cartan { d: usize },
    Hsiang,
    Reducible,
    Fkm { q: usize, m: usize, k_plus: usize, k_minus: usize },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Clifford { .. } => "clifford",
            Family::Quadric { .. } => "quadric",
            Family::Determinant { .. } => "determinant",
            Family::Cartan { .. } => "cartan",
            Family::Hsiang => "hsiang",
            Family::Reducible => "reducible-example",
            Family::Fkm { .. } => "fkm-quartic",
        }
    }

    /// Ambient dimension dictated by the family's parameters.
    pub fn dimension(&self) -> usize {
        match *self {
            Family::Clifford { q, m, .. } => 2 * m + q + 1,
            Family::Quadric { p, q } => p + q,
            Family::Determinant { m } => m * m,
            Family::Cartan { d } => 3 * d + 2,
            Family::Hsiang => 9,
            Family::Reducible => 6,
            Family::Fkm { m, .. } => 2 * m,
        }
    }

    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            Family::Clifford { q, m, k_plus, k_minus } | Family::Fkm { q, m, k_plus, k_minus } => {
                vec![("q", q), ("m", m), ("kplus", k_plus), ("kminus", k_minus)]
            }
            Family::Quadric { p, q } => vec![("p", p), ("q", q)],
            Family::Determinant { m } => vec![("m", m)],
            Family::Cartan { d } => vec![("d", d)],
            Family::Hsiang | Family::Reducible => Vec::new(),
        }
    }
}

/// A cone polynomial together with the family it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeSpec {
    pub family: Family,
    pub n: usize,
    pub polynomial: Poly,
}

impl ConeSpec {
    fn new(family: Family, polynomial: Poly) -> Self {
        debug_assert_eq!(family.dimension(), polynomial.nvars());
        ConeSpec { family, n: polynomial.nvars(), polynomial }
    }

    /// `cone family=<tag> n=<n> params=<k=v,...>`.
    pub fn header(&self) -> String {
        let params = self.family.params();
        let params = if params.is_empty() {
            "-".to_string()
        } else {
            params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
        };
        format!("cone family={} n={} params={}", self.family.tag(), self.n, params)
    }
}

impl fmt::Display for ConeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.header())?;
        writeln!(f, "{}", self.polynomial)
    }
}

fn parse_header(line: &str) -> Result<(Family, usize), ConeError> {
    let bad = |msg: &str| ConeError::Header(msg.to_string());
    let mut words = line.split_whitespace();
    if words.next() != Some("cone") {
        return Err(bad("expected 'cone'"));
    }
    let mut tag = None;
    let mut n = None;
    let mut params = Vec::new();
    for w in words {
        let (k, v) = w.split_once('=').ok_or_else(|| bad(w))?;
        match k {
            "family" => tag = Some(v.to_string()),
            "n" => n = Some(v.parse::<usize>().map_err(|_| bad(w))?),
            "params" if v == "-" => {}
            "params" => {
                for kv in v.split(',') {
                    let (pk, pv) = kv.split_once('=').ok_or_else(|| bad(kv))?;
                    params.push((pk.to_string(), pv.parse::<usize>().map_err(|_| bad(kv))?));
                }
            }
            _ => return Err(bad(w)),
        }
    }
    let get = |name: &str| {
        params.iter().find(|(k, _)| k == name).map(|(_, v)| *v).ok_or_else(|| bad(&format!("missing parameter {name}")))
    };
    let tag = tag.ok_or_else(|| bad("missing family"))?;
    let family = match tag.as_str() {
        "clifford" => Family::Clifford { q: get("q")?, m: get("m")?, k_plus: get("kplus")?, k_minus: get("kminus")? },
        "fkm-quartic" => Family::Fkm { q: get("q")?, m: get("m")?, k_plus: get("kplus")?, k_minus: get("kminus")? },
        "quadric" => Family::Quadric { p: get("p")?, q: get("q")? },
        "determinant" => Family::Determinant { m: get("m")? },
        "cartan" => Family::Cartan { d: get("d")? },
        "hsiang" => Family::Hsiang,
        "reducible-example" => Family::Reducible,
        other => return Err(bad(&format!("unknown family {other}"))),
    };
    let n = n.ok_or_else(|| bad("missing n"))?;
    if n != family.dimension() {
        return Err(bad(&format!("n={n} does not match the family dimension {}", family.dimension())));
    }
    Ok((family, n))
}

/// Input accepted by `verify`: an optional cone header followed by a polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeInput {
    pub family: Option<Family>,
    pub polynomial: Poly,
}

impl FromStr for ConeInput {
    type Err = ConeError;

    fn from_str(text: &str) -> Result<Self, ConeError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty()).peekable();
        let header = match lines.peek() {
            Some(l) if l.starts_with("cone") => Some(parse_header(lines.next().unwrap())?),
            _ => None,
        };
        let body: Vec<&str> = lines.collect();
        let body = body.join(" ");
        let polynomial = match header {
            Some((_, n)) => parse_poly_in(&body, n)?,
            None => crate::text::parse_poly(&body)?,
        };
        Ok(ConeInput { family: header.map(|(f, _)| f), polynomial })
    }
}

/// `Φ(y, z) = Σ_i z_i · yᵀA_i y` with `y = (x1..x_{2m})`, `z = (x_{2m+1}..x_{2m+q+1})`.
pub fn clifford_polynomial(s: &CliffordSystem) -> Poly {
    let size = 2 * s.m;
    let n = size + s.q + 1;
    let mut acc = Accumulator::new(n);
    for (i, a) in s.matrices.iter().enumerate() {
        let z = Monomial::var(size + i);
        for r in 0..size {
            for c in 0..size {
                let v = a.get(r, c);
                if !v.is_zero() {
                    acc.add_term(Monomial::var(r).mul(&Monomial::var(c)).mul(&z), v.clone());
                }
            }
        }
    }
    acc.finish()
}

fn checked_system(s: &CliffordSystem) -> Result<(), ConeError> {
    let check = verify_system(s);
    match check.failure {
        None => Ok(()),
        Some(msg) => Err(ConeError::InvalidSystem(msg)),
    }
}

/// Sign split `(k₊, k₋)` of a valid system; recovered from `|trace ω| = 2δ(q)|k₊ − k₋|`
/// when the provenance does not record it.
fn sum_counts(s: &CliffordSystem) -> (usize, usize) {
    if let Provenance::DirectSum { k_plus, k_minus } = s.provenance {
        return (k_plus, k_minus);
    }
    let h = delta(s.q as u64) as usize;
    let k = s.m / h;
    match system_invariants(s).omega_trace_abs.and_then(|t| t.to_rational()) {
        Some(t) if t.is_integer() => {
            let diff = (t.to_integer() / BigInt::from(2 * h)).to_usize().unwrap_or(0).min(k);
            ((k + diff) / 2, (k - diff) / 2)
        }
        _ => (k, 0),
    }
}

/// The Clifford cubic of a valid system.
pub fn clifford_cubic(s: &CliffordSystem) -> Result<ConeSpec, ConeError> {
    checked_system(s)?;
    let (k_plus, k_minus) = sum_counts(s);
    Ok(ConeSpec::new(Family::Clifford { q: s.q, m: s.m, k_plus, k_minus }, clifford_polynomial(s)))
}

/// Clifford cubic of `direct_sum(q, k_plus, k_minus)`, with `m` given as a check.
pub fn clifford_cone(q: usize, m: usize, k_plus: usize, k_minus: usize) -> Result<ConeSpec, ConeError> {
    let s = direct_sum(q, k_plus, k_minus)?;
    if s.m != m {
        return Err(ConeError::InvalidParameter(format!(
            "m={m} does not match (k_plus + k_minus)·δ(q) = {}",
            s.m
        )));
    }
    clifford_cubic(&s)
}

/// `(q−1)·Σ_{i≤p} x_i² − (p−1)·Σ_{i>p} x_i²` on ℝ^{p+q}.
pub fn quadric_cone(p: usize, q: usize) -> Result<ConeSpec, ConeError> {
    if p < 2 || q < 2 {
        return Err(ConeError::InvalidParameter(format!("quadric needs p, q >= 2 (got p={p}, q={q})")));
    }
    let n = p + q;
    let a = Coefficient::from((q - 1) as i64);
    let b = Coefficient::from(-((p - 1) as i64));
    let f = Polynomial::sum_of_squares(n, 0..p).scale(&a) + Polynomial::sum_of_squares(n, p..n).scale(&b);
    Ok(ConeSpec::new(Family::Quadric { p, q }, f))
}

/// Permutations of `0..k` paired with their signs, in lexicographic order.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if rest.is_empty() {
            out.push((prefix.clone(), sign));
            return;
        }
        for idx in 0..rest.len() {
            let v = rest.remove(idx);
            prefix.push(v);
            // Moving the idx-th remaining element to the front costs idx transpositions.
            go(prefix, rest, if idx % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            rest.insert(idx, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..k).collect(), 1, &mut out);
    out
}

/// Determinant of the submatrix of the symbolic `m × m` matrix on the given
/// rows and columns; variable `x_{(i−1)m+j}` stands for entry `(i, j)`.
fn symbolic_minor(m: usize, rows: &[usize], cols: &[usize]) -> Poly {
    let n = m * m;
    let mut acc = Accumulator::new(n);
    for (perm, sign) in signed_permutations(rows.len()) {
        let mono = rows.iter().zip(&perm).fold(Monomial::one(), |acc, (&r, &p)| acc.mul(&Monomial::var(r * m + cols[p])));
        acc.add_term(mono, Coefficient::from(sign));
    }
    acc.finish()
}

fn check_det_m(m: usize) -> Result<(), ConeError> {
    if !(2..=MAX_DET_M).contains(&m) {
        return Err(ConeError::InvalidParameter(format!("determinant cone needs 2 <= m <= {MAX_DET_M} (got {m})")));
    }
    Ok(())
}

/// `Ψ_m = det(x_ij)` on ℝ^{m²}.
pub fn determinant_cone(m: usize) -> Result<ConeSpec, ConeError> {
    check_det_m(m)?;
    let all: Vec<usize> = (0..m).collect();
    Ok(ConeSpec::new(Family::Determinant { m }, symbolic_minor(m, &all, &all)))
}

/// `−½ · Σ (det X^{ik|jl})²` over ordered `(i, k)`, `(j, l)` with `i ≠ k`,
/// `j ≠ l`, where `X^{ik|jl}` deletes rows `i, k` and columns `j, l`.
pub fn det_weight_formula(m: usize) -> Result<Poly, ConeError> {
    check_det_m(m)?;
    let n = m * m;
    let mut acc = Accumulator::new(n);
    // Each unordered pair of rows and of columns occurs 2·2 times in the ordered sum.
    let scale = Coefficient::from(-2);
    for i in 0..m {
        for k in i + 1..m {
            let rows: Vec<usize> = (0..m).filter(|&r| r != i && r != k).collect();
            for j in 0..m {
                for l in j + 1..m {
                    let cols: Vec<usize> = (0..m).filter(|&c| c != j && c != l).collect();
                    let minor = symbolic_minor(m, &rows, &cols);
                    acc.add_product(&minor, &minor, &scale);
                }
            }
        }
    }
    Ok(acc.finish())
}

/// Cartan's isoparametric cubic over the division algebra of dimension `d`.
///
/// Variables: `X_0 = (x1..x_d)`, `X_1`, `X_2` in consecutive blocks, then
/// `x_{n−1}`, `x_n` with `n = 3d + 2`.
pub fn cartan_cubic(d: usize) -> Result<ConeSpec, ConeError> {
    if !matches!(d, 1 | 2 | 4 | 8) {
        return Err(ConeError::InvalidParameter(format!("cartan cubic needs d in {{1, 2, 4, 8}} (got {d})")));
    }
    let n = 3 * d + 2;
    let cd = |k: usize| CdElement::symbolic(n, k * d, d).expect("valid dimension");
    let (x0, x1, x2) = (cd(0), cd(1), cd(2));
    let u: Poly = Polynomial::variable(n, 3 * d);
    let w: Poly = Polynomial::variable(n, 3 * d + 1);
    let (n0, n1, n2) = (x0.norm(), x1.norm(), x2.norm());
    let c = |num: i64, den: i64| Coefficient::from_ratio(num, den);
    let s3 = Coefficient::sqrt3();

    let mut acc = Accumulator::new(n);
    acc.add(&w.pow(3));
    acc.add_product(&w, &u.square(), &c(-3, 1));
    let mixed = &(&n0 + &n1) - &n2.scale(&c(2, 1));
    acc.add_product(&w, &mixed, &c(3, 2));
    acc.add_product(&u, &(&n0 - &n1), &s3.mul_ref(&c(3, 2)));
    // (X0X1)X2 plus its conjugate is twice the real part.
    let triple = x0.multiply(&x1).and_then(|p| p.multiply(&x2)).expect("matching dimensions");
    acc.add_scaled(triple.real(), &s3.mul_ref(&c(3, 1)));
    Ok(ConeSpec::new(Family::Cartan { d }, acc.finish()))
}

/// Orthonormal basis of trace-free symmetric 4×4 matrices for `⟨A,B⟩ = tr(AB)`.
pub fn hsiang_basis() -> Vec<Matrix<Coefficient>> {
    let half_s2 = Coefficient::sqrt2().mul_ref(&Coefficient::from_ratio(1, 2));
    let mut basis = Vec::with_capacity(9);
    for i in 0..4 {
        for j in i + 1..4 {
            let mut e = Matrix::zeros(4, 4);
            e.set(i, j, half_s2.clone());
            e.set(j, i, half_s2.clone());
            basis.push(e);
        }
    }
    let diag = |v: [i64; 4], s: Coefficient| {
        let mut e = Matrix::zeros(4, 4);
        for (i, x) in v.into_iter().enumerate() {
            e.set(i, i, s.mul_ref(&Coefficient::from(x)));
        }
        e
    };
    basis.push(diag([1, -1, 0, 0], half_s2.clone()));
    basis.push(diag([1, 1, -2, 0], Coefficient::sqrt6().mul_ref(&Coefficient::from_ratio(1, 6))));
    basis.push(diag([1, 1, 1, -3], Coefficient::sqrt3().mul_ref(&Coefficient::from_ratio(1, 6))));
    basis
}

/// Determinant of a square matrix of polynomials by permutation expansion.
fn poly_det(entries: &[Vec<Poly>], n: usize) -> Poly {
    let k = entries.len();
    let mut acc = Accumulator::new(n);
    for (perm, sign) in signed_permutations(k) {
        let prod = (0..k).fold(Polynomial::one(n), |p, r| &p * &entries[r][perm[r]]);
        acc.add_scaled(&prod, &Coefficient::from(sign));
    }
    acc.finish()
}

/// Hsiang's cubic `b₃`: the coefficient of `t` in `det(Y − tI)`, with `Y`
/// written in the orthonormal coordinates of [`hsiang_basis`].
pub fn hsiang_cubic() -> ConeSpec {
    let n = 10; // x1..x9 and t
    let basis = hsiang_basis();
    let t: Poly = Polynomial::variable(n, 9);
    let entries: Vec<Vec<Poly>> = (0..4)
        .map(|r| {
            (0..4)
                .map(|c| {
                    let mut acc = Accumulator::new(n);
                    for (k, b) in basis.iter().enumerate() {
                        let v = b.get(r, c);
                        if !v.is_zero() {
                            acc.add_term(Monomial::var(k), v.clone());
                        }
                    }
                    let y = acc.finish();
                    if r == c {
                        &y - &t
                    } else {
                        y
                    }
                })
                .collect()
        })
        .collect();
    let b3 = poly_det(&entries, n).coefficient_in(9, 1).with_nvars(9).expect("t eliminated");
    ConeSpec::new(Family::Hsiang, b3)
}

/// `x6·(2x1² + 2x2² − x3² − x4² − x5²)`.
pub fn reducible_example() -> ConeSpec {
    let f = parse_poly_in("2*x1^2*x6 + 2*x2^2*x6 - x3^2*x6 - x4^2*x6 - x5^2*x6", 6).expect("fixed polynomial");
    ConeSpec::new(Family::Reducible, f)
}

/// `F(y) = |y|⁴ − 2·Σ_i (yᵀA_i y)²` on ℝ^{2m}.
pub fn fkm_quartic(s: &CliffordSystem) -> Result<ConeSpec, ConeError> {
    checked_system(s)?;
    let n = 2 * s.m;
    let norm: Poly = Polynomial::norm_squared(n);
    let mut acc = Accumulator::new(n);
    acc.add(&norm.square());
    let minus_two = Coefficient::from(-2);
    for a in &s.matrices {
        let mut form = Accumulator::new(n);
        for r in 0..n {
            for c in 0..n {
                let v = a.get(r, c);
                if !v.is_zero() {
                    form.add_term(Monomial::var(r).mul(&Monomial::var(c)), v.clone());
                }
            }
        }
        let form = form.finish();
        acc.add_product(&form, &form, &minus_two);
    }
    let (k_plus, k_minus) = sum_counts(s);
    Ok(ConeSpec::new(Family::Fkm { q: s.q, m: s.m, k_plus, k_minus }, acc.finish()))
}

/// Evidence that a Clifford cubic does not factor.
#[derive(Clone, Debug, PartialEq)]
pub struct IrreducibilityCertificate {
    /// The cubic with every variable except `u₁, v₁, z₀, z₁` set to zero.
    pub specialization: Poly,
    /// Discriminant of the specialization as a quadratic in `u₁`.
    pub discriminant: Poly,
}

/// Specializes `Φ` to `g = z₀(u₁² − v₁²) + 2z₁u₁v₁` and certifies that the
/// `u₁`-discriminant of `g` is not a square.
///
/// Requires the first summand in normal form, `A_0(u, v) = (u, −v)` and
/// `A_1(u, v) = (v, u)` on `(u₁, v₁)`; otherwise the specialization has the
/// wrong shape and the system is rejected as non-canonical.
pub fn irreducibility_certificate(s: &CliffordSystem) -> Result<IrreducibilityCertificate, ConeError> {
    checked_system(s)?;
    let m = s.m;
    let n = 2 * m + s.q + 1;
    let (u, v, z0, z1) = (0, m, 2 * m, 2 * m + 1);
    let keep = [u, v, z0, z1];
    let phi = clifford_polynomial(s);
    let specialization = Polynomial::from_terms(
        n,
        phi.terms()
            .iter()
            .filter(|(mono, _)| (0..n).all(|i| keep.contains(&i) || mono.exponent(i) == 0))
            .cloned(),
    );
    let var = |i| Polynomial::<Coefficient>::variable(n, i);
    let g = &(&var(z0) * &(&var(u).square() - &var(v).square())) + &(&var(z1) * &(&var(u) * &var(v))).scale(&Coefficient::from(2));
    if specialization != g && specialization != -&g {
        return Err(ConeError::NonCanonical("specialization does not have the expected shape".into()));
    }
    let a = specialization.coefficient_in(u, 2);
    let b = specialization.coefficient_in(u, 1);
    let c = specialization.coefficient_in(u, 0);
    let discriminant = &b.square() - &(&a * &c).scale(&Coefficient::from(4));
    match discriminant.sqrt() {
        Err(PolyError::NotSquare) => Ok(IrreducibilityCertificate { specialization, discriminant }),
        Ok(_) => Err(ConeError::InvalidSystem("discriminant is a perfect square".into())),
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{conjugate_system, givens_orthogonal, irreducible_system, rational_orthogonal};
    use crate::diffgeom::{laplacian, verify_eigenfunction};

    fn p(s: &str, n: usize) -> Poly {
        parse_poly_in(s, n).unwrap()
    }

    #[test]
    fn lawson_from_the_first_system() {
        let cone = clifford_cubic(&irreducible_system(1).unwrap()).unwrap();
        assert_eq!(cone.polynomial, p("x3*x1^2 - x3*x2^2 + 2*x4*x1*x2", 4));
        assert_eq!(cone.header(), "cone family=clifford n=4 params=q=1,m=1,kplus=1,kminus=0");
    }

    #[test]
    fn first_family_in_general_dimension() {
        let m = 3;
        let cone = clifford_cubic(&direct_sum(1, m, 0).unwrap()).unwrap();
        let expected = p("x7*x1^2 + x7*x2^2 + x7*x3^2 - x7*x4^2 - x7*x5^2 - x7*x6^2 + 2*x8*x1*x4 + 2*x8*x2*x5 + 2*x8*x3*x6", 8);
        assert_eq!(cone.polynomial, expected);
    }

    #[test]
    fn quadric_examples() {
        assert_eq!(quadric_cone(2, 2).unwrap().polynomial, p("x1^2 + x2^2 - x3^2 - x4^2", 4));
        assert_eq!(quadric_cone(2, 3).unwrap().polynomial, p("2*x1^2 + 2*x2^2 - x3^2 - x4^2 - x5^2", 5));
        assert!(quadric_cone(1, 3).is_err());
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant_cone(2).unwrap().polynomial, p("x1*x4 - x2*x3", 4));
        assert_eq!(det_weight_formula(2).unwrap(), p("-2", 4));
        let psi3 = determinant_cone(3).unwrap().polynomial;
        assert_eq!(psi3.len(), 6);
        assert!(psi3.terms().iter().all(|(m, _)| (0..9).all(|i| m.exponent(i) <= 1)));
        assert!(determinant_cone(7).is_err());
    }

    #[test]
    fn cartan_d1_matches_explicit_formula() {
        let f = cartan_cubic(1).unwrap().polynomial;
        let expected = p(
            "x5^3 - 3*x5*x4^2 + 3/2*x5*x1^2 + 3/2*x5*x2^2 - 3*x5*x3^2 + 3/2*s3*x4*x1^2 - 3/2*s3*x4*x2^2 + 3*s3*x1*x2*x3",
            5,
        );
        assert_eq!(f, expected);
        assert!(cartan_cubic(3).is_err());
    }

    #[test]
    fn hsiang_basis_is_orthonormal() {
        let basis = hsiang_basis();
        for (i, a) in basis.iter().enumerate() {
            assert!(a.is_symmetric());
            assert!(a.trace().is_zero());
            for (j, b) in basis.iter().enumerate() {
                let ip = a.matmul(b).trace();
                assert_eq!(ip, Coefficient::from(i64::from(i == j)), "({i},{j})");
            }
        }
    }

    #[test]
    fn hsiang_is_harmonic_cubic() {
        let b3 = hsiang_cubic().polynomial;
        assert_eq!(b3.degree(), Some(3));
        assert!(b3.is_homogeneous());
        assert!(laplacian(&b3).is_zero());
    }

    #[test]
    fn reducible_is_not_harmonic() {
        let f = reducible_example().polynomial;
        assert_eq!(laplacian(&f), p("2*x6", 6));
    }

    #[test]
    fn fkm_for_the_first_system() {
        let f = fkm_quartic(&irreducible_system(1).unwrap()).unwrap().polynomial;
        assert_eq!(f, p("-x1^4 - 2*x1^2*x2^2 - x2^4", 2));
        let g = fkm_quartic(&irreducible_system(3).unwrap()).unwrap().polynomial;
        assert_eq!(g.degree(), Some(4));
        assert_eq!(g.nvars(), 8);
        let flip = Matrix::identity(8).scale(&Coefficient::from(-1));
        assert_eq!(g.substitute_linear(&flip).unwrap(), g);
    }

    #[test]
    fn certificate_for_canonical_systems() {
        for s in [irreducible_system(1).unwrap(), irreducible_system(5).unwrap(), direct_sum(1, 2, 0).unwrap()] {
            let cert = irreducibility_certificate(&s).unwrap();
            let n = cert.discriminant.nvars();
            let m = s.m;
            let var = |i| Polynomial::<Coefficient>::variable(n, i);
            let expected = (&var(m).square() * &(&var(2 * m).square() + &var(2 * m + 1).square())).scale(&Coefficient::from(4));
            assert_eq!(cert.discriminant, expected);
        }
    }

    #[test]
    fn certificate_rejects_conjugated_systems() {
        let s = irreducible_system(2).unwrap();
        let b = conjugate_system(&s, &rational_orthogonal(5, 4), &rational_orthogonal(6, 3)).unwrap();
        assert!(matches!(irreducibility_certificate(&b), Err(ConeError::NonCanonical(_))));
    }

    #[test]
    fn headers_round_trip() {
        let cone = quadric_cone(2, 3).unwrap();
        let parsed: ConeInput = cone.to_string().parse().unwrap();
        assert_eq!(parsed.family, Some(cone.family));
        assert_eq!(parsed.polynomial, cone.polynomial);
        let bare: ConeInput = "x1*x4 - x2*x3".parse().unwrap();
        assert_eq!(bare.family, None);
        assert_eq!(bare.polynomial.nvars(), 4);
        assert!("cone family=quadric n=6 params=p=2,q=3\nx1".parse::<ConeInput>().is_err());
    }

    #[test]
    fn reducible_weight_via_constructor() {
        let r = verify_eigenfunction(&reducible_example().polynomial);
        assert!(r.is_eigenfunction && !r.is_radial);
    }

    #[test]
    fn sign_split_recovered_after_conjugation() {
        let s = direct_sum(4, 1, 1).unwrap();
        let a = givens_orthogonal::<Coefficient>(5, 16);
        let b = conjugate_system(&s, &a, &Matrix::identity(5)).unwrap();
        let spec = clifford_cubic(&b).unwrap();
        assert_eq!(spec.header(), "cone family=clifford n=21 params=q=4,m=8,kplus=1,kminus=1");
    }
}
