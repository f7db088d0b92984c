//! Symmetric Clifford systems and the Hurwitz–Radon families they are built from.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::delta;
use crate::coefficient::Coefficient;
use crate::field::Field;
use crate::hypercomplex::cd_mul;
use crate::matrix::Matrix;
use crate::text::{format_scalar, parse_scalar};

/// Largest matrix size the constructors will build.
pub const MAX_HR_DIM: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("construction would need matrices of size {0}, above the limit of {MAX_HR_DIM}")]
    ResourceGuard(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not orthogonal")]
    NotOrthogonal(&'static str),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// `k` anticommuting skew-symmetric integer matrices squaring to `−I`.
#[derive(Clone, Debug, PartialEq)]
pub struct HrFamily {
    pub k: usize,
    pub dim: usize,
    pub matrices: Vec<Matrix<i64>>,
}

/// Matrix size used by [`hr_family`]: `δ(k + 1)`.
pub fn hr_dimension(k: usize) -> u64 {
    delta(k as u64 + 1)
}

fn guard(dim: u64) -> Result<usize, CliffordError> {
    if dim > MAX_HR_DIM as u64 {
        Err(CliffordError::ResourceGuard(dim))
    } else {
        Ok(dim as usize)
    }
}

/// Left multiplication by `e_i` in the Cayley–Dickson algebra of dimension `d`.
fn left_multiplication(d: usize, i: usize) -> Matrix<i64> {
    let unit = |j: usize| (0..d).map(|t| i64::from(t == j)).collect::<Vec<_>>();
    let ei = unit(i);
    let mut out = Matrix::zeros(d, d);
    for j in 0..d {
        for (r, v) in cd_mul(&ei, &unit(j)).into_iter().enumerate() {
            out.set(r, j, v);
        }
    }
    out
}

/// Canonical Hurwitz–Radon family with `k` generators on `ℝ^{δ(k+1)}`.
pub fn hr_family(k: usize) -> Result<HrFamily, CliffordError> {
    let dim = guard(hr_dimension(k))?;
    let matrices = match k {
        0 => Vec::new(),
        1..=7 => (1..=k).map(|i| left_multiplication(dim, i)).collect(),
        8 => {
            let id = Matrix::<i64>::identity(8);
            let zero = Matrix::<i64>::zeros(8, 8);
            let mut out: Vec<_> = (1..=7)
                .map(|i| {
                    let l = left_multiplication(8, i);
                    blocks(&zero, &l, &l, &zero)
                })
                .collect();
            out.push(blocks(&zero, &id, &id.neg(), &zero));
            out
        }
        _ => {
            let base = hr_family(8)?;
            let tail = hr_family(k - 8)?;
            let omega = base.matrices.iter().skip(1).fold(base.matrices[0].clone(), |acc, f| acc.matmul(f));
            let it = Matrix::<i64>::identity(tail.dim);
            let mut out: Vec<_> = base.matrices.iter().map(|f| it.kron(f)).collect();
            out.extend(tail.matrices.iter().map(|e| e.kron(&omega)));
            out
        }
    };
    debug_assert!(matrices.iter().all(|m| m.rows() == dim));
    Ok(HrFamily { k, dim, matrices })
}

fn blocks<T: crate::matrix::Ring>(a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>, d: &Matrix<T>) -> Matrix<T> {
    let h = a.rows();
    Matrix::from_fn(2 * h, 2 * h, |i, j| match (i < h, j < h) {
        (true, true) => a.get(i, j).clone(),
        (true, false) => b.get(i, j - h).clone(),
        (false, true) => c.get(i - h, j).clone(),
        (false, false) => d.get(i - h, j - h).clone(),
    })
}

impl HrFamily {
    /// First violated defining relation, if any.
    pub fn check(&self) -> Result<(), String> {
        let id = Matrix::<i64>::identity(self.dim);
        for (i, e) in self.matrices.iter().enumerate() {
            if e.entries().iter().any(|v| v.abs() > 1) {
                return Err(format!("E_{} has entries outside {{-1,0,1}}", i + 1));
            }
            if e.transpose() != e.neg() {
                return Err(format!("E_{} is not skew-symmetric", i + 1));
            }
            for (j, f) in self.matrices.iter().enumerate().skip(i) {
                let anti = e.matmul(f).add(&f.matmul(e));
                let expected = if i == j { id.scale(&-2) } else { Matrix::zeros(self.dim, self.dim) };
                if anti != expected {
                    return Err(format!("relation ({}, {})", i + 1, j + 1));
                }
            }
        }
        Ok(())
    }
}

/// How a system was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    CanonicalIrreducible,
    DirectSum { k_plus: usize, k_minus: usize },
    Conjugated,
    /// Read from text.
    Input,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::CanonicalIrreducible => f.write_str("canonical-irreducible"),
            Provenance::DirectSum { k_plus, k_minus } => write!(f, "direct-sum({k_plus},{k_minus})"),
            Provenance::Conjugated => f.write_str("conjugated"),
            Provenance::Input => f.write_str("input"),
        }
    }
}

/// Symmetric `2m × 2m` matrices `A_0..A_q` with `A_iA_j + A_jA_i = 2δ_ij I`.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordSystem {
    pub q: usize,
    pub m: usize,
    pub matrices: Vec<Matrix<Coefficient>>,
    pub provenance: Provenance,
}

fn to_coefficients(m: &Matrix<i64>) -> Matrix<Coefficient> {
    m.map(|&v| Coefficient::from(v))
}

/// The canonical irreducible system with `q + 1` generators on `ℝ^{2δ(q)}`.
pub fn irreducible_system(q: usize) -> Result<CliffordSystem, CliffordError> {
    if q == 0 {
        return Err(CliffordError::InvalidParameter("q must be at least 1".into()));
    }
    let family = hr_family(q - 1)?;
    let m = family.dim;
    let id = Matrix::<i64>::identity(m);
    let zero = Matrix::<i64>::zeros(m, m);
    let mut matrices = vec![blocks(&id, &zero, &zero, &id.neg()), blocks(&zero, &id, &id, &zero)];
    matrices.extend(family.matrices.iter().map(|e| blocks(&zero, e, &e.neg(), &zero)));
    Ok(CliffordSystem {
        q,
        m,
        matrices: matrices.iter().map(to_coefficients).collect(),
        provenance: Provenance::CanonicalIrreducible,
    })
}

/// `k_plus` copies of the irreducible system followed by `k_minus` copies
/// with every generator negated.
///
/// Block `b` places its first half at coordinates `b·h..(b+1)·h` and its
/// second half at `m + b·h..m + (b+1)·h` (with `h = δ(q)`), so that `A_0` and
/// `A_1` keep the form `diag(I, −I)` and `[[0, I], [I, 0]]`.
pub fn direct_sum(q: usize, k_plus: usize, k_minus: usize) -> Result<CliffordSystem, CliffordError> {
    let k = k_plus + k_minus;
    if k == 0 {
        return Err(CliffordError::InvalidParameter("k_plus + k_minus must be at least 1".into()));
    }
    if q == 0 {
        return Err(CliffordError::InvalidParameter("q must be at least 1".into()));
    }
    let h = hr_dimension(q - 1);
    guard(h.saturating_mul(k as u64))?;
    let irr = irreducible_system(q)?;
    let h = irr.m;
    let m = k * h;
    let place = |b: usize, r: usize| if r < h { b * h + r } else { m + b * h + (r - h) };
    let matrices = irr
        .matrices
        .iter()
        .map(|a| {
            let mut out = Matrix::zeros(2 * m, 2 * m);
            for b in 0..k {
                let negate = b >= k_plus;
                for r in 0..2 * h {
                    for c in 0..2 * h {
                        let v = a.get(r, c);
                        if !v.is_zero() {
                            out.set(place(b, r), place(b, c), if negate { -v.clone() } else { v.clone() });
                        }
                    }
                }
            }
            out
        })
        .collect();
    Ok(CliffordSystem { q, m, matrices, provenance: Provenance::DirectSum { k_plus, k_minus } })
}

/// Result of [`verify_system`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemCheck {
    pub passed: bool,
    pub failure: Option<String>,
}

/// Checks symmetry, the Clifford relations, orthogonality and zero trace.
pub fn verify_system(s: &CliffordSystem) -> SystemCheck {
    let fail = |msg: String| SystemCheck { passed: false, failure: Some(msg) };
    let size = 2 * s.m;
    if s.matrices.len() != s.q + 1 {
        return fail(format!("expected {} matrices, found {}", s.q + 1, s.matrices.len()));
    }
    if let Some(i) = s.matrices.iter().position(|a| a.rows() != size || a.cols() != size) {
        return fail(format!("A_{i} is not {size}x{size}"));
    }
    if let Some(i) = s.matrices.iter().position(|a| !a.is_symmetric()) {
        return fail(format!("A_{i} is not symmetric"));
    }
    let id = Matrix::<Coefficient>::identity(size);
    for i in 0..=s.q {
        for j in i..=s.q {
            let (a, b) = (&s.matrices[i], &s.matrices[j]);
            let anti = a.matmul(b).add(&b.matmul(a));
            let ok = if i == j { anti == id.scale(&Coefficient::from(2)) } else { anti.is_zero_matrix() };
            if !ok {
                return fail(format!("relation ({i}, {j})"));
            }
        }
    }
    if let Some(i) = s.matrices.iter().position(|a| !a.is_orthogonal()) {
        return fail(format!("A_{i} is not orthogonal"));
    }
    if let Some(i) = s.matrices.iter().position(|a| !a.trace().is_zero()) {
        return fail(format!("A_{i} has nonzero trace"));
    }
    SystemCheck { passed: true, failure: None }
}

/// `(q, m, |trace(A_0⋯A_q)|)`; the trace is only recorded for `q ≡ 0 (mod 4)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SystemInvariants {
    pub q: usize,
    pub m: usize,
    pub omega_trace_abs: Option<Coefficient>,
}

pub fn system_invariants(s: &CliffordSystem) -> SystemInvariants {
    let omega_trace_abs = (s.q % 4 == 0).then(|| {
        let omega = s.matrices.iter().skip(1).fold(s.matrices[0].clone(), |acc, a| acc.matmul(a));
        omega.trace().magnitude()
    });
    SystemInvariants { q: s.q, m: s.m, omega_trace_abs }
}

impl fmt::Display for SystemInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q: {}", self.q)?;
        writeln!(f, "m: {}", self.m)?;
        let omega = self.omega_trace_abs.as_ref().map_or_else(|| "undefined".to_string(), format_scalar);
        writeln!(f, "omega_trace_abs: {omega}")
    }
}

/// `A_z = Σ z_i A_i` at a concrete point `z`.
pub fn a_z(s: &CliffordSystem, z: &[Coefficient]) -> Matrix<Coefficient> {
    assert_eq!(z.len(), s.q + 1, "z has the wrong length");
    let size = 2 * s.m;
    s.matrices.iter().zip(z).fold(Matrix::zeros(size, size), |acc, (a, zi)| acc.add(&a.scale(zi)))
}

/// The system `B_j = a · (Σ_k d_jk A_k) · aᵀ`, so that `Φ_B(a y, d z) = Φ_A(y, z)`.
pub fn conjugate_system(
    s: &CliffordSystem,
    a: &Matrix<Coefficient>,
    d: &Matrix<Coefficient>,
) -> Result<CliffordSystem, CliffordError> {
    let size = 2 * s.m;
    if a.rows() != size || a.cols() != size {
        return Err(CliffordError::SizeMismatch { expected: size, found: a.rows() });
    }
    if d.rows() != s.q + 1 || d.cols() != s.q + 1 {
        return Err(CliffordError::SizeMismatch { expected: s.q + 1, found: d.rows() });
    }
    if !a.is_orthogonal() {
        return Err(CliffordError::NotOrthogonal("a"));
    }
    if !d.is_orthogonal() {
        return Err(CliffordError::NotOrthogonal("d"));
    }
    let at = a.transpose();
    let matrices = (0..=s.q)
        .map(|j| a.matmul(&a_z(s, d.row(j))).matmul(&at))
        .collect();
    Ok(CliffordSystem { q: s.q, m: s.m, matrices, provenance: Provenance::Conjugated })
}

/// Cayley transform `(I − S)(I + S)⁻¹` of a skew-symmetric matrix.
pub fn cayley_transform<F: Field>(s: &Matrix<F>) -> Matrix<F> {
    let id = Matrix::<F>::identity(s.rows());
    let inv = id.add(s).inverse().expect("I + S is invertible for skew S");
    id.sub(s).matmul(&inv)
}

/// Deterministic exactly-orthogonal rational matrix from a seed.
pub fn rational_orthogonal<F: Field>(seed: u64, dim: usize) -> Matrix<F> {
    assert!(dim >= 1, "dimension must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Matrix::<F>::zeros(dim, dim);
    for i in 0..dim {
        for j in i + 1..dim {
            let v = F::from_ratio(rng.gen_range(-3..=3), rng.gen_range(1..=4));
            s.set(i, j, v.clone());
            s.set(j, i, -v);
        }
    }
    cayley_transform(&s)
}

/// Deterministic orthogonal matrix with small denominators: a random signed
/// permutation followed by `dim` plane rotations whose cosines and sines
/// come from Pythagorean triples.
pub fn givens_orthogonal<F: Field>(seed: u64, dim: usize) -> Matrix<F> {
    assert!(dim >= 1, "dimension must be positive");
    const TRIPLES: [(i64, i64, i64); 3] = [(3, 4, 5), (5, 12, 13), (8, 15, 17)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..dim).collect();
    for i in (1..dim).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut out = Matrix::<F>::zeros(dim, dim);
    for (i, &p) in perm.iter().enumerate() {
        out.set(i, p, if rng.gen::<bool>() { F::one() } else { -F::one() });
    }
    if dim == 1 {
        return out;
    }
    for _ in 0..dim {
        let i = rng.gen_range(0..dim);
        let j = (i + rng.gen_range(1..dim)) % dim;
        let (a, b, c) = TRIPLES[rng.gen_range(0..TRIPLES.len())];
        let (cos, sin) = (F::from_ratio(a, c), F::from_ratio(b, c));
        let mut g = Matrix::<F>::identity(dim);
        g.set(i, i, cos.clone());
        g.set(j, j, cos);
        g.set(i, j, -sin.clone());
        g.set(j, i, sin);
        out = g.matmul(&out);
    }
    out
}

impl fmt::Display for CliffordSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "clifford q={} m={}", self.q, self.m)?;
        for (i, a) in self.matrices.iter().enumerate() {
            writeln!(f, "A{i}:")?;
            for r in 0..a.rows() {
                let row: Vec<String> = a.row(r).iter().map(format_scalar).collect();
                writeln!(f, "{}", row.join(","))?;
            }
        }
        Ok(())
    }
}

impl FromStr for CliffordSystem {
    type Err = CliffordError;

    /// Reads the format written by `Display`. The relations are not checked;
    /// use [`verify_system`].
    fn from_str(text: &str) -> Result<Self, CliffordError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let err = |line: usize, msg: String| CliffordError::Parse { line, msg };
        let (ln, header) = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
        let mut words = header.split_whitespace();
        if words.next() != Some("clifford") {
            return Err(err(ln, "expected 'clifford q=<q> m=<m>'".into()));
        }
        let mut field = |name: &str| -> Result<usize, CliffordError> {
            let w = words.next().ok_or_else(|| err(ln, format!("missing {name}=")))?;
            w.strip_prefix(name)
                .and_then(|v| v.strip_prefix('='))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| err(ln, format!("expected {name}=<count>, found '{w}'")))
        };
        let q = field("q")?;
        let m = field("m")?;
        if q == 0 || m == 0 {
            return Err(err(ln, "q and m must be positive".into()));
        }
        let size = 2 * m;
        let mut matrices = Vec::with_capacity(q + 1);
        for i in 0..=q {
            let (ln, label) = lines.next().ok_or_else(|| err(ln, format!("missing A{i}")))?;
            if label != format!("A{i}:") {
                return Err(err(ln, format!("expected 'A{i}:'")));
            }
            let mut data = Vec::with_capacity(size * size);
            for _ in 0..size {
                let (ln, row) = lines.next().ok_or_else(|| err(ln, format!("A{i} has fewer than {size} rows")))?;
                let entries: Vec<&str> = row.split(',').collect();
                if entries.len() != size {
                    return Err(err(ln, format!("expected {size} entries, found {}", entries.len())));
                }
                for e in entries {
                    data.push(parse_scalar::<Coefficient>(e).map_err(|x| err(ln, x.to_string()))?);
                }
            }
            matrices.push(Matrix::from_vec(size, size, data));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(err(ln, "trailing input".into()));
        }
        Ok(CliffordSystem { q, m, matrices, provenance: Provenance::Input })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_structure() {
        let f = hr_family(1).unwrap();
        assert_eq!(f.dim, 2);
        assert_eq!(f.matrices, vec![Matrix::from_vec(2, 2, vec![0, -1, 1, 0])]);
    }

    #[test]
    fn families_satisfy_relations() {
        for k in 0..=11 {
            let f = hr_family(k).unwrap();
            assert_eq!(f.dim as u64, delta(k as u64 + 1), "k = {k}");
            assert_eq!(f.matrices.len(), k);
            assert_eq!(f.check(), Ok(()), "k = {k}");
        }
        assert_eq!(hr_family(9).unwrap().dim, 32);
    }

    #[test]
    fn resource_guard() {
        // δ(18) = 512 is allowed, δ(21) = 2048 is refused.
        assert!(hr_family(17).is_ok());
        assert_eq!(hr_family(20).unwrap_err(), CliffordError::ResourceGuard(2048));
    }

    #[test]
    fn irreducible_systems_verify() {
        for q in 1..=9 {
            let s = irreducible_system(q).unwrap();
            assert_eq!(s.m as u64, delta(q as u64));
            assert_eq!(verify_system(&s), SystemCheck { passed: true, failure: None }, "q = {q}");
        }
    }

    #[test]
    fn broken_involution_is_detected() {
        let mut s = irreducible_system(2).unwrap();
        s.matrices[0].set(0, 0, Coefficient::from(-1));
        let check = verify_system(&s);
        assert!(!check.passed);
        assert_eq!(check.failure.as_deref(), Some("relation (0, 1)"));
    }

    #[test]
    fn omega_trace_invariants() {
        let inv = system_invariants(&irreducible_system(4).unwrap());
        assert_eq!((inv.q, inv.m, inv.omega_trace_abs), (4, 4, Some(Coefficient::from(8))));
        let mixed = system_invariants(&direct_sum(4, 1, 1).unwrap());
        assert_eq!((mixed.m, mixed.omega_trace_abs), (8, Some(Coefficient::from(0))));
        let pure = system_invariants(&direct_sum(4, 2, 0).unwrap());
        assert_eq!((pure.m, pure.omega_trace_abs), (8, Some(Coefficient::from(16))));
        assert_eq!(system_invariants(&irreducible_system(3).unwrap()).omega_trace_abs, None);
        let a = system_invariants(&direct_sum(2, 1, 1).unwrap());
        let b = system_invariants(&direct_sum(2, 2, 0).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn direct_sums_verify() {
        for (q, kp, km) in [(1, 5, 0), (2, 1, 1), (3, 1, 2), (4, 1, 1), (5, 0, 2)] {
            let s = direct_sum(q, kp, km).unwrap();
            assert!(verify_system(&s).passed, "({q},{kp},{km})");
        }
    }

    #[test]
    fn cayley_rotation() {
        let s = Matrix::from_vec(2, 2, [0, 1, -1, 0].map(Coefficient::from).to_vec());
        let r = cayley_transform(&s);
        assert_eq!(r, Matrix::from_vec(2, 2, [0, -1, 1, 0].map(Coefficient::from).to_vec()));
        assert_eq!(rational_orthogonal::<Coefficient>(7, 1), Matrix::identity(1));
        let m = rational_orthogonal::<Coefficient>(11, 6);
        assert!(m.is_orthogonal());
        assert_eq!(m, rational_orthogonal::<Coefficient>(11, 6));
    }

    #[test]
    fn conjugation_preserves_the_system() {
        let s = irreducible_system(4).unwrap();
        let same = conjugate_system(&s, &Matrix::identity(8), &Matrix::identity(5)).unwrap();
        assert_eq!(same.matrices, s.matrices);
        let a = rational_orthogonal(1, 8);
        let d = rational_orthogonal(2, 5);
        let b = conjugate_system(&s, &a, &d).unwrap();
        assert!(verify_system(&b).passed);
        assert_eq!(system_invariants(&b), system_invariants(&s));
        let not_orth = Matrix::identity(8).scale(&Coefficient::from(2));
        assert_eq!(conjugate_system(&s, &not_orth, &d).unwrap_err(), CliffordError::NotOrthogonal("a"));
    }

    #[test]
    fn text_round_trip() {
        let s = direct_sum(2, 1, 1).unwrap();
        let back: CliffordSystem = s.to_string().parse().unwrap();
        assert_eq!(back.matrices, s.matrices);
        assert_eq!(back.provenance, Provenance::Input);
        let a = rational_orthogonal::<Coefficient>(3, 4);
        let b = conjugate_system(&irreducible_system(2).unwrap(), &a, &Matrix::identity(3)).unwrap();
        let back: CliffordSystem = b.to_string().parse().unwrap();
        assert_eq!(back.matrices, b.matrices);
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        assert_eq!("clifford q=1".parse::<CliffordSystem>().unwrap_err().to_string(), "line 1: missing m=");
        let bad = "clifford q=1 m=1\nA0:\n1,0\n0,-1\nA1:\n0,1\n1,x1\n";
        assert!(matches!(bad.parse::<CliffordSystem>(), Err(CliffordError::Parse { line: 7, .. })));
    }

    #[test]
    fn givens_matrices_are_orthogonal() {
        for seed in 0..5 {
            assert!(givens_orthogonal::<Coefficient>(seed, 6).is_orthogonal());
        }
        assert_eq!(givens_orthogonal::<Coefficient>(9, 5), givens_orthogonal::<Coefficient>(9, 5));
    }
}
