//! Hurwitz–Radon numbers, irreducible Clifford dimensions, and the
//! realizability and congruence-class counts of Clifford cubics.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("dimension n = {0} is below the minimum of 4")]
    DimensionTooSmall(u64),
    #[error("invalid range {from}..={to} (need 4 <= from <= to <= {SCAN_LIMIT})")]
    InvalidRange { from: u64, to: u64 },
}

/// Upper end of [`realizability_scan`].
pub const SCAN_LIMIT: u64 = 1_000_000;

/// `ρ(2^s · odd) = 8a + 2^b` where `s = 4a + b`, `0 ≤ b ≤ 3`.
pub fn hurwitz_radon(m: u64) -> u64 {
    assert!(m >= 1, "hurwitz_radon is defined for m >= 1");
    let s = m.trailing_zeros() as u64;
    8 * (s / 4) + (1 << (s % 4))
}

/// Minimal `m` carrying an irreducible Clifford system with `q + 1`
/// generators; saturates at `u64::MAX` once the true value no longer fits.
pub fn delta(q: u64) -> u64 {
    assert!(q >= 1, "delta is defined for q >= 1");
    const BASE: [u64; 8] = [1, 2, 4, 4, 8, 8, 8, 8];
    let period = (q - 1) / 8;
    let base = BASE[((q - 1) % 8) as usize];
    (0..period).try_fold(base, |acc, _| acc.checked_mul(16)).unwrap_or(u64::MAX)
}

fn check_n(n: u64) -> Result<(), ClassifyError> {
    if n < 4 {
        Err(ClassifyError::DimensionTooSmall(n))
    } else {
        Ok(())
    }
}

/// All `(q, m)` with `2m + q + 1 = n` and `1 ≤ q ≤ ρ(m)`, by increasing `q`.
pub fn admissible_pairs(n: u64) -> Result<Vec<(u64, u64)>, ClassifyError> {
    check_n(n)?;
    // ρ(m) ≤ 2·log₂(m) + 2 < 131 for 64-bit m, which bounds q.
    let mut out = Vec::new();
    let mut q = if n % 2 == 0 { 1 } else { 2 };
    while q + 3 <= n && q <= 131 {
        let m = (n - 1 - q) / 2;
        if m >= 1 && q <= hurwitz_radon(m) {
            out.push((q, m));
        }
        q += 2;
    }
    Ok(out)
}

pub fn is_realizable(n: u64) -> Result<bool, ClassifyError> {
    Ok(!admissible_pairs(n)?.is_empty())
}

/// One congruence class representative: `k_plus` positive and `k_minus`
/// negated copies of the irreducible system for `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassRep {
    pub q: u64,
    pub m: u64,
    pub k_plus: u64,
    pub k_minus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub n: u64,
    pub admissible_pairs: Vec<(u64, u64)>,
    pub realizable: bool,
    pub class_count: u64,
    pub class_list: Vec<ClassRep>,
}

/// Counts congruence classes of Clifford cubics on ℝⁿ.
///
/// Each admissible `(q, m)` splits into `k = m/δ(q)` irreducible summands. For
/// `q ≢ 0 (mod 4)` the summands' signs do not matter and there is one class;
/// for `q ≡ 0 (mod 4)` the classes are the unordered sign splits
/// `(k − j, j)`, `0 ≤ j ≤ ⌊k/2⌋`, told apart by `|trace(A_0⋯A_q)|`.
pub fn congruence_class_count(n: u64) -> Result<DimensionReport, ClassifyError> {
    let pairs = admissible_pairs(n)?;
    let mut class_list = Vec::new();
    for &(q, m) in &pairs {
        let k = m / delta(q);
        debug_assert_eq!(m % delta(q), 0);
        if q % 4 == 0 {
            for j in 0..=k / 2 {
                class_list.push(ClassRep { q, m, k_plus: k - j, k_minus: j });
            }
        } else {
            class_list.push(ClassRep { q, m, k_plus: k, k_minus: 0 });
        }
    }
    Ok(DimensionReport {
        n,
        realizable: !pairs.is_empty(),
        admissible_pairs: pairs,
        class_count: class_list.len() as u64,
        class_list,
    })
}

/// Every non-realizable `n` in `from..=to`.
pub fn realizability_scan(from: u64, to: u64) -> Result<Vec<u64>, ClassifyError> {
    if from < 4 || from > to || to > SCAN_LIMIT {
        return Err(ClassifyError::InvalidRange { from, to });
    }
    let mut out = Vec::new();
    for n in from..=to {
        if !is_realizable(n)? {
            out.push(n);
        }
    }
    Ok(out)
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "realizable: {}", self.realizable)?;
        writeln!(f, "class_count: {}", self.class_count)?;
        for (q, m) in &self.admissible_pairs {
            writeln!(f, "pair: q={q} m={m}")?;
        }
        for c in &self.class_list {
            writeln!(f, "class: q={} m={} kplus={} kminus={}", c.q, c.m, c.k_plus, c.k_minus)?;
        }
        Ok(())
    }
}
