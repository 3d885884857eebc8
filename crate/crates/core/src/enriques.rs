//! Euler-characteristic feasibility scan for free quotients.
//!
//! If a group of order `d` acts freely on `X`, then `d · χ(Y, O_Y) = χ(X, O_X)`
//! and `e(X) = d · e(Y)`. For a cyclic group generated by `φ` the Lefschetz
//! count gives `e(Y) = eig(φ*, H*, 1)`, so `d · eig(φ*, H*, 1) = e(X)` is a
//! necessary condition. The scan evaluates it for every admissible invariant
//! dimension on `H²`. A passing candidate does not construct an automorphism.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::cyclic::CyclicCharacter;
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::mukai::{total_invariants, ManifoldProfile};
use crate::table::{admissible_range, invariant_dim, ReferenceSet};

/// Wording attached to every report.
pub const NECESSARY_CONDITION_NOTE: &str = "tests only the necessary condition order * eig(phi*, H*, 1) = e(X); \
a passing candidate does not construct an automorphism or a free quotient";

/// Which sign the automorphism takes on the `V(2,2)` component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SignCase {
    /// Acts as `γ(2,2)`.
    A,
    /// Acts as `−γ(2,2)` (even order only).
    B,
}

/// Where candidate totals come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum PolynomialSource {
    /// Direct character computation.
    Derived,
    /// The printed table polynomials, evaluated as printed.
    PaperLiteral,
}

/// Whether the scan agrees with the published claim that no solution exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum PaperClaim {
    /// No solution found.
    Consistent,
    /// At least one candidate passes.
    Discrepant,
}

/// One evaluated candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScanCandidate {
    /// `eig(φ*, H², 1)`.
    pub invariant_dim: u64,
    pub case: SignCase,
    /// Candidate value of `eig(φ*, H*, 1)`.
    pub total: Fraction,
    /// `order · total = e(X)`.
    pub passes: bool,
}

/// Result of scanning one order.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScanReport {
    pub order: u32,
    /// `e(X)` used for the test.
    pub euler: u64,
    /// Sorted by `(invariant_dim, case)`.
    pub candidates: Vec<ScanCandidate>,
    /// The passing candidates.
    pub solutions: Vec<ScanCandidate>,
    pub paper_claim: PaperClaim,
    pub polynomial_source: PolynomialSource,
    pub note: String,
}

/// Quotient orders worth scanning, with how they were obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AdmissibleIndices {
    /// `χ(X, O_X)`.
    pub holomorphic_euler: u64,
    /// Prime divisors of `χ(X, O_X)`.
    pub indices: Vec<u32>,
    pub note: String,
}

/// Prime divisors of `χ(X, O_X)`: the order of a free quotient divides it and
/// any nontrivial cyclic group contains an element of prime order.
pub fn admissible_indices(holomorphic_euler: u64) -> AdmissibleIndices {
    let mut indices = Vec::new();
    let mut rest = holomorphic_euler;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            indices.push(p as u32);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        indices.push(rest as u32);
    }
    let note = format!(
        "d * chi(Y,O_Y) = chi(X,O_X) = {holomorphic_euler}, so d divides {holomorphic_euler}; \
         composite d reduce to their prime factors {indices:?}"
    );
    AdmissibleIndices { holomorphic_euler, indices, note }
}

fn candidate(order: u32, euler: u64, invariant_dim: u64, case: SignCase, total: Fraction) -> ScanCandidate {
    let passes = total * Fraction::from(order as u64) == Fraction::from(euler);
    ScanCandidate { invariant_dim, case, total, passes }
}

fn finish(order: u32, euler: u64, mut candidates: Vec<ScanCandidate>, source: PolynomialSource) -> ScanReport {
    candidates.sort_by_key(|c| (c.invariant_dim, c.case));
    let solutions: Vec<ScanCandidate> = candidates.iter().filter(|c| c.passes).cloned().collect();
    let paper_claim = if solutions.is_empty() { PaperClaim::Consistent } else { PaperClaim::Discrepant };
    ScanReport {
        order,
        euler,
        candidates,
        solutions,
        paper_claim,
        polynomial_source: source,
        note: String::from(NECESSARY_CONDITION_NOTE),
    }
}

/// Scan order 2 (`r ∈ 0..=b₂`, both sign cases) or order 3 (invariant dimension
/// `2r`, `r ∈ 0..=b₂/2`, case a only).
///
/// The printed polynomials only exist for the default profile.
pub fn scan(order: u32, source: PolynomialSource, profile: &ManifoldProfile) -> Result<ScanReport> {
    profile.validate()?;
    let range = admissible_range(order, profile)?;
    let euler = profile.total_euler;
    let mut candidates = Vec::new();
    match source {
        PolynomialSource::Derived => {
            for r in range {
                let dim = invariant_dim(order, r);
                let inv = total_invariants(&profile.h2_from_invariant_dim(order, dim)?, profile)?;
                candidates.push(candidate(order, euler, dim, SignCase::A, Fraction::from(inv.total_case_a)));
                if let Some(b) = inv.total_case_b {
                    candidates.push(candidate(order, euler, dim, SignCase::B, Fraction::from(b)));
                }
            }
        }
        PolynomialSource::PaperLiteral => {
            if *profile != ManifoldProfile::og10() {
                return Err(Error::InvalidProfile(
                    "printed polynomials are only available for the default profile".into(),
                ));
            }
            let refs = ReferenceSet::embedded();
            let rows: Vec<(SignCase, &str)> = match order {
                2 => vec![(SignCase::A, "totals.a"), (SignCase::B, "totals.b")],
                _ => vec![(SignCase::A, "totals.c")],
            };
            for r in range {
                for &(case, id) in &rows {
                    let total = refs.get(id)?.evaluate_at(r as i64);
                    candidates.push(candidate(order, euler, invariant_dim(order, r), case, total));
                }
            }
        }
    }
    Ok(finish(order, euler, candidates, source))
}

/// Scan explicit `H²` characters of any order (e.g. composite orders), always
/// with the derived source.
pub fn scan_characters(h2s: &[CyclicCharacter], profile: &ManifoldProfile) -> Result<Vec<ScanReport>> {
    let mut orders: Vec<u32> = h2s.iter().map(CyclicCharacter::order).collect();
    orders.sort_unstable();
    orders.dedup();
    let mut reports = Vec::new();
    for order in orders {
        let mut candidates = Vec::new();
        for h2 in h2s.iter().filter(|c| c.order() == order) {
            let inv = total_invariants(h2, profile)?;
            let dim = h2.eig(0);
            candidates.push(candidate(order, profile.total_euler, dim, SignCase::A, Fraction::from(inv.total_case_a)));
            if let Some(b) = inv.total_case_b {
                candidates.push(candidate(order, profile.total_euler, dim, SignCase::B, Fraction::from(b)));
            }
        }
        reports.push(finish(order, profile.total_euler, candidates, PolynomialSource::Derived));
    }
    Ok(reports)
}

/// Every rational `H²` character of the given order and dimension `b₂`, in
/// lexicographic order of multiplicity vectors.
///
/// A rational character is constant on each class `{k : gcd(k, order) = g}`,
/// so it is fixed by one multiplicity per divisor `g` of the order.
pub fn rational_characters(order: u32, profile: &ManifoldProfile) -> Result<Vec<CyclicCharacter>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let n = order as usize;
    let classes: Vec<Vec<usize>> =
        (1..=n).filter(|g| n.is_multiple_of(*g)).map(|g| (0..n).filter(|&k| gcd(k, n) == g).collect()).collect();
    let mut out = Vec::new();
    let mut mults = vec![0u64; n];
    fill(&classes, 0, profile.second_betti, &mut mults, &mut |m| {
        out.push(CyclicCharacter::new(order, m.to_vec())?);
        Ok(())
    })?;
    out.sort_by(|a, b| a.mults().cmp(b.mults()));
    Ok(out)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn fill(
    classes: &[Vec<usize>],
    idx: usize,
    remaining: u64,
    mults: &mut [u64],
    emit: &mut impl FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    if idx == classes.len() {
        return if remaining == 0 { emit(mults) } else { Ok(()) };
    }
    let size = classes[idx].len() as u64;
    for m in 0..=remaining / size {
        for &k in &classes[idx] {
            mults[k] = m;
        }
        fill(classes, idx + 1, remaining - m * size, mults, emit)?;
    }
    for &k in &classes[idx] {
        mults[k] = 0;
    }
    Ok(())
}
