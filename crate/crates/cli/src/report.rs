//! Machine-readable output. Every number is an exact integer or a `"p/q"` string.

use og10_llv::enriques::AdmissibleIndices;
use og10_llv::table::ErratumReport;
use og10_llv::weyl::{PlethysmDimensions, PlethysmReport};
use og10_llv::{Fraction, ManifoldProfile, RationalPolynomial, ScanReport, Target};
use serde::{Deserialize, Serialize};

/// Top-level JSON object printed by every command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    /// Arguments after the program name, as given.
    pub command: Vec<String>,
    pub profile: ManifoldProfile,
    pub results: Results,
    /// Disagreements with printed values and other findings, one line each.
    pub errata: Vec<String>,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Results {
    Invariants(InvariantsResult),
    Table(TableResult),
    Check(CheckResult),
    Weyl(WeylResult),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsResult {
    pub order: u32,
    /// Multiplicities on H².
    pub h2_mults: Vec<u64>,
    /// Multiplicities on V = H² ⊕ U.
    pub mukai_mults: Vec<u64>,
    pub invariant_dim: u64,
    pub verbitsky_fixed: u64,
    /// The same count through the graded pieces of the Verbitsky subalgebra.
    pub verbitsky_fixed_graded: u64,
    pub v22_fixed: u64,
    pub total_case_a: u64,
    /// Present for even order.
    pub total_case_b: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableResult {
    pub order: u32,
    pub target: Target,
    /// Ascending coefficients.
    pub polynomial: RationalPolynomial,
    pub plain: String,
    pub latex: String,
    /// Identifier of the printed polynomial, when one exists.
    pub reference_id: Option<String>,
    pub printed: Option<RationalPolynomial>,
    pub erratum: Option<ErratumReport>,
    /// `f(r_max)` for the totals: `e(X)` in case a, `dim V(n)` in case b.
    pub self_check: Option<SelfCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfCheck {
    pub r: u64,
    pub value: Fraction,
    pub expected: u64,
    /// What `expected` is.
    pub label: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub admissible: AdmissibleIndices,
    /// One report per (order, source), orders ascending, derived source first.
    pub scans: Vec<ScanReport>,
    /// Reports over every rational character of each composite order.
    pub composite: Vec<ScanReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylResult {
    pub rank: usize,
    pub dimensions: PlethysmDimensions,
    /// Absent with `--dim-only`.
    pub certificate: Option<PlethysmReport>,
    pub verified: bool,
}
