//! Type-D weight characters and the certificate
//! `Sym²(Λ²V) = Sym²V ⊕ Λ⁴V ⊕ V(2,2)` for the defining representation `V` of `D_n`.
//!
//! Characters are stored over dominant weights; Weyl orbits (signed
//! permutations with an even number of sign changes) are expanded only where
//! an operation needs every weight. Irreducible characters come from
//! Freudenthal's recursion and decompositions from greedy subtraction of the
//! leading weight. A [`WorkBudget`] bounds every expansion.

mod character;
mod freudenthal;
mod weight;

use alloc::vec::Vec;

pub use character::{
    char_ext_power, char_sym_power, char_tensor, decompose, recompose, torus_specialize, DecompositionTerm,
    DominantCharacter,
};
pub use freudenthal::{irreducible_character, weyl_dimension};
pub use weight::{positive_roots, rho, Weight};

use crate::cyclic::binomial;
use crate::error::{Error, Result};

/// Default cap on elementary steps; the rank-13 certificate needs well under 1%.
pub const DEFAULT_WORK_CAP: u64 = 200_000_000;

/// Ranks accepted by the public entry points.
pub const SUPPORTED_RANKS: core::ops::RangeInclusive<usize> = 2..=13;

pub(crate) fn check_rank(rank: usize) -> Result<()> {
    if SUPPORTED_RANKS.contains(&rank) {
        Ok(())
    } else {
        Err(Error::UnsupportedRank(rank))
    }
}

/// Counter of elementary steps that aborts once the cap is reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkBudget {
    cap: u64,
    used: u64,
}

impl Default for WorkBudget {
    fn default() -> Self {
        WorkBudget::new(DEFAULT_WORK_CAP)
    }
}

impl WorkBudget {
    pub fn new(cap: u64) -> Self {
        WorkBudget { cap, used: 0 }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Steps consumed so far.
    pub fn used(&self) -> u64 {
        self.used
    }

    /// Consume `steps`, failing once the cap is exceeded.
    pub fn spend(&mut self, steps: u64) -> Result<()> {
        self.used = self.used.saturating_add(steps);
        if self.used > self.cap {
            Err(Error::WorkCapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }
}

/// Dimension bookkeeping of the plethysm, from binomials and the Weyl formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PlethysmDimensions {
    pub rank: usize,
    /// `dim Sym²(Λ²V)`.
    pub sym2_ext2: u64,
    /// `dim Sym²V`.
    pub sym2: u64,
    /// `dim Λ⁴V`.
    pub ext4: u64,
    /// `dim V(2,2,0,…,0)` from the Weyl dimension formula.
    pub v22: u64,
}

impl PlethysmDimensions {
    /// `sym2_ext2 = sym2 + ext4 + v22`.
    pub fn balances(&self) -> bool {
        self.sym2_ext2 == self.sym2 + self.ext4 + self.v22
    }
}

/// Dimensions only; no character expansion.
pub fn plethysm_dimensions(rank: usize) -> Result<PlethysmDimensions> {
    check_rank(rank)?;
    let d = 2 * rank as u64;
    let ext2 = binomial(d, 2)?;
    let v22 = weyl_dimension(&Weight::padded(rank, &[2, 2])?)?;
    Ok(PlethysmDimensions {
        rank,
        sym2_ext2: binomial(ext2 + 1, 2)?,
        sym2: binomial(d + 1, 2)?,
        ext4: binomial(d, 4)?,
        v22: u64::try_from(v22).map_err(|_| Error::Overflow)?,
    })
}

/// Outcome of the character-level plethysm check.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PlethysmReport {
    pub dimensions: PlethysmDimensions,
    /// Irreducible summands of `Sym²(Λ²V)`.
    pub sym2_ext2: Vec<DecompositionTerm>,
    /// Irreducible summands of `Sym²V`.
    pub sym2: Vec<DecompositionTerm>,
    /// Irreducible summands of `Λ⁴V`.
    pub ext4: Vec<DecompositionTerm>,
    /// Irreducible summands of `Sym²(Λ²V) − Sym²V − Λ⁴V`.
    pub remainder: Vec<DecompositionTerm>,
    /// The remainder equals the irreducible character of `(2,2,0,…,0)` exactly.
    pub remainder_is_v22: bool,
    /// Summands of `Sym²(Λ²V)` equal those of `Sym²V`, `Λ⁴V` and `V(2,2)` combined.
    pub summands_match: bool,
    /// Elementary steps consumed.
    pub work_used: u64,
}

impl PlethysmReport {
    /// Both character-level checks hold and the dimensions balance.
    pub fn verified(&self) -> bool {
        self.remainder_is_v22 && self.summands_match && self.dimensions.balances()
    }
}

fn merge(parts: &[&[DecompositionTerm]]) -> Vec<(Weight, u64)> {
    let mut acc: alloc::collections::BTreeMap<Weight, u64> = Default::default();
    for part in parts {
        for t in *part {
            *acc.entry(t.highest_weight.clone()).or_insert(0) += t.multiplicity;
        }
    }
    acc.into_iter().collect()
}

/// Compute `Sym²(Λ²V)`, `Sym²V`, `Λ⁴V` as `D_rank` characters and certify the identity.
pub fn verify_plethysm(rank: usize, budget: &mut WorkBudget) -> Result<PlethysmReport> {
    let dimensions = plethysm_dimensions(rank)?;
    let vector = DominantCharacter::vector(rank)?;
    let ext2 = char_ext_power(&vector, 2, budget)?;
    let sym2_ext2 = char_sym_power(&ext2, 2, budget)?;
    let sym2 = char_sym_power(&vector, 2, budget)?;
    let ext4 = char_ext_power(&vector, 4, budget)?;
    let remainder = sym2_ext2.sub(&sym2)?.sub(&ext4)?;

    let v22_weight = Weight::padded(rank, &[2, 2])?;
    let v22 = irreducible_character(&v22_weight, budget)?;
    let remainder_is_v22 = remainder == v22;

    let sym2_ext2_terms = decompose(&sym2_ext2, budget)?;
    let sym2_terms = decompose(&sym2, budget)?;
    let ext4_terms = decompose(&ext4, budget)?;
    let remainder_terms = decompose(&remainder, budget)?;
    let v22_term =
        [DecompositionTerm { highest_weight: v22_weight, multiplicity: 1, dimension: dimensions.v22 as u128 }];
    let summands_match = merge(&[&sym2_ext2_terms]) == merge(&[&sym2_terms, &ext4_terms, &v22_term]);

    Ok(PlethysmReport {
        dimensions,
        sym2_ext2: sym2_ext2_terms,
        sym2: sym2_terms,
        ext4: ext4_terms,
        remainder: remainder_terms,
        remainder_is_v22,
        summands_match,
        work_used: budget.used(),
    })
}
