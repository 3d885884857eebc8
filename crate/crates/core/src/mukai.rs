//! Fixed-subspace dimensions of the LLV components.
//!
//! An automorphism acts on `H²` with a [`CyclicCharacter`]; extending it by the
//! identity on a hyperbolic plane gives the character of the induced isometry
//! of the Mukai completion `V = H² ⊕ U`. From it:
//!
//! * `V(5) = Sym⁵V ⊖ Sym³V` (Sym³V embeds through the invariant quadratic form),
//! * `V(2,2) = Sym²(Λ²V) ⊖ Sym²V ⊖ Λ⁴V`.
//!
//! The Verbitsky count has a second route through the graded pieces
//! `Sym^k H²` of the Verbitsky subalgebra and Poincaré duality.

use alloc::format;
use alloc::vec;

use crate::cyclic::CyclicCharacter;
use crate::error::{Error, Result};

/// Numerical invariants of the hyper-Kähler manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ManifoldProfile {
    /// `b₂(X)`.
    pub second_betti: u64,
    /// Topological Euler characteristic, equal to `dim H*(X)` when odd cohomology vanishes.
    pub total_euler: u64,
    /// Complex dimension `2n`.
    pub complex_dimension: u64,
}

impl Default for ManifoldProfile {
    fn default() -> Self {
        Self::og10()
    }
}

impl ManifoldProfile {
    /// `b₂ = 24`, `e = 176904`, complex dimension 10.
    pub const fn og10() -> Self {
        ManifoldProfile { second_betti: 24, total_euler: 176904, complex_dimension: 10 }
    }

    /// Reject degenerate profiles.
    pub fn validate(&self) -> Result<()> {
        if self.second_betti == 0 {
            return Err(Error::InvalidProfile("b2 must be positive".into()));
        }
        if self.total_euler == 0 {
            return Err(Error::InvalidProfile("Euler number must be positive".into()));
        }
        if self.complex_dimension == 0 || !self.complex_dimension.is_multiple_of(2) {
            return Err(Error::InvalidProfile(format!(
                "complex dimension {} must be positive and even",
                self.complex_dimension
            )));
        }
        Ok(())
    }

    /// `n`, half the complex dimension; the Verbitsky component sits in `Sym^n V`.
    pub fn half_dimension(&self) -> usize {
        (self.complex_dimension / 2) as usize
    }

    /// `dim V = b₂ + 2`.
    pub fn mukai_dimension(&self) -> u64 {
        self.second_betti + 2
    }

    /// `χ(X, O_X) = n + 1`.
    pub fn holomorphic_euler(&self) -> u64 {
        self.complex_dimension / 2 + 1
    }

    /// `dim V(n)`.
    pub fn verbitsky_dimension(&self) -> Result<u64> {
        let v = CyclicCharacter::identity(self.mukai_dimension());
        Ok(verbitsky_character(&v, self.half_dimension())?.dimension())
    }

    /// `dim V(2,2)`.
    pub fn v22_dimension(&self) -> Result<u64> {
        let v = CyclicCharacter::identity(self.mukai_dimension());
        Ok(v22_character(&v)?.dimension())
    }

    /// The second-cohomology character encoded by an invariant dimension.
    ///
    /// * order 1: `invariant_dim` must equal `b₂`;
    /// * order 2: eigenvalue `+1` with multiplicity `invariant_dim`, `−1` on the rest;
    /// * order 3: `invariant_dim = 2r` is even and the remaining `b₂ − 2r`
    ///   directions split evenly between `ζ` and `ζ̄`.
    pub fn h2_from_invariant_dim(&self, order: u32, invariant_dim: u64) -> Result<CyclicCharacter> {
        let b2 = self.second_betti;
        let bad = || Error::InvalidInvariantDim { order, invariant_dim };
        if invariant_dim > b2 {
            return Err(bad());
        }
        let rest = b2 - invariant_dim;
        match order {
            1 if rest == 0 => CyclicCharacter::new(1, vec![b2]),
            1 => Err(bad()),
            2 => CyclicCharacter::new(2, vec![invariant_dim, rest]),
            3 if invariant_dim.is_multiple_of(2) && rest.is_multiple_of(2) => {
                CyclicCharacter::new(3, vec![invariant_dim, rest / 2, rest / 2])
            }
            3 => Err(bad()),
            other => Err(Error::UnsupportedOrder(other)),
        }
    }

    fn check_h2(&self, h2: &CyclicCharacter) -> Result<()> {
        self.validate()?;
        if h2.dimension() != self.second_betti {
            return Err(Error::WrongDimension { expected: self.second_betti, found: h2.dimension() });
        }
        if !h2.is_rational() {
            return Err(Error::NotRational);
        }
        Ok(())
    }
}

/// Fixed-subspace dimensions of both LLV components and of `H*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComponentInvariants {
    /// `eig(γ(5), V(5), 1)`.
    pub verbitsky_fixed: u64,
    /// `eig(γ(2,2), V(2,2), 1)`.
    pub v22_fixed: u64,
    /// Total when the automorphism acts on `B ≅ V(2,2)` as `γ(2,2)`.
    pub total_case_a: u64,
    /// Total when it acts as `−γ(2,2)`; only possible for even order.
    pub total_case_b: Option<u64>,
}

/// `V = H² ⊕ U` with the isometry acting trivially on `U`.
pub fn mukai_extend(h2: &CyclicCharacter, profile: &ManifoldProfile) -> Result<CyclicCharacter> {
    profile.check_h2(h2)?;
    let mut mults = h2.mults().to_vec();
    mults[0] = mults[0].checked_add(2).ok_or(Error::Overflow)?;
    CyclicCharacter::new(h2.order(), mults)
}

/// Character of the Verbitsky component `V(n) = Sym^n V ⊖ Sym^(n−2) V`.
pub fn verbitsky_character(v: &CyclicCharacter, half_dimension: usize) -> Result<CyclicCharacter> {
    let top = v.sym_power(half_dimension)?.to_virtual()?;
    let lower = match half_dimension.checked_sub(2) {
        Some(k) => v.sym_power(k)?.to_virtual()?,
        None => CyclicCharacter::zero(v.order())?.to_virtual()?,
    };
    top.sub(&lower)?.certify_non_negative()
}

/// Character of `V(2,2) = Sym²(Λ²V) ⊖ Sym²V ⊖ Λ⁴V`.
pub fn v22_character(v: &CyclicCharacter) -> Result<CyclicCharacter> {
    let sym2_ext2 = v.ext_power(2)?.sym_power(2)?.to_virtual()?;
    let sym2 = v.sym_power(2)?.to_virtual()?;
    let ext4 = v.ext_power(4)?.to_virtual()?;
    sym2_ext2.sub(&sym2)?.sub(&ext4)?.certify_non_negative()
}

/// Fixed-subspace dimensions for an automorphism acting on `H²` by `h2`.
///
/// For even order the second sign case replaces the `V(2,2)` count by
/// `eig(−γ(2,2), V(2,2), 1)`.
pub fn total_invariants(h2: &CyclicCharacter, profile: &ManifoldProfile) -> Result<ComponentInvariants> {
    let v = mukai_extend(h2, profile)?;
    let verbitsky_fixed = verbitsky_character(&v, profile.half_dimension())?.eig(0);
    let v22 = v22_character(&v)?;
    let v22_fixed = v22.eig(0);
    let total_case_a = verbitsky_fixed.checked_add(v22_fixed).ok_or(Error::Overflow)?;
    let total_case_b = if h2.order().is_multiple_of(2) {
        let negated = v22.negate_operator().eig(0);
        Some(verbitsky_fixed.checked_add(negated).ok_or(Error::Overflow)?)
    } else {
        None
    };
    Ok(ComponentInvariants { verbitsky_fixed, v22_fixed, total_case_a, total_case_b })
}

/// Verbitsky count from the graded pieces: `Sym^k H²` in degree `2k` for
/// `k ≤ n`, mirrored by Poincaré duality, so
/// `2·Σ_{k<n} eig(Sym^k H², 1) + eig(Sym^n H², 1)`.
pub fn graded_verbitsky_invariants(h2: &CyclicCharacter, profile: &ManifoldProfile) -> Result<u64> {
    profile.check_h2(h2)?;
    let n = profile.half_dimension();
    let mut total: u64 = 0;
    for k in 0..=n {
        let piece = h2.sym_power(k)?.eig(0);
        let weight = if k == n { 1 } else { 2 };
        total = piece.checked_mul(weight).and_then(|p| total.checked_add(p)).ok_or(Error::Overflow)?;
    }
    Ok(total)
}
