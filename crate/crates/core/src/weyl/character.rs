use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{freudenthal, Weight, WorkBudget};
use crate::cyclic::{binomial, CyclicCharacter};
use crate::error::{Error, Result};

/// Weyl-invariant character of `D_n`, stored over dominant weights only.
///
/// Multiplicities are signed so that differences of characters can be formed;
/// a genuine character has only positive entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DominantCharacter {
    rank: usize,
    terms: BTreeMap<Weight, i64>,
}

impl DominantCharacter {
    /// The zero character.
    pub fn new(rank: usize) -> Self {
        DominantCharacter { rank, terms: BTreeMap::new() }
    }

    /// The defining representation `V` of dimension `2·rank`.
    pub fn vector(rank: usize) -> Result<Self> {
        let mut c = Self::new(rank);
        c.add_term(Weight::padded(rank, &[1])?, 1)?;
        Ok(c)
    }

    /// The trivial one-dimensional representation.
    pub fn trivial(rank: usize) -> Self {
        let mut c = Self::new(rank);
        c.terms.insert(Weight::zero(rank), 1);
        c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Add `mult` copies of the orbit of the dominant weight `weight`.
    pub fn add_term(&mut self, weight: Weight, mult: i64) -> Result<()> {
        if weight.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: weight.rank() });
        }
        if !weight.is_dominant() {
            return Err(Error::NotDominant(weight.coords().to_vec()));
        }
        let entry = self.terms.entry(weight).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.terms.retain(|_, m| *m != 0);
        }
        Ok(())
    }

    /// Dominant weights with non-zero multiplicity, in lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    /// Multiplicity of a weight (any weight, dominant or not).
    pub fn multiplicity(&self, weight: &Weight) -> i64 {
        self.terms.get(&weight.dominant_representative()).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every multiplicity is positive.
    pub fn is_genuine(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    /// Lexicographically largest dominant weight present.
    pub fn leading_weight(&self) -> Option<(&Weight, i64)> {
        self.terms.iter().next_back().map(|(w, &m)| (w, m))
    }

    /// Dimension of the represented (virtual) module: `Σ mult · |orbit|`.
    pub fn expanded_size(&self) -> i128 {
        self.terms.iter().map(|(w, &m)| m as i128 * w.orbit_size() as i128).sum()
    }

    fn combine(&self, other: &Self, factor: i64) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let mut out = self.clone();
        for (w, &m) in &other.terms {
            out.add_term(w.clone(), factor * m)?;
        }
        Ok(out)
    }

    /// Sum of characters.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    /// Difference of characters.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    /// `factor` copies of the character.
    pub fn scale(&self, factor: i64) -> Self {
        let terms = if factor == 0 {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(w, &m)| (w.clone(), m * factor)).collect()
        };
        DominantCharacter { rank: self.rank, terms }
    }

    /// Every weight with its multiplicity, orbits expanded.
    pub fn expand(&self, budget: &mut WorkBudget) -> Result<Vec<(Weight, i64)>> {
        let mut out = Vec::new();
        for (w, &m) in &self.terms {
            out.extend(w.orbit(budget)?.into_iter().map(|x| (x, m)));
        }
        Ok(out)
    }

    /// Collect the dominant part of a Weyl-invariant weight multiset.
    pub fn from_weights(rank: usize, weights: impl IntoIterator<Item = (Weight, i64)>) -> Result<Self> {
        let mut c = Self::new(rank);
        for (w, m) in weights {
            if w.is_dominant() {
                c.add_term(w, m)?;
            }
        }
        Ok(c)
    }

    fn require_genuine(&self) -> Result<()> {
        match self.terms.iter().find(|(_, &m)| m < 0) {
            Some((w, _)) => Err(Error::NegativeRemainder { weight: w.coords().to_vec() }),
            None => Ok(()),
        }
    }
}

/// Character of `a ⊗ b`.
pub fn char_tensor(a: &DominantCharacter, b: &DominantCharacter, budget: &mut WorkBudget) -> Result<DominantCharacter> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch { expected: a.rank, found: b.rank });
    }
    let left = a.expand(budget)?;
    let right = b.expand(budget)?;
    let mut out = DominantCharacter::new(a.rank);
    for (x, mx) in &left {
        for (y, my) in &right {
            budget.spend(1)?;
            let z = x.add(y);
            if z.is_dominant() {
                out.add_term(z, mx * my)?;
            }
        }
    }
    Ok(out)
}

/// Character of `Sym^k` of a genuine character.
pub fn char_sym_power(c: &DominantCharacter, k: usize, budget: &mut WorkBudget) -> Result<DominantCharacter> {
    // m >= 1: zero multiplicities are never stored
    power_series(c, k, budget, |m, j| binomial(m + j - 1, j))
}

/// Character of `Λ^k` of a genuine character.
pub fn char_ext_power(c: &DominantCharacter, k: usize, budget: &mut WorkBudget) -> Result<DominantCharacter> {
    power_series(c, k, budget, binomial)
}

/// Degree-`k` part of `Π_w f_{m_w}(e^w t)` over the expanded weights, keeping
/// only dominant weights in the top degree.
fn power_series(
    c: &DominantCharacter,
    k: usize,
    budget: &mut WorkBudget,
    coeff: impl Fn(u64, u64) -> Result<u64>,
) -> Result<DominantCharacter> {
    c.require_genuine()?;
    let rank = c.rank;
    let mut series: Vec<BTreeMap<Weight, i64>> = vec![BTreeMap::new(); k + 1];
    series[0].insert(Weight::zero(rank), 1);
    for (w, m) in c.expand(budget)? {
        let factor = (0..=k as u64)
            .map(|j| coeff(m as u64, j).and_then(|b| i64::try_from(b).map_err(|_| Error::Overflow)))
            .collect::<Result<Vec<_>>>()?;
        let mut next: Vec<BTreeMap<Weight, i64>> = vec![BTreeMap::new(); k + 1];
        for (deg, row) in series.iter().enumerate() {
            for (x, &value) in row {
                for (j, &f) in factor.iter().enumerate().take(k - deg + 1) {
                    if f == 0 {
                        continue;
                    }
                    budget.spend(1)?;
                    let y = x.add(&w.scale(j as i32));
                    if deg + j == k && !y.is_dominant() {
                        continue;
                    }
                    let term = value.checked_mul(f).ok_or(Error::Overflow)?;
                    let slot = next[deg + j].entry(y).or_insert(0);
                    *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
                }
            }
        }
        series = next;
    }
    let top = series.swap_remove(k);
    DominantCharacter::from_weights(rank, top.into_iter().filter(|(_, m)| *m != 0))
}

/// Evaluate the character on the torus element `εᵢ ↦ ζ^{aᵢ}`, `ζ = exp(2πi/n)`.
pub fn torus_specialize(
    c: &DominantCharacter,
    assignment: &[i64],
    order: u32,
    budget: &mut WorkBudget,
) -> Result<CyclicCharacter> {
    if assignment.len() != c.rank {
        return Err(Error::RankMismatch { expected: c.rank, found: assignment.len() });
    }
    c.require_genuine()?;
    let n = order as i64;
    let mut mults = vec![0u64; order as usize];
    for (w, m) in c.expand(budget)? {
        let exponent: i64 = w.coords().iter().zip(assignment).map(|(&x, &a)| x as i64 * a).sum();
        mults[exponent.rem_euclid(n) as usize] += m as u64;
    }
    CyclicCharacter::new(order, mults)
}

/// One irreducible summand of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DecompositionTerm {
    /// Highest weight.
    pub highest_weight: Weight,
    /// Number of copies.
    pub multiplicity: u64,
    /// Dimension of one copy.
    pub dimension: u128,
}

/// Greedy leading-weight decomposition into irreducibles, leading weights descending.
pub fn decompose(c: &DominantCharacter, budget: &mut WorkBudget) -> Result<Vec<DecompositionTerm>> {
    let mut remainder = c.clone();
    let mut out = Vec::new();
    while let Some((lead, mult)) = remainder.leading_weight() {
        if mult < 0 {
            return Err(Error::NegativeRemainder { weight: lead.coords().to_vec() });
        }
        let lead = lead.clone();
        let irreducible = freudenthal::irreducible_character(&lead, budget)?;
        remainder = remainder.sub(&irreducible.scale(mult))?;
        out.push(DecompositionTerm {
            dimension: freudenthal::weyl_dimension(&lead)?,
            highest_weight: lead,
            multiplicity: mult as u64,
        });
    }
    Ok(out)
}

/// Re-sum a decomposition into a character.
pub fn recompose(rank: usize, terms: &[DecompositionTerm], budget: &mut WorkBudget) -> Result<DominantCharacter> {
    let mut out = DominantCharacter::new(rank);
    for t in terms {
        let irreducible = freudenthal::irreducible_character(&t.highest_weight, budget)?;
        out = out.add(&irreducible.scale(t.multiplicity as i64))?;
    }
    Ok(out)
}
