use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::WorkBudget;
use crate::error::{Error, Result};

/// Integral weight of `D_n` in the standard `ε`-basis.
///
/// The derived ordering is lexicographic. Adding a positive root `εᵢ ± εⱼ`
/// (`i < j`) raises a weight lexicographically, so the lexicographic maximum
/// of a set of weights is maximal for the dominance order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Weight(Vec<i32>);

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Weight {
    pub fn new(coords: Vec<i32>) -> Self {
        Weight(coords)
    }

    /// Zero weight of the given rank.
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `leading` padded with zeros to length `rank`, e.g. `(2,2,0,…,0)`.
    pub fn padded(rank: usize, leading: &[i32]) -> Result<Self> {
        if leading.len() > rank {
            return Err(Error::RankMismatch { expected: rank, found: leading.len() });
        }
        let mut coords = vec![0; rank];
        coords[..leading.len()].copy_from_slice(leading);
        Ok(Weight(coords))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    /// `λ₁ ≥ λ₂ ≥ … ≥ λ_{n−1} ≥ |λ_n|`.
    pub fn is_dominant(&self) -> bool {
        let c = &self.0;
        let n = c.len();
        if n == 0 {
            return true;
        }
        c.windows(2).take(n.saturating_sub(2)).all(|w| w[0] >= w[1]) && (n < 2 || c[n - 2] >= c[n - 1].abs())
    }

    /// The unique dominant weight in the Weyl orbit.
    pub fn dominant_representative(&self) -> Weight {
        let mut abs: Vec<i32> = self.0.iter().map(|c| c.abs()).collect();
        abs.sort_unstable_by(|a, b| b.cmp(a));
        let negatives = self.0.iter().filter(|&&c| c < 0).count();
        if let Some(last) = abs.last_mut() {
            // an odd number of sign changes survives only when no coordinate is zero
            if negatives % 2 == 1 && *last != 0 {
                *last = -*last;
            }
        }
        Weight(abs)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `k·self`.
    pub fn scale(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Standard inner product.
    pub fn dot(&self, other: &Weight) -> i64 {
        self.0.iter().zip(&other.0).map(|(&a, &b)| a as i64 * b as i64).sum()
    }

    /// Number of distinct weights in the Weyl orbit.
    pub fn orbit_size(&self) -> u128 {
        let dom = self.dominant_representative();
        let n = dom.rank();
        let mut size: u128 = (1..=n as u128).product();
        let mut run = 1u128;
        for i in 1..=n {
            if i < n && dom.0[i].abs() == dom.0[i - 1].abs() {
                run += 1;
            } else {
                size /= (1..=run).product::<u128>();
                run = 1;
            }
        }
        let nonzero = dom.0.iter().filter(|&&c| c != 0).count() as u32;
        let signs = if nonzero as usize == n && n > 0 { 1u128 << (nonzero - 1) } else { 1u128 << nonzero };
        size * signs
    }

    /// Every weight in the Weyl orbit (signed permutations with an even
    /// number of sign changes), in lexicographic order.
    pub fn orbit(&self, budget: &mut WorkBudget) -> Result<Vec<Weight>> {
        let dom = self.dominant_representative();
        let n = dom.rank();
        let mut values: Vec<(i32, usize)> = Vec::new();
        for &c in &dom.0 {
            match values.last_mut() {
                Some((v, count)) if *v == c.abs() => *count += 1,
                _ => values.push((c.abs(), 1)),
            }
        }
        let all_nonzero = dom.0.iter().all(|&c| c != 0);
        let odd_parity = dom.0.iter().filter(|&&c| c < 0).count() % 2;

        let mut out = Vec::new();
        let mut current = vec![0i32; n];
        permute(&mut values, &mut current, 0, &mut |perm| {
            let nonzero: Vec<usize> = (0..n).filter(|&i| perm[i] != 0).collect();
            for mask in 0u64..(1u64 << nonzero.len()) {
                if all_nonzero && (mask.count_ones() as usize % 2) != odd_parity {
                    continue;
                }
                budget.spend(1)?;
                let mut w = perm.to_vec();
                for (bit, &pos) in nonzero.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        w[pos] = -w[pos];
                    }
                }
                out.push(Weight(w));
            }
            Ok(())
        })?;
        out.sort_unstable();
        Ok(out)
    }
}

/// Distinct permutations of the multiset `values` (value, remaining count).
fn permute(
    values: &mut [(i32, usize)],
    current: &mut [i32],
    pos: usize,
    emit: &mut impl FnMut(&[i32]) -> Result<()>,
) -> Result<()> {
    if pos == current.len() {
        return emit(current);
    }
    for i in 0..values.len() {
        if values[i].1 == 0 {
            continue;
        }
        values[i].1 -= 1;
        current[pos] = values[i].0;
        let r = permute(values, current, pos + 1, emit);
        values[i].1 += 1;
        r?;
    }
    Ok(())
}

/// Positive roots `εᵢ − εⱼ` and `εᵢ + εⱼ` (`i < j`) of `D_n`.
pub fn positive_roots(rank: usize) -> Vec<Weight> {
    let mut roots = Vec::with_capacity(rank * rank.saturating_sub(1));
    for i in 0..rank {
        for j in i + 1..rank {
            let mut minus = vec![0; rank];
            minus[i] = 1;
            minus[j] = -1;
            let mut plus = vec![0; rank];
            plus[i] = 1;
            plus[j] = 1;
            roots.push(Weight(minus));
            roots.push(Weight(plus));
        }
    }
    roots
}

/// Half the sum of the positive roots: `(n−1, n−2, …, 1, 0)`.
pub fn rho(rank: usize) -> Weight {
    Weight((0..rank).rev().map(|c| c as i32).collect())
}

/// Whether `x` is a non-negative integer combination of simple roots, and its height.
///
/// With simple roots `εᵢ − εᵢ₊₁` and `ε_{n−1} + ε_n` and partial sums `S_k`,
/// the coefficients are `S_k` for `k ≤ n−2`, `(S_{n−1} − x_n)/2` and `S_n/2`.
pub fn positive_cone_height(x: &Weight) -> Option<i64> {
    let c = x.coords();
    let n = c.len();
    if n < 2 {
        return None;
    }
    let mut partial = 0i64;
    let mut height = 0i64;
    for &v in &c[..n - 2] {
        partial += v as i64;
        if partial < 0 {
            return None;
        }
        height += partial;
    }
    let s_n1 = partial + c[n - 2] as i64;
    let s_n = s_n1 + c[n - 1] as i64;
    let twice_c_n1 = s_n1 - c[n - 1] as i64;
    if s_n < 0 || twice_c_n1 < 0 || s_n % 2 != 0 {
        return None;
    }
    Some(height + twice_c_n1 / 2 + s_n / 2)
}
