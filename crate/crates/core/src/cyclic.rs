//! Eigenvalue-multiplicity vectors of finite-order diagonalizable operators.
//!
//! A [`CyclicCharacter`] of order `n` stores, at index `i`, the multiplicity
//! of the eigenvalue `exp(2πi·i/n)`. Binary operations on characters of
//! different orders first lift both operands to the least common multiple of
//! the orders by rescaling exponents.
//!
//! Symmetric and exterior powers are computed from the generating functions
//! `Π (1 − ζ^i t)^(−m_i)` and `Π (1 + ζ^i t)^(m_i)`. The [`newton`] submodule
//! computes the same powers through Adams operations and the Newton
//! identities; each route is the oracle for the other.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Character of a finite-order diagonalizable operator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CyclicCharacter {
    order: u32,
    mults: Vec<u64>,
}

/// Integer-valued difference of characters, possibly with negative entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VirtualCyclicCharacter {
    order: u32,
    mults: Vec<i64>,
}

fn checked_order(order: u32) -> Result<usize> {
    if order == 0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(order as usize)
    }
}

fn lcm_order(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Index of `k` modulo `n`, for any signed `k`.
fn wrap(k: i64, n: u32) -> usize {
    k.rem_euclid(n as i64) as usize
}

/// Binomial coefficient with overflow detection.
pub(crate) fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc.checked_mul((n - t) as u128).ok_or(Error::Overflow)? / (t as u128 + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

impl CyclicCharacter {
    /// Validated constructor.
    pub fn new(order: u32, mults: Vec<u64>) -> Result<Self> {
        let n = checked_order(order)?;
        if mults.len() != n {
            return Err(Error::LengthMismatch { order, len: mults.len() });
        }
        Ok(CyclicCharacter { order, mults })
    }

    /// Constructor from a signed vector, rejecting negative entries.
    pub fn from_signed(order: u32, mults: &[i64]) -> Result<Self> {
        let n = checked_order(order)?;
        if mults.len() != n {
            return Err(Error::LengthMismatch { order, len: mults.len() });
        }
        let mults = mults
            .iter()
            .enumerate()
            .map(|(index, &value)| u64::try_from(value).map_err(|_| Error::NegativeMultiplicity { index, value }))
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclicCharacter { order, mults })
    }

    /// The identity operator on a space of dimension `dim`.
    pub fn identity(dim: u64) -> Self {
        CyclicCharacter { order: 1, mults: vec![dim] }
    }

    /// The zero-dimensional character of the given order.
    pub fn zero(order: u32) -> Result<Self> {
        let n = checked_order(order)?;
        Ok(CyclicCharacter { order, mults: vec![0; n] })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn mults(&self) -> &[u64] {
        &self.mults
    }

    /// Dimension of the underlying space.
    pub fn dimension(&self) -> u64 {
        self.mults.iter().sum()
    }

    /// Multiplicity of `exp(2πi·k/n)`; `k` is reduced modulo the order.
    pub fn eig(&self, k: i64) -> u64 {
        self.mults[wrap(k, self.order)]
    }

    /// Re-express the character with order `target`, a multiple of the current order.
    pub fn lift(&self, target: u32) -> Result<Self> {
        checked_order(target)?;
        if !target.is_multiple_of(self.order) {
            return Err(Error::UnsupportedOrder(target));
        }
        let step = (target / self.order) as usize;
        let mut mults = vec![0; target as usize];
        for (i, &m) in self.mults.iter().enumerate() {
            mults[i * step] = m;
        }
        Ok(CyclicCharacter { order: target, mults })
    }

    fn lifted_pair(&self, other: &Self) -> (Self, Self) {
        let order = lcm_order(self.order, other.order);
        // lift cannot fail: `order` is a common multiple
        (self.lift(order).unwrap(), other.lift(order).unwrap())
    }

    /// Direct sum: entrywise addition after lifting to a common order.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.lifted_pair(other);
        let mults = a
            .mults
            .iter()
            .zip(&b.mults)
            .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclicCharacter { order: a.order, mults })
    }

    /// Tensor product: cyclic convolution after lifting to a common order.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.lifted_pair(other);
        let n = a.order as usize;
        let mut mults = vec![0u64; n];
        for (i, &x) in a.mults.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.mults.iter().enumerate() {
                let term = x.checked_mul(y).ok_or(Error::Overflow)?;
                let slot = &mut mults[(i + j) % n];
                *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(CyclicCharacter { order: a.order, mults })
    }

    /// Multiply every multiplicity by `factor` (tensor with a `factor`-dimensional identity).
    pub fn scale(&self, factor: u64) -> Result<Self> {
        let mults =
            self.mults.iter().map(|m| m.checked_mul(factor).ok_or(Error::Overflow)).collect::<Result<Vec<_>>>()?;
        Ok(CyclicCharacter { order: self.order, mults })
    }

    /// Character of the `k`-th symmetric power.
    pub fn sym_power(&self, k: usize) -> Result<Self> {
        // power_series skips zero multiplicities, so m >= 1 here
        self.power_series(k, |m, j| binomial(m + j - 1, j))
    }

    /// Character of the `k`-th exterior power.
    pub fn ext_power(&self, k: usize) -> Result<Self> {
        self.power_series(k, binomial)
    }

    /// Degree-`k` coefficient of `Π_i f_{m_i}(ζ^i t)` where `coeff(m, j)` is the
    /// `t^j` coefficient of `f_m`.
    fn power_series(&self, k: usize, coeff: impl Fn(u64, u64) -> Result<u64>) -> Result<Self> {
        let n = self.order as usize;
        let mut series = vec![vec![0u64; n]; k + 1];
        series[0][0] = 1;
        for (i, &m) in self.mults.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let factor = (0..=k as u64).map(|j| coeff(m, j)).collect::<Result<Vec<_>>>()?;
            let mut next = vec![vec![0u64; n]; k + 1];
            for (deg, row) in series.iter().enumerate() {
                for (a, &value) in row.iter().enumerate() {
                    if value == 0 {
                        continue;
                    }
                    for (j, &f) in factor.iter().enumerate().take(k - deg + 1) {
                        if f == 0 {
                            continue;
                        }
                        let term = value.checked_mul(f).ok_or(Error::Overflow)?;
                        let slot = &mut next[deg + j][(a + i * j) % n];
                        *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
                    }
                }
            }
            series = next;
        }
        Ok(CyclicCharacter { order: self.order, mults: series.swap_remove(k) })
    }

    /// Character of the dual (contragredient) operator.
    pub fn dual(&self) -> Self {
        let n = self.order;
        let mults = (0..n as i64).map(|i| self.eig(-i)).collect();
        CyclicCharacter { order: n, mults }
    }

    /// Character of `−γ`, with the order lifted to `lcm(n, 2)`.
    pub fn negate_operator(&self) -> Self {
        let lifted = self.lift(lcm_order(self.order, 2)).unwrap();
        let n = lifted.order as usize;
        let half = n / 2;
        let mut mults = vec![0; n];
        for (i, &m) in lifted.mults.iter().enumerate() {
            mults[(i + half) % n] = m;
        }
        CyclicCharacter { order: lifted.order, mults }
    }

    /// Adams operation `ψ^j`: the character of `γ^j`, kept at the same order.
    pub fn adams(&self, j: u64) -> Self {
        let n = self.order as usize;
        let mut mults = vec![0; n];
        for (i, &m) in self.mults.iter().enumerate() {
            mults[((i as u64 * j) % n as u64) as usize] += m;
        }
        CyclicCharacter { order: self.order, mults }
    }

    /// True iff the multiplicities are constant on every Galois class
    /// `{i : gcd(i, n) = d}`, i.e. the operator is defined over the rationals.
    pub fn is_rational(&self) -> bool {
        let n = self.order as usize;
        let mut class_value: Vec<Option<u64>> = vec![None; n + 1];
        for (i, &m) in self.mults.iter().enumerate() {
            let d = i.gcd(&n);
            match class_value[d] {
                None => class_value[d] = Some(m),
                Some(v) if v != m => return false,
                Some(_) => {}
            }
        }
        true
    }

    /// View as a virtual character.
    pub fn to_virtual(&self) -> Result<VirtualCyclicCharacter> {
        let mults =
            self.mults.iter().map(|&m| i64::try_from(m).map_err(|_| Error::Overflow)).collect::<Result<Vec<_>>>()?;
        Ok(VirtualCyclicCharacter { order: self.order, mults })
    }
}

impl VirtualCyclicCharacter {
    /// Constructor; negative entries are allowed.
    pub fn new(order: u32, mults: Vec<i64>) -> Result<Self> {
        let n = checked_order(order)?;
        if mults.len() != n {
            return Err(Error::LengthMismatch { order, len: mults.len() });
        }
        Ok(VirtualCyclicCharacter { order, mults })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    /// Signed dimension.
    pub fn dimension(&self) -> i64 {
        self.mults.iter().sum()
    }

    /// Signed multiplicity at index `k` (reduced modulo the order).
    pub fn eig(&self, k: i64) -> i64 {
        self.mults[wrap(k, self.order)]
    }

    fn combine(&self, other: &Self, sign: i64) -> Result<Self> {
        let order = lcm_order(self.order, other.order);
        let lift = |c: &Self| {
            let step = (order / c.order) as usize;
            let mut mults = vec![0i64; order as usize];
            for (i, &m) in c.mults.iter().enumerate() {
                mults[i * step] = m;
            }
            mults
        };
        let (a, b) = (lift(self), lift(other));
        let mults = a
            .iter()
            .zip(&b)
            .map(|(x, y)| y.checked_mul(sign).and_then(|y| x.checked_add(y)).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(VirtualCyclicCharacter { order, mults })
    }

    /// Sum of virtual characters.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    /// Difference of virtual characters.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    /// Convert back to a genuine character, failing on any negative entry.
    pub fn certify_non_negative(&self) -> Result<CyclicCharacter> {
        CyclicCharacter::from_signed(self.order, &self.mults)
    }
}

/// Symmetric and exterior powers through Adams operations and the Newton identities
///
/// `k·e_k = Σ_{i=1..k} (−1)^{i−1} ψ^i · e_{k−i}` and `k·h_k = Σ_{i=1..k} ψ^i · h_{k−i}`.
pub mod newton {
    use super::*;

    type Signed = Vec<i128>;

    fn adams_signed(c: &CyclicCharacter, j: usize) -> Signed {
        c.adams(j as u64).mults.iter().map(|&m| m as i128).collect()
    }

    fn convolve(a: &Signed, b: &Signed) -> Result<Signed> {
        let n = a.len();
        let mut out = vec![0i128; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let term = x.checked_mul(y).ok_or(Error::Overflow)?;
                out[(i + j) % n] = out[(i + j) % n].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }

    fn recurrence(c: &CyclicCharacter, k: usize, alternate: bool) -> Result<CyclicCharacter> {
        let n = c.order as usize;
        let mut unit = vec![0i128; n];
        unit[0] = 1;
        let mut terms: Vec<Signed> = vec![unit];
        for degree in 1..=k {
            let mut acc = vec![0i128; n];
            for i in 1..=degree {
                let product = convolve(&adams_signed(c, i), &terms[degree - i])?;
                let negative = alternate && i % 2 == 0;
                for (slot, p) in acc.iter_mut().zip(product) {
                    *slot = if negative { slot.checked_sub(p) } else { slot.checked_add(p) }.ok_or(Error::Overflow)?;
                }
            }
            let divisor = degree as i128;
            if acc.iter().any(|v| v % divisor != 0) {
                return Err(Error::InexactDivision { degree });
            }
            terms.push(acc.into_iter().map(|v| v / divisor).collect());
        }
        let last = terms.swap_remove(k);
        let mults = last
            .into_iter()
            .enumerate()
            .map(|(index, v)| {
                if v < 0 {
                    Err(Error::NegativeMultiplicity { index, value: v as i64 })
                } else {
                    u64::try_from(v).map_err(|_| Error::Overflow)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        CyclicCharacter::new(c.order, mults)
    }

    /// `k`-th symmetric power via `k·h_k = Σ ψ^i h_{k−i}`.
    pub fn sym_power(c: &CyclicCharacter, k: usize) -> Result<CyclicCharacter> {
        recurrence(c, k, false)
    }

    /// `k`-th exterior power via `k·e_k = Σ (−1)^{i−1} ψ^i e_{k−i}`.
    pub fn ext_power(c: &CyclicCharacter, k: usize) -> Result<CyclicCharacter> {
        recurrence(c, k, true)
    }
}
