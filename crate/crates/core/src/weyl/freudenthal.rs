use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use num_integer::Integer;

use super::weight::{positive_cone_height, positive_roots, rho};
use super::{check_rank, DominantCharacter, Weight, WorkBudget};
use crate::error::{Error, Result};

fn require_dominant(highest: &Weight) -> Result<()> {
    check_rank(highest.rank())?;
    if !highest.is_dominant() {
        return Err(Error::NotDominant(highest.coords().to_vec()));
    }
    Ok(())
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(highest: &Weight) -> Result<u128> {
    require_dominant(highest)?;
    let rank = highest.rank();
    let shifted = highest.add(&rho(rank));
    let rho = rho(rank);
    let (mut numer, mut denom) = (1u128, 1u128);
    for alpha in positive_roots(rank) {
        let mut a = shifted.dot(&alpha) as u128;
        let mut b = rho.dot(&alpha) as u128;
        // cross-cancel before multiplying to keep the running values small
        let g = a.gcd(&denom);
        a /= g;
        denom /= g;
        let g = b.gcd(&numer);
        b /= g;
        numer /= g;
        numer = numer.checked_mul(a).ok_or(Error::Overflow)?;
        denom = denom.checked_mul(b).ok_or(Error::Overflow)?;
        let g = numer.gcd(&denom);
        numer /= g;
        denom /= g;
    }
    debug_assert_eq!(denom, 1);
    Ok(numer / denom)
}

/// Dominant weights of the irreducible module with highest weight `highest`,
/// with their heights below it.
///
/// Every dominant `μ < λ` has a positive root `α` with `μ + α` dominant and
/// `≤ λ`, so stepping down by single positive roots from `λ` reaches them all.
fn dominant_weights_below(highest: &Weight, budget: &mut WorkBudget) -> Result<Vec<(i64, Weight)>> {
    let roots = positive_roots(highest.rank());
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(highest.clone());
    queue.push_back(highest.clone());
    while let Some(mu) = queue.pop_front() {
        for alpha in &roots {
            budget.spend(1)?;
            let nu = mu.sub(alpha).dominant_representative();
            if !seen.contains(&nu) && positive_cone_height(&highest.sub(&nu)).is_some() {
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<(i64, Weight)> = seen
        .into_iter()
        .map(|w| {
            // every weight in `seen` passed the cone test (or is the highest weight)
            let h = positive_cone_height(&highest.sub(&w)).unwrap_or(0);
            (h, w)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Dominant weight multiplicities of the irreducible module, via Freudenthal:
/// `(|λ+ρ|² − |μ+ρ|²)·m(μ) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα)·(μ+kα, α)`.
pub fn irreducible_character(highest: &Weight, budget: &mut WorkBudget) -> Result<DominantCharacter> {
    require_dominant(highest)?;
    let rank = highest.rank();
    let roots = positive_roots(rank);
    let rho = rho(rank);
    let top = highest.add(&rho);
    let top_norm = top.dot(&top);

    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    for (height, mu) in dominant_weights_below(highest, budget)? {
        if height == 0 {
            mult.insert(mu, 1);
            continue;
        }
        let mut sum = 0i64;
        for alpha in &roots {
            let mut k = 1;
            loop {
                budget.spend(1)?;
                let shifted = mu.add(&alpha.scale(k));
                let Some(&m) = mult.get(&shifted.dominant_representative()) else {
                    break;
                };
                sum += m * shifted.dot(alpha);
                k += 1;
            }
        }
        let shifted = mu.add(&rho);
        let gap = top_norm - shifted.dot(&shifted);
        let (q, r) = (2 * sum).div_rem(&gap);
        if gap <= 0 || r != 0 {
            return Err(Error::InexactDivision { degree: height as usize });
        }
        mult.insert(mu, q);
    }
    DominantCharacter::from_weights(rank, mult.into_iter().filter(|(_, m)| *m != 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn padded(rank: usize, lead: &[i32]) -> Weight {
        Weight::padded(rank, lead).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(weyl_dimension(&padded(13, &[1])).unwrap(), 26);
        assert_eq!(weyl_dimension(&padded(13, &[5])).unwrap(), 139230);
        assert_eq!(weyl_dimension(&padded(13, &[2, 2])).unwrap(), 37674);
        assert_eq!(weyl_dimension(&padded(13, &[2])).unwrap(), 350);
        assert_eq!(weyl_dimension(&padded(13, &[1, 1])).unwrap(), 325);
        assert_eq!(weyl_dimension(&Weight::zero(13)).unwrap(), 1);
        // D4 triality: the two half-spin-like pieces of Λ⁴
        assert_eq!(weyl_dimension(&padded(4, &[1, 1, 1, 1])).unwrap(), 35);
        assert_eq!(weyl_dimension(&Weight::new(alloc::vec![1, 1, 1, -1])).unwrap(), 35);
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(matches!(weyl_dimension(&Weight::new(alloc::vec![0, 1, 0])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn small_irreducibles() {
        let mut budget = WorkBudget::default();
        let v = irreducible_character(&padded(13, &[1]), &mut budget).unwrap();
        assert_eq!(v, DominantCharacter::vector(13).unwrap());
        let triv = irreducible_character(&Weight::zero(13), &mut budget).unwrap();
        assert_eq!(triv, DominantCharacter::trivial(13));
        let s2 = irreducible_character(&padded(13, &[2]), &mut budget).unwrap();
        assert_eq!(s2.expanded_size(), 350);
        assert_eq!(s2.multiplicity(&padded(13, &[2])), 1);
        assert_eq!(s2.multiplicity(&padded(13, &[1, 1])), 1);
        assert_eq!(s2.multiplicity(&Weight::zero(13)), 12);
    }

    #[test]
    fn freudenthal_sizes_match_weyl_dimension() {
        let mut budget = WorkBudget::default();
        for (rank, lead) in [
            (13, &[2, 2][..]),
            (13, &[5]),
            (13, &[2, 1, 1]),
            (13, &[1, 1, 1, 1]),
            (5, &[3, 1, 1]),
            (4, &[1, 1, 1, 1]),
            (4, &[2, 1, 1, -1]),
            (3, &[2, 2]),
        ] {
            let w = padded(rank, lead);
            let c = irreducible_character(&w, &mut budget).unwrap();
            assert!(c.is_genuine());
            assert_eq!(c.expanded_size() as u128, weyl_dimension(&w).unwrap(), "{w}");
        }
    }
}
