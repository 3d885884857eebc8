//! Randomized property runs, shared by the property tests and the acceptance suite.
//! Each returns the number of cases checked or the first counterexample.

use og10_llv::cyclic::newton;
use og10_llv::mukai::{graded_verbitsky_invariants, total_invariants, v22_character, verbitsky_character};
use og10_llv::weyl::{char_ext_power, char_sym_power, irreducible_character, torus_specialize, WorkBudget};
use og10_llv::{CyclicCharacter, ManifoldProfile, Weight};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::{ext_hist, seeded_runner, sym_hist};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A rational character of order `n` and dimension `dim`: one multiplicity per
/// gcd class, drawn from `draws`, with the class of `0` absorbing the rest.
pub fn rational_from_draws(n: usize, dim: u64, draws: &[u64]) -> Vec<u64> {
    let mut mults = vec![0u64; n];
    let mut remaining = dim;
    let divisors: Vec<usize> = (1..n).filter(|g| n.is_multiple_of(*g)).collect();
    for (i, &g) in divisors.iter().enumerate() {
        let class: Vec<usize> = (1..n).filter(|&k| gcd(k, n) == g).collect();
        let size = class.len() as u64;
        let m = draws[i % draws.len()].min(remaining / size);
        remaining -= m * size;
        for k in class {
            mults[k] = m;
        }
    }
    mults[0] = remaining;
    mults
}

fn rational_strategy(max_order: usize, dims: std::ops::RangeInclusive<u64>) -> impl Strategy<Value = Vec<u64>> {
    (1..=max_order, dims, prop::collection::vec(0u64..=4, 6))
        .prop_map(|(n, dim, draws)| rational_from_draws(n, dim, &draws))
}

fn any_character(max_order: usize, max_dim: u64) -> impl Strategy<Value = Vec<u64>> {
    (1..=max_order)
        .prop_flat_map(move |n| prop::collection::vec(0..=max_dim, n))
        .prop_filter("dimension bound", move |m| m.iter().sum::<u64>() <= max_dim)
}

fn ch(mults: &[u64]) -> CyclicCharacter {
    CyclicCharacter::new(mults.len() as u32, mults.to_vec()).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn finish(cases: u32, r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>) -> Result<u32, String> {
    r.map(|_| cases).map_err(|e| e.to_string())
}

/// Generating-function powers agree with the Newton recurrence, whose exact
/// divisions never fail.
pub fn newton_integrality(cases: u32) -> Result<u32, String> {
    let mut runner = seeded_runner(cases);
    let r = runner.run(&(any_character(12, 20), 0usize..=8), |(m, k)| {
        let c = ch(&m);
        let ns = newton::sym_power(&c, k).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let ne = newton::ext_power(&c, k).map_err(|e| TestCaseError::fail(e.to_string()))?;
        check(ns == c.sym_power(k).unwrap(), || format!("sym {k} of {m:?}"))?;
        check(ne == c.ext_power(k).unwrap(), || format!("ext {k} of {m:?}"))
    });
    finish(cases, r)
}

/// The virtual characters of both LLV components certify as genuine.
pub fn non_negativity(cases: u32) -> Result<u32, String> {
    let mut runner = seeded_runner(cases);
    let r = runner.run(&(rational_strategy(12, 2..=24), prop::sample::select(vec![2u64, 4, 6, 10])), |(h2, cdim)| {
        let mut v = h2.clone();
        v[0] += 2;
        let v = ch(&v);
        let verb = verbitsky_character(&v, (cdim / 2) as usize);
        let v22 = v22_character(&v);
        check(verb.is_ok() && v22.is_ok(), || format!("{h2:?} dim {cdim}: {verb:?} {v22:?}"))
    });
    finish(cases, r)
}

/// Sym, ext, tensor, dual and negation keep rational characters rational,
/// and rational characters are self-dual.
pub fn rationality_and_duality(cases: u32) -> Result<u32, String> {
    let mut runner = seeded_runner(cases);
    let r = runner.run(&(rational_strategy(12, 0..=10), rational_strategy(12, 0..=6), 0usize..=4), |(a, b, k)| {
        let (ca, cb) = (ch(&a), ch(&b));
        check(ca.is_rational() && cb.is_rational(), || format!("generator {a:?} {b:?}"))?;
        let derived = [
            ca.sym_power(k).unwrap(),
            ca.ext_power(k).unwrap(),
            ca.tensor(&cb).unwrap(),
            ca.direct_sum(&cb).unwrap(),
            ca.dual(),
            ca.negate_operator(),
        ];
        for d in &derived {
            check(d.is_rational(), || format!("{d:?} from {a:?}, {b:?}, k={k}"))?;
            let n = d.order() as i64;
            for i in 0..n {
                check(d.eig(i) == d.eig(-i), || format!("eig({i}) != eig(-{i}) for {d:?}"))?;
            }
            check(d.dual() == *d, || format!("dual of {d:?}"))?;
        }
        Ok(())
    });
    finish(cases, r)
}

/// Sym and ext powers match explicit basis enumeration for dimension ≤ 6, order ≤ 6.
pub fn brute_force_powers(cases: u32) -> Result<u32, String> {
    let mut runner = seeded_runner(cases);
    let r = runner.run(&(any_character(6, 6), 0usize..=7), |(m, k)| {
        let c = ch(&m);
        let s = c.sym_power(k).unwrap();
        let e = c.ext_power(k).unwrap();
        check(s.mults() == sym_hist(&m, k).as_slice(), || format!("sym {k} of {m:?}: {s:?}"))?;
        check(e.mults() == ext_hist(&m, k).as_slice(), || format!("ext {k} of {m:?}: {e:?}"))
    });
    finish(cases, r)
}

/// The harmonic and graded Verbitsky counts agree on rational `H²` of order ≤ 12.
pub fn route_equality(cases: u32) -> Result<u32, String> {
    let og10 = ManifoldProfile::og10();
    let mut runner = seeded_runner(cases);
    let r = runner.run(&rational_strategy(12, 24..=24), |h2| {
        let c = ch(&h2);
        let harmonic = total_invariants(&c, &og10).unwrap().verbitsky_fixed;
        let graded = graded_verbitsky_invariants(&c, &og10).unwrap();
        check(harmonic == graded, || format!("{h2:?}: {harmonic} vs {graded}"))
    });
    finish(cases, r)
}

/// Torus specialization commutes with sym and ext powers for rank ≤ 5, order ≤ 6.
pub fn commuting_square(cases: u32) -> Result<u32, String> {
    let highest: Vec<&[i32]> = vec![&[1], &[1, 1], &[2], &[0]];
    let strategy =
        (2usize..=5, 1u32..=6, prop::collection::vec(-6i64..=6, 5), prop::sample::select(highest), 0usize..=3);
    let mut runner = seeded_runner(cases);
    let r = runner.run(&strategy, |(rank, order, assignment, lead, k)| {
        let mut budget = WorkBudget::default();
        let base = irreducible_character(&Weight::padded(rank, lead).unwrap(), &mut budget).unwrap();
        let a = &assignment[..rank];
        let cyc = torus_specialize(&base, a, order, &mut budget).unwrap();
        let s = torus_specialize(&char_sym_power(&base, k, &mut budget).unwrap(), a, order, &mut budget).unwrap();
        let e = torus_specialize(&char_ext_power(&base, k, &mut budget).unwrap(), a, order, &mut budget).unwrap();
        check(s == cyc.sym_power(k).unwrap(), || format!("sym {k}, rank {rank}, {lead:?}, {a:?} mod {order}"))?;
        check(e == cyc.ext_power(k).unwrap(), || format!("ext {k}, rank {rank}, {lead:?}, {a:?} mod {order}"))
    });
    finish(cases, r)
}
