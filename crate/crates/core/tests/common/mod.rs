//! Brute-force oracles that share no code with the library: every basis
//! vector of a tensor construction is enumerated explicitly and its
//! eigenvalue exponent is read off.
#![allow(dead_code)]

use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// Fixed-seed runner so every run draws the same cases.
pub fn seeded_runner(cases: u32) -> TestRunner {
    let seed = [0x5eu8; 32];
    TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        TestRng::from_seed(RngAlgorithm::ChaCha, &seed),
    )
}

/// Eigenvalue exponents, one per basis vector.
pub fn basis(mults: &[u64]) -> Vec<usize> {
    mults.iter().enumerate().flat_map(|(k, &m)| std::iter::repeat_n(k, m as usize)).collect()
}

/// Histogram of exponents mod `n`.
pub fn histogram(exps: impl IntoIterator<Item = usize>, n: usize) -> Vec<u64> {
    let mut h = vec![0u64; n];
    for e in exps {
        h[e % n] += 1;
    }
    h
}

/// Exponents of the monomial basis of `Sym^k`: non-decreasing index tuples.
pub fn sym_exponents(exps: &[usize], k: usize, n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    walk(exps, k, 0, 0, true, n, &mut out);
    out
}

/// Exponents of `e_{i1} ∧ … ∧ e_{ik}`, `i1 < … < ik`.
pub fn ext_exponents(exps: &[usize], k: usize, n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    walk(exps, k, 0, 0, false, n, &mut out);
    out
}

fn walk(exps: &[usize], left: usize, start: usize, acc: usize, repeat: bool, n: usize, out: &mut Vec<usize>) {
    if left == 0 {
        out.push(acc % n);
        return;
    }
    for i in start..exps.len() {
        let next = if repeat { i } else { i + 1 };
        walk(exps, left - 1, next, acc + exps[i], repeat, n, out);
    }
}

pub fn sym_hist(mults: &[u64], k: usize) -> Vec<u64> {
    let n = mults.len();
    histogram(sym_exponents(&basis(mults), k, n), n)
}

pub fn ext_hist(mults: &[u64], k: usize) -> Vec<u64> {
    let n = mults.len();
    histogram(ext_exponents(&basis(mults), k, n), n)
}

/// Everything the feasibility argument needs for one `H²` character of order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteTotals {
    pub verbitsky: i64,
    pub v22: i64,
    pub total_a: i64,
    /// `verbitsky + eig(−γ, V(2,2), 1)` for even order.
    pub total_b: Option<i64>,
}

fn diff(a: &[u64], b: &[u64]) -> Vec<i64> {
    a.iter().zip(b).map(|(&x, &y)| x as i64 - y as i64).collect()
}

/// `V = H² ⊕ U`, `V(5) = Sym⁵V − Sym³V`, `V(2,2) = Sym²Λ²V − Sym²V − Λ⁴V`.
pub fn brute_totals(h2: &[u64]) -> BruteTotals {
    let n = h2.len();
    let mut v = h2.to_vec();
    v[0] += 2;
    let e = basis(&v);
    let verb = diff(&histogram(sym_exponents(&e, 5, n), n), &histogram(sym_exponents(&e, 3, n), n));
    let ext2 = ext_exponents(&e, 2, n);
    let s2e2 = histogram(sym_exponents(&ext2, 2, n), n);
    let s2 = histogram(sym_exponents(&e, 2, n), n);
    let e4 = histogram(ext_exponents(&e, 4, n), n);
    let v22: Vec<i64> = (0..n).map(|k| s2e2[k] as i64 - s2[k] as i64 - e4[k] as i64).collect();
    BruteTotals {
        verbitsky: verb[0],
        v22: v22[0],
        total_a: verb[0] + v22[0],
        total_b: n.is_multiple_of(2).then(|| verb[0] + v22[n / 2]),
    }
}

/// `H²` for order 2 with invariant dimension `r`.
pub fn order2(r: u64) -> Vec<u64> {
    vec![r, 24 - r]
}

/// `H²` for order 3 with invariant dimension `2r`.
pub fn order3(r: u64) -> Vec<u64> {
    vec![2 * r, 12 - r, 12 - r]
}

pub mod props;
