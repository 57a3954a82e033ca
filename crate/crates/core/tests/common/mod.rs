//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works on raw exponent vectors and ideal membership only.
//! The one library call is `gens()` to read a generating set; no colon,
//! intersection, saturation or closure code from the crate is reused.
//!
//! The box arguments: for an ideal generated in exponents `≤ a`, membership
//! of `w` depends only on `min(w, a)`, so every ideal built from such ideals
//! by colons and intersections has its generators in the box `[0, a]`, and
//! every monomial of `I^sat \ I` lies strictly inside it.

#![allow(dead_code)]

use std::collections::BTreeSet;

use monsat::{Monomial, MonomialIdeal};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Exps = Vec<u32>;

pub fn exps(ideal: &MonomialIdeal) -> Vec<Exps> {
    ideal
        .gens()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn member(gens: &[Exps], w: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, w))
}

pub fn times(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn of_degree(n: usize, d: u32) -> Vec<Exps> {
    fn go(n: usize, d: u32, prefix: &mut Exps, out: &mut Vec<Exps>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// All `w` with `0 ≤ w_i ≤ bound_i`.
pub fn boxed(bounds: &[u32]) -> Vec<Exps> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn max_exponents(gens: &[Exps], n: usize) -> Exps {
    (0..n)
        .map(|i| gens.iter().map(|g| g[i]).max().unwrap_or(0))
        .collect()
}

pub fn unit_vec(i: usize, n: usize, e: u32) -> Exps {
    let mut v = vec![0; n];
    v[i] = e;
    v
}

/// Brute-force description of `M = I^sat / I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientOracle {
    /// `(degree, count)` of the monomials of `M`, ascending.
    pub per_degree: Vec<(u32, u64)>,
    pub sigma: u32,
    /// Least `k` with `m^k M = 0`; equal to the saturation number.
    pub gamma: u32,
}

pub fn quotient_oracle(ideal: &MonomialIdeal) -> QuotientOracle {
    let n = ideal.nvars();
    let gens = exps(ideal);
    let a = max_exponents(&gens, n);
    let in_sat =
        |w: &Exps| (0..n).all(|j| (0..=a[j]).any(|t| member(&gens, &times(w, &unit_vec(j, n, t)))));
    let inner: Vec<u32> = a.iter().map(|&x| x.saturating_sub(1)).collect();
    // A variable missing from every generator leaves the box empty: x_i is then a nonzerodivisor.
    let module: Vec<Exps> = boxed(&inner)
        .into_iter()
        .filter(|w| w.iter().zip(&a).all(|(x, y)| x < y))
        .filter(|w| !member(&gens, w) && in_sat(w))
        .collect();
    let mut per_degree = std::collections::BTreeMap::new();
    for w in &module {
        *per_degree.entry(w.iter().sum::<u32>()).or_insert(0u64) += 1;
    }
    let per_degree: Vec<(u32, u64)> = per_degree.into_iter().collect();
    let sigma = match (per_degree.first(), per_degree.last()) {
        (Some(&(lo, _)), Some(&(hi, _))) => hi - lo + 1,
        _ => 0,
    };
    let mut gamma = 0;
    if !module.is_empty() {
        gamma = 1;
        loop {
            let vs = of_degree(n, gamma);
            if module
                .iter()
                .all(|w| vs.iter().all(|v| member(&gens, &times(w, v))))
            {
                break;
            }
            gamma += 1;
        }
    }
    QuotientOracle {
        per_degree,
        sigma,
        gamma,
    }
}

pub fn sat_oracle(ideal: &MonomialIdeal) -> u32 {
    quotient_oracle(ideal).gamma
}

/// Associated primes by witnesses: `I : w = P_F` exactly when `w ∉ I`,
/// `F = {i : x_i w ∈ I}`, and `w` times a high power of every variable
/// outside `F` is still not in `I`.
pub fn ass_oracle(ideal: &MonomialIdeal) -> BTreeSet<Vec<usize>> {
    let n = ideal.nvars();
    let gens = exps(ideal);
    let a = max_exponents(&gens, n);
    let mut out = BTreeSet::new();
    for w in boxed(&a) {
        if member(&gens, &w) {
            continue;
        }
        let f: Vec<usize> = (0..n)
            .filter(|&i| member(&gens, &times(&w, &unit_vec(i, n, 1))))
            .collect();
        let mut lifted = w.clone();
        for j in (0..n).filter(|j| !f.contains(j)) {
            lifted[j] += a[j];
        }
        if !member(&gens, &lifted) && !f.is_empty() {
            out.insert(f.iter().map(|i| i + 1).collect());
        }
    }
    out
}

/// Fixpoint of the moves `u ↦ x_i u / x_j` (`i < j`) that keep every
/// exponent at most `k`.
pub fn borel_oracle(gens: &[Exps], k: u32) -> BTreeSet<Exps> {
    let mut set: BTreeSet<Exps> = gens.iter().cloned().collect();
    loop {
        let mut grown = set.clone();
        for u in &set {
            for j in 0..u.len() {
                for i in 0..j {
                    if u[j] > 0 && u[i] < k {
                        let mut v = u.clone();
                        v[j] -= 1;
                        v[i] += 1;
                        grown.insert(v);
                    }
                }
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

/// Symmetric exchange on the generator set, checked pair by pair.
pub fn exchange_oracle(ideal: &MonomialIdeal) -> bool {
    let gens: BTreeSet<Exps> = exps(ideal).into_iter().collect();
    let n = ideal.nvars();
    let degrees: BTreeSet<u32> = gens.iter().map(|g| g.iter().sum()).collect();
    if degrees.len() != 1 {
        return false;
    }
    gens.iter().all(|u| {
        gens.iter().all(|v| {
            (0..n).filter(|&i| u[i] > v[i]).all(|i| {
                (0..n).filter(|&j| u[j] < v[j]).any(|j| {
                    let mut w = u.clone();
                    w[i] -= 1;
                    w[j] += 1;
                    gens.contains(&w)
                })
            })
        })
    })
}

/// Membership in `⋂ P_F^a`: `w` qualifies when `Σ_{i∈F} w_i ≥ a` for every component.
pub fn in_prime_powers(components: &[(Vec<usize>, u32)], w: &[u32]) -> bool {
    components
        .iter()
        .all(|(f, a)| f.iter().map(|&i| w[i]).sum::<u32>() >= *a)
}

pub fn ideal(n: usize, gens: &[Exps]) -> MonomialIdeal {
    MonomialIdeal::minimalize(gens.iter().map(|g| Monomial::new(g.clone()).unwrap()), n).unwrap()
}

/// A random exponent vector of degree `1..=max_deg`.
pub fn random_exps(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> Exps {
    let d = rng.gen_range(1..=max_deg);
    let mut e = vec![0; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

/// A random nonzero ideal with `n ≤ max_n`, at most `max_gens` generators of degree at most `max_deg`.
pub fn random_ideal(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    max_gens: usize,
    max_deg: u32,
) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_n);
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Exps> = (0..count).map(|_| random_exps(rng, n, max_deg)).collect();
    ideal(n, &gens)
}

pub fn random_ideal_in(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_gens: usize,
    max_deg: u32,
) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Exps> = (0..count).map(|_| random_exps(rng, n, max_deg)).collect();
    ideal(n, &gens)
}
