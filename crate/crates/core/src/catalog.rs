//! Named ideals used by the reproduction suite, the CLI and the tests.

use crate::borel::principal_borel;
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial, VarSet};

/// The five-cycle with one squared vertex, `(x1x2, x2x3, x3x4, x4x5, x5x1^2)`.
pub fn squared_cycle() -> MonomialIdeal {
    let gens = [
        [1, 1, 0, 0, 0],
        [0, 1, 1, 0, 0],
        [0, 0, 1, 1, 0],
        [0, 0, 0, 1, 1],
        [2, 0, 0, 0, 1],
    ]
    .into_iter()
    .map(|e| Monomial::new(e.to_vec()).expect("small degree"));
    MonomialIdeal::minimalize(gens, 5).expect("five variables")
}

/// The four primes `(x1,x2), (x2,x3), (x2,x4), (x3,x4)` in four variables.
pub fn four_primes() -> Vec<MonomialIdeal> {
    [[0, 1], [1, 2], [1, 3], [2, 3]]
        .iter()
        .map(|p| MonomialIdeal::prime(VarSet::from_indices(p.iter().copied()), 4))
        .collect()
}

/// `(x1,x2) ∩ (x2,x3) ∩ (x2,x4) ∩ (x3,x4)`.
pub fn four_primes_intersection() -> Result<MonomialIdeal> {
    MonomialIdeal::intersect_all(&four_primes())
}

/// The degree-3 monomials in `n` variables with every exponent at most 2.
pub fn bounded_cubics(n: usize) -> Result<MonomialIdeal> {
    let gens = monomials_of_degree(n, 3)?
        .into_iter()
        .filter(|u| u.is_bounded(2));
    MonomialIdeal::minimalize(gens, n)
}

/// The transversal ideal `(x1,x2)(x2,x3)` in three variables.
pub fn transversal_example() -> Result<MonomialIdeal> {
    let p = MonomialIdeal::prime(VarSet::from_indices([0, 1]), 3);
    let q = MonomialIdeal::prime(VarSet::from_indices([1, 2]), 3);
    p.product(&q)
}

/// Every squarefree `u` divisible by `x_n`, for `n` in `1..=max_n` and
/// `deg(u) ≤ max_deg`.
pub fn squarefree_last_variable_monomials(max_n: usize, max_deg: usize) -> Vec<Monomial> {
    use itertools::Itertools;

    let mut out = Vec::new();
    for n in 1..=max_n {
        for d in 1..=max_deg.min(n) {
            for rest in (0..n - 1).combinations(d - 1) {
                let mut idx = rest;
                idx.push(n - 1);
                out.push(Monomial::from_indices(&idx, n).expect("small degree"));
            }
        }
    }
    out
}

/// `B(x2x3)` in three variables.
pub fn borel_x2x3() -> Result<MonomialIdeal> {
    principal_borel(&Monomial::new(vec![0, 1, 1])?)
}
