//! Polymatroidal ideals: recognition, rank functions and the intersection
//! presentation over τ-closed, τ-inseparable subsets.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::monomial::{Monomial, VarSet};
use crate::presentation::IntersectionPresentation;

/// A witness that an ideal is not polymatroidal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolymatroidViolation {
    Zero,
    NotEquigenerated {
        low: u32,
        high: u32,
    },
    /// `deg_{x_i}(u) > deg_{x_i}(v)` but no admissible exchange `x_j(u/x_i)` lies in `I`.
    Exchange {
        u: Monomial,
        v: Monomial,
        i: usize,
    },
}

impl fmt::Display for PolymatroidViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolymatroidViolation::Zero => f.write_str("zero ideal"),
            PolymatroidViolation::NotEquigenerated { low, high } => {
                write!(f, "generators in degrees {low} and {high}")
            }
            PolymatroidViolation::Exchange { u, v, i } => {
                write!(f, "exchange fails for u={u}, v={v}, i={}", i + 1)
            }
        }
    }
}

/// Checks the symmetric exchange axiom over all ordered pairs of generators.
pub fn check_polymatroidal(ideal: &MonomialIdeal) -> std::result::Result<(), PolymatroidViolation> {
    let gens = ideal.gens();
    let (first, last) = match (gens.first(), gens.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(PolymatroidViolation::Zero),
    };
    if first.degree() != last.degree() {
        return Err(PolymatroidViolation::NotEquigenerated {
            low: first.degree(),
            high: last.degree(),
        });
    }
    let members = ideal.gen_set();
    let n = ideal.nvars();
    for u in gens {
        for v in gens {
            for i in 0..n {
                if u.exponent(i) <= v.exponent(i) {
                    continue;
                }
                let ok = (0..n).any(|j| {
                    v.exponent(j) > u.exponent(j)
                        && u.shift(i, j).is_some_and(|w| members.contains(&w))
                });
                if !ok {
                    return Err(PolymatroidViolation::Exchange {
                        u: u.clone(),
                        v: v.clone(),
                        i,
                    });
                }
            }
        }
    }
    Ok(())
}

pub fn is_polymatroidal(ideal: &MonomialIdeal) -> bool {
    check_polymatroidal(ideal).is_ok()
}

/// Rank function `ρ` of the discrete polymatroid whose bases are the
/// exponent vectors of `G(I)`, tabulated over all subsets of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolymatroidRank {
    n: usize,
    degree: u32,
    rho: Vec<u32>,
}

impl PolymatroidRank {
    pub fn nvars(&self) -> usize {
        self.n
    }

    /// The common generator degree, equal to `ρ([n])`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn rho(&self, a: VarSet) -> u32 {
        self.rho[a.mask() as usize]
    }

    /// Complementary rank `τ(F) = d - ρ([n] \ F)`.
    pub fn tau(&self, f: VarSet) -> u32 {
        self.degree - self.rho(f.complement(self.n))
    }

    fn verify(&self) -> Result<()> {
        let full = VarSet::full(self.n).mask() as usize;
        if self.rho[0] != 0 || self.rho[full] != self.degree {
            return Err(Error::internal("rank function has wrong boundary values"));
        }
        for a in 0..=full {
            for i in (0..self.n).filter(|i| a >> i & 1 == 0) {
                let ai = a | 1 << i;
                if self.rho[ai] < self.rho[a] {
                    return Err(Error::internal("rank function is not monotone"));
                }
                // local submodularity ρ(A+i) + ρ(A+j) >= ρ(A+i+j) + ρ(A) is
                // equivalent to submodularity on all pairs
                for j in (i + 1..self.n).filter(|j| a >> j & 1 == 0) {
                    let aj = a | 1 << j;
                    if self.rho[ai] + self.rho[aj] < self.rho[ai | aj] + self.rho[a] {
                        return Err(Error::internal("rank function is not submodular"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `ρ(A) = max_{u ∈ G(I)} Σ_{i ∈ A} deg_{x_i}(u)`.
pub fn rank_function(ideal: &MonomialIdeal) -> Result<PolymatroidRank> {
    let n = ideal.nvars();
    limits::check_subset_vars(n)?;
    if let Err(v) = check_polymatroidal(ideal) {
        return Err(Error::precondition(format!("not polymatroidal: {v}")));
    }
    let size = 1usize << n;
    let mut rho = vec![0u32; size];
    for u in ideal.gens() {
        // subset sums of u's exponents, built up by lowest set bit
        let mut sums = vec![0u32; size];
        for a in 1..size {
            let low = a.trailing_zeros() as usize;
            sums[a] = sums[a & (a - 1)] + u.exponent(low);
            rho[a] = rho[a].max(sums[a]);
        }
    }
    let rank = PolymatroidRank {
        n,
        degree: ideal.gens()[0].degree(),
        rho,
    };
    rank.verify()?;
    Ok(rank)
}

/// `τ(G) < τ(F)` for every proper subset `G ⊊ F`, the empty set included.
pub fn tau_closed(rank: &PolymatroidRank, f: VarSet) -> Result<bool> {
    if f.is_empty() {
        return Err(Error::domain("τ-closedness of the empty set"));
    }
    let t = rank.tau(f);
    Ok(f.subsets().filter(|&g| g != f).all(|g| rank.tau(g) < t))
}

/// No split `F = G ⊔ H` into nonempty parts has `τ(G) + τ(H) = τ(F)`.
pub fn tau_inseparable(rank: &PolymatroidRank, f: VarSet) -> Result<bool> {
    if f.is_empty() {
        return Err(Error::domain("τ-separability of the empty set"));
    }
    let t = rank.tau(f);
    let anchor = f.mask() & f.mask().wrapping_neg();
    // G always holds the lowest element of F, so each split is seen once
    Ok(f.subsets()
        .filter(|g| g.mask() & anchor != 0 && *g != f)
        .all(|g| {
            let h = VarSet::from_mask(f.mask() & !g.mask());
            rank.tau(g) + rank.tau(h) != t
        }))
}

/// `I = ⋂_F P_F^{τ(F)}` over the τ-closed, τ-inseparable `F` with `τ(F) >= 1`.
///
/// The presentation is instantiated and compared with `I` before it is
/// returned; a mismatch is an internal error.
pub fn intersection_presentation(ideal: &MonomialIdeal) -> Result<IntersectionPresentation> {
    let rank = rank_function(ideal)?;
    let n = ideal.nvars();
    let mut comps = Vec::new();
    for f in VarSet::full(n).subsets().filter(|f| !f.is_empty()) {
        let t = rank.tau(f);
        if t >= 1 && tau_closed(&rank, f)? && tau_inseparable(&rank, f)? {
            comps.push((f, t));
        }
    }
    let presentation = IntersectionPresentation::new(n, comps)?;
    let rebuilt = presentation.instantiate()?;
    if &rebuilt != ideal {
        return Err(Error::internal(format!(
            "presentation {presentation} reconstructs {rebuilt:?}, not {ideal:?}"
        )));
    }
    Ok(presentation)
}

/// `sat(⋂ P_F^{a_F} ∩ m^d) = max(0, d - a)` where `a` is the least
/// generator degree of the saturated part. Without an `m`-component the
/// ideal is already saturated and the answer is 0.
pub fn sat_from_presentation(p: &IntersectionPresentation) -> Result<u32> {
    let Some(d) = p.maximal_exponent() else {
        return Ok(0);
    };
    let alpha = p.saturated_part().instantiate()?.alpha()?;
    Ok(d.saturating_sub(alpha))
}
