//! `k`-bounded Borel machinery: `k`-strongly stable ideals, Borel closures
//! `B^k(u_1, ..., u_m)`, the order `⪯_k`, the extremal monomials
//! `u_{k,d,n}`, squarefree Veronese ideals and principal Borel powers.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};
use crate::presentation::IntersectionPresentation;

/// `I^{≤k}`: the ideal generated by the `k`-bounded elements of `G(I)`.
pub fn restrict_bounded(ideal: &MonomialIdeal, k: u32) -> MonomialIdeal {
    ideal.filter_gens(|g| g.is_bounded(k))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilityViolation {
    /// A minimal generator has an exponent above `k`.
    Unbounded { generator: Monomial },
    /// The move `x_i (u / x_j)` leaves the ideal.
    MissingMove {
        generator: Monomial,
        i: usize,
        j: usize,
    },
}

impl fmt::Display for StabilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilityViolation::Unbounded { generator } => {
                write!(f, "generator {generator} is not bounded")
            }
            StabilityViolation::MissingMove { generator, i, j } => {
                write!(f, "x{}*({generator})/x{} is missing", i + 1, j + 1)
            }
        }
    }
}

/// Checks that `I = I^{≤k}` and that every admissible move
/// `x_i (u/x_j)`, `i < j`, `deg_{x_i}(u) ≤ k - 1`, of a generator stays in `I`.
/// The first failure in generator order (then `j`, then `i`) is returned.
pub fn check_k_strongly_stable(
    ideal: &MonomialIdeal,
    k: u32,
) -> std::result::Result<(), StabilityViolation> {
    if let Some(g) = ideal.gens().iter().find(|g| !g.is_bounded(k)) {
        return Err(StabilityViolation::Unbounded {
            generator: g.clone(),
        });
    }
    for u in ideal.gens() {
        for (j, i, w) in moves(u, k) {
            if !ideal.contains_unchecked(&w) {
                return Err(StabilityViolation::MissingMove {
                    generator: u.clone(),
                    i,
                    j,
                });
            }
        }
    }
    Ok(())
}

pub fn is_k_strongly_stable(ideal: &MonomialIdeal, k: u32) -> bool {
    check_k_strongly_stable(ideal, k).is_ok()
}

/// Admissible index-lowering moves of `u`, as `(j, i, x_i u / x_j)`.
fn moves(u: &Monomial, k: u32) -> impl Iterator<Item = (usize, usize, Monomial)> + '_ {
    (0..u.nvars())
        .filter(move |&j| u.exponent(j) > 0)
        .flat_map(move |j| {
            (0..j)
                .filter(move |&i| u.exponent(i) < k)
                .filter_map(move |i| u.shift(j, i).map(|w| (j, i, w)))
        })
}

/// Borel generators of `B^k(u_1, ..., u_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelSpec {
    bound: u32,
    gens: Vec<Monomial>,
    n: usize,
}

impl BorelSpec {
    /// Requires `k ≥ 1` and a nonempty set of `k`-bounded generators of one degree.
    pub fn new(bound: u32, gens: Vec<Monomial>, n: usize) -> Result<Self> {
        if bound == 0 {
            return Err(Error::domain("Borel bound must be at least 1"));
        }
        let Some(first) = gens.first() else {
            return Err(Error::domain("Borel closure needs at least one generator"));
        };
        let degree = first.degree();
        for g in &gens {
            crate::error::check_dims(n, g.nvars())?;
            if g.degree() != degree {
                return Err(Error::precondition(
                    "Borel generators must share one degree",
                ));
            }
            if !g.is_bounded(bound) {
                return Err(Error::precondition(format!(
                    "generator {g} is not {bound}-bounded"
                )));
            }
        }
        Ok(BorelSpec { bound, gens, n })
    }

    /// `B^k(u)`.
    pub fn principal(bound: u32, u: Monomial) -> Result<Self> {
        let n = u.nvars();
        BorelSpec::new(bound, vec![u], n)
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }
}

/// Breadth-first closure of the Borel generators under admissible moves.
///
/// Every move lowers the sorted index sequence lexicographically, so the
/// search is finite; all reached monomials share the generators' degree and
/// are therefore the minimal generators of the closure.
pub fn borel_closure(spec: &BorelSpec) -> MonomialIdeal {
    let mut seen: BTreeSet<Monomial> = spec.gens.iter().cloned().collect();
    let mut queue: VecDeque<Monomial> = seen.iter().cloned().collect();
    while let Some(u) = queue.pop_front() {
        for (_, _, w) in moves(&u, spec.bound) {
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    MonomialIdeal::minimalize(seen, spec.n).expect("closure stays in the ambient ring")
}

/// `B^k(u)`.
pub fn principal_k_borel(u: &Monomial, k: u32) -> Result<MonomialIdeal> {
    Ok(borel_closure(&BorelSpec::principal(k, u.clone())?))
}

/// The principal Borel ideal `B(u)`, i.e. `B^k(u)` for `k = deg(u)`.
pub fn principal_borel(u: &Monomial) -> Result<MonomialIdeal> {
    if u.is_one() {
        return Ok(MonomialIdeal::unit(u.nvars()));
    }
    principal_k_borel(u, u.degree())
}

/// `v ⪯_k u`: with sorted index sequences `i_1 ≤ ... ≤ i_d` of `v` and
/// `j_1 ≤ ... ≤ j_d` of `u`, every `i_r ≤ j_r`.
pub fn precedes_k(v: &Monomial, u: &Monomial, k: u32) -> Result<bool> {
    crate::error::check_dims(u.nvars(), v.nvars())?;
    if v.degree() != u.degree() {
        return Err(Error::precondition(
            "⪯_k compares monomials of equal degree",
        ));
    }
    if !u.is_bounded(k) || !v.is_bounded(k) {
        return Err(Error::precondition(format!(
            "⪯_k needs {k}-bounded monomials"
        )));
    }
    Ok(v.index_sequence()
        .iter()
        .zip(u.index_sequence())
        .all(|(i, j)| *i <= j))
}

/// `u_{k,d,n} = x_n^k x_{n-1}^k ⋯ x_{n-q+1}^k x_{n-q}^r` with `d = qk + r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalMonomial {
    pub k: u32,
    pub d: u32,
    pub n: usize,
    pub q: u32,
    pub r: u32,
    pub monomial: Monomial,
}

/// Returns `u_{k,d,n}` when it exists in `n` variables: for `r = 0` this
/// needs `q ≤ n`, otherwise `q < n`. For `d = 0` the result is `1`.
pub fn extremal_monomial(k: u32, d: u32, n: usize) -> Option<ExtremalMonomial> {
    if k == 0 {
        return (d == 0).then(|| ExtremalMonomial {
            k,
            d,
            n,
            q: 0,
            r: 0,
            monomial: Monomial::one(n),
        });
    }
    let (q, r) = (d / k, d % k);
    let defined = if r == 0 {
        q as usize <= n
    } else {
        (q as usize) < n
    };
    if !defined {
        return None;
    }
    let mut exps = vec![0u32; n];
    for e in exps.iter_mut().rev().take(q as usize) {
        *e = k;
    }
    if r > 0 {
        exps[n - q as usize - 1] = r;
    }
    let monomial = Monomial::new(exps).ok()?;
    Some(ExtremalMonomial {
        k,
        d,
        n,
        q,
        r,
        monomial,
    })
}

/// Comparison of `B^k(u_{k,d,n}) : m` with its predicted value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleReport {
    pub upper: ExtremalMonomial,
    /// `u_{k-1,d-1,n}`, when defined.
    pub lower: Option<ExtremalMonomial>,
    /// `B^k(u_{k,d,n}) : m`.
    pub colon: MonomialIdeal,
    /// `B^{k-1}(u_{k-1,d-1,n}) + B^k(u_{k,d,n})`, or `B^k(u_{k,d,n})`.
    pub predicted: MonomialIdeal,
}

impl SocleReport {
    pub fn holds(&self) -> bool {
        self.colon == self.predicted
    }
}

impl fmt::Display for SocleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = &self.upper;
        write!(f, "k={} d={} n={} u={}", u.k, u.d, u.n, u.monomial)?;
        match &self.lower {
            Some(l) => write!(f, " lower={}", l.monomial)?,
            None => f.write_str(" lower=undefined")?,
        }
        write!(f, " {}", if self.holds() { "PASS" } else { "FAIL" })
    }
}

/// Computes `B^k(u_{k,d,n}) : m` and compares it with
/// `B^{k-1}(u_{k-1,d-1,n}) + B^k(u_{k,d,n})`, or with `B^k(u_{k,d,n})`
/// when `u_{k-1,d-1,n}` is undefined. `B^{k-1}(1)` is the unit ideal.
pub fn verify_borel_socle(k: u32, d: u32, n: usize) -> Result<SocleReport> {
    if k == 0 || d == 0 || n == 0 {
        return Err(Error::domain("k, d and n must be positive"));
    }
    let upper = extremal_monomial(k, d, n)
        .ok_or_else(|| Error::precondition(format!("u_{{{k},{d},{n}}} is undefined")))?;
    let closure = principal_k_borel(&upper.monomial, k)?;
    let colon = closure.colon_maximal()?;
    let lower = extremal_monomial(k - 1, d - 1, n);
    let predicted = match &lower {
        Some(l) if l.monomial.is_one() => MonomialIdeal::unit(n),
        Some(l) => principal_k_borel(&l.monomial, k - 1)?.sum(&closure)?,
        None => closure.clone(),
    };
    Ok(SocleReport {
        upper,
        lower,
        colon,
        predicted,
    })
}

/// The squarefree Veronese ideal `I_{d,n}`.
pub fn veronese(d: u32, n: usize) -> Result<MonomialIdeal> {
    if d == 0 || d as usize > n {
        return Err(Error::domain(format!(
            "squarefree Veronese needs 1 <= d <= n, got d={d}, n={n}"
        )));
    }
    let gens = (0..n)
        .combinations(d as usize)
        .map(|idx| Monomial::from_indices(&idx, n))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(gens, n)
}

/// `max{ l ≤ k : kd - l ≤ n(k - l) }`, the cross-multiplied form of
/// `(kd - l)/(k - l) ≤ n`. At `l = k` the condition reads `k(d - 1) ≤ 0`.
pub fn veronese_sat(d: u32, n: usize, k: u32) -> Result<u32> {
    if d == 0 || d as usize > n {
        return Err(Error::domain(format!(
            "squarefree Veronese needs 1 <= d <= n, got d={d}, n={n}"
        )));
    }
    if k == 0 {
        return Err(Error::domain("power must be at least 1"));
    }
    let (d, n, k) = (d as i64, n as i64, k as i64);
    let best = (0..=k)
        .filter(|&l| k * d - l <= n * (k - l))
        .max()
        .expect("l = 0 is always admissible since d <= n");
    Ok(best as u32)
}

/// `B(u)^k = ⋂_{j<d} P_{[i_j]}^{kj} ∩ m^{kd}` for `u = x_{i_1} ⋯ x_{i_d}`,
/// `i_1 ≤ ... ≤ i_d = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelPowerPresentation {
    n: usize,
    /// `i_1 ≤ ... ≤ i_d`, 1-based.
    indices: Vec<usize>,
}

impl BorelPowerPresentation {
    pub fn degree(&self) -> u32 {
        self.indices.len() as u32
    }

    /// The presentation of the `k`-th power.
    pub fn at(&self, k: u32) -> Result<IntersectionPresentation> {
        let d = self.indices.len();
        let comps = self.indices[..d - 1]
            .iter()
            .enumerate()
            .map(|(pos, &i)| (VarSet::prefix(i), k * (pos as u32 + 1)))
            .chain(std::iter::once((VarSet::full(self.n), k * d as u32)));
        IntersectionPresentation::new(self.n, comps)
    }
}

pub fn principal_borel_power_presentation(u: &Monomial) -> Result<BorelPowerPresentation> {
    let n = u.nvars();
    if n == 0 || u.exponent(n - 1) == 0 {
        return Err(Error::precondition(
            "u must be divisible by the last variable",
        ));
    }
    Ok(BorelPowerPresentation {
        n,
        indices: u.index_sequence().into_iter().map(|i| i + 1).collect(),
    })
}
