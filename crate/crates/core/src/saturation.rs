//! Saturation `I^sat = I : m^∞`, the saturation number, and the graded
//! profile of the finite-length module `I^sat / I`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;

/// Outcome of iterating `I ↦ I : m` to its fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationResult {
    /// `I, I:m, I:m^2, ...`, ending with the first repeated entry.
    pub chain: Vec<MonomialIdeal>,
    /// Least `k` with `I : m^(k+1) = I : m^k`.
    pub sat_number: u32,
    /// `I^sat`, the last chain entry.
    pub saturated: MonomialIdeal,
}

/// Computes the colon chain of `I` by the maximal ideal.
///
/// The unit and zero ideals are degenerate: both have saturation number 0
/// and a single-entry chain.
pub fn saturate(ideal: &MonomialIdeal) -> Result<SaturationResult> {
    if ideal.is_unit() || ideal.is_zero() {
        return Ok(SaturationResult {
            chain: vec![ideal.clone()],
            sat_number: 0,
            saturated: ideal.clone(),
        });
    }
    let mut chain = vec![ideal.clone()];
    loop {
        let next = chain.last().expect("chain is nonempty").colon_maximal()?;
        let done = &next == chain.last().unwrap();
        chain.push(next);
        if done {
            break;
        }
    }
    let sat_number = (chain.len() - 2) as u32;
    let saturated = chain.last().unwrap().clone();
    Ok(SaturationResult {
        chain,
        sat_number,
        saturated,
    })
}

pub fn sat_number(ideal: &MonomialIdeal) -> Result<u32> {
    saturate(ideal).map(|r| r.sat_number)
}

/// `I : m = I`.
pub fn is_saturated(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(true);
    }
    Ok(&ideal.colon_maximal()? == ideal)
}

/// Degreewise data of `M = I^sat / I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedQuotientProfile {
    /// Least degree with `M_d ≠ 0`; `None` when `M = 0`.
    pub alpha: Option<u32>,
    /// Greatest degree with `M_d ≠ 0`, also the top socle degree.
    pub beta: Option<u32>,
    /// `beta - alpha + 1`, and `0` when `M = 0`.
    pub sigma: u32,
    /// Least `k` with `m^k M = 0`, which equals the saturation number.
    pub gamma: u32,
    /// `λ(M) = Σ_d dim M_d`.
    pub length: u64,
    /// `(d, dim M_d)` for every degree with `M_d ≠ 0`, ascending.
    pub per_degree: Vec<(u32, u64)>,
}

impl GradedQuotientProfile {
    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    fn empty() -> Self {
        GradedQuotientProfile {
            alpha: None,
            beta: None,
            sigma: 0,
            gamma: 0,
            length: 0,
            per_degree: Vec::new(),
        }
    }
}

impl fmt::Display for GradedQuotientProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<u32>| v.map_or_else(|| "none".to_string(), |d| d.to_string());
        writeln!(f, "empty={}", self.is_empty())?;
        writeln!(f, "alpha={}", show(self.alpha))?;
        writeln!(f, "beta={}", show(self.beta))?;
        writeln!(f, "sigma={}", self.sigma)?;
        writeln!(f, "gamma={}", self.gamma)?;
        writeln!(f, "length={}", self.length)?;
        let dims: Vec<String> = self
            .per_degree
            .iter()
            .map(|(d, dim)| format!("{d}:{dim}"))
            .collect();
        writeln!(f, "per_degree={}", dims.join(","))
    }
}

/// Computes the profile of `I^sat / I`.
///
/// Degrees are scanned from `alpha(I^sat)` up to
/// `max_gen_degree(I^sat) + sat(I) - 1`: above that bound every monomial of
/// `I^sat` is a multiple of `m^sat(I) · I^sat ⊆ I`.
pub fn quotient_profile(ideal: &MonomialIdeal) -> Result<GradedQuotientProfile> {
    let sat = saturate(ideal)?;
    if sat.sat_number == 0 {
        return Ok(GradedQuotientProfile::empty());
    }
    let top = sat
        .saturated
        .max_gen_degree()
        .expect("saturation of a nonzero ideal")
        + sat.sat_number
        - 1;
    let mut per_degree = Vec::new();
    for d in sat.saturated.alpha()?..=top {
        let dim = sat.saturated.degreewise_count(d)? - ideal.degreewise_count(d)?;
        if dim > 0 {
            per_degree.push((d, dim));
        }
    }
    let (alpha, beta) = match (per_degree.first(), per_degree.last()) {
        (Some(&(a, _)), Some(&(b, _))) => (a, b),
        _ => {
            return Err(Error::internal(
                "nonzero saturation number with an empty quotient",
            ))
        }
    };
    Ok(GradedQuotientProfile {
        alpha: Some(alpha),
        beta: Some(beta),
        sigma: beta - alpha + 1,
        gamma: sat.sat_number,
        length: per_degree.iter().map(|&(_, dim)| dim).sum(),
        per_degree,
    })
}

/// Closed form for `sat(I ∩ m^d)` when `I` is saturated: `0` for
/// `d <= alpha(I)` and `d - alpha(I)` otherwise.
pub fn sat_of_intersection_with_power(saturated: &MonomialIdeal, d: u32) -> Result<u32> {
    if saturated.is_zero() {
        return Err(Error::precondition("ideal must be nonzero"));
    }
    if !is_saturated(saturated)? {
        return Err(Error::precondition("ideal is not saturated"));
    }
    Ok(d.saturating_sub(saturated.alpha()?))
}

/// `sat(I^k)` for `k = 1..=K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatTable {
    pub base: MonomialIdeal,
    pub rows: Vec<(u32, u32)>,
}

impl SatTable {
    pub fn values(&self) -> Vec<u32> {
        self.rows.iter().map(|&(_, s)| s).collect()
    }

    /// CSV with header `k,sat`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,sat\n");
        for (k, s) in &self.rows {
            out.push_str(&format!("{k},{s}\n"));
        }
        out
    }
}

pub fn sat_table(ideal: &MonomialIdeal, max_k: u32) -> Result<SatTable> {
    if max_k == 0 {
        return Err(Error::domain("power table needs K >= 1"));
    }
    limits::check_power(max_k as u64)?;
    let mut rows = Vec::with_capacity(max_k as usize);
    let mut power = MonomialIdeal::unit(ideal.nvars());
    for k in 1..=max_k {
        power = power.product(ideal)?;
        rows.push((k, sat_number(&power)?));
    }
    Ok(SatTable {
        base: ideal.clone(),
        rows,
    })
}
