//! Associated primes of monomial ideals and the scaling law
//! `sat(I^k) = k·sat(I)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits;
use crate::monomial::{Monomial, VarSet};
use crate::polymatroid;
use crate::saturation::sat_number;

/// `Ass(I)`: all `F` such that `P_F = I : w` for some monomial `w`.
///
/// `I : w` only depends on `min(w_i, a_i)` where `a_i` is the largest
/// exponent of `x_i` in `G(I)`, so scanning the box `w_i <= a_i` finds
/// every associated prime.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<VarSet>> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain(
            "associated primes need a proper nonzero ideal",
        ));
    }
    let n = ideal.nvars();
    let bounds = ideal.exponent_bounds();
    let space = bounds
        .iter()
        .try_fold(1u64, |acc, &b| acc.checked_mul(b as u64 + 1))
        .unwrap_or(u64::MAX);
    limits::check_witnesses(space)?;

    let mut primes = BTreeSet::new();
    let mut w = vec![0u32; n];
    loop {
        let witness = Monomial::new(w.clone())?;
        if !ideal.contains_unchecked(&witness) {
            let quotient = ideal.colon_monomial(&witness)?;
            if quotient.gens().iter().all(|g| g.degree() == 1) {
                primes.insert(VarSet::from_indices(
                    quotient.gens().iter().map(|g| g.index_sequence()[0]),
                ));
            }
        }
        // odometer step over the witness box
        let mut i = 0;
        while i < n && w[i] == bounds[i] {
            w[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        w[i] += 1;
    }
    Ok(primes)
}

/// How the caller vouches for the hypothesis of the scaling law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalingHypothesis {
    /// Checked: `I` must pass the polymatroid exchange test.
    Polymatroidal,
    /// Taken on trust: all powers of `I` are of intersection type.
    AssertedIntersectionType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingRow {
    pub k: u32,
    pub sat: u32,
    /// `k·sat(I)`.
    pub predicted: u32,
    /// `Ass(I^k) = Ass(I)`.
    pub ass_stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalingOutcome {
    /// `sat(I^k) = k·sat(I)` for every tabulated `k`.
    Holds,
    /// First `k` where the law fails.
    Violated {
        k: u32,
    },
    PreconditionFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingReport {
    pub outcome: ScalingOutcome,
    /// First `k` with `Ass(I^k) ≠ Ass(I)`, if any.
    pub first_ass_change: Option<u32>,
    pub rows: Vec<ScalingRow>,
}

impl ScalingReport {
    pub fn holds(&self) -> bool {
        self.outcome == ScalingOutcome::Holds
    }
}

impl fmt::Display for ScalingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(
                f,
                "k={} sat={} predicted={} ass_stable={}",
                r.k, r.sat, r.predicted, r.ass_stable
            )?;
        }
        match self.first_ass_change {
            Some(k) => writeln!(f, "ass_changes_at={k}")?,
            None => writeln!(f, "ass_changes_at=none")?,
        }
        match &self.outcome {
            ScalingOutcome::Holds => writeln!(f, "law=holds"),
            ScalingOutcome::Violated { k } => writeln!(f, "law=violated at k={k}"),
            ScalingOutcome::PreconditionFailed(why) => {
                writeln!(f, "law=precondition failed: {why}")
            }
        }
    }
}

/// Tabulates `sat(I^k)` against `k·sat(I)` and `Ass(I^k)` against `Ass(I)`
/// for `k = 1..=K`. Precondition failures are reported, not raised.
pub fn check_scaling_law(
    ideal: &MonomialIdeal,
    max_k: u32,
    hypothesis: ScalingHypothesis,
) -> Result<ScalingReport> {
    let failed = |why: String| ScalingReport {
        outcome: ScalingOutcome::PreconditionFailed(why),
        first_ass_change: None,
        rows: Vec::new(),
    };
    if max_k == 0 {
        return Err(Error::domain("scaling check needs K >= 1"));
    }
    limits::check_power(max_k as u64)?;
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(failed("ideal must be proper and nonzero".into()));
    }
    if hypothesis == ScalingHypothesis::Polymatroidal {
        if let Err(v) = polymatroid::check_polymatroidal(ideal) {
            return Ok(failed(format!("not polymatroidal: {v}")));
        }
    }

    let base_ass = associated_primes(ideal)?;
    let base_sat = sat_number(ideal)?;
    let mut rows = Vec::new();
    let mut power = MonomialIdeal::unit(ideal.nvars());
    for k in 1..=max_k {
        power = power.product(ideal)?;
        rows.push(ScalingRow {
            k,
            sat: sat_number(&power)?,
            predicted: k * base_sat,
            ass_stable: associated_primes(&power)? == base_ass,
        });
    }
    let first_ass_change = rows.iter().find(|r| !r.ass_stable).map(|r| r.k);
    let outcome = match rows.iter().find(|r| r.sat != r.predicted) {
        Some(r) => ScalingOutcome::Violated { k: r.k },
        None => ScalingOutcome::Holds,
    };
    Ok(ScalingReport {
        outcome,
        first_ass_change,
        rows,
    })
}
