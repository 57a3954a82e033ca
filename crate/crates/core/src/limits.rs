//! Process-wide desk-scale guardrails.
//!
//! The defaults keep every computation in this crate small enough to finish
//! in seconds. Front ends may raise them (the CLI reads `MONSAT_MAX_*`
//! environment variables) before doing any work.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ambient variable count.
    pub max_vars: u64,
    /// Largest total degree of any monomial that is constructed.
    pub max_degree: u64,
    /// Largest power index `K` accepted by power tables.
    pub max_power: u64,
    /// Largest number of candidate witnesses scanned by the associated-prime search.
    pub max_witnesses: u64,
    /// Largest ground set for the `2^n` rank-function tables.
    pub max_subset_vars: u64,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_vars: 12,
        max_degree: 64,
        max_power: 32,
        max_witnesses: 1 << 20,
        max_subset_vars: 16,
    };

    pub fn current() -> Limits {
        Limits {
            max_vars: MAX_VARS.load(Ordering::Relaxed),
            max_degree: MAX_DEGREE.load(Ordering::Relaxed),
            max_power: MAX_POWER.load(Ordering::Relaxed),
            max_witnesses: MAX_WITNESSES.load(Ordering::Relaxed),
            max_subset_vars: MAX_SUBSET_VARS.load(Ordering::Relaxed),
        }
    }

    /// Installs `self` as the process-wide limits.
    pub fn install(self) {
        MAX_VARS.store(self.max_vars, Ordering::Relaxed);
        MAX_DEGREE.store(self.max_degree, Ordering::Relaxed);
        MAX_POWER.store(self.max_power, Ordering::Relaxed);
        MAX_WITNESSES.store(self.max_witnesses, Ordering::Relaxed);
        MAX_SUBSET_VARS.store(self.max_subset_vars, Ordering::Relaxed);
    }

    /// Overrides fields from `lookup(name)`, e.g. `std::env::var`.
    ///
    /// Recognized names: `MONSAT_MAX_VARS`, `MONSAT_MAX_DEGREE`,
    /// `MONSAT_MAX_POWER`, `MONSAT_MAX_WITNESSES`, `MONSAT_MAX_SUBSET_VARS`.
    pub fn with_overrides<F>(mut self, lookup: F) -> std::result::Result<Limits, String>
    where
        F: Fn(&str) -> Option<String>,
    {
        let fields: [(&str, &mut u64); 5] = [
            ("MONSAT_MAX_VARS", &mut self.max_vars),
            ("MONSAT_MAX_DEGREE", &mut self.max_degree),
            ("MONSAT_MAX_POWER", &mut self.max_power),
            ("MONSAT_MAX_WITNESSES", &mut self.max_witnesses),
            ("MONSAT_MAX_SUBSET_VARS", &mut self.max_subset_vars),
        ];
        for (name, slot) in fields {
            if let Some(raw) = lookup(name) {
                *slot = raw
                    .trim()
                    .parse()
                    .map_err(|_| format!("{name} must be a non-negative integer, got {raw:?}"))?;
            }
        }
        Ok(self)
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}

static MAX_VARS: AtomicU64 = AtomicU64::new(Limits::DEFAULT.max_vars);
static MAX_DEGREE: AtomicU64 = AtomicU64::new(Limits::DEFAULT.max_degree);
static MAX_POWER: AtomicU64 = AtomicU64::new(Limits::DEFAULT.max_power);
static MAX_WITNESSES: AtomicU64 = AtomicU64::new(Limits::DEFAULT.max_witnesses);
static MAX_SUBSET_VARS: AtomicU64 = AtomicU64::new(Limits::DEFAULT.max_subset_vars);

fn guard(what: &'static str, requested: u64, limit: u64) -> Result<()> {
    if requested > limit {
        Err(Error::Resource {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn check_vars(n: usize) -> Result<()> {
    guard("variables", n as u64, MAX_VARS.load(Ordering::Relaxed))
}

pub(crate) fn check_degree(d: u64) -> Result<()> {
    guard("degree", d, MAX_DEGREE.load(Ordering::Relaxed))
}

pub(crate) fn check_power(k: u64) -> Result<()> {
    guard("power", k, MAX_POWER.load(Ordering::Relaxed))
}

pub(crate) fn check_witnesses(count: u64) -> Result<()> {
    guard("witnesses", count, MAX_WITNESSES.load(Ordering::Relaxed))
}

pub(crate) fn check_subset_vars(n: usize) -> Result<()> {
    guard(
        "subset ground set",
        n as u64,
        MAX_SUBSET_VARS.load(Ordering::Relaxed),
    )
}
