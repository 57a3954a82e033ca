//! Ideals presented as intersections `⋂_F P_F^{a_F}` of powers of monomial primes.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::VarSet;

/// `⋂_F P_F^{a_F}` over distinct nonempty subsets `F` with positive
/// exponents. The component `F = [n]`, if present, is the `m^d` factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPresentation {
    n: usize,
    components: Vec<(VarSet, u32)>,
}

impl IntersectionPresentation {
    /// Builds a presentation, dropping `a_F = 0` components and merging
    /// repeated subsets (`P^a ∩ P^b = P^max(a,b)`).
    pub fn new<I>(n: usize, components: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VarSet, u32)>,
    {
        let full = VarSet::full(n);
        let mut merged: BTreeMap<VarSet, u32> = BTreeMap::new();
        for (f, a) in components {
            if f.is_empty() {
                return Err(Error::domain("presentation component over the empty set"));
            }
            if !f.is_subset(full) {
                return Err(Error::domain(format!(
                    "component {f} exceeds {n} variables"
                )));
            }
            if a > 0 {
                let e = merged.entry(f).or_insert(0);
                *e = (*e).max(a);
            }
        }
        Ok(IntersectionPresentation {
            n,
            components: merged.into_iter().collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Components in canonical order: by subset size, then lexicographically.
    pub fn components(&self) -> &[(VarSet, u32)] {
        &self.components
    }

    /// Exponent of the `m = P_[n]` component.
    pub fn maximal_exponent(&self) -> Option<u32> {
        let full = VarSet::full(self.n);
        self.components
            .iter()
            .find(|(f, _)| *f == full)
            .map(|&(_, a)| a)
    }

    /// The presentation without its `m`-component: the saturated part.
    pub fn saturated_part(&self) -> IntersectionPresentation {
        let full = VarSet::full(self.n);
        IntersectionPresentation {
            n: self.n,
            components: self
                .components
                .iter()
                .copied()
                .filter(|(f, _)| *f != full)
                .collect(),
        }
    }

    /// Evaluates the intersection. The empty intersection is the unit ideal.
    pub fn instantiate(&self) -> Result<MonomialIdeal> {
        let mut parts = self
            .components
            .iter()
            .map(|&(f, a)| MonomialIdeal::prime_power(f, a, self.n))
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Ok(MonomialIdeal::unit(self.n));
        }
        // small factors first keeps the intermediate generator sets small
        parts.sort_by_key(|p| p.gens().len());
        MonomialIdeal::intersect_all(&parts)
    }

    /// Text form, one component per line: `F = {1,2} ^ 3`.
    pub fn render(&self) -> String {
        self.components
            .iter()
            .map(|(f, a)| format!("F = {f} ^ {a}\n"))
            .collect()
    }

    /// Parses the output of [`render`](Self::render).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut comps = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |column: usize, message: &str| Error::Parse {
                line: lineno + 1,
                column,
                message: message.to_string(),
            };
            let rest = line
                .strip_prefix("F")
                .map(str::trim_start)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| err(1, "expected `F =`"))?;
            let (set, exp) = rest
                .split_once('^')
                .ok_or_else(|| err(1, "expected `^ exponent`"))?;
            let set = set.trim();
            let inner = set
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(|| err(1, "expected a braced subset"))?;
            let mut idx = Vec::new();
            for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let i: usize = tok.parse().map_err(|_| err(1, "bad variable index"))?;
                if i == 0 || i > n {
                    return Err(err(1, "variable index out of range"));
                }
                idx.push(i - 1);
            }
            let a: u32 = exp.trim().parse().map_err(|_| err(1, "bad exponent"))?;
            comps.push((VarSet::from_indices(idx), a));
        }
        IntersectionPresentation::new(n, comps)
    }
}

impl fmt::Display for IntersectionPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("S");
        }
        for (i, (set, a)) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∩ ")?;
            }
            write!(f, "P{set}^{a}")?;
        }
        Ok(())
    }
}
