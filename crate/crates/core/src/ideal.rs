//! Monomial ideals in canonical form and their arithmetic.

use std::collections::HashSet;
use std::fmt;

use crate::error::{check_dims, Error, Result};
use crate::limits;
use crate::monomial::{monomials_of_degree, Monomial, VarSet};

/// A monomial ideal of `K[x1, ..., xn]`, represented by its unique minimal
/// monomial generating set `G(I)` in canonical order.
///
/// Two ideals are equal exactly when their generator sequences are equal.
/// The zero ideal has no generators and the unit ideal has the single
/// generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary finite set of monomials.
    pub fn minimalize<I>(raw: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        limits::check_vars(n)?;
        let mut cands: Vec<Monomial> = raw.into_iter().collect();
        for c in &cands {
            check_dims(n, c.nvars())?;
        }
        Ok(MonomialIdeal {
            n,
            gens: minimal_elements(&mut cands),
        })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The maximal graded ideal `m = (x1, ..., xn)`.
    pub fn maximal(n: usize) -> Self {
        MonomialIdeal::prime(VarSet::full(n), n)
    }

    /// The monomial prime `P_F = (x_i : i in F)`.
    pub fn prime(f: VarSet, n: usize) -> Self {
        let mut gens: Vec<Monomial> = f.iter().map(|i| Monomial::var(i, n)).collect();
        gens.sort();
        MonomialIdeal { n, gens }
    }

    /// `P_F^a`: all monomials of degree `a` in the variables of `F`.
    pub fn prime_power(f: VarSet, a: u32, n: usize) -> Result<Self> {
        use itertools::Itertools;

        limits::check_degree(a as u64)?;
        let vars: Vec<usize> = f.iter().collect();
        if a == 0 {
            return Ok(MonomialIdeal::unit(n));
        }
        let mut gens = vars
            .iter()
            .copied()
            .combinations_with_replacement(a as usize)
            .map(|idx| Monomial::from_indices(&idx, n))
            .collect::<Result<Vec<_>>>()?;
        gens.sort();
        Ok(MonomialIdeal { n, gens })
    }

    /// `m^d`.
    pub fn maximal_power(n: usize, d: u32) -> Result<Self> {
        MonomialIdeal::prime_power(VarSet::full(n), d, n)
    }

    pub fn principal(u: Monomial) -> Self {
        MonomialIdeal {
            n: u.nvars(),
            gens: vec![u],
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// `G(I)`, in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn contains(&self, w: &Monomial) -> Result<bool> {
        check_dims(self.n, w.nvars())?;
        Ok(self.contains_unchecked(w))
    }

    pub(crate) fn contains_unchecked(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(w))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dims(self.n, other.n)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n, other.n)?;
        let mut cands: Vec<Monomial> = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(self.with_gens(minimal_elements(&mut cands)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n, other.n)?;
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                cands.push(u.mul(v)?);
            }
        }
        Ok(self.with_gens(minimal_elements(&mut cands)))
    }

    /// `I^k` by repeated multiplication, minimalizing after each step.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n, other.n)?;
        // A generator lying in the other ideal already belongs to the
        // intersection, and every lcm involving it is one of its multiples.
        let mut cands = Vec::new();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for u in &self.gens {
            if other.contains_unchecked(u) {
                cands.push(u.clone());
            } else {
                left.push(u);
            }
        }
        for v in &other.gens {
            if self.contains_unchecked(v) {
                cands.push(v.clone());
            } else {
                right.push(v);
            }
        }
        for u in &left {
            for v in &right {
                cands.push(u.lcm(v)?);
            }
        }
        Ok(self.with_gens(minimal_elements(&mut cands)))
    }

    /// Intersection of a nonempty family of ideals.
    pub fn intersect_all<'a, I>(ideals: I) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut iter = ideals.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::domain("intersection of an empty family"))?;
        iter.try_fold(first.clone(), |acc, j| acc.intersect(j))
    }

    /// `I : u`.
    pub fn colon_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        check_dims(self.n, u.nvars())?;
        let mut cands = self
            .gens
            .iter()
            .map(|g| g.colon(u))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_gens(minimal_elements(&mut cands)))
    }

    /// `I : J`, the intersection of `I : u` over `u` in `G(J)`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n, other.n)?;
        if other.is_zero() {
            return Err(Error::domain("colon by the zero ideal"));
        }
        let quotients = other
            .gens
            .iter()
            .map(|u| self.colon_monomial(u))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::intersect_all(&quotients)
    }

    /// `I : m`.
    pub fn colon_maximal(&self) -> Result<MonomialIdeal> {
        if self.n == 0 {
            return Err(Error::domain(
                "colon by the maximal ideal of a ring with no variables",
            ));
        }
        self.colon_ideal(&MonomialIdeal::maximal(self.n))
    }

    /// Least degree of a minimal generator.
    pub fn alpha(&self) -> Result<u32> {
        self.gens
            .first()
            .map(Monomial::degree)
            .ok_or_else(|| Error::domain("alpha of the zero ideal is undefined"))
    }

    /// Largest degree of a minimal generator, or `None` for the zero ideal.
    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.last().map(Monomial::degree)
    }

    /// Number of degree-`d` monomials lying in the ideal.
    pub fn degreewise_count(&self, d: u32) -> Result<u64> {
        let count = monomials_of_degree(self.n, d)?
            .iter()
            .filter(|w| self.contains_unchecked(w))
            .count();
        Ok(count as u64)
    }

    /// All generators share one degree.
    pub fn is_equigenerated(&self) -> bool {
        match (self.gens.first(), self.gens.last()) {
            (Some(a), Some(b)) => a.degree() == b.degree(),
            _ => false,
        }
    }

    /// Largest exponent of each variable over `G(I)`.
    pub fn exponent_bounds(&self) -> Vec<u32> {
        let mut bounds = vec![0; self.n];
        for g in &self.gens {
            for (b, &e) in bounds.iter_mut().zip(g.exponents()) {
                *b = (*b).max(e);
            }
        }
        bounds
    }

    pub(crate) fn gen_set(&self) -> HashSet<&Monomial> {
        self.gens.iter().collect()
    }

    /// Keeps only the generators selected by `keep`. The result is minimal
    /// because a subset of an antichain is an antichain.
    pub(crate) fn filter_gens<F: Fn(&Monomial) -> bool>(&self, keep: F) -> MonomialIdeal {
        self.with_gens(self.gens.iter().filter(|g| keep(g)).cloned().collect())
    }

    fn with_gens(&self, gens: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal { n: self.n, gens }
    }
}

/// Sorts `cands` canonically and returns its divisibility-minimal elements.
fn minimal_elements(cands: &mut Vec<Monomial>) -> Vec<Monomial> {
    cands.sort_unstable();
    cands.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(cands.len());
    for c in cands.drain(..) {
        // Only strictly smaller degrees can divide a different monomial.
        if !kept
            .iter()
            .any(|g| g.degree() < c.degree() && g.divides(&c))
        {
            kept.push(c);
        }
    }
    kept
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; {}", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|e| m(e)), n).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal(2, &[&[1, 0], &[2, 0], &[1, 1]]);
        assert_eq!(i.gens(), &[m(&[1, 0])]);

        assert!(MonomialIdeal::minimalize(Vec::new(), 3).unwrap().is_zero());

        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(i.gens(), &[m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])]);
    }

    #[test]
    fn minimalize_rejects_length_mismatch() {
        let err = MonomialIdeal::minimalize(vec![m(&[1, 0]), m(&[1, 0, 0])], 2).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn membership_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(i.contains(&m(&[1, 2, 0])).unwrap());
        assert!(!i.contains(&m(&[1, 0, 1])).unwrap());
        assert!(MonomialIdeal::unit(3).contains(&m(&[0, 0, 0])).unwrap());
        assert!(i.contains(&m(&[1, 1])).is_err());
    }

    #[test]
    fn product_of_primes() {
        let p = MonomialIdeal::prime(VarSet::prefix(2), 3);
        let q = MonomialIdeal::maximal(3);
        let expected = ideal(
            3,
            &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1]],
        );
        assert_eq!(p.product(&q).unwrap(), expected);
        assert_eq!(p.power(1).unwrap(), p);
        assert_eq!(p.power(0).unwrap(), MonomialIdeal::unit(3));
        let p2 = MonomialIdeal::prime(VarSet::prefix(2), 2).power(2).unwrap();
        assert_eq!(p2, ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
    }

    #[test]
    fn intersect_examples() {
        let p = MonomialIdeal::prime(VarSet::prefix(2), 3);
        let m2 = MonomialIdeal::maximal_power(3, 2).unwrap();
        let expected = ideal(
            3,
            &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1]],
        );
        assert_eq!(p.intersect(&m2).unwrap(), expected);
        assert_eq!(p.intersect(&MonomialIdeal::unit(3)).unwrap(), p);
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        assert_eq!(x1.intersect(&x2).unwrap(), ideal(2, &[&[1, 1]]));
        assert!(x1.intersect(&MonomialIdeal::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn colon_examples() {
        for d in 1..5 {
            let md = MonomialIdeal::maximal_power(3, d).unwrap();
            let expected = MonomialIdeal::maximal_power(3, d - 1).unwrap();
            assert_eq!(md.colon_maximal().unwrap(), expected);
        }
        let i23 = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(i23.colon_maximal().unwrap(), i23);
        let i = ideal(2, &[&[2, 1]]);
        assert_eq!(i.colon_monomial(&m(&[1, 0])).unwrap(), ideal(2, &[&[1, 1]]));
        assert!(matches!(
            i.colon_ideal(&MonomialIdeal::zero(2)),
            Err(Error::Domain(_))
        ));
        assert_eq!(i.colon_ideal(&MonomialIdeal::unit(2)).unwrap(), i);
    }

    #[test]
    fn degree_data() {
        let i = ideal(3, &[&[0, 1, 1], &[3, 0, 0]]);
        assert_eq!(i.alpha().unwrap(), 2);
        assert_eq!(i.max_gen_degree(), Some(3));
        assert!(MonomialIdeal::zero(3).alpha().is_err());
        let m2 = MonomialIdeal::maximal_power(2, 2).unwrap();
        assert_eq!(m2.degreewise_count(2).unwrap(), 3);
        assert_eq!(m2.degreewise_count(1).unwrap(), 0);
        assert_eq!(i.exponent_bounds(), vec![3, 1, 1]);
    }

    #[test]
    fn unit_and_zero_flow_through() {
        let unit = MonomialIdeal::unit(2);
        let zero = MonomialIdeal::zero(2);
        assert!(unit.is_unit() && !unit.is_zero());
        assert!(zero.is_zero() && !zero.is_unit());
        assert_eq!(unit.colon_maximal().unwrap(), unit);
        assert_eq!(zero.colon_maximal().unwrap(), zero);
        assert_eq!(unit.product(&zero).unwrap(), zero);
        assert_eq!(unit.sum(&zero).unwrap(), unit);
        assert_eq!(zero.power(0).unwrap(), unit);
    }

    #[test]
    fn variable_guardrail() {
        assert!(matches!(
            MonomialIdeal::minimalize(Vec::new(), 13),
            Err(Error::Resource {
                what: "variables",
                ..
            })
        ));
    }
}
