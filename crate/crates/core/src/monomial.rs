//! Monomials as exponent vectors, and subsets of the variables.
//!
//! Variables are indexed from 0 in the API; the textual formats and all
//! human-readable output use 1-based names `x1, x2, ...`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{check_dims, Error, Result};
use crate::limits;

/// A monomial `x1^a1 * ... * xn^an` stored as its exponent vector.
///
/// The total order sorts by degree first, then lexicographically with
/// `x1 > x2 > ... > xn`, so `x1^2 < x1*x2 < x1*x3 < x2^2` among the
/// quadrics. Sorting generator lists with it gives the canonical form of
/// an ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        let degree: u64 = exps.iter().map(|&e| e as u64).sum();
        limits::check_degree(degree)?;
        Ok(Monomial {
            exps,
            degree: degree as u32,
        })
    }

    /// The unit monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![0; n],
            degree: 0,
        }
    }

    /// The variable `x_{i+1}` in `n` variables.
    pub fn var(i: usize, n: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    /// Builds a monomial from a multiset of 0-based variable indices.
    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
        let mut exps = vec![0u32; n];
        for &i in indices {
            if i >= n {
                return Err(Error::domain(format!(
                    "variable index {} exceeds {n} variables",
                    i + 1
                )));
            }
            exps[i] += 1;
        }
        Monomial::new(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Largest exponent; 0 for the unit monomial.
    pub fn max_exponent(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    /// Every exponent is at most `k`.
    pub fn is_bounded(&self, k: u32) -> bool {
        self.exps.iter().all(|&e| e <= k)
    }

    pub fn is_squarefree(&self) -> bool {
        self.is_bounded(1)
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_indices(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i),
        )
    }

    /// The sorted multiset of variable indices: `x1*x3^2` gives `[0, 2, 2]`.
    pub fn index_sequence(&self) -> Vec<usize> {
        let mut seq = Vec::with_capacity(self.degree as usize);
        for (i, &e) in self.exps.iter().enumerate() {
            seq.extend(std::iter::repeat_n(i, e as usize));
        }
        seq
    }

    /// `self | other`. Both must have the same length.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self.nvars(), other.nvars())?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| {
                a.checked_add(*b)
                    .ok_or_else(|| Error::domain("exponent overflow in product"))
            })
            .collect::<Result<Vec<_>>>()?;
        Monomial::new(exps)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self.nvars(), other.nvars())?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self.nvars(), other.nvars())?;
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        let degree = exps.iter().sum();
        Ok(Monomial { exps, degree })
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self.nvars(), other.nvars())?;
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.saturating_sub(*b))
            .collect();
        let degree = exps.iter().sum();
        Ok(Monomial { exps, degree })
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.nvars() != other.nvars() || !other.divides(self) {
            return None;
        }
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    /// The index move `x_i * (self / x_j)`, provided `x_j` divides `self`.
    pub fn shift(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exps[from] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[from] -= 1;
        exps[to] += 1;
        Some(Monomial {
            exps,
            degree: self.degree,
        })
    }

    /// `x_i * self`.
    pub fn times_var(&self, i: usize) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial::new(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All monomials of total degree `d` in `n` variables, in canonical order.
pub fn monomials_of_degree(n: usize, d: u32) -> Result<Vec<Monomial>> {
    use itertools::Itertools;

    limits::check_degree(d as u64)?;
    if n == 0 {
        return Ok(if d == 0 {
            vec![Monomial::one(0)]
        } else {
            Vec::new()
        });
    }
    (0..n)
        .combinations_with_replacement(d as usize)
        .map(|idx| Monomial::from_indices(&idx, n))
        .collect()
}

/// A subset of the variables `{x1, ..., xn}`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_mask(mask: u32) -> Self {
        VarSet(mask)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        VarSet(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// `{x1, ..., xn}`.
    pub fn full(n: usize) -> Self {
        assert!(n < 32);
        VarSet((1u32 << n) - 1)
    }

    /// `{x1, ..., x_len}`.
    pub fn prefix(len: usize) -> Self {
        VarSet::full(len)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, n: usize) -> VarSet {
        VarSet(!self.0 & VarSet::full(n).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// All subsets of `self`, including `self` and the empty set.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                Some((cur - 1) & full)
            };
            Some(VarSet(cur))
        })
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.reverse_bits().cmp(&other.0.reverse_bits()).reverse())
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
