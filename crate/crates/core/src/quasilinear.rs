//! Exact quasi-linear fits of integer sequences such as `k ↦ sat(I^k)`.

use std::fmt;

use num_rational::Rational64;

use crate::saturation::SatTable;

/// One residue class of a quasi-linear function: `k ↦ slope·k + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearPiece {
    pub slope: Rational64,
    pub intercept: Rational64,
}

impl LinearPiece {
    pub fn eval(&self, k: u32) -> Rational64 {
        self.slope * Rational64::from(k as i64) + self.intercept
    }
}

/// `f(k) = pieces[k mod period](k)` for every tabulated `k >= onset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiLinearFit {
    pub period: u32,
    pub onset: u32,
    pub pieces: Vec<LinearPiece>,
}

impl QuasiLinearFit {
    pub fn eval(&self, k: u32) -> Rational64 {
        self.pieces[(k % self.period) as usize].eval(k)
    }
}

impl fmt::Display for QuasiLinearFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "period={}", self.period)?;
        writeln!(f, "onset={}", self.onset)?;
        for (i, p) in self.pieces.iter().enumerate() {
            writeln!(f, "f_{i}(k)=({})*k+({})", p.slope, p.intercept)?;
        }
        Ok(())
    }
}

/// Minimum number of points per residue class: two determine the line and
/// at least one more must confirm it.
pub const MIN_POINTS_PER_CLASS: usize = 3;

/// Finds the exact quasi-linear fit of a power table with the least period.
///
/// Periods `1..=K/3` are tried in order. For each period the earliest onset
/// is taken such that every residue class has at least
/// [`MIN_POINTS_PER_CLASS`] points on `[onset, K]`, all on one line.
/// Returns `None` when no period admits such a fit.
pub fn quasilinear_fit(table: &SatTable) -> Option<QuasiLinearFit> {
    let points: Vec<(i64, i64)> = table
        .rows
        .iter()
        .map(|&(k, s)| (k as i64, s as i64))
        .collect();
    fit_points(&points)
}

pub(crate) fn fit_points(points: &[(i64, i64)]) -> Option<QuasiLinearFit> {
    let max_period = points.len() / MIN_POINTS_PER_CLASS;
    (1..=max_period).find_map(|period| fit_with_period(points, period))
}

fn fit_with_period(points: &[(i64, i64)], period: usize) -> Option<QuasiLinearFit> {
    // Linearity on a tail is inherited by shorter tails, so the first
    // accepted start is the earliest onset.
    (0..points.len()).find_map(|start| {
        let tail = &points[start..];
        let pieces = (0..period)
            .map(|residue| {
                let class: Vec<(i64, i64)> = tail
                    .iter()
                    .copied()
                    .filter(|&(k, _)| k.rem_euclid(period as i64) == residue as i64)
                    .collect();
                line_through(&class)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(QuasiLinearFit {
            period: period as u32,
            onset: tail[0].0 as u32,
            pieces,
        })
    })
}

fn line_through(class: &[(i64, i64)]) -> Option<LinearPiece> {
    if class.len() < MIN_POINTS_PER_CLASS {
        return None;
    }
    let (k0, v0) = class[0];
    let (k1, v1) = class[1];
    let slope = Rational64::new(v1 - v0, k1 - k0);
    let intercept = Rational64::from(v0) - slope * Rational64::from(k0);
    let piece = LinearPiece { slope, intercept };
    class
        .iter()
        .all(|&(k, v)| piece.eval(k as u32) == Rational64::from(v))
        .then_some(piece)
}
