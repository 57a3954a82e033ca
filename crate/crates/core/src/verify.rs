//! The reproduction suite: every closed formula and worked example is
//! recomputed from scratch and compared against colon chains, closures and
//! reconstructions.

use std::fmt;

use num_rational::Rational64;

use crate::borel::{
    extremal_monomial, principal_borel, principal_borel_power_presentation, verify_borel_socle,
    veronese, veronese_sat,
};
use crate::catalog;
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::VarSet;
use crate::polymatroid::{intersection_presentation, is_polymatroidal, sat_from_presentation};
use crate::presentation::IntersectionPresentation;
use crate::primes::{associated_primes, check_scaling_law, ScalingHypothesis, ScalingOutcome};
use crate::quasilinear::quasilinear_fit;
use crate::saturation::{quotient_profile, sat_number, sat_of_intersection_with_power, sat_table};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: expected {}, computed {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.expected,
            self.computed
        )
    }
}

pub type CheckFn = fn() -> Result<(String, String, bool)>;

/// All checks, in report order.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("squared-cycle-sat", squared_cycle_sat),
    ("squared-cycle-sigma", squared_cycle_sigma),
    ("four-primes-m5-colon-chain", four_primes_chain),
    ("four-primes-m5-presentation", four_primes_presentation),
    ("i23-power-table", i23_table),
    ("i23-quasilinear-fit", i23_fit),
    ("veronese-d2-n3-formula", veronese_d2_n3),
    ("principal-borel-power-sat", principal_borel_sweep),
    (
        "principal-borel-power-presentation",
        principal_borel_presentation_sweep,
    ),
    ("principal-borel-associated-primes", principal_borel_ass),
    ("veronese-formula-sweep", veronese_sweep),
    ("borel-socle-sweep", socle_sweep),
    ("bounded-cubics-presentation", bounded_cubics),
    ("presentation-round-trip-battery", presentation_battery),
    ("transversal-scaling-law", transversal_scaling),
    ("i23-scaling-law-fails", i23_scaling),
];

/// Runs every check in order; errors inside a check become failures.
pub fn verify_paper() -> Vec<Check> {
    CHECKS
        .iter()
        .map(|&(name, run)| run_check(name, run))
        .collect()
}

/// Runs a single entry of [`CHECKS`].
pub fn run_check(name: &'static str, run: CheckFn) -> Check {
    match run() {
        Ok((expected, computed, pass)) => Check {
            name,
            expected,
            computed,
            pass,
        },
        Err(e) => Check {
            name,
            expected: "no error".into(),
            computed: format!("error: {e}"),
            pass: false,
        },
    }
}

fn exact<T: PartialEq + fmt::Debug>(expected: T, computed: T) -> Result<(String, String, bool)> {
    let pass = expected == computed;
    Ok((format!("{expected:?}"), format!("{computed:?}"), pass))
}

fn squared_cycle_sat() -> Result<(String, String, bool)> {
    exact(2, sat_number(&catalog::squared_cycle().power(5)?)?)
}

fn squared_cycle_sigma() -> Result<(String, String, bool)> {
    let p = quotient_profile(&catalog::squared_cycle().power(5)?)?;
    Ok((
        "sigma >= 4 and gamma = 2".into(),
        format!("sigma = {}, gamma = {}", p.sigma, p.gamma),
        p.sigma >= 4 && p.gamma == 2,
    ))
}

fn four_primes_with_m5() -> Result<MonomialIdeal> {
    catalog::four_primes_intersection()?.intersect(&MonomialIdeal::maximal_power(4, 5)?)
}

fn four_primes_chain() -> Result<(String, String, bool)> {
    exact(3, sat_number(&four_primes_with_m5()?)?)
}

fn four_primes_presentation() -> Result<(String, String, bool)> {
    let primes = catalog::four_primes();
    let comps = primes
        .iter()
        .map(|p| {
            (
                VarSet::from_indices(p.gens().iter().map(|g| g.index_sequence()[0])),
                1,
            )
        })
        .chain(std::iter::once((VarSet::full(4), 5)));
    let p = IntersectionPresentation::new(4, comps)?;
    let closed = sat_of_intersection_with_power(&catalog::four_primes_intersection()?, 5)?;
    exact((3, 3), (sat_from_presentation(&p)?, closed))
}

fn i23_table() -> Result<(String, String, bool)> {
    exact(
        vec![0, 1, 1, 2, 2, 3, 3, 4],
        sat_table(&veronese(2, 3)?, 8)?.values(),
    )
}

fn i23_fit() -> Result<(String, String, bool)> {
    let fit = quasilinear_fit(&sat_table(&veronese(2, 3)?, 8)?);
    let half = Rational64::new(1, 2);
    let expected = "period 2, f_0 = k/2, f_1 = (k-1)/2".to_string();
    let Some(fit) = fit else {
        return Ok((expected, "no fit".into(), false));
    };
    let pass = fit.period == 2
        && fit.pieces[0].slope == half
        && fit.pieces[0].intercept == Rational64::from(0)
        && fit.pieces[1].slope == half
        && fit.pieces[1].intercept == -half;
    Ok((
        expected,
        fit.to_string().trim_end().replace('\n', "; "),
        pass,
    ))
}

fn veronese_d2_n3() -> Result<(String, String, bool)> {
    let formula = (1..=8)
        .map(|k| veronese_sat(2, 3, k))
        .collect::<Result<Vec<_>>>()?;
    exact(vec![0, 1, 1, 2, 2, 3, 3, 4], formula)
}

fn sweep_summary(total: usize, failures: Vec<String>) -> (String, String, bool) {
    let computed = if failures.is_empty() {
        format!("{total} of {total} cases")
    } else {
        format!("{} failures, first: {}", failures.len(), failures[0])
    };
    (
        format!("{total} of {total} cases"),
        computed,
        failures.is_empty(),
    )
}

fn principal_borel_sweep() -> Result<(String, String, bool)> {
    let mut total = 0;
    let mut failures = Vec::new();
    for u in catalog::squarefree_last_variable_monomials(4, 3) {
        let b = principal_borel(&u)?;
        let mut power = MonomialIdeal::unit(u.nvars());
        for k in 1..=4 {
            power = power.product(&b)?;
            total += 1;
            let s = sat_number(&power)?;
            if s != k {
                failures.push(format!("u={u} k={k} sat={s}"));
            }
        }
    }
    Ok(sweep_summary(total, failures))
}

fn principal_borel_presentation_sweep() -> Result<(String, String, bool)> {
    let mut total = 0;
    let mut failures = Vec::new();
    for u in catalog::squarefree_last_variable_monomials(4, 3) {
        let b = principal_borel(&u)?;
        let pres = principal_borel_power_presentation(&u)?;
        let mut power = MonomialIdeal::unit(u.nvars());
        for k in 1..=4 {
            power = power.product(&b)?;
            total += 1;
            if pres.at(k)?.instantiate()? != power {
                failures.push(format!("u={u} k={k}"));
            }
        }
    }
    Ok(sweep_summary(total, failures))
}

fn principal_borel_ass() -> Result<(String, String, bool)> {
    let ass = associated_primes(&catalog::borel_x2x3()?)?;
    let shown: Vec<String> = ass.iter().map(VarSet::to_string).collect();
    exact(vec!["{1,2}".to_string(), "{1,2,3}".to_string()], shown)
}

fn veronese_sweep() -> Result<(String, String, bool)> {
    let mut total = 0;
    let mut failures = Vec::new();
    for n in 1..=5usize {
        for d in 1..=n as u32 {
            let base = veronese(d, n)?;
            let mut power = MonomialIdeal::unit(n);
            for k in 1..=5 {
                power = power.product(&base)?;
                total += 1;
                let (formula, chain) = (veronese_sat(d, n, k)?, sat_number(&power)?);
                if formula != chain {
                    failures.push(format!("d={d} n={n} k={k} formula={formula} chain={chain}"));
                }
            }
        }
    }
    Ok(sweep_summary(total, failures))
}

fn socle_sweep() -> Result<(String, String, bool)> {
    let mut total = 0;
    let mut failures = Vec::new();
    for n in 1..=4 {
        for d in 1..=5 {
            for k in 1..=3 {
                if extremal_monomial(k, d, n).is_none() {
                    continue;
                }
                total += 1;
                let report = verify_borel_socle(k, d, n)?;
                if !report.holds() {
                    failures.push(report.to_string());
                }
            }
        }
    }
    Ok(sweep_summary(total, failures))
}

fn bounded_cubics() -> Result<(String, String, bool)> {
    let mut computed = Vec::new();
    let mut pass = true;
    for n in 3..=4 {
        let ideal = catalog::bounded_cubics(n)?;
        let p = intersection_presentation(&ideal)?;
        let full = VarSet::full(n);
        let shape_ok = p.components().len() == n + 1
            && p.components()
                .iter()
                .all(|&(f, a)| (f.len() + 1 == n && a == 1) || (f == full && a == 3));
        let from_pres = sat_from_presentation(&p)?;
        let chain = sat_number(&ideal)?;
        pass &= shape_ok && from_pres == 1 && chain == 1;
        computed.push(format!("n={n}: shape={shape_ok} sat={from_pres}/{chain}"));
    }
    Ok((
        "⋂_{|A|=n-1} P_A ∩ m^3 with sat 1 for n = 3, 4".into(),
        computed.join(", "),
        pass,
    ))
}

/// Polymatroidal ideals whose presentations must reconstruct exactly.
pub fn presentation_battery() -> Result<(String, String, bool)> {
    let mut ideals = vec![catalog::bounded_cubics(3)?, catalog::bounded_cubics(4)?];
    for n in 1..=4 {
        for d in 1..=n as u32 {
            ideals.push(veronese(d, n)?);
        }
    }
    for u in catalog::squarefree_last_variable_monomials(4, 3) {
        ideals.push(principal_borel(&u)?);
    }
    let mut failures = Vec::new();
    for ideal in &ideals {
        if !is_polymatroidal(ideal) {
            failures.push(format!("{ideal:?} not polymatroidal"));
            continue;
        }
        let p = intersection_presentation(ideal)?;
        if sat_from_presentation(&p)? != sat_number(ideal)? {
            failures.push(format!("{ideal:?} presentation sat mismatch"));
        }
    }
    Ok(sweep_summary(ideals.len(), failures))
}

fn transversal_scaling() -> Result<(String, String, bool)> {
    let r = check_scaling_law(
        &catalog::transversal_example()?,
        4,
        ScalingHypothesis::Polymatroidal,
    )?;
    let sats: Vec<u32> = r.rows.iter().map(|row| row.sat).collect();
    Ok((
        "law holds with sat 1, 2, 3, 4".into(),
        format!("{:?} sat {:?}", r.outcome, sats),
        r.holds() && sats == vec![1, 2, 3, 4],
    ))
}

fn i23_scaling() -> Result<(String, String, bool)> {
    let r = check_scaling_law(&veronese(2, 3)?, 4, ScalingHypothesis::Polymatroidal)?;
    exact(
        (ScalingOutcome::Violated { k: 2 }, Some(2)),
        (r.outcome, r.first_ass_change),
    )
}
