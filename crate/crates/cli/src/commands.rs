//! One function per subcommand. Each returns the bytes it would print, so the
//! same code serves the binary and in-process tests.

use std::collections::BTreeSet;

use ratsq_core::analysis::{
    closure_report, conjecture1_report, k_set, minima_straddle, offbound_minima, offbound_peaks,
    sweep, symmetry_report, KConvention, PeakRecord, SymmetryRange, Verdict,
};
use ratsq_core::confrac::{
    first_rational_between, sqrt_cf, stern_brocot_between, QuadraticEndpoint,
};
use ratsq_core::sigmacore::{sigma, t_set, tau, Strategy};
use ratsq_core::Natural;
use serde::Serialize;

use crate::args::{Format, HeatFormat, HeatMode, Report, StrategyArg};
use crate::error::CliError;
use crate::figures::HeatGrid;
use crate::output::{csv_records, json_bytes};

fn line(s: impl std::fmt::Display) -> Vec<u8> {
    format!("{s}\n").into_bytes()
}

/// σ(a) by the requested strategy, refusing to answer unless the independent
/// routes agree: the continued-fraction rule and the Stern–Brocot descent
/// always, the scan as well when it was asked for.
pub fn sigma_checked(a: &Natural, strategy: StrategyArg) -> Result<Natural, CliError> {
    let x = QuadraticEndpoint::sqrt(a.clone());
    let y = QuadraticEndpoint::sqrt(a + 1u64);
    let by_cf = first_rational_between(&x, &y)?.den().clone();
    let by_tree = stern_brocot_between(&x.to_surd(), &y.to_surd())?
        .den()
        .clone();
    let mut answers = vec![("cf", by_cf.clone()), ("stern-brocot", by_tree)];
    let chosen = match strategy {
        StrategyArg::Cf => by_cf,
        StrategyArg::Scan => {
            let s = sigma(a, Strategy::Scan);
            answers.push(("scan", s.clone()));
            s
        }
    };
    if answers.iter().any(|(_, s)| s != &chosen) {
        let detail: Vec<String> = answers.iter().map(|(k, s)| format!("{k}={s}")).collect();
        return Err(CliError::Internal(format!(
            "sigma({a}) disagrees: {}",
            detail.join(", ")
        )));
    }
    Ok(chosen)
}

pub fn cmd_sigma(a: &Natural, strategy: StrategyArg) -> Result<Vec<u8>, CliError> {
    Ok(line(sigma_checked(a, strategy)?))
}

pub fn cmd_tau(a: &Natural, s: &Natural) -> Result<Vec<u8>, CliError> {
    Ok(line(tau(a, s)))
}

/// Walks every candidate `t`, so `s` is capped to keep the walk short.
pub fn cmd_tset(a: &Natural, s: &Natural) -> Result<Vec<u8>, CliError> {
    let count = tau(a, s);
    if count > Natural::from(1_000_000u64) {
        return Err(CliError::Usage(format!(
            "T_s(a) has {count} elements; refusing to list them"
        )));
    }
    let ts: Vec<String> = t_set(a, s).iter().map(|t| t.to_string()).collect();
    Ok(line(ts.join(" ")))
}

/// `t²/s² (t=…, s=…)` for the first square, `s = σ(a)`.
pub fn cmd_first_square(a: &Natural) -> Result<Vec<u8>, CliError> {
    let s = sigma_checked(a, StrategyArg::Cf)?;
    let t = t_set(a, &s)
        .into_iter()
        .next()
        .ok_or_else(|| CliError::Internal(format!("T_sigma({a}) is empty")))?;
    Ok(line(format!(
        "{}/{} (t={t}, s={s})",
        t.square(),
        s.square()
    )))
}

pub fn cmd_cf(d: &Natural) -> Result<Vec<u8>, CliError> {
    Ok(line(sqrt_cf(d)))
}

pub fn cmd_sweep(from: &Natural, to: &Natural, format: Format) -> Result<Vec<u8>, CliError> {
    if from > to {
        return Err(CliError::Usage(format!("empty range {from}..={to}")));
    }
    let recs = sweep(from, to)?;
    match format {
        Format::Csv => csv_records(&recs),
        Format::Json => json_bytes(&recs),
    }
}

pub fn cmd_heatmap(
    a_min: Option<u64>,
    a_max: u64,
    s: (u64, u64),
    mode: HeatMode,
    format: HeatFormat,
) -> Result<Vec<u8>, CliError> {
    let a_min = a_min.unwrap_or(match mode {
        HeatMode::Tau => 8,
        HeatMode::Delta => 1,
    });
    let grid = HeatGrid::compute(mode, (a_min, a_max), s)?;
    match format {
        HeatFormat::Csv => grid.to_csv(),
        HeatFormat::Svg => {
            let what = match mode {
                HeatMode::Tau => "tau_s(a)",
                HeatMode::Delta => "tau_s(a) - tau_(s-1)(a)",
            };
            let title = format!("{what}, {a_min} <= a <= {a_max}, {} <= s <= {}", s.0, s.1);
            Ok(grid.to_svg(&title)?.into_bytes())
        }
    }
}

#[derive(Debug, Serialize)]
pub struct KsetReport {
    pub n: u64,
    pub a_from: Natural,
    pub a_to: Natural,
    pub minimal: Vec<Natural>,
    pub existential: Vec<Natural>,
    pub expected: Option<Vec<u64>>,
    pub minimal_matches: Option<bool>,
    pub existential_matches: Option<bool>,
    /// Expected values that neither convention produces.
    pub missing: Vec<u64>,
    pub verdict: Verdict,
}

pub fn kset_report(n: u64, expect: Option<Vec<u64>>) -> Result<KsetReport, CliError> {
    let nn = Natural::from(n);
    let minimal = k_set(&nn, KConvention::Minimal)?;
    let existential = k_set(&nn, KConvention::Existential)?;
    let expected: Option<BTreeSet<Natural>> = expect
        .as_ref()
        .map(|v| v.iter().map(|&k| Natural::from(k)).collect());
    let minimal_matches = expected.as_ref().map(|e| e == &minimal);
    let existential_matches = expected.as_ref().map(|e| e == &existential);
    let missing = expect
        .iter()
        .flatten()
        .copied()
        .filter(|&k| {
            !minimal.contains(&Natural::from(k)) && !existential.contains(&Natural::from(k))
        })
        .collect();
    let verdict = match (minimal_matches, existential_matches) {
        (Some(m), Some(e)) => Verdict::from_bool(m || e),
        _ => Verdict::Indeterminate,
    };
    Ok(KsetReport {
        n,
        a_from: &nn.square() + 1u64,
        a_to: &(&nn + 1u64).square() - &Natural::ONE,
        minimal: minimal.into_iter().collect(),
        existential: existential.into_iter().collect(),
        expected: expect,
        minimal_matches,
        existential_matches,
        missing,
        verdict,
    })
}

#[derive(Debug, Serialize)]
pub struct MinimaRecord {
    pub n: Natural,
    pub points: Vec<Natural>,
    pub straddles: bool,
}

#[derive(Debug, Serialize)]
pub struct OffboundReport {
    pub peaks: Vec<PeakRecord>,
    /// Every peak sits at `a = n² + n − 1`.
    pub peaks_verdict: Verdict,
    pub minima: Vec<MinimaRecord>,
    /// Exactly two σ = 5 points per interval, one on each side of `n² + n − 1`.
    pub minima_verdict: Verdict,
}

pub fn offbound_report(peaks: (u64, u64), minima: (u64, u64)) -> Result<OffboundReport, CliError> {
    let peak_recs = offbound_peaks(&peaks.0.into(), &peaks.1.into())?;
    if minima.0 > minima.1 {
        return Err(CliError::Usage(format!(
            "empty range {}..={}",
            minima.0, minima.1
        )));
    }
    let minima_recs = (minima.0..=minima.1)
        .map(|n| {
            let n = Natural::from(n);
            let points = offbound_minima(&n)?;
            Ok(MinimaRecord {
                straddles: minima_straddle(&n, &points),
                n,
                points,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(OffboundReport {
        peaks_verdict: Verdict::from_bool(peak_recs.iter().all(|p| p.at_expected)),
        peaks: peak_recs,
        minima_verdict: Verdict::from_bool(minima_recs.iter().all(|m| m.straddles)),
        minima: minima_recs,
    })
}

pub fn cmd_analyze(report: &Report) -> Result<Vec<u8>, CliError> {
    match report {
        Report::Symmetry { a_max, full_range } => {
            let range = if *full_range {
                SymmetryRange::Full
            } else {
                SymmetryRange::Trough
            };
            json_bytes(&symmetry_report(&Natural::from(*a_max), range)?)
        }
        Report::Kset { n, expect } => json_bytes(&kset_report(*n, expect.clone())?),
        Report::Offbound {
            n_from,
            n_to,
            minima_from,
            minima_to,
        } => json_bytes(&offbound_report(
            (*n_from, *n_to),
            (*minima_from, *minima_to),
        )?),
        Report::Conjecture1 {
            a_max,
            k_max,
            s_max,
        } => {
            if *a_max == 0 || *k_max == 0 {
                return Err(CliError::Usage("a-max and k-max must be at least 1".into()));
            }
            json_bytes(&conjecture1_report(*a_max, *k_max, *s_max)?)
        }
        Report::Closure {
            a,
            s_max,
            odd_k_max,
            n_bound,
        } => json_bytes(&closure_report(
            a,
            s_max,
            *odd_k_max,
            &Natural::from(*n_bound),
        )?),
    }
}
