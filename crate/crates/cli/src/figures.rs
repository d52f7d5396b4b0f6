//! Heatmap grids and the six standard figures, each as SVG plus CSV.

use std::fs;
use std::path::{Path, PathBuf};

use ratsq_core::analysis::{sigma_table, sweep};
use ratsq_core::sigmacore::{sigma_k, tau};
use ratsq_core::Natural;
use rayon::prelude::*;

use crate::args::HeatMode;
use crate::error::CliError;
use crate::output::csv_bytes;
use crate::render::{Chart, Curve, Heatmap, Points, Range};

pub const BLACK: &str = "#000000";
pub const RED: &str = "#ff0000";
pub const WHITE: &str = "#ffffff";
const BLUE: &str = "#1f4fd8";

/// Shading saturates here.
pub const TAU_CLAMP: i64 = 10;

/// Curves drawn over the σ scatter in fig5.
pub const FIG5_KS: [u64; 20] = [
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 18, 19, 22, 29, 40,
];

const CURVE_COLORS: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Above this many cells a heatmap request is refused.
pub const MAX_CELLS: u64 = 4_000_000;

/// Linear grayscale: τ = 0 is white, τ ≥ 10 black.
pub fn tau_shade(v: i64) -> String {
    let v = v.clamp(0, TAU_CLAMP);
    let g = 255 - 255 * v / TAU_CLAMP;
    format!("#{g:02x}{g:02x}{g:02x}")
}

/// +1 black, −1 red, 0 white. Anything else cannot come out of τ.
pub fn delta_color(v: i64) -> Result<&'static str, CliError> {
    match v {
        1 => Ok(BLACK),
        -1 => Ok(RED),
        0 => Ok(WHITE),
        _ => Err(CliError::Internal(format!("tau step {v} outside -1..=1"))),
    }
}

/// Exact values on `[a_min, a_max] × [s_min, s_max]`; `τ_0` is taken as 0 in
/// delta mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeatGrid {
    pub mode: HeatMode,
    pub a: (u64, u64),
    pub s: (u64, u64),
    /// `values[i][j]` at `a_min + i`, `s_min + j`.
    pub values: Vec<Vec<i64>>,
}

impl HeatGrid {
    pub fn compute(mode: HeatMode, a: (u64, u64), s: (u64, u64)) -> Result<HeatGrid, CliError> {
        if a.0 == 0 || a.0 > a.1 {
            return Err(CliError::Usage(format!(
                "need 1 <= a-min <= a-max, got {}..={}",
                a.0, a.1
            )));
        }
        if s.0 == 0 || s.0 > s.1 {
            return Err(CliError::Usage(format!(
                "need 1 <= s-min <= s-max, got {}..={}",
                s.0, s.1
            )));
        }
        let cells = (a.1 - a.0 + 1)
            .checked_mul(s.1 - s.0 + 1)
            .filter(|&n| n <= MAX_CELLS);
        if cells.is_none() {
            return Err(CliError::Usage(format!(
                "grid larger than {MAX_CELLS} cells"
            )));
        }
        let small = |v: Natural| {
            v.to_u64()
                .map(|v| v as i64)
                .ok_or_else(|| CliError::Internal("tau overflow".into()))
        };
        let values = (a.0..=a.1)
            .into_par_iter()
            .map(|a| {
                let an = Natural::from(a);
                let tau_at = |s: u64| {
                    if s == 0 {
                        Ok(0)
                    } else {
                        small(tau(&an, &Natural::from(s)))
                    }
                };
                let mut prev = tau_at(s.0 - 1)?;
                let mut col = Vec::with_capacity((s.1 - s.0 + 1) as usize);
                for s in s.0..=s.1 {
                    let cur = tau_at(s)?;
                    col.push(match mode {
                        HeatMode::Tau => cur,
                        HeatMode::Delta => cur - prev,
                    });
                    prev = cur;
                }
                Ok(col)
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(HeatGrid { mode, a, s, values })
    }

    pub fn get(&self, a: u64, s: u64) -> i64 {
        self.values[(a - self.a.0) as usize][(s - self.s.0) as usize]
    }

    /// `a,s,tau` or `a,s,delta`, ascending by `a` then `s`.
    pub fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let value = match self.mode {
            HeatMode::Tau => "tau",
            HeatMode::Delta => "delta",
        };
        let mut rows = Vec::new();
        for (i, col) in self.values.iter().enumerate() {
            for (j, v) in col.iter().enumerate() {
                rows.push(vec![
                    (self.a.0 + i as u64).to_string(),
                    (self.s.0 + j as u64).to_string(),
                    v.to_string(),
                ]);
            }
        }
        csv_bytes(&["a", "s", value], rows)
    }

    pub fn to_svg(&self, title: &str) -> Result<String, CliError> {
        let colors = self
            .values
            .iter()
            .map(|col| {
                col.iter()
                    .map(|&v| match self.mode {
                        HeatMode::Tau => Ok(tau_shade(v)),
                        HeatMode::Delta => delta_color(v).map(String::from),
                    })
                    .collect::<Result<Vec<_>, CliError>>()
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let legend = match self.mode {
            HeatMode::Tau => (0..=TAU_CLAMP)
                .step_by(2)
                .map(|v| {
                    let label = if v == TAU_CLAMP {
                        format!("tau >= {v}")
                    } else {
                        format!("tau = {v}")
                    };
                    (label, tau_shade(v))
                })
                .collect(),
            HeatMode::Delta => vec![
                ("step +1".to_string(), BLACK.to_string()),
                ("step -1".to_string(), RED.to_string()),
                ("step 0".to_string(), WHITE.to_string()),
            ],
        };
        Ok(Heatmap {
            title: title.into(),
            x_label: "a".into(),
            y_label: "s".into(),
            x: Range::new(self.a.0 as i64, self.a.1 as i64),
            y: Range::new(self.s.0 as i64, self.s.1 as i64),
            colors,
            legend,
        }
        .to_svg())
    }
}

/// A file to be written under the output directory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifact {
    pub name: String,
    pub bytes: Vec<u8>,
}

impl Artifact {
    fn new(name: &str, bytes: impl Into<Vec<u8>>) -> Artifact {
        Artifact {
            name: name.into(),
            bytes: bytes.into(),
        }
    }
}

fn small(v: &Natural) -> Result<i64, CliError> {
    v.to_u64()
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| CliError::Internal(format!("{v} does not fit a plot axis")))
}

fn n(v: u64) -> Natural {
    Natural::from(v)
}

fn pairs(rows: &[(Natural, Natural)]) -> Result<Vec<(i64, i64)>, CliError> {
    rows.iter()
        .map(|(x, y)| Ok((small(x)?, small(y)?)))
        .collect()
}

/// σ(a) for 1 ≤ a ≤ 500.
pub fn fig1() -> Result<Vec<Artifact>, CliError> {
    let table = sigma_table(&n(1), &n(500))?;
    let pts: Vec<(Natural, Natural)> = table
        .iter()
        .map(|(a, s, _)| (a.clone(), s.clone()))
        .collect();
    let data = pairs(&pts)?;
    let y_max = data.iter().map(|p| p.1).max().unwrap_or(1);
    let chart = Chart {
        title: "sigma(a), 1 <= a <= 500".into(),
        x_label: "a".into(),
        y_label: "sigma(a)".into(),
        x: Range::new(1, 500),
        y: Range::new(0, y_max),
        curves: vec![],
        points: vec![Points {
            name: "sigma(a)".into(),
            color: BLACK.into(),
            data,
        }],
    };
    let rows = pts
        .iter()
        .map(|(a, s)| vec![a.to_string(), s.to_string()])
        .collect();
    Ok(vec![
        Artifact::new("fig1.svg", chart.to_svg()),
        Artifact::new("fig1.csv", csv_bytes(&["a", "sigma"], rows)?),
    ])
}

/// σ(a) between the lower bound σ_1(a) and the upper bound ⌈√a + √(a+1)⌉.
pub fn fig2() -> Result<Vec<Artifact>, CliError> {
    let recs = sweep(&n(1), &n(500))?;
    let mut sigma = Vec::new();
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut rows = Vec::new();
    for r in &recs {
        let a = small(&r.a)?;
        sigma.push((a, small(&r.sigma)?));
        lower.push((a, small(&r.sigma1)?));
        upper.push((a, small(&r.upper)?));
        rows.push(vec![
            r.a.to_string(),
            r.sigma.to_string(),
            r.sigma1.to_string(),
            r.upper.to_string(),
        ]);
    }
    let y_max = upper.iter().chain(&sigma).map(|p| p.1).max().unwrap_or(1);
    let chart = Chart {
        title: "sigma(a) with lower and upper bounds, 1 <= a <= 500".into(),
        x_label: "a".into(),
        y_label: "sigma(a)".into(),
        x: Range::new(1, 500),
        y: Range::new(0, y_max),
        curves: vec![
            Curve {
                name: "sigma_1(a)".into(),
                color: BLUE.into(),
                data: lower,
            },
            Curve {
                name: "upper bound".into(),
                color: RED.into(),
                data: upper,
            },
        ],
        points: vec![Points {
            name: "sigma(a)".into(),
            color: BLACK.into(),
            data: sigma,
        }],
    };
    Ok(vec![
        Artifact::new("fig2.svg", chart.to_svg()),
        Artifact::new(
            "fig2.csv",
            csv_bytes(&["a", "sigma", "sigma1", "upper"], rows)?,
        ),
    ])
}

pub const FIG3_A: (u64, u64) = (8, 256);
pub const FIG4_A: (u64, u64) = (1, 256);
pub const HEAT_S: (u64, u64) = (2, 100);

pub fn fig3() -> Result<Vec<Artifact>, CliError> {
    let grid = HeatGrid::compute(HeatMode::Tau, FIG3_A, HEAT_S)?;
    Ok(vec![
        Artifact::new(
            "fig3.svg",
            grid.to_svg("tau_s(a), 8 <= a <= 256, 2 <= s <= 100")?,
        ),
        Artifact::new("fig3.csv", grid.to_csv()?),
    ])
}

pub fn fig4() -> Result<Vec<Artifact>, CliError> {
    let grid = HeatGrid::compute(HeatMode::Delta, FIG4_A, HEAT_S)?;
    Ok(vec![
        Artifact::new(
            "fig4.svg",
            grid.to_svg("tau_s(a) - tau_(s-1)(a), 1 <= a <= 256, 2 <= s <= 100")?,
        ),
        Artifact::new("fig4.csv", grid.to_csv()?),
    ])
}

pub const FIG5_A: (u64, u64) = (10_000, 10_201);

/// σ(a) on `100² ≤ a ≤ 101²` with the curves σ_k for [`FIG5_KS`]. The y axis
/// stops at the largest σ in the window; curves leaving it are clipped.
pub fn fig5() -> Result<Vec<Artifact>, CliError> {
    let recs = sweep(&n(FIG5_A.0), &n(FIG5_A.1))?;
    let mut sigma = Vec::new();
    let mut rows = Vec::new();
    for r in &recs {
        sigma.push((small(&r.a)?, small(&r.sigma)?));
        rows.push(vec![
            r.a.to_string(),
            r.sigma.to_string(),
            r.min_k.to_string(),
        ]);
    }
    let curve_rows: Vec<Vec<(u64, Natural)>> = (FIG5_A.0..=FIG5_A.1)
        .into_par_iter()
        .map(|a| {
            FIG5_KS
                .iter()
                .map(|&k| (k, sigma_k(&n(a), &n(k))))
                .collect()
        })
        .collect();
    let mut curves: Vec<Curve> = FIG5_KS
        .iter()
        .enumerate()
        .map(|(i, k)| Curve {
            name: format!("sigma_{k}"),
            color: CURVE_COLORS[i % CURVE_COLORS.len()].into(),
            data: vec![],
        })
        .collect();
    let mut curve_csv = Vec::new();
    for (a, row) in (FIG5_A.0..=FIG5_A.1).zip(&curve_rows) {
        for (i, (k, v)) in row.iter().enumerate() {
            curves[i].data.push((a as i64, small(v)?));
            curve_csv.push(vec![a.to_string(), k.to_string(), v.to_string()]);
        }
    }
    let y_max = sigma.iter().map(|p| p.1).max().unwrap_or(1);
    let chart = Chart {
        title: "sigma(a) and sigma_k(a), 100^2 <= a <= 101^2".into(),
        x_label: "a".into(),
        y_label: "sigma(a)".into(),
        x: Range::new(FIG5_A.0 as i64, FIG5_A.1 as i64),
        y: Range::new(0, y_max),
        curves,
        points: vec![Points {
            name: "sigma(a)".into(),
            color: BLACK.into(),
            data: sigma,
        }],
    };
    Ok(vec![
        Artifact::new("fig5.svg", chart.to_svg()),
        Artifact::new("fig5.csv", csv_bytes(&["a", "sigma", "min_k"], rows)?),
        Artifact::new(
            "fig5_curves.csv",
            csv_bytes(&["a", "k", "sigma_k"], curve_csv)?,
        ),
    ])
}

pub const FIG6_A: (u64, u64) = (1, 2000);

/// Only the `a` with σ(a) > σ_1(a).
pub fn fig6() -> Result<Vec<Artifact>, CliError> {
    let table = sigma_table(&n(FIG6_A.0), &n(FIG6_A.1))?;
    let off: Vec<&(Natural, Natural, Natural)> = table.iter().filter(|(_, s, s1)| s > s1).collect();
    let pts: Vec<(Natural, Natural)> = off.iter().map(|(a, s, _)| (a.clone(), s.clone())).collect();
    let data = pairs(&pts)?;
    let y_max = data.iter().map(|p| p.1).max().unwrap_or(1);
    let chart = Chart {
        title: "off-bound points sigma(a) > sigma_1(a), 1 <= a <= 2000".into(),
        x_label: "a".into(),
        y_label: "sigma(a)".into(),
        x: Range::new(FIG6_A.0 as i64, FIG6_A.1 as i64),
        y: Range::new(0, y_max),
        curves: vec![],
        points: vec![Points {
            name: "off-bound sigma(a)".into(),
            color: BLACK.into(),
            data,
        }],
    };
    let rows = off
        .iter()
        .map(|(a, s, s1)| vec![a.to_string(), s.to_string(), s1.to_string()])
        .collect();
    Ok(vec![
        Artifact::new("fig6.svg", chart.to_svg()),
        Artifact::new("fig6.csv", csv_bytes(&["a", "sigma", "sigma1"], rows)?),
    ])
}

/// Every figure, in name order.
pub fn all_figures() -> Result<Vec<Artifact>, CliError> {
    let mut out = Vec::new();
    for fig in [fig1, fig2, fig3, fig4, fig5, fig6] {
        out.extend(fig()?);
    }
    Ok(out)
}

/// Writes [`all_figures`] into `dir`, creating it if needed.
pub fn write_figures(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let artifacts = all_figures()?;
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut written = Vec::new();
    for art in artifacts {
        let path = dir.join(&art.name);
        fs::write(&path, &art.bytes).map_err(|e| CliError::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}
