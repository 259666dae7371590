use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entropy::{entropy_sum, EntropyReport, QuadratureSpec};
use crate::error::{Error, Result};
use crate::systems::{QuantumState, System};

/// Figures whose data can be regenerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureId {
    /// Oscillator `Sx`, `Sp` against `omega`, `n = 0..2`.
    Fig2,
    /// Oscillator ground-state densities at `omega = 0.5, 2.5, 5.0`.
    Fig3,
    /// Oscillator densities for `n = 0..2` at `omega = 0.5`.
    Fig4,
    /// Oscillator `St` against `omega`.
    Fig5,
    /// Box `Sx`, `Sp` against `xc`, `n = 1..3`.
    Fig6,
    /// Box densities for `n = 1..3` at `xc = 6`.
    Fig7,
    /// Box `St` against `xc`.
    Fig8,
}

impl FigureId {
    pub const ALL: [FigureId; 7] = [
        FigureId::Fig2,
        FigureId::Fig3,
        FigureId::Fig4,
        FigureId::Fig5,
        FigureId::Fig6,
        FigureId::Fig7,
        FigureId::Fig8,
    ];

    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            2..=8 => Ok(Self::ALL[usize::from(n) - 2]),
            _ => Err(Error::domain(format!("unknown figure {n} (expected 2..8)"))),
        }
    }

    pub fn number(self) -> u8 {
        Self::ALL.iter().position(|&f| f == self).unwrap() as u8 + 2
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fig{}", self.number())
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.trim_start_matches("fig");
        let n: u8 = digits
            .parse()
            .map_err(|_| Error::domain(format!("unknown figure '{s}'")))?;
        Self::from_number(n)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub name: String,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

/// Columnar data for one figure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureData {
    pub id: FigureId,
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
}

const DENSITY_SAMPLES: usize = 401;

fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

/// `lo, lo + step, ...` up to `hi`, computed without accumulating rounding.
fn stepped(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step).round() as usize + 1;
    (0..count).map(|i| lo + step * i as f64).collect()
}

fn omega_grid() -> Vec<f64> {
    stepped(0.05, 8.0, 0.05)
}

fn width_grid() -> Vec<f64> {
    stepped(0.25, 9.0, 0.25)
}

fn entropy_grid(system: System, grid: &[f64], spec: &QuadratureSpec) -> Result<Vec<Vec<EntropyReport>>> {
    let g = system.ground_n();
    (g..g + 3)
        .map(|n| {
            grid.par_iter()
                .map(|&param| system.atomic_state(n, param).and_then(|s| entropy_sum(&s, spec)))
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

fn entropy_curves(system: System, spec: &QuadratureSpec, with_sum: bool) -> Result<Vec<Series>> {
    let grid = match system {
        System::Oscillator => omega_grid(),
        System::Box => width_grid(),
    };
    let reports = entropy_grid(system, &grid, spec)?;
    let g = system.ground_n();
    let mut series = Vec::new();
    for (i, col) in reports.iter().enumerate() {
        let n = g + i as u32;
        if with_sum {
            series.push(Series {
                name: format!("st_n{n}"),
                x: grid.clone(),
                y: col.iter().map(|r| r.st).collect(),
            });
        } else {
            series.push(Series {
                name: format!("sx_n{n}"),
                x: grid.clone(),
                y: col.iter().map(|r| r.sx).collect(),
            });
            series.push(Series {
                name: format!("sp_n{n}"),
                x: grid.clone(),
                y: col.iter().map(|r| r.sp).collect(),
            });
        }
    }
    Ok(series)
}

fn density_series(states: &[(String, QuantumState)], x_range: (f64, f64), p_range: (f64, f64)) -> Vec<Series> {
    let xs = linspace(x_range.0, x_range.1, DENSITY_SAMPLES);
    let ps = linspace(p_range.0, p_range.1, DENSITY_SAMPLES);
    let mut out = Vec::new();
    for (label, state) in states {
        let rho = state.position_density();
        out.push(Series {
            name: format!("rho_{label}"),
            x: xs.clone(),
            y: xs.iter().map(|&x| rho.eval(x)).collect(),
        });
    }
    for (label, state) in states {
        let gamma = state.momentum_density();
        out.push(Series {
            name: format!("gamma_{label}"),
            x: ps.clone(),
            y: ps.iter().map(|&p| gamma.eval(p)).collect(),
        });
    }
    out
}

/// Regenerates the series behind one figure.
pub fn figure_data(id: FigureId, spec: &QuadratureSpec) -> Result<FigureData> {
    spec.validate()?;
    let (title, x_label, y_label, series) = match id {
        FigureId::Fig2 => (
            "Sx and Sp against omega, harmonic oscillator",
            "omega",
            "entropy",
            entropy_curves(System::Oscillator, spec, false)?,
        ),
        FigureId::Fig3 => {
            let states = [0.5, 2.5, 5.0]
                .iter()
                .map(|&w| Ok((format!("n0_omega{w}"), System::Oscillator.atomic_state(0, w)?)))
                .collect::<Result<Vec<_>>>()?;
            (
                "Ground-state densities, harmonic oscillator",
                "x or p",
                "density",
                density_series(&states, (-4.0, 4.0), (-6.0, 6.0)),
            )
        }
        FigureId::Fig4 => {
            let states = (0..3)
                .map(|n| Ok((format!("n{n}_omega0.5"), System::Oscillator.atomic_state(n, 0.5)?)))
                .collect::<Result<Vec<_>>>()?;
            (
                "Densities for n = 0..2 at omega = 0.5, harmonic oscillator",
                "x or p",
                "density",
                density_series(&states, (-6.0, 6.0), (-4.0, 4.0)),
            )
        }
        FigureId::Fig5 => (
            "St against omega, harmonic oscillator",
            "omega",
            "entropy sum",
            entropy_curves(System::Oscillator, spec, true)?,
        ),
        FigureId::Fig6 => (
            "Sx and Sp against xc, particle in a box",
            "xc",
            "entropy",
            entropy_curves(System::Box, spec, false)?,
        ),
        FigureId::Fig7 => {
            let states = (1..4)
                .map(|n| Ok((format!("n{n}_xc6"), System::Box.atomic_state(n, 6.0)?)))
                .collect::<Result<Vec<_>>>()?;
            (
                "Densities for n = 1..3 at xc = 6, particle in a box",
                "x or p",
                "density",
                density_series(&states, (-3.0, 3.0), (-4.0, 4.0)),
            )
        }
        FigureId::Fig8 => (
            "St against xc, particle in a box",
            "xc",
            "entropy sum",
            entropy_curves(System::Box, spec, true)?,
        ),
    };
    Ok(FigureData {
        id,
        title: title.to_string(),
        x_label: x_label.to_string(),
        y_label: y_label.to_string(),
        series,
    })
}
