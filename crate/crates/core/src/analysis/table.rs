use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entropy::{entropy_sum, EntropyReport, QuadratureSpec};
use crate::error::{Error, Result};
use crate::systems::System;

/// Oscillator frequencies of the published entropy table (a.u.).
pub const TABLE1_OMEGAS: [f64; 13] = [0.06, 0.08, 0.2, 0.4, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.005];

/// Box widths of the published entropy table (a.u.).
pub const TABLE2_WIDTHS: [f64; 18] = [
    0.1, 0.2, 0.3, 0.4, 0.5, 1.0, 1.5009, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 6.0, 7.0, 8.0, 9.005,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableId {
    /// Oscillator, `n = 0, 1, 2` against `omega`.
    One,
    /// Box, `n = 1, 2, 3` against `xc`.
    Two,
}

impl TableId {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(TableId::One),
            2 => Some(TableId::Two),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            TableId::One => 1,
            TableId::Two => 2,
        }
    }

    pub fn system(self) -> System {
        match self {
            TableId::One => System::Oscillator,
            TableId::Two => System::Box,
        }
    }

    pub fn grid(self) -> Vec<f64> {
        match self {
            TableId::One => TABLE1_OMEGAS.to_vec(),
            TableId::Two => TABLE2_WIDTHS.to_vec(),
        }
    }

    pub fn quantum_numbers(self) -> Vec<u32> {
        let g = self.system().ground_n();
        vec![g, g + 1, g + 2]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub parameter: f64,
    /// One report per entry of [`TableArtifact::quantum_numbers`].
    pub reports: Vec<EntropyReport>,
}

/// `Sx`, `Sp`, `St` over a parameter grid for several quantum numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableArtifact {
    pub system: System,
    pub parameter_name: String,
    pub quantum_numbers: Vec<u32>,
    pub units: String,
    pub spec: QuadratureSpec,
    pub rows: Vec<TableRow>,
}

impl TableArtifact {
    pub fn column(&self, n: u32) -> Option<usize> {
        self.quantum_numbers.iter().position(|&m| m == n)
    }

    /// Report at grid index `row` for quantum number `n`.
    pub fn report(&self, row: usize, n: u32) -> Option<&EntropyReport> {
        let col = self.column(n)?;
        self.rows.get(row)?.reports.get(col)
    }
}

/// Evaluates every `(parameter, n)` pair in parallel; rows come back in grid order.
pub fn generate_table(
    system: System,
    parameter_grid: &[f64],
    n_list: &[u32],
    spec: &QuadratureSpec,
) -> Result<TableArtifact> {
    spec.validate()?;
    if parameter_grid.is_empty() {
        return Err(Error::domain("parameter grid is empty"));
    }
    if let Some(bad) = parameter_grid.iter().find(|v| !(**v > 0.0 && v.is_finite())) {
        return Err(Error::domain(format!("grid values must be positive, got {bad}")));
    }
    if n_list.is_empty() {
        return Err(Error::domain("no quantum numbers requested"));
    }
    if let Some(bad) = n_list.iter().find(|&&n| n < system.ground_n()) {
        return Err(Error::domain(format!("quantum number {bad} is not valid for the {system}")));
    }

    let cells: Vec<(usize, usize)> = (0..parameter_grid.len())
        .flat_map(|r| (0..n_list.len()).map(move |c| (r, c)))
        .collect();
    let reports: Vec<EntropyReport> = cells
        .par_iter()
        .map(|&(r, c)| {
            let (param, n) = (parameter_grid[r], n_list[c]);
            system
                .atomic_state(n, param)
                .and_then(|state| entropy_sum(&state, spec))
                .map_err(|e| e.with_context(format!("{}={param}, n={n}", system.parameter_name())))
        })
        .collect::<Result<_>>()?;

    let rows = parameter_grid
        .iter()
        .zip(reports.chunks(n_list.len()))
        .map(|(&parameter, chunk)| TableRow {
            parameter,
            reports: chunk.to_vec(),
        })
        .collect();
    Ok(TableArtifact {
        system,
        parameter_name: system.parameter_name().to_string(),
        quantum_numbers: n_list.to_vec(),
        units: "atomic".to_string(),
        spec: *spec,
        rows,
    })
}
