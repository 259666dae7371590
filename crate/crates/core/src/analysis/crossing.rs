use serde::{Deserialize, Serialize};

use crate::entropy::{entropy_p, entropy_x, QuadratureSpec};
use crate::error::{Error, Result};
use crate::systems::System;

/// `|Sx - Sp|` must be below this at a reported crossing.
pub const CROSSING_RESIDUAL: f64 = 1e-6;

/// Bisection stops once the bracket is this narrow.
const BRACKET_WIDTH: f64 = 1e-8;

/// Parameter value where the position and momentum entropies are equal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossingResult {
    pub system: System,
    pub n: u32,
    /// `omega` or `xc` at the crossing.
    pub parameter_value: f64,
    /// Common value of `Sx` and `Sp`.
    pub entropy_value: f64,
    pub bracket: (f64, f64),
    /// `Sx - Sp` at `parameter_value`.
    pub residual: f64,
}

fn entropy_gap(system: System, n: u32, parameter: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    let state = system.atomic_state(n, parameter)?;
    let units = state.units();
    let (sx, sp) = rayon::join(
        || entropy_x(&state.position_density(), &units, spec),
        || entropy_p(&state.momentum_density(), &units, spec),
    );
    let (sx, sp) = (sx?, sp?);
    Ok((sx - sp, 0.5 * (sx + sp)))
}

/// Root of `Sx(theta) - Sp(theta)` on `bracket`: bisection down to a width of
/// `1e-8`, then one secant step between the final bracket ends.
pub fn find_crossing(system: System, n: u32, bracket: (f64, f64), spec: &QuadratureSpec) -> Result<CrossingResult> {
    let (lo0, hi0) = bracket;
    if !(lo0 > 0.0 && hi0 > lo0 && hi0.is_finite()) {
        return Err(Error::domain(format!("bracket must satisfy 0 < lo < hi, got ({lo0}, {hi0})")));
    }
    let (mut lo, mut hi) = (lo0, hi0);
    let (mut f_lo, _) = entropy_gap(system, n, lo, spec)?;
    let (mut f_hi, _) = entropy_gap(system, n, hi, spec)?;
    if f_lo.signum() == f_hi.signum() && f_lo != 0.0 && f_hi != 0.0 {
        return Err(Error::Bracket { lo, hi, f_lo, f_hi });
    }

    while hi - lo > BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        let (f_mid, _) = entropy_gap(system, n, mid, spec)?;
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            f_lo = 0.0;
            f_hi = 0.0;
            break;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    let polished = if f_hi != f_lo {
        let t = lo - f_lo * (hi - lo) / (f_hi - f_lo);
        if t >= lo && t <= hi { t } else { 0.5 * (lo + hi) }
    } else {
        0.5 * (lo + hi)
    };
    let (residual, entropy_value) = entropy_gap(system, n, polished, spec)?;
    if residual.abs() >= CROSSING_RESIDUAL {
        return Err(Error::InvariantViolation(format!(
            "crossing residual {residual:.3e} at {polished} exceeds {CROSSING_RESIDUAL:e}"
        )));
    }
    Ok(CrossingResult {
        system,
        n,
        parameter_value: polished,
        entropy_value,
        bracket: (lo0, hi0),
        residual,
    })
}
