//! Reference constants that make the modified entropies dimensionless.
//!
//! All states are constructed in atomic units by default. A rescaled unit
//! system multiplies the numeric value of each reference constant; states and
//! densities built against it describe the same physics in different numbers,
//! which is what the invariance tests exercise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reference length `a0`, reduced action `hbar` and particle mass `m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    a0: f64,
    hbar: f64,
    m: f64,
}

impl UnitSystem {
    pub fn new(a0: f64, hbar: f64, m: f64) -> Result<Self> {
        for (name, v) in [("a0", a0), ("hbar", hbar), ("m", m)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(UnitSystem { a0, hbar, m })
    }

    /// Length unit scaled by `scale_length`, action by `scale_action`, mass by `scale_mass`.
    pub fn rescaled(&self, scale_length: f64, scale_action: f64, scale_mass: f64) -> Result<Self> {
        for (name, v) in [
            ("scale_length", scale_length),
            ("scale_action", scale_action),
            ("scale_mass", scale_mass),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        UnitSystem::new(self.a0 * scale_length, self.hbar * scale_action, self.m * scale_mass)
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    /// `hbar / a0`, the reference momentum used inside the momentum-space logarithm.
    pub fn momentum_scale(&self) -> f64 {
        self.hbar / self.a0
    }

    pub fn is_atomic(&self) -> bool {
        self.a0 == 1.0 && self.hbar == 1.0 && self.m == 1.0
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        atomic_units()
    }
}

/// `a0 = hbar = m = 1`.
pub fn atomic_units() -> UnitSystem {
    UnitSystem {
        a0: 1.0,
        hbar: 1.0,
        m: 1.0,
    }
}

/// [`atomic_units`] rescaled; see [`UnitSystem::rescaled`].
pub fn rescaled(scale_length: f64, scale_action: f64, scale_mass: f64) -> Result<UnitSystem> {
    atomic_units().rescaled(scale_length, scale_action, scale_mass)
}
