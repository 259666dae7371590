//! Analytic eigenstates of the harmonic oscillator and the infinite well.

mod box_well;
mod density;
mod hermite;
mod oscillator;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use box_well::{sinc, BoxState, Parity};
pub use density::{Density, Evaluator, Lattice, Space, Tail, Wavefunction};
pub use hermite::{hermite_derivative, hermite_eval, hermite_roots};
pub use oscillator::{OscillatorState, GAUSSIAN_TRUNCATION};

use crate::error::{Error, Result};
use crate::units::UnitSystem;

/// The two potentials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum System {
    Oscillator,
    Box,
}

impl System {
    /// Smallest allowed quantum number.
    pub fn ground_n(self) -> u32 {
        match self {
            System::Oscillator => 0,
            System::Box => 1,
        }
    }

    /// Name of the scanned parameter (`omega` or `xc`).
    pub fn parameter_name(self) -> &'static str {
        match self {
            System::Oscillator => "omega",
            System::Box => "xc",
        }
    }

    pub fn state(self, n: u32, parameter: f64, units: UnitSystem) -> Result<QuantumState> {
        Ok(match self {
            System::Oscillator => QuantumState::Oscillator(OscillatorState::new(n, parameter, units)?),
            System::Box => QuantumState::Box(BoxState::new(n, parameter, units)?),
        })
    }

    pub fn atomic_state(self, n: u32, parameter: f64) -> Result<QuantumState> {
        self.state(n, parameter, UnitSystem::default())
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            System::Oscillator => "oscillator",
            System::Box => "box",
        })
    }
}

impl FromStr for System {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ho" | "oscillator" | "harmonic" => Ok(System::Oscillator),
            "box" | "well" => Ok(System::Box),
            other => Err(Error::domain(format!("unknown system '{other}' (expected ho or box)"))),
        }
    }
}

/// An eigenstate of either system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "system", rename_all = "lowercase")]
pub enum QuantumState {
    Oscillator(OscillatorState),
    Box(BoxState),
}

impl QuantumState {
    pub fn system(&self) -> System {
        match self {
            QuantumState::Oscillator(_) => System::Oscillator,
            QuantumState::Box(_) => System::Box,
        }
    }

    pub fn n(&self) -> u32 {
        match self {
            QuantumState::Oscillator(s) => s.n(),
            QuantumState::Box(s) => s.n(),
        }
    }

    /// `omega` for the oscillator, `xc` for the box.
    pub fn parameter(&self) -> f64 {
        match self {
            QuantumState::Oscillator(s) => s.omega(),
            QuantumState::Box(s) => s.xc(),
        }
    }

    pub fn units(&self) -> UnitSystem {
        match self {
            QuantumState::Oscillator(s) => s.units(),
            QuantumState::Box(s) => s.units(),
        }
    }

    pub fn energy(&self) -> f64 {
        match self {
            QuantumState::Oscillator(s) => s.energy(),
            QuantumState::Box(s) => s.energy(),
        }
    }

    pub fn position_wavefunction(&self) -> Wavefunction {
        match self {
            QuantumState::Oscillator(s) => s.position_wavefunction(),
            QuantumState::Box(s) => s.position_wavefunction(),
        }
    }

    pub fn position_density(&self) -> Density {
        match self {
            QuantumState::Oscillator(s) => s.position_density(),
            QuantumState::Box(s) => s.position_density(),
        }
    }

    pub fn momentum_amplitude(&self, p: f64) -> Complex64 {
        match self {
            QuantumState::Oscillator(s) => s.momentum_amplitude(p),
            QuantumState::Box(s) => s.momentum_amplitude(p),
        }
    }

    pub fn momentum_density(&self) -> Density {
        match self {
            QuantumState::Oscillator(s) => s.momentum_density(),
            QuantumState::Box(s) => s.momentum_density(),
        }
    }
}

impl From<OscillatorState> for QuantumState {
    fn from(s: OscillatorState) -> Self {
        QuantumState::Oscillator(s)
    }
}

impl From<BoxState> for QuantumState {
    fn from(s: BoxState) -> Self {
        QuantumState::Box(s)
    }
}

/// Sign changes of `f` on a uniform grid of `samples` points over `[lo, hi]`.
/// Grid points where `|f|` is below `zero_tol` are skipped.
pub fn count_sign_changes<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, samples: usize, zero_tol: f64) -> usize {
    let mut last = 0.0f64;
    let mut changes = 0;
    for i in 0..samples {
        let t = lo + (hi - lo) * i as f64 / (samples - 1) as f64;
        let v = f(t);
        if v.abs() <= zero_tol {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            changes += 1;
        }
        last = v;
    }
    changes
}
