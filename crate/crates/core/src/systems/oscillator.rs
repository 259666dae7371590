use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::density::{Density, Space, Tail, Wavefunction};
use super::hermite::{hermite_function, hermite_function_derivative, hermite_roots, ln_normalization};
use crate::error::{Error, Result};
use crate::units::{atomic_units, UnitSystem};

/// Gaussian tails are cut at this many inverse square roots of the width parameter.
pub const GAUSSIAN_TRUNCATION: f64 = 10.0;

/// Eigenstate `n` of `V(x) = m omega^2 x^2 / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorState {
    n: u32,
    omega: f64,
    beta: f64,
    units: UnitSystem,
}

impl OscillatorState {
    pub fn new(n: u32, omega: f64, units: UnitSystem) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::domain(format!("omega must be positive, got {omega}")));
        }
        Ok(OscillatorState {
            n,
            omega,
            beta: units.m() * omega / units.hbar(),
            units,
        })
    }

    /// State in atomic units.
    pub fn atomic(n: u32, omega: f64) -> Result<Self> {
        Self::new(n, omega, atomic_units())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// `m omega / hbar`.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Width parameter of the momentum-space Gaussian, `1 / (beta hbar^2)`.
    pub fn momentum_beta(&self) -> f64 {
        1.0 / (self.beta * self.units.hbar().powi(2))
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }

    /// `hbar omega (n + 1/2)`.
    pub fn energy(&self) -> f64 {
        self.units.hbar() * self.omega * (f64::from(self.n) + 0.5)
    }

    pub fn position_wavefunction(&self) -> Wavefunction {
        let (n, beta) = (self.n, self.beta);
        let ln_norm = ln_normalization(n, beta);
        let radius = GAUSSIAN_TRUNCATION / beta.sqrt();
        Wavefunction::new(
            Arc::new(move |x| hermite_function(n, beta, ln_norm, x)),
            f64::NEG_INFINITY,
            f64::INFINITY,
            radius,
        )
        .expect("oscillator wavefunction parameters are validated at construction")
        .with_derivative(Arc::new(move |x| hermite_function_derivative(n, beta, ln_norm, x)))
        .with_nodes(scaled_roots(n, beta))
    }

    /// `|psi_n(x)|^2`.
    pub fn position_density(&self) -> Density {
        hermite_gaussian_density(self.n, self.beta, Space::Position)
    }

    /// Closed-form momentum amplitude `(-i)^n A_n' exp(-beta' p^2 / 2) H_n(sqrt(beta') p)`
    /// with `beta' = 1 / (beta hbar^2)`.
    pub fn momentum_amplitude(&self, p: f64) -> Complex64 {
        let beta_p = self.momentum_beta();
        let real = hermite_function(self.n, beta_p, ln_normalization(self.n, beta_p), p);
        let phase = match self.n % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, -1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, 1.0),
        };
        phase * real
    }

    /// `|psi~_n(p)|^2`: the position density with `beta` replaced by `1 / (beta hbar^2)`.
    pub fn momentum_density(&self) -> Density {
        hermite_gaussian_density(self.n, self.momentum_beta(), Space::Momentum)
    }
}

fn scaled_roots(n: u32, beta: f64) -> Vec<f64> {
    let s = beta.sqrt();
    hermite_roots(n).into_iter().map(|y| y / s).collect()
}

fn hermite_gaussian_density(n: u32, beta: f64, space: Space) -> Density {
    let ln_norm = ln_normalization(n, beta);
    let eval = move |t: f64| hermite_function(n, beta, ln_norm, t).powi(2);
    Density::new(
        Arc::new(eval),
        space,
        f64::NEG_INFINITY,
        f64::INFINITY,
        Tail::Gaussian {
            radius: GAUSSIAN_TRUNCATION / beta.sqrt(),
        },
    )
    .expect("oscillator density parameters are validated at construction")
    .with_nodes(scaled_roots(n, beta))
    .with_even_symmetry()
}
