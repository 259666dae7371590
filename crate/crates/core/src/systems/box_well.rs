use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::density::{Density, Evaluator, Lattice, Space, Tail, Wavefunction};
use crate::error::{Error, Result};
use crate::units::{atomic_units, UnitSystem};

/// Below this `|u|` the sinc is evaluated by its Taylor series.
const SINC_SERIES_CUTOFF: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// `cos(k x)`, odd quantum numbers.
    Cosine,
    /// `sin(k x)`, even quantum numbers.
    Sine,
}

/// Eigenstate `n >= 1` of the infinite well on `|x| < xc / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoxState {
    n: u32,
    xc: f64,
    kn: f64,
    parity: Parity,
    units: UnitSystem,
}

impl BoxState {
    pub fn new(n: u32, xc: f64, units: UnitSystem) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("box quantum number starts at 1"));
        }
        if !(xc > 0.0 && xc.is_finite()) {
            return Err(Error::domain(format!("box width must be positive, got {xc}")));
        }
        Ok(BoxState {
            n,
            xc,
            kn: f64::from(n) * PI / xc,
            parity: if n % 2 == 1 { Parity::Cosine } else { Parity::Sine },
            units,
        })
    }

    pub fn atomic(n: u32, xc: f64) -> Result<Self> {
        Self::new(n, xc, atomic_units())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn xc(&self) -> f64 {
        self.xc
    }

    /// Wave number `n pi / xc`.
    pub fn kn(&self) -> f64 {
        self.kn
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }

    /// `pi^2 hbar^2 n^2 / (2 m xc^2)`.
    pub fn energy(&self) -> f64 {
        let n = f64::from(self.n);
        PI * PI * self.units.hbar().powi(2) * n * n / (2.0 * self.units.m() * self.xc * self.xc)
    }

    /// Interior zeros of the eigenfunction; the walls are not nodes.
    pub fn nodes(&self) -> Vec<f64> {
        let half = 0.5 * self.xc;
        let step = PI / self.kn;
        let offset = match self.parity {
            Parity::Cosine => 0.5 * step,
            Parity::Sine => 0.0,
        };
        let mut nodes = Vec::new();
        let jmax = (half / step).ceil() as i64 + 1;
        for j in -jmax..=jmax {
            let x = offset + j as f64 * step;
            if x.abs() < half * (1.0 - 1e-12) {
                nodes.push(x);
            }
        }
        nodes
    }

    pub fn position_wavefunction(&self) -> Wavefunction {
        let amp = (2.0 / self.xc).sqrt();
        let k = self.kn;
        let half = 0.5 * self.xc;
        let (value, derivative): (Evaluator, Evaluator) =
            match self.parity {
                Parity::Cosine => (
                    Arc::new(move |x: f64| amp * (k * x).cos()),
                    Arc::new(move |x: f64| -amp * k * (k * x).sin()),
                ),
                Parity::Sine => (
                    Arc::new(move |x: f64| amp * (k * x).sin()),
                    Arc::new(move |x: f64| amp * k * (k * x).cos()),
                ),
            };
        Wavefunction::new(value, -half, half, half)
            .expect("box parameters are validated at construction")
            .with_derivative(derivative)
            .with_nodes(self.nodes())
    }

    /// `(2 / xc) cos^2(k x)` or `(2 / xc) sin^2(k x)` on `[-xc/2, xc/2]`.
    pub fn position_density(&self) -> Density {
        let h = 2.0 / self.xc;
        let k = self.kn;
        let half = 0.5 * self.xc;
        let eval: Arc<dyn Fn(f64) -> f64 + Send + Sync> = match self.parity {
            Parity::Cosine => Arc::new(move |x: f64| h * (k * x).cos().powi(2)),
            Parity::Sine => Arc::new(move |x: f64| h * (k * x).sin().powi(2)),
        };
        Density::new(eval, Space::Position, -half, half, Tail::None)
            .expect("box parameters are validated at construction")
            .with_nodes(self.nodes())
            .with_even_symmetry()
    }

    /// Closed-form `(2 pi hbar)^{-1/2} int psi(x) exp(-i p x / hbar) dx` as two
    /// sinc lobes centred on `p = +-hbar k`.
    pub fn momentum_amplitude(&self, p: f64) -> Complex64 {
        box_momentum_amplitude(self.parity, self.kn, self.xc, self.units.hbar(), p)
    }

    /// `|psi~_n(p)|^2` over the whole momentum axis.
    pub fn momentum_density(&self) -> Density {
        let (parity, k, xc, hbar) = (self.parity, self.kn, self.xc, self.units.hbar());
        let eval = move |p: f64| box_momentum_amplitude(parity, k, xc, hbar, p).norm_sqr();
        // gamma(p) = 4 k^2 hbar^3 / (pi xc) * trig^2 / (P^2 - p^2)^2 with P = hbar k;
        // for |p| >= 2P the denominator is at least (3/4 p^2)^2.
        let coefficient = 64.0 * k * k * hbar.powi(3) / (9.0 * PI * xc);
        let spacing = 2.0 * PI * hbar / xc;
        let offset = match parity {
            Parity::Cosine => 0.5 * spacing,
            Parity::Sine => 0.0,
        };
        Density::new(
            Arc::new(eval),
            Space::Momentum,
            f64::NEG_INFINITY,
            f64::INFINITY,
            Tail::InversePower {
                coefficient,
                power: 4.0,
                from: 2.0 * hbar * k,
            },
        )
        .expect("box parameters are validated at construction")
        .with_lattice(Lattice { offset, spacing })
        .with_even_symmetry()
    }
}

/// `sin(u) / u` with a series guard near the removable singularity.
pub fn sinc(u: f64) -> f64 {
    if u.abs() < SINC_SERIES_CUTOFF {
        let u2 = u * u;
        1.0 - u2 / 6.0 + u2 * u2 / 120.0
    } else {
        u.sin() / u
    }
}

fn box_momentum_amplitude(parity: Parity, k: f64, xc: f64, hbar: f64, p: f64) -> Complex64 {
    let q = p / hbar;
    let half = 0.5 * xc;
    let prefactor = (2.0 / xc).sqrt() * half / (2.0 * PI * hbar).sqrt();
    let minus = sinc((k - q) * half);
    let plus = sinc((k + q) * half);
    match parity {
        Parity::Cosine => Complex64::new(prefactor * (minus + plus), 0.0),
        Parity::Sine => Complex64::new(0.0, -prefactor * (minus - plus)),
    }
}
