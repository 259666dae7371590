//! Shannon information entropies in position and momentum space, entropy
//! sums and standard-deviation uncertainty measures for one-dimensional
//! quantum systems: the harmonic oscillator and the particle in an infinite
//! well.
//!
//! ```
//! use qentropy::{entropy_sum, OscillatorState, QuadratureSpec, BBM_BOUND};
//!
//! let ground = OscillatorState::atomic(0, 1.0)?;
//! let report = entropy_sum(&ground.into(), &QuadratureSpec::default())?;
//! assert!((report.sx - 1.0724).abs() < 5e-5);
//! assert!((report.st - BBM_BOUND).abs() < 1e-8);
//! # Ok::<(), qentropy::Error>(())
//! ```
//!
//! Everything is computed in atomic units unless a state is built against a
//! rescaled [`UnitSystem`].

pub mod analysis;
pub mod cli;
pub mod entropy;
pub mod error;
pub mod quadrature;
pub mod systems;
pub mod transform;
pub mod units;

pub use entropy::{
    continuous_entropy, discrete_entropy, entropy_p, entropy_sum, entropy_x, moments, uncertainty,
    DiscreteDistribution, EntropyReport, LogBase, Moments, QuadratureSpec, TailRadius, UncertaintyReport,
    BBM_BOUND,
};
pub use error::{Error, Result};
pub use systems::{BoxState, Density, OscillatorState, QuantumState, Space, System, Wavefunction};
pub use transform::{numerical_ft, parseval_check, FourierSpec};
pub use units::{atomic_units, UnitSystem};
