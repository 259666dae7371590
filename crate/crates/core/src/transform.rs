//! Quadrature-based Fourier transform of position wavefunctions.
//!
//! This is the independent check on the closed-form momentum amplitudes in
//! [`crate::systems`]: nothing here knows about Hermite functions or sinc lobes.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{self, NeumaierSum};
use crate::systems::Wavefunction;

/// Stop doubling the momentum window after this many attempts.
const MAX_DOUBLINGS: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourierSpec {
    /// Position-space half-width that is integrated.
    pub truncation_radius: f64,
    pub tolerance: f64,
    pub max_subdivisions: usize,
}

impl FourierSpec {
    pub fn new(truncation_radius: f64, tolerance: f64, max_subdivisions: usize) -> Result<Self> {
        let spec = FourierSpec {
            truncation_radius,
            tolerance,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Truncation at the wavefunction's own negligible-tail radius
    /// (`10 / sqrt(beta)` for the oscillator, the walls for the box).
    pub fn for_wavefunction(psi: &Wavefunction) -> Self {
        FourierSpec {
            truncation_radius: psi.radius(),
            tolerance: 1e-12,
            max_subdivisions: 200_000,
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.truncation_radius > 0.0 && self.truncation_radius.is_finite()) {
            return Err(Error::domain(format!(
                "truncation_radius must be positive, got {}",
                self.truncation_radius
            )));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::domain(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::domain("max_subdivisions must be positive"));
        }
        Ok(())
    }
}

/// `(2 pi hbar)^{-1/2} int psi(x) exp(-i p x / hbar) dx` over the truncated window.
///
/// Real and imaginary parts are integrated separately, each on panels cut at
/// the zeros of `cos(p x / hbar)` and `sin(p x / hbar)` and at the nodes of `psi`.
pub fn numerical_ft(psi: &Wavefunction, p: f64, spec: &FourierSpec, hbar: f64) -> Result<Complex64> {
    spec.validate()?;
    if !(hbar > 0.0 && hbar.is_finite()) {
        return Err(Error::domain(format!("hbar must be positive, got {hbar}")));
    }
    let (lo, hi) = psi.window(spec.truncation_radius);
    if !(hi > lo) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let q = p / hbar;
    let breakpoints = oscillation_breakpoints(psi, lo, hi, q, spec)?;
    let norm = (2.0 * PI * hbar).sqrt();
    // Split the budget so the combined complex error meets the tolerance.
    let part_tol = 0.5 * spec.tolerance * norm;

    let re = quadrature::integrate(
        |x| psi.eval(x) * (q * x).cos(),
        &breakpoints,
        part_tol,
        spec.max_subdivisions,
    )?;
    let im = if q == 0.0 {
        0.0
    } else {
        -quadrature::integrate(
            |x| psi.eval(x) * (q * x).sin(),
            &breakpoints,
            part_tol,
            spec.max_subdivisions,
        )?
        .value
    };
    Ok(Complex64::new(re.value, im) / norm)
}

fn oscillation_breakpoints(psi: &Wavefunction, lo: f64, hi: f64, q: f64, spec: &FourierSpec) -> Result<Vec<f64>> {
    let mut pts = vec![lo, hi];
    pts.extend(psi.nodes().iter().copied().filter(|&x| x > lo && x < hi));
    if q != 0.0 {
        // Zeros of cos and sin together: multiples of pi / (2 |q|).
        let step = 0.5 * PI / q.abs();
        let count = (hi - lo) / step;
        if count > spec.max_subdivisions as f64 {
            return Err(Error::Convergence {
                achieved: f64::INFINITY,
                requested: spec.tolerance,
                subdivisions: spec.max_subdivisions,
            });
        }
        let first = (lo / step).ceil() as i64;
        let last = (hi / step).floor() as i64;
        pts.extend((first..=last).map(|j| j as f64 * step));
    }
    pts.retain(|x| *x >= lo && *x <= hi);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    Ok(pts)
}

/// `int |psi~(p)|^2 dp`, which is one for a normalized `psi`.
///
/// The momentum integral is carried out on `[0, P]` (the integrand is even
/// for real `psi`) with `P` doubled until the newly added shell contributes
/// less than a quarter of the tolerance.
pub fn parseval_check(psi: &Wavefunction, spec: &FourierSpec) -> Result<f64> {
    spec.validate()?;
    let (lo, hi) = psi.window(spec.truncation_radius);
    let width = hi - lo;
    if !(width > 0.0) {
        return Err(Error::domain("wavefunction window is empty"));
    }
    // |psi~|^2 varies on the scale 2 pi / width.
    let panel = PI / width;
    let inner = FourierSpec {
        tolerance: spec.tolerance * 1e-2,
        ..*spec
    };
    let gamma = |p: f64| -> Result<f64> { Ok(numerical_ft(psi, p, &inner, 1.0)?.norm_sqr()) };

    let mut total = NeumaierSum::default();
    let mut a = 0.0;
    let mut b = 8.0 * panel;
    for _ in 0..MAX_DOUBLINGS {
        let shell = integrate_fallible(&gamma, a, b, panel, spec)?;
        total.add(2.0 * shell);
        if a > 0.0 && 2.0 * shell < 0.25 * spec.tolerance {
            return Ok(total.total());
        }
        a = b;
        b *= 2.0;
    }
    Err(Error::Convergence {
        achieved: f64::NAN,
        requested: spec.tolerance,
        subdivisions: spec.max_subdivisions,
    })
}

/// Adaptive integration of a fallible integrand on `[a, b]` with panels of
/// roughly `panel` width.
fn integrate_fallible<G: Fn(f64) -> Result<f64>>(
    g: &G,
    a: f64,
    b: f64,
    panel: f64,
    spec: &FourierSpec,
) -> Result<f64> {
    let count = ((b - a) / panel).ceil().max(1.0) as usize;
    let breakpoints: Vec<f64> = (0..=count).map(|i| a + (b - a) * i as f64 / count as f64).collect();
    let failure = std::cell::RefCell::new(None);
    let est = quadrature::integrate(
        |p| match g(p) {
            Ok(v) => v,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        },
        &breakpoints,
        0.25 * spec.tolerance,
        spec.max_subdivisions,
    )?;
    match failure.into_inner() {
        Some(e) => Err(e),
        None => Ok(est.value),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::{BoxState, OscillatorState};

    #[test]
    fn gaussian_at_zero_momentum() {
        // int pi^{-1/4} exp(-x^2/2) dx / sqrt(2 pi) = pi^{-1/4}
        let psi = OscillatorState::atomic(0, 1.0).unwrap().position_wavefunction();
        let spec = FourierSpec::for_wavefunction(&psi);
        let v = numerical_ft(&psi, 0.0, &spec, 1.0).unwrap();
        assert!((v.re - PI.powf(-0.25)).abs() < 1e-12);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn odd_functions_vanish_at_zero_momentum() {
        let psi = BoxState::atomic(2, 3.0).unwrap().position_wavefunction();
        let v = numerical_ft(&psi, 0.0, &FourierSpec::for_wavefunction(&psi), 1.0).unwrap();
        assert!(v.norm() < 1e-12);
        let psi = OscillatorState::atomic(1, 0.7).unwrap().position_wavefunction();
        let v = numerical_ft(&psi, 0.0, &FourierSpec::for_wavefunction(&psi), 1.0).unwrap();
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn parity_is_preserved() {
        // Even psi -> real even transform; odd psi -> imaginary odd transform.
        let even = BoxState::atomic(1, 2.0).unwrap().position_wavefunction();
        let odd = BoxState::atomic(2, 2.0).unwrap().position_wavefunction();
        let s = FourierSpec::for_wavefunction(&even);
        for p in [0.4, 2.2, 7.9] {
            let e_pos = numerical_ft(&even, p, &s, 1.0).unwrap();
            let e_neg = numerical_ft(&even, -p, &s, 1.0).unwrap();
            assert!(e_pos.im.abs() < 1e-12 && (e_pos - e_neg).norm() < 1e-12);
            let o_pos = numerical_ft(&odd, p, &s, 1.0).unwrap();
            let o_neg = numerical_ft(&odd, -p, &s, 1.0).unwrap();
            assert!(o_pos.re.abs() < 1e-12 && (o_pos + o_neg).norm() < 1e-12);
        }
    }

    #[test]
    fn linearity() {
        let a = OscillatorState::atomic(0, 1.0).unwrap().position_wavefunction();
        let b = OscillatorState::atomic(2, 1.0).unwrap().position_wavefunction();
        let (a2, b2) = (a.clone(), b.clone());
        let combo = Wavefunction::new(
            std::sync::Arc::new(move |x| 0.6 * a2.eval(x) - 0.8 * b2.eval(x)),
            f64::NEG_INFINITY,
            f64::INFINITY,
            a.radius(),
        )
        .unwrap();
        let s = FourierSpec::for_wavefunction(&a);
        for p in [-1.3, 0.0, 0.8, 2.6] {
            let lhs = numerical_ft(&combo, p, &s, 1.0).unwrap();
            let rhs = numerical_ft(&a, p, &s, 1.0).unwrap() * 0.6 - numerical_ft(&b, p, &s, 1.0).unwrap() * 0.8;
            assert!((lhs - rhs).norm() < 1e-11);
        }
    }

    #[test]
    fn rejects_invalid_spec() {
        let psi = OscillatorState::atomic(0, 1.0).unwrap().position_wavefunction();
        assert!(FourierSpec::new(0.0, 1e-8, 10).is_err());
        assert!(FourierSpec::new(1.0, 0.0, 10).is_err());
        let s = FourierSpec::for_wavefunction(&psi);
        assert!(numerical_ft(&psi, 1.0, &s, 0.0).is_err());
    }

    #[test]
    fn too_many_oscillations_is_a_convergence_error() {
        let psi = BoxState::atomic(1, 1.0).unwrap().position_wavefunction();
        let s = FourierSpec::new(0.5, 1e-10, 100).unwrap();
        let err = numerical_ft(&psi, 1e6, &s, 1.0).unwrap_err();
        assert!(err.is_convergence());
    }

    #[test]
    fn parseval_oscillator_ground_state() {
        let psi = OscillatorState::atomic(0, 1.0).unwrap().position_wavefunction();
        let total = parseval_check(&psi, &FourierSpec::for_wavefunction(&psi).with_tolerance(1e-8)).unwrap();
        assert!((total - 1.0).abs() < 1e-6, "{total}");
    }
}
