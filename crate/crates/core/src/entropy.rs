//! Shannon entropies, entropy sums and standard-deviation measures.
//!
//! Position and momentum entropies are the "modified" ones: the density is
//! multiplied by a reference constant inside the logarithm (`a0` in position
//! space, `hbar / a0` in momentum space) so that the argument is dimensionless.
//! In atomic units both constants are one and the modified entropies coincide
//! with the plain continuous entropy.

use std::f64::consts::{E, LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{self, Estimate};
use crate::systems::{Density, QuantumState, Space, Tail};
use crate::units::UnitSystem;

/// Lower bound on `Sx + Sp` in one dimension, `1 + ln(pi)`.
pub const BBM_BOUND: f64 = 1.0 + 1.144_729_885_849_400_2;

/// Densities below this are treated as exact zeros inside `rho ln rho`.
const ZERO_DENSITY: f64 = 1e-300;

/// How far out an inverse-power momentum tail is integrated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailRadius {
    /// Chosen from the tail envelope, then confirmed by radius doubling.
    Auto,
    /// Integrate to exactly this radius; the envelope bound is added to the error.
    Fixed(f64),
}

/// Integration controls shared by every entropy and moment evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tolerance: f64,
    pub max_subdivisions: usize,
    pub momentum_tail_radius: TailRadius,
}

impl QuadratureSpec {
    pub const DEFAULT_ABS_TOLERANCE: f64 = 1e-10;
    pub const DEFAULT_MAX_SUBDIVISIONS: usize = 1_000_000;
    /// Environment variable that overrides the default absolute tolerance.
    pub const TOLERANCE_ENV: &'static str = "QENTROPY_ABS_TOLERANCE";

    pub fn with_tolerance(abs_tolerance: f64) -> Result<Self> {
        let spec = QuadratureSpec {
            abs_tolerance,
            ..Default::default()
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Default spec, with the tolerance taken from [`Self::TOLERANCE_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::TOLERANCE_ENV) {
            Ok(raw) => {
                let tol: f64 = raw.trim().parse().map_err(|_| {
                    Error::domain(format!("{} is not a number: '{raw}'", Self::TOLERANCE_ENV))
                })?;
                Self::with_tolerance(tol)
            }
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tolerance > 0.0 && self.abs_tolerance.is_finite()) {
            return Err(Error::domain(format!(
                "abs_tolerance must be positive, got {}",
                self.abs_tolerance
            )));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::domain("max_subdivisions must be positive"));
        }
        if let TailRadius::Fixed(r) = self.momentum_tail_radius {
            if !(r > 0.0 && r.is_finite()) {
                return Err(Error::domain(format!("tail radius must be positive, got {r}")));
            }
        }
        Ok(())
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tolerance: Self::DEFAULT_ABS_TOLERANCE,
            max_subdivisions: Self::DEFAULT_MAX_SUBDIVISIONS,
            momentum_tail_radius: TailRadius::Auto,
        }
    }
}

/// Logarithm base for entropies; bits by default.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogBase(f64);

impl LogBase {
    pub const BITS: LogBase = LogBase(2.0);
    pub const NATS: LogBase = LogBase(E);
    pub const DITS: LogBase = LogBase(10.0);

    pub fn new(base: f64) -> Result<Self> {
        if !(base > 1.0 && base.is_finite()) {
            return Err(Error::domain(format!("log base must be > 1, got {base}")));
        }
        Ok(LogBase(base))
    }

    pub fn base(&self) -> f64 {
        self.0
    }

    pub fn ln(&self) -> f64 {
        if self.0 == 2.0 {
            LN_2
        } else if self.0 == E {
            1.0
        } else {
            self.0.ln()
        }
    }
}

impl Default for LogBase {
    fn default() -> Self {
        LogBase::BITS
    }
}

/// Probabilities of `j` mutually exclusive outcomes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteDistribution {
    probabilities: Vec<f64>,
}

impl DiscreteDistribution {
    pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

    pub fn new(probabilities: Vec<f64>) -> Result<Self> {
        if probabilities.is_empty() {
            return Err(Error::domain("distribution needs at least one outcome"));
        }
        if let Some(p) = probabilities.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
            return Err(Error::domain(format!("probabilities must be non-negative, got {p}")));
        }
        let total: f64 = probabilities.iter().sum();
        if (total - 1.0).abs() > Self::NORMALIZATION_TOLERANCE {
            return Err(Error::domain(format!("probabilities sum to {total}, not 1")));
        }
        Ok(DiscreteDistribution { probabilities })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn count(&self) -> usize {
        self.probabilities.len()
    }
}

/// `-sum p_i log_b p_i`, with `0 log 0 = 0`.
pub fn discrete_entropy(dist: &DiscreteDistribution, base: LogBase) -> f64 {
    let nats: f64 = dist
        .probabilities
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum();
    nats / base.ln()
}

fn check_spec(spec: &QuadratureSpec) -> Result<()> {
    spec.validate()
}

/// Upper bound on `int_{|t|>R} |rho ln(s rho)|` given `rho <= c / |t|^a` there.
fn entropy_tail_bound(c: f64, a: f64, r: f64, ln_scale: f64) -> Option<f64> {
    if c / r.powf(a) >= 1.0 / E {
        return None;
    }
    let ra = r.powf(a - 1.0);
    let plain = 2.0 * c * ((r.powf(a) / c).ln() / ((a - 1.0) * ra) + a / ((a - 1.0).powi(2) * ra));
    Some(plain + ln_scale.abs() * 2.0 * c / ((a - 1.0) * ra))
}

/// Upper bound on `int_{|t|>R} |t|^k rho`.
fn moment_tail_bound(c: f64, a: f64, r: f64, k: i32) -> Option<f64> {
    let exponent = a - f64::from(k) - 1.0;
    (exponent > 0.0).then(|| 2.0 * c / (exponent * r.powf(exponent)))
}

/// Integrates `g(t, rho(t))` over the support of `density`.
///
/// `symmetric` asserts that the integrand is even in `t`, so only `t >= 0`
/// is evaluated. `tail_bound(c, a, R)` bounds the neglected part beyond `R`
/// for inverse-power tails and returns `None` when that part diverges.
fn integrate_density<G, B>(
    density: &Density,
    g: G,
    symmetric: bool,
    spec: &QuadratureSpec,
    tail_bound: B,
) -> Result<Estimate>
where
    G: Fn(f64, f64) -> f64,
    B: Fn(f64, f64, f64) -> Option<f64>,
{
    check_spec(spec)?;
    let f = |t: f64| g(t, density.eval(t));
    let (lo, hi) = density.support();
    let tol = spec.abs_tolerance;

    match density.tail() {
        Tail::None => integrate_window(&f, density, lo, hi, symmetric, tol, spec),
        Tail::Gaussian { radius } => {
            integrate_window(&f, density, lo.max(-radius), hi.min(radius), symmetric, tol, spec)
        }
        Tail::InversePower {
            coefficient,
            power,
            from,
        } => {
            let bound = |r: f64| tail_bound(coefficient, power, r);
            let fits = |r: f64| density.panel_count(-r, r) <= spec.max_subdivisions as f64;
            match spec.momentum_tail_radius {
                TailRadius::Fixed(r) => {
                    let mut est = integrate_window(&f, density, -r, r, symmetric, tol, spec)?;
                    est.error += bound(r).unwrap_or(f64::INFINITY);
                    Ok(est)
                }
                TailRadius::Auto => {
                    let spacing = density.lattice().map_or(0.0, |l| l.spacing);
                    let mut r = from
                        .max((E * coefficient).powf(1.0 / power) * 1.01)
                        .max(spacing)
                        .max(f64::MIN_POSITIVE);
                    loop {
                        match bound(r) {
                            Some(b) if b <= tol / 10.0 => break,
                            Some(b) if !fits(2.0 * r) => {
                                return Err(Error::Convergence {
                                    achieved: b,
                                    requested: tol,
                                    subdivisions: spec.max_subdivisions,
                                })
                            }
                            None if !fits(2.0 * r) => {
                                return Err(Error::Convergence {
                                    achieved: f64::INFINITY,
                                    requested: tol,
                                    subdivisions: spec.max_subdivisions,
                                })
                            }
                            _ => r *= 2.0,
                        }
                    }
                    let mut est = integrate_window(&f, density, -r, r, symmetric, tol / 2.0, spec)?;
                    // Confirm: two successive radius doublings must each move the result by < tol.
                    let mut quiet = 0;
                    while quiet < 2 {
                        if !fits(2.0 * r) {
                            return Err(Error::Convergence {
                                achieved: est.error + bound(r).unwrap_or(f64::INFINITY),
                                requested: tol,
                                subdivisions: est.subdivisions,
                            });
                        }
                        let right = integrate_window(&f, density, r, 2.0 * r, false, tol / 8.0, spec)?;
                        let delta = if symmetric {
                            Estimate {
                                value: 2.0 * right.value,
                                error: 2.0 * right.error,
                                subdivisions: right.subdivisions,
                            }
                        } else {
                            let left = integrate_window(&f, density, -2.0 * r, -r, false, tol / 8.0, spec)?;
                            Estimate {
                                value: left.value + right.value,
                                error: left.error + right.error,
                                subdivisions: left.subdivisions + right.subdivisions,
                            }
                        };
                        est.value += delta.value;
                        est.error += delta.error;
                        est.subdivisions += delta.subdivisions;
                        r *= 2.0;
                        quiet = if delta.value.abs() < tol { quiet + 1 } else { 0 };
                    }
                    est.error += bound(r).unwrap_or(f64::INFINITY);
                    Ok(est)
                }
            }
        }
    }
}

fn integrate_window<F: Fn(f64) -> f64>(
    f: &F,
    density: &Density,
    lo: f64,
    hi: f64,
    symmetric: bool,
    tol: f64,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    if symmetric && lo < 0.0 && hi > 0.0 {
        let half_hi = hi.min(-lo);
        let mut est = integrate_window(f, density, 0.0, half_hi, false, tol / 2.0, spec)?;
        est.value *= 2.0;
        est.error *= 2.0;
        // Asymmetric windows keep the unmatched piece.
        if hi > half_hi {
            let extra = integrate_window(f, density, half_hi, hi, false, tol / 2.0, spec)?;
            est.value += extra.value;
            est.error += extra.error;
        } else if -lo > half_hi {
            let extra = integrate_window(f, density, lo, -half_hi, false, tol / 2.0, spec)?;
            est.value += extra.value;
            est.error += extra.error;
        }
        return Ok(est);
    }
    if !(hi > lo) {
        return Ok(Estimate {
            value: 0.0,
            error: 0.0,
            subdivisions: 0,
        });
    }
    if density.panel_count(lo, hi) > spec.max_subdivisions as f64 {
        return Err(Error::Convergence {
            achieved: f64::INFINITY,
            requested: tol,
            subdivisions: spec.max_subdivisions,
        });
    }
    let breakpoints = density.breakpoints(lo, hi);
    quadrature::integrate(f, &breakpoints, tol, spec.max_subdivisions)
}

fn neg_rho_ln(rho: f64, scale: f64) -> f64 {
    if rho < ZERO_DENSITY {
        0.0
    } else {
        -rho * (scale * rho).ln()
    }
}

/// `-int rho ln(scale rho)` with its error estimate.
pub fn modified_entropy_estimate(density: &Density, scale: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::domain(format!("reference scale must be positive, got {scale}")));
    }
    let ln_scale = scale.ln();
    integrate_density(
        density,
        |_, rho| neg_rho_ln(rho, scale),
        density.is_even(),
        spec,
        |c, a, r| entropy_tail_bound(c, a, r, ln_scale),
    )
}

/// `-int rho log_b rho`. May be negative for sharply peaked densities.
pub fn continuous_entropy(density: &Density, spec: &QuadratureSpec, base: LogBase) -> Result<f64> {
    Ok(modified_entropy_estimate(density, 1.0, spec)?.value / base.ln())
}

/// `Sx = -int rho(x) ln(a0 rho(x)) dx`, in nats.
pub fn entropy_x(density: &Density, units: &UnitSystem, spec: &QuadratureSpec) -> Result<f64> {
    if density.space() != Space::Position {
        return Err(Error::domain("entropy_x needs a position-space density"));
    }
    Ok(modified_entropy_estimate(density, units.a0(), spec)?.value)
}

/// `Sp = -int gamma(p) ln((hbar / a0) gamma(p)) dp`, in nats.
pub fn entropy_p(density: &Density, units: &UnitSystem, spec: &QuadratureSpec) -> Result<f64> {
    if density.space() != Space::Momentum {
        return Err(Error::domain("entropy_p needs a momentum-space density"));
    }
    Ok(modified_entropy_estimate(density, units.momentum_scale(), spec)?.value)
}

/// `int rho`; should be one for every density this crate builds.
pub fn normalization(density: &Density, spec: &QuadratureSpec) -> Result<f64> {
    Ok(integrate_density(density, |_, rho| rho, density.is_even(), spec, |c, a, r| {
        moment_tail_bound(c, a, r, 0)
    })?
    .value)
}

/// `<t> = int t rho(t) dt`; exactly zero for densities flagged even.
pub fn mean(density: &Density, spec: &QuadratureSpec) -> Result<f64> {
    if density.is_even() {
        check_spec(spec)?;
        return Ok(0.0);
    }
    Ok(integrate_density(density, |t, rho| t * rho, false, spec, |c, a, r| {
        moment_tail_bound(c, a, r, 1)
    })?
    .value)
}

/// `<t^2> = int t^2 rho(t) dt`.
pub fn second_moment(density: &Density, spec: &QuadratureSpec) -> Result<f64> {
    Ok(integrate_density(density, |t, rho| t * t * rho, density.is_even(), spec, |c, a, r| {
        moment_tail_bound(c, a, r, 2)
    })?
    .value)
}

/// First and second raw moments of a density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    pub mean: f64,
    pub second: f64,
}

impl Moments {
    pub fn variance(&self) -> f64 {
        (self.second - self.mean * self.mean).max(0.0)
    }

    pub fn std_dev(&self) -> f64 {
        self.variance().sqrt()
    }
}

pub fn moments(density: &Density, spec: &QuadratureSpec) -> Result<Moments> {
    Ok(Moments {
        mean: mean(density, spec)?,
        second: second_moment(density, spec)?,
    })
}

/// `Sx`, `Sp` and their sum for one state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    pub sx: f64,
    pub sp: f64,
    pub st: f64,
    /// `st - (1 + ln pi)`; non-negative up to quadrature error.
    pub bbm_margin: f64,
}

impl EntropyReport {
    pub fn from_parts(sx: f64, sp: f64) -> Self {
        let st = sx + sp;
        EntropyReport {
            sx,
            sp,
            st,
            bbm_margin: st - BBM_BOUND,
        }
    }
}

/// Computes `Sx` and `Sp` (concurrently) in the state's own unit system.
pub fn entropy_sum(state: &QuantumState, spec: &QuadratureSpec) -> Result<EntropyReport> {
    let units = state.units();
    let (sx, sp) = rayon::join(
        || entropy_x(&state.position_density(), &units, spec),
        || entropy_p(&state.momentum_density(), &units, spec),
    );
    let report = EntropyReport::from_parts(sx?, sp?);
    if report.bbm_margin < -10.0 * spec.abs_tolerance {
        return Err(Error::InvariantViolation(format!(
            "entropy sum {} is below 1 + ln(pi) for {state:?}",
            report.st
        )));
    }
    Ok(report)
}

/// Means, second moments and standard deviations in both spaces.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UncertaintyReport {
    pub mean_x: f64,
    pub mean_x2: f64,
    pub mean_p: f64,
    pub mean_p2: f64,
    pub dx: f64,
    pub dp: f64,
    pub product: f64,
    /// `dx dp - hbar / 2`; non-negative up to quadrature error.
    pub kennard_margin: f64,
}

/// Standard deviations and the Kennard product for one state.
///
/// `<p^2>` is taken in position space as `hbar^2 int |psi'|^2 dx`; the box
/// momentum density falls off only as `p^-4`, so its second moment converges
/// too slowly to integrate directly.
pub fn uncertainty(state: &QuantumState, spec: &QuadratureSpec) -> Result<UncertaintyReport> {
    let units = state.units();
    let hbar = units.hbar();
    let x = moments(&state.position_density(), spec)?;
    let mean_p = mean(&state.momentum_density(), spec)?;
    let mean_p2 = hbar * hbar * kinetic_integral(state, spec)?;

    let dx = x.std_dev();
    let dp = (mean_p2 - mean_p * mean_p).max(0.0).sqrt();
    let product = dx * dp;
    let report = UncertaintyReport {
        mean_x: x.mean,
        mean_x2: x.second,
        mean_p,
        mean_p2,
        dx,
        dp,
        product,
        kennard_margin: product - 0.5 * hbar,
    };
    if report.kennard_margin < -10.0 * spec.abs_tolerance * (1.0 + hbar) {
        return Err(Error::InvariantViolation(format!(
            "dx dp = {product} is below hbar / 2 for {state:?}"
        )));
    }
    Ok(report)
}

/// `int |psi'(x)|^2 dx` over the position window.
fn kinetic_integral(state: &QuantumState, spec: &QuadratureSpec) -> Result<f64> {
    check_spec(spec)?;
    let psi = state.position_wavefunction();
    let (lo, hi) = psi.window(psi.radius());
    let mut breakpoints = vec![lo];
    breakpoints.extend(psi.nodes().iter().copied().filter(|&x| x > lo && x < hi));
    breakpoints.push(hi);
    let est = quadrature::integrate(
        |x| psi.eval_derivative(x).map_or(f64::NAN, |d| d * d),
        &breakpoints,
        spec.abs_tolerance,
        spec.max_subdivisions,
    )?;
    Ok(est.value)
}

/// Closed-form Gaussian entropy `1/2 ln(2 pi e sigma^2)` in nats.
pub fn gaussian_entropy(sigma: f64) -> f64 {
    0.5 * (2.0 * PI * E * sigma * sigma).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::{BoxState, OscillatorState};

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn bbm_constant() {
        assert!((BBM_BOUND - (1.0 + PI.ln())).abs() < 1e-15);
    }

    #[test]
    fn discrete_examples() {
        let d = |v: Vec<f64>| DiscreteDistribution::new(v).unwrap();
        assert!((discrete_entropy(&d(vec![0.5, 0.5]), LogBase::BITS) - 1.0).abs() < 1e-15);
        assert_eq!(discrete_entropy(&d(vec![1.0, 0.0]), LogBase::BITS), 0.0);
        assert!((discrete_entropy(&d(vec![0.25; 4]), LogBase::default()) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn discrete_rejects_invalid() {
        assert!(DiscreteDistribution::new(vec![0.6, 0.6]).is_err());
        assert!(DiscreteDistribution::new(vec![1.5, -0.5]).is_err());
        assert!(DiscreteDistribution::new(vec![]).is_err());
        assert!(LogBase::new(1.0).is_err());
        assert!(LogBase::new(0.5).is_err());
    }

    #[test]
    fn uniform_and_gaussian_entropies() {
        let s = spec();
        let u01 = Density::uniform(Space::Position, 0.0, 1.0).unwrap();
        assert!(continuous_entropy(&u01, &s, LogBase::BITS).unwrap().abs() < 1e-14);
        let u_half = Density::uniform(Space::Position, 0.0, 0.5).unwrap();
        assert!((continuous_entropy(&u_half, &s, LogBase::BITS).unwrap() + 1.0).abs() < 1e-12);
        assert!((continuous_entropy(&u_half, &s, LogBase::NATS).unwrap() - 0.5f64.ln()).abs() < 1e-12);

        let sigma = 0.5f64.sqrt();
        let g = Density::normal(Space::Position, sigma).unwrap();
        let h = continuous_entropy(&g, &s, LogBase::NATS).unwrap();
        assert!((h - 0.5 * (PI * E).ln()).abs() < 1e-10);
        assert!((h - gaussian_entropy(sigma)).abs() < 1e-10);
    }

    #[test]
    fn space_mismatch_is_rejected() {
        let st = OscillatorState::atomic(0, 1.0).unwrap();
        let u = UnitSystem::default();
        assert!(entropy_x(&st.momentum_density(), &u, &spec()).is_err());
        assert!(entropy_p(&st.position_density(), &u, &spec()).is_err());
    }

    #[test]
    fn invalid_spec_is_rejected() {
        let st = OscillatorState::atomic(0, 1.0).unwrap();
        let bad = QuadratureSpec {
            abs_tolerance: -1.0,
            ..spec()
        };
        assert!(entropy_x(&st.position_density(), &UnitSystem::default(), &bad).is_err());
        assert!(QuadratureSpec::with_tolerance(0.0).is_err());
    }

    #[test]
    fn oscillator_normalization_and_moments() {
        for n in 0..=3 {
            for omega in [0.06, 1.0, 8.005] {
                let st = OscillatorState::atomic(n, omega).unwrap();
                assert!((normalization(&st.position_density(), &spec()).unwrap() - 1.0).abs() < 1e-9);
                assert!((normalization(&st.momentum_density(), &spec()).unwrap() - 1.0).abs() < 1e-9);
                // <x^2> = (n + 1/2) / beta
                let m = moments(&st.position_density(), &spec()).unwrap();
                assert_eq!(m.mean, 0.0);
                let want = (f64::from(n) + 0.5) / st.beta();
                assert!((m.second - want).abs() < 1e-8 * want.max(1.0));
            }
        }
    }

    #[test]
    fn box_normalization_both_spaces() {
        for n in 1..=3 {
            for xc in [0.1, 1.0, 6.0] {
                let st = BoxState::atomic(n, xc).unwrap();
                assert!((normalization(&st.position_density(), &spec()).unwrap() - 1.0).abs() < 1e-9);
                assert!((normalization(&st.momentum_density(), &spec()).unwrap() - 1.0).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn box_momentum_second_moment_does_not_converge_directly() {
        let st = BoxState::atomic(1, 6.0).unwrap();
        let err = second_moment(&st.momentum_density(), &spec()).unwrap_err();
        assert!(err.is_convergence(), "{err:?}");
    }

    #[test]
    fn oscillator_kinetic_route_matches_momentum_moment() {
        for n in 0..=2 {
            let st = OscillatorState::atomic(n, 2.5).unwrap();
            let q: QuantumState = st.into();
            let direct = second_moment(&st.momentum_density(), &spec()).unwrap();
            let kinetic = kinetic_integral(&q, &spec()).unwrap();
            assert!((direct - kinetic).abs() < 1e-8, "{direct} vs {kinetic}");
        }
    }

    #[test]
    fn fixed_tail_radius_is_honoured() {
        let st = BoxState::atomic(1, 1.0).unwrap();
        let loose = QuadratureSpec {
            momentum_tail_radius: TailRadius::Fixed(50.0),
            ..spec()
        };
        let est = modified_entropy_estimate(&st.momentum_density(), 1.0, &loose).unwrap();
        let full = modified_entropy_estimate(&st.momentum_density(), 1.0, &spec()).unwrap();
        assert!((est.value - full.value).abs() < est.error);
        assert!(est.error > 1e-6);
    }

    #[test]
    fn bound_helpers() {
        assert!(entropy_tail_bound(1.0, 4.0, 1.0, 0.0).is_none());
        assert!(moment_tail_bound(1.0, 4.0, 10.0, 3).is_none());
        let b = moment_tail_bound(1.0, 4.0, 10.0, 0).unwrap();
        assert!((b - 2.0 / 3000.0).abs() < 1e-15);
    }
}
