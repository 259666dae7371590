mod common;

use std::f64::consts::PI;

use common::*;
use qentropy::{
    entropy_p, entropy_sum, entropy_x, numerical_ft, uncertainty, BoxState, FourierSpec, OscillatorState,
    QuadratureSpec, System,
};

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

#[test]
fn oscillator_wavefunctions_match_explicit_polynomials() {
    for omega in [0.06, 0.5, 1.0, 3.7, 8.005] {
        for n in 0..3 {
            let psi = OscillatorState::atomic(n, omega).unwrap().position_wavefunction();
            for i in -40..=40 {
                let x = i as f64 * 0.15 / omega.sqrt();
                let want = oscillator_psi(n, omega, x);
                assert!((psi.eval(x) - want).abs() < 1e-13, "n={n} omega={omega} x={x}");
            }
        }
    }
}

#[test]
fn oscillator_momentum_density_is_the_position_form_with_inverse_beta() {
    for omega in [0.2, 1.0, 5.0] {
        for n in 0..3 {
            let gamma = OscillatorState::atomic(n, omega).unwrap().momentum_density();
            for i in -30..=30 {
                let p = i as f64 * 0.2 * omega.sqrt();
                let want = oscillator_psi(n, 1.0 / omega, p).powi(2);
                assert!((gamma.eval(p) - want).abs() < 1e-13);
            }
        }
    }
}

#[test]
fn ground_state_entropies_match_closed_forms() {
    for omega in [0.06, 0.08, 0.2, 0.5, 1.0, 2.0, 5.0, 8.005, 13.0] {
        let s = OscillatorState::atomic(0, omega).unwrap();
        let u = s.units();
        let sx = entropy_x(&s.position_density(), &u, &spec()).unwrap();
        let sp = entropy_p(&s.momentum_density(), &u, &spec()).unwrap();
        assert!((sx - oscillator_ground_sx(omega)).abs() < 1e-8, "omega={omega}");
        assert!((sp - oscillator_ground_sp(omega)).abs() < 1e-8, "omega={omega}");
    }
}

#[test]
fn box_position_entropy_matches_closed_form() {
    for xc in [0.1, 0.5, 1.0, 2.5, 9.005] {
        for n in 1..=4 {
            let s = BoxState::atomic(n, xc).unwrap();
            let sx = entropy_x(&s.position_density(), &s.units(), &spec()).unwrap();
            assert!((sx - box_sx(xc)).abs() < 1e-8, "n={n} xc={xc}: {sx}");
        }
    }
}

#[test]
fn box_densities_match_wall_centred_sine() {
    for n in 1..=4 {
        let s = BoxState::atomic(n, 2.3).unwrap();
        let rho = s.position_density();
        for i in -50..=50 {
            let x = i as f64 * 0.023;
            assert!((rho.eval(x) - box_psi(n, 2.3, x).powi(2)).abs() < 1e-13);
        }
    }
}

#[test]
fn box_momentum_density_matches_midpoint_fourier_sum() {
    for n in 1..=3 {
        let s = BoxState::atomic(n, 1.7).unwrap();
        let gamma = s.momentum_density();
        for p in [0.0, 0.9, 1.85, 4.4, 11.0, -7.3] {
            let want = box_gamma_midpoint(n, 1.7, p, 20_000);
            assert!((gamma.eval(p) - want).abs() < 1e-7, "n={n} p={p}");
        }
    }
}

#[test]
fn box_momentum_peak_value() {
    // Only one sinc lobe is nonzero at p = hbar k_n.
    for xc in [0.3, 4.0] {
        let s = BoxState::atomic(2, xc).unwrap();
        assert!((s.momentum_density().eval(s.kn()) - xc / (4.0 * PI)).abs() < 1e-14);
    }
}

#[test]
fn analytic_and_numerical_transforms_agree() {
    let states = [
        System::Oscillator.atomic_state(0, 0.4).unwrap(),
        System::Oscillator.atomic_state(2, 3.0).unwrap(),
        System::Box.atomic_state(1, 0.8).unwrap(),
        System::Box.atomic_state(3, 6.0).unwrap(),
    ];
    for state in states {
        let psi = state.position_wavefunction();
        let fs = FourierSpec::for_wavefunction(&psi);
        for i in 0..200 {
            let p = -10.0 + 20.0 * i as f64 / 199.0;
            let numeric = numerical_ft(&psi, p, &fs, 1.0).unwrap();
            let analytic = state.momentum_amplitude(p);
            assert!((numeric - analytic).norm() < 1e-9, "{state:?} p={p}");
        }
    }
}

#[test]
fn uncertainty_matches_closed_forms() {
    for omega in [0.5, 2.5, 5.0] {
        for n in 0..3 {
            let u = uncertainty(&System::Oscillator.atomic_state(n, omega).unwrap(), &spec()).unwrap();
            let (dx, dp) = oscillator_spreads(n, omega);
            assert!((u.dx - dx).abs() < 1e-9 && (u.dp - dp).abs() < 1e-9);
            assert!(u.kennard_margin > -1e-9);
        }
    }
    for xc in [0.5, 6.0] {
        for n in 1..=3 {
            let u = uncertainty(&System::Box.atomic_state(n, xc).unwrap(), &spec()).unwrap();
            let (dx, dp) = box_spreads(n, xc);
            assert!((u.dx - dx).abs() < 1e-9 && (u.dp - dp).abs() < 1e-9, "{u:?}");
            assert!(u.mean_x.abs() < 1e-12 && u.mean_p.abs() < 1e-12);
        }
    }
}

#[test]
fn box_entropy_sum_is_width_independent() {
    let reports: Vec<f64> = [0.1, 1.0, 9.005]
        .iter()
        .map(|&xc| entropy_sum(&System::Box.atomic_state(2, xc).unwrap(), &spec()).unwrap().st)
        .collect();
    assert!(spread(&reports) < 1e-8, "{reports:?}");
}
