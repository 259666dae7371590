mod common;

use common::*;
use proptest::prelude::*;
use qentropy::entropy::gaussian_entropy;
use qentropy::quadrature::integrate;
use qentropy::{
    atomic_units, continuous_entropy, discrete_entropy, entropy_sum, numerical_ft, parseval_check, uncertainty,
    DiscreteDistribution, FourierSpec, LogBase, QuadratureSpec, Space, System,
};

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oscillator_entropy_sum_ignores_frequency(n in 0u32..5, omega in 0.05f64..12.0) {
        let st = entropy_sum(&System::Oscillator.atomic_state(n, omega).unwrap(), &spec()).unwrap().st;
        let reference = entropy_sum(&System::Oscillator.atomic_state(n, 1.0).unwrap(), &spec()).unwrap().st;
        prop_assert!((st - reference).abs() < 1e-6, "n={} omega={}: {} vs {}", n, omega, st, reference);
    }

    #[test]
    fn box_entropy_sum_ignores_width(n in 1u32..5, xc in 0.05f64..12.0) {
        let st = entropy_sum(&System::Box.atomic_state(n, xc).unwrap(), &spec()).unwrap().st;
        let reference = entropy_sum(&System::Box.atomic_state(n, 1.0).unwrap(), &spec()).unwrap().st;
        prop_assert!((st - reference).abs() < 1e-6);
    }

    #[test]
    fn box_position_entropy_ignores_quantum_number(n in 1u32..9, xc in 0.05f64..12.0) {
        let units = atomic_units();
        let sx = |m| {
            let s = System::Box.atomic_state(m, xc).unwrap();
            qentropy::entropy_x(&s.position_density(), &units, &spec()).unwrap()
        };
        let (a, b) = (sx(n), sx(1));
        prop_assert!((a - b).abs() < 1e-8);
        prop_assert!((a - box_sx(xc)).abs() < 1e-8);
    }

    #[test]
    fn entropies_do_not_depend_on_units(
        is_box in any::<bool>(),
        n in 0u32..3,
        param in 0.3f64..6.0,
        s_len in 0.2f64..5.0,
        s_act in 0.2f64..5.0,
        s_mass in 0.2f64..5.0,
    ) {
        let (system, n) = if is_box { (System::Box, n + 1) } else { (System::Oscillator, n) };
        let units = atomic_units().rescaled(s_len, s_act, s_mass).unwrap();
        // The same physical state expressed in the new units.
        let param_new = match system {
            System::Box => param * s_len,
            System::Oscillator => param * s_act / (s_len * s_len * s_mass),
        };
        let a = entropy_sum(&system.atomic_state(n, param).unwrap(), &spec()).unwrap();
        let b = entropy_sum(&system.state(n, param_new, units).unwrap(), &spec()).unwrap();
        prop_assert!((a.sx - b.sx).abs() < 1e-8, "{:?} vs {:?}", a, b);
        prop_assert!((a.sp - b.sp).abs() < 1e-8, "{:?} vs {:?}", a, b);
        prop_assert!((a.st - b.st).abs() < 1e-8);
    }

    #[test]
    fn entropic_and_kennard_bounds_hold(is_box in any::<bool>(), n in 0u32..6, param in 0.05f64..10.0) {
        let (system, n) = if is_box { (System::Box, n + 1) } else { (System::Oscillator, n) };
        let state = system.atomic_state(n, param).unwrap();
        let e = entropy_sum(&state, &spec()).unwrap();
        let u = uncertainty(&state, &spec()).unwrap();
        prop_assert!(e.bbm_margin > -1e-9);
        prop_assert!(u.kennard_margin > -1e-9);
    }

    #[test]
    fn analytic_transform_matches_quadrature_on_grid(is_box in any::<bool>(), n in 0u32..4, param in 0.2f64..8.0) {
        let (system, n) = if is_box { (System::Box, n + 1) } else { (System::Oscillator, n) };
        let state = system.atomic_state(n, param).unwrap();
        let psi = state.position_wavefunction();
        let fs = FourierSpec::for_wavefunction(&psi);
        // Covers the bulk of both the oscillator and box momentum densities.
        let reach = 6.0 * (n as f64 + 1.0) * param.max(1.0 / param).sqrt().max(1.0);
        for i in 0..200 {
            let p = -reach + 2.0 * reach * i as f64 / 199.0;
            let analytic = state.momentum_amplitude(p).norm_sqr();
            let numeric = numerical_ft(&psi, p, &fs, 1.0).unwrap().norm_sqr();
            prop_assert!((analytic - numeric).abs() < 1e-7, "p={}: {} vs {}", p, analytic, numeric);
        }
    }

    #[test]
    fn stretching_a_wavefunction_compresses_its_transform(n in 0u32..3, lambda in 0.3f64..3.0, p in -4.0f64..4.0) {
        // FT[sqrt(l) psi(l x)](p) = FT[psi](p / l) / sqrt(l)
        let psi = System::Oscillator.atomic_state(n, 1.0).unwrap().position_wavefunction();
        let scaled = psi.scaled(lambda).unwrap();
        let lhs = numerical_ft(&scaled, p, &FourierSpec::for_wavefunction(&scaled), 1.0).unwrap();
        let rhs = numerical_ft(&psi, p / lambda, &FourierSpec::for_wavefunction(&psi), 1.0).unwrap() / lambda.sqrt();
        prop_assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn rescaled_density_shifts_entropy_by_log_factor(sigma in 0.1f64..5.0, factor in 0.2f64..5.0) {
        let d = qentropy::Density::normal(Space::Position, sigma).unwrap();
        let base = continuous_entropy(&d, &spec(), LogBase::NATS).unwrap();
        let stretched = continuous_entropy(&d.rescale_coordinate(factor).unwrap(), &spec(), LogBase::NATS).unwrap();
        prop_assert!((base - gaussian_entropy(sigma)).abs() < 1e-8);
        prop_assert!((stretched - base - factor.ln()).abs() < 1e-8);
    }

    #[test]
    fn discrete_entropy_is_bounded_by_log_count(weights in prop::collection::vec(0.0f64..1.0, 1..20)) {
        let total: f64 = weights.iter().sum();
        prop_assume!(total > 1e-6);
        let probs: Vec<f64> = weights.iter().map(|w| w / total).collect();
        let dist = DiscreteDistribution::new(probs.clone()).unwrap();
        let h = discrete_entropy(&dist, LogBase::NATS);
        prop_assert!(h >= -1e-15);
        prop_assert!(h <= (probs.len() as f64).ln() + 1e-12);
        let bits = discrete_entropy(&dist, LogBase::BITS);
        prop_assert!((bits - h / std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn quadrature_integrates_polynomials(coeffs in prop::collection::vec(-3.0f64..3.0, 1..12), a in -3.0f64..0.0, b in 0.1f64..3.0) {
        let poly = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
        let exact: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * (b.powi(k as i32 + 1) - a.powi(k as i32 + 1)) / (k as f64 + 1.0))
            .sum();
        let est = integrate(poly, &[a, b], 1e-12, 1000).unwrap();
        prop_assert!((est.value - exact).abs() < 1e-11 * (1.0 + exact.abs()));
    }
}

proptest! {
    // Each box case integrates the numerical transform over a long p^-4 tail.
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn transforms_preserve_norm(is_box in any::<bool>(), n in 0u32..3, param in 0.3f64..5.0) {
        let (system, n) = if is_box { (System::Box, n + 1) } else { (System::Oscillator, n) };
        let psi = system.atomic_state(n, param).unwrap().position_wavefunction();
        let total = parseval_check(&psi, &FourierSpec::for_wavefunction(&psi).with_tolerance(1e-6)).unwrap();
        prop_assert!((total - 1.0).abs() < 1e-6, "{}", total);
    }
}

#[test]
fn repeated_evaluation_is_bit_identical() {
    let state = System::Box.atomic_state(3, 0.7).unwrap();
    let a = entropy_sum(&state, &spec()).unwrap();
    let b = entropy_sum(&state, &spec()).unwrap();
    assert_eq!(a.sx.to_bits(), b.sx.to_bits());
    assert_eq!(a.sp.to_bits(), b.sp.to_bits());
}
