//! Compares closed-form momentum amplitudes with a direct quadrature of the
//! Fourier integral, and checks that the transform preserves the norm.
//!
//! ```text
//! cargo run --example fourier_oracle
//! ```

use qentropy::{numerical_ft, parseval_check, FourierSpec, System};

fn main() -> qentropy::Result<()> {
    for (system, n, param) in [(System::Oscillator, 3, 0.7), (System::Box, 2, 3.0)] {
        let state = system.atomic_state(n, param)?;
        let psi = state.position_wavefunction();
        let spec = FourierSpec::for_wavefunction(&psi);
        let mut worst = 0.0f64;
        for i in 0..200 {
            let p = -8.0 + 16.0 * i as f64 / 199.0;
            let analytic = state.momentum_amplitude(p);
            let numeric = numerical_ft(&psi, p, &spec, 1.0)?;
            worst = worst.max((analytic.norm_sqr() - numeric.norm_sqr()).abs());
        }
        let norm = parseval_check(&psi, &spec.with_tolerance(1e-6))?;
        println!("{system} n={n}: max |gamma_analytic - gamma_numeric| = {worst:.2e}, int gamma dp = {norm:.9}");
    }
    Ok(())
}
