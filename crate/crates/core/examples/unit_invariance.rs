//! The entropy sum does not depend on the frequency, and all three entropies
//! are unchanged when the same physical state is expressed in other units.
//!
//! ```text
//! cargo run --example unit_invariance
//! ```

use qentropy::{atomic_units, entropy_sum, QuadratureSpec, System};

fn main() -> qentropy::Result<()> {
    let spec = QuadratureSpec::default();
    for n in 0..3 {
        let sums: Vec<f64> = [0.06, 0.5, 1.0, 4.0, 8.0]
            .iter()
            .map(|&w| entropy_sum(&System::Oscillator.atomic_state(n, w)?, &spec).map(|r| r.st))
            .collect::<qentropy::Result<_>>()?;
        let spread = sums.iter().cloned().fold(f64::MIN, f64::max) - sums.iter().cloned().fold(f64::MAX, f64::min);
        println!("oscillator n={n}: St = {:.8}, spread over omega = {spread:.1e}", sums[0]);
    }

    // A length unit of half a bohr and an action unit of a third of hbar:
    // a0 reads 2, hbar reads 3, and the width-2 box has width 4.
    let base = entropy_sum(&System::Box.atomic_state(2, 2.0)?, &spec)?;
    let units = atomic_units().rescaled(2.0, 3.0, 1.0)?;
    let scaled = entropy_sum(&System::Box.state(2, 4.0, units)?, &spec)?;
    println!(
        "box n=2: atomic (Sx, Sp) = ({:.10}, {:.10}); rescaled = ({:.10}, {:.10})",
        base.sx, base.sp, scaled.sx, scaled.sp
    );
    Ok(())
}
