//! Locates the parameter where the position and momentum entropies are equal.
//!
//! ```text
//! cargo run --example crossing_points
//! ```

use qentropy::analysis::find_crossing;
use qentropy::{QuadratureSpec, System};

fn main() -> qentropy::Result<()> {
    let spec = QuadratureSpec::default();
    let cases = [
        (System::Oscillator, 0, (0.5, 2.0)),
        (System::Oscillator, 1, (0.5, 2.0)),
        (System::Oscillator, 2, (0.5, 2.0)),
        (System::Box, 1, (3.0, 5.0)),
        (System::Box, 2, (4.5, 5.5)),
        (System::Box, 3, (5.0, 6.0)),
    ];
    for (system, n, bracket) in cases {
        let c = find_crossing(system, n, bracket, &spec)?;
        println!(
            "{system:<10} n={n}  {} = {:.6}  Sx = Sp = {:.6}  (residual {:.1e})",
            system.parameter_name(),
            c.parameter_value,
            c.entropy_value,
            c.residual
        );
    }
    Ok(())
}
