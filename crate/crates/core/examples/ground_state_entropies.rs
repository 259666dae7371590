//! Entropies and uncertainty products for the lowest states of both systems.
//!
//! ```text
//! cargo run --example ground_state_entropies
//! ```

use qentropy::{entropy_sum, uncertainty, QuadratureSpec, System, BBM_BOUND};

fn main() -> qentropy::Result<()> {
    let spec = QuadratureSpec::default();
    println!("bound 1 + ln(pi) = {BBM_BOUND:.6}");
    println!("{:<10} {:>2} {:>6} {:>9} {:>9} {:>9} {:>8} {:>8}", "system", "n", "param", "Sx", "Sp", "St", "dx", "dp");
    for (system, param) in [(System::Oscillator, 1.0), (System::Box, 1.0)] {
        let g = system.ground_n();
        for n in g..g + 3 {
            let state = system.atomic_state(n, param)?;
            let e = entropy_sum(&state, &spec)?;
            let u = uncertainty(&state, &spec)?;
            println!(
                "{:<10} {n:>2} {param:>6.2} {:>9.4} {:>9.4} {:>9.4} {:>8.4} {:>8.4}",
                system.to_string(),
                e.sx,
                e.sp,
                e.st,
                u.dx,
                u.dp
            );
        }
    }
    Ok(())
}
