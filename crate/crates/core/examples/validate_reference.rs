//! Recomputes every published reference value and prints the failures.
//!
//! ```text
//! cargo run --example validate_reference
//! ```

use qentropy::analysis::{validate_reference_values, DEFAULT_COMPARISON_TOLERANCE};
use qentropy::cli::validation_summary;
use qentropy::QuadratureSpec;

fn main() -> qentropy::Result<()> {
    let report = validate_reference_values(&QuadratureSpec::default(), DEFAULT_COMPARISON_TOLERANCE, None)?;
    print!("{}", validation_summary(&report));
    if !report.passed {
        std::process::exit(3);
    }
    Ok(())
}
