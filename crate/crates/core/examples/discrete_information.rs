//! Shannon entropy of discrete distributions and of simple continuous densities.
//!
//! ```text
//! cargo run --example discrete_information
//! ```

use qentropy::entropy::gaussian_entropy;
use qentropy::{continuous_entropy, discrete_entropy, Density, DiscreteDistribution, LogBase, QuadratureSpec, Space};

fn main() -> qentropy::Result<()> {
    let coin = DiscreteDistribution::new(vec![0.5, 0.5])?;
    let die = DiscreteDistribution::new(vec![1.0 / 6.0; 6])?;
    let biased = DiscreteDistribution::new(vec![0.9, 0.1])?;
    for (name, d) in [("fair coin", &coin), ("fair die", &die), ("0.9/0.1 coin", &biased)] {
        println!(
            "{name:<13} {:.6} bits  {:.6} nats",
            discrete_entropy(d, LogBase::BITS),
            discrete_entropy(d, LogBase::NATS)
        );
    }

    let spec = QuadratureSpec::default();
    let uniform = Density::uniform(Space::Position, -1.5, 1.5)?;
    println!("uniform on width 3: {:.10} nats (ln 3 = {:.10})", continuous_entropy(&uniform, &spec, LogBase::NATS)?, 3f64.ln());
    let normal = Density::normal(Space::Position, 0.8)?;
    println!(
        "normal sigma 0.8:  {:.10} nats (closed form {:.10})",
        continuous_entropy(&normal, &spec, LogBase::NATS)?,
        gaussian_entropy(0.8)
    );
    Ok(())
}
