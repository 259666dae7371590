//! Writes every figure's series as CSV into a directory (default `figures/`).
//!
//! ```text
//! cargo run --example figure_series -- out_dir
//! ```

use std::fs;
use std::path::PathBuf;

use qentropy::analysis::{figure_data, FigureId};
use qentropy::QuadratureSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    fs::create_dir_all(&dir)?;
    let spec = QuadratureSpec::with_tolerance(1e-8)?;
    for id in FigureId::ALL {
        let fig = figure_data(id, &spec)?;
        let path = dir.join(format!("{id}.csv"));
        let mut w = csv::Writer::from_path(&path)?;
        w.write_record(["series", fig.x_label.as_str(), fig.y_label.as_str()])?;
        for s in &fig.series {
            for (x, y) in s.x.iter().zip(&s.y) {
                w.write_record([s.name.as_str(), &x.to_string(), &y.to_string()])?;
            }
        }
        w.flush()?;
        println!("{}: {} series -> {}", fig.title, fig.series.len(), path.display());
    }
    Ok(())
}
