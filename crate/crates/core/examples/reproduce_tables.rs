//! Regenerates both entropy tables on their default grids and prints them.
//!
//! ```text
//! cargo run --example reproduce_tables
//! ```

use qentropy::analysis::{generate_table, TableId};
use qentropy::QuadratureSpec;

fn main() -> qentropy::Result<()> {
    let spec = QuadratureSpec::default();
    for id in [TableId::One, TableId::Two] {
        let n_list = id.quantum_numbers();
        let table = generate_table(id.system(), &id.grid(), &n_list, &spec)?;
        println!("\n{} ({}), n = {:?}", id.system(), table.parameter_name, n_list);
        for row in &table.rows {
            print!("{:>7.4}", row.parameter);
            for r in &row.reports {
                print!("  | {:>8.4} {:>8.4} {:>8.4}", r.sx, r.sp, r.st);
            }
            println!();
        }
    }
    Ok(())
}
