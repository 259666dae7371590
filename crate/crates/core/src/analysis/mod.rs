//! Studies built on top of the entropy engine: crossing points, tables,
//! figure series and the reference-value harness.

mod crossing;
mod figures;
mod reference;
mod table;

pub use crossing::{find_crossing, CrossingResult, CROSSING_RESIDUAL};
pub use figures::{figure_data, FigureData, FigureId, Series};
pub use reference::{
    reference_manifest, validate_reference_values, CheckResult, CrossingReference, Group, Manifest, Quantity,
    ReferenceTable, TextValue, ValidationEntry, ValidationReport, DEFAULT_COMPARISON_TOLERANCE,
};
pub use table::{generate_table, TableArtifact, TableId, TableRow, TABLE1_OMEGAS, TABLE2_WIDTHS};
