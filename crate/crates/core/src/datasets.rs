//! Bundled example data.

use crate::interval::IntervalMatrix;
use crate::table::parse_interval_csv;

/// Ichino's oils and fats table as CSV: eight oils described by specific
/// gravity (GRA), freezing point (FRE), iodine value (IOD) and
/// saponification value (SAP).
pub const OILS_CSV: &str = include_str!("../data/oils.csv");

/// Ichino's oils and fats table.
pub fn oils() -> IntervalMatrix {
    parse_interval_csv(OILS_CSV).expect("bundled table is well formed")
}
