//! Classification records: closed forms, constructive search, joins,
//! homogeneity and dimension scans.

pub mod closed;
pub mod compute;
pub mod grid;
pub mod join;
pub mod record;
pub mod scan;
pub mod table1;

pub use closed::{closed_form, closed_form_str, fkm_counts};
pub use join::{classify_join, compose_join, parse_join, JOIN_SEPARATOR};
pub use compute::{compute_moduli, cross_check, cross_check_detail, homogeneity, CrossCheck};
pub use record::{quaternionic_n, ClassificationRecord, Provenance, StructureEntry};
pub use scan::{catalog_by_dimension, fkm_by_dimension, scan_codim1, scan_irreducible, ScanRow, UNDECIDED_CODIM1_N};
pub use table1::{reparametrize, table1, table1_entry, table_params, Table1Entry, Table1Row, EXCEPTIONAL_ROWS};
pub use grid::{classical_grid, exceptional_grid, fkm_grid, grid_preset, GRID_PRESETS};
