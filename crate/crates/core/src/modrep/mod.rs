//! F2-modules for small groups: C7 isotypic parts, socle series, Ext^1 by
//! cocycles, semidirect products, and characters of 2^3:7.

pub mod chars;
pub mod cohomology;
pub mod module;
pub mod section;

pub use chars::{char_table_2cubed7, faithful_rep_multisets, CharTable2Cubed7, Cyc7, RepMultiset};
pub use cohomology::{ext1, extension_module, Ext1, GroupTable, Semidirect};
pub use module::{poly_eval, C7Label, F2GModule, Isotypic};
pub use section::Section;
