//! Concrete models used as ambient categories and as targets.

pub mod matrix;
pub mod table;
pub mod thin;
pub mod validate;

pub use matrix::{Matrix, MatrixModCategory};
pub use table::{CategorySpec, LoadError, MorphismSpec, TableCategory, TableMor};
pub use thin::{FreeThinModel, ThinMor};
pub use validate::{matrix_universe, thin_universe, validate_category, validate_with_seed, Universe};
