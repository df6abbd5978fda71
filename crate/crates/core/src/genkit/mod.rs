//! Catalog algebras and generators of valid instances of every structure.

pub mod catalog;
pub mod gen;

pub use catalog::{catalog_algebras, gen_difference_ops, CatalogEntry};
pub use gen::{gen_crossed_modules, gen_diff_hbimods, gen_hbimods, gen_skeletal};
