//! Linear codes over small finite fields.

pub mod galois;
pub mod matrix;
pub mod codes;
pub mod distance;
pub mod recipe;
pub mod search;
pub mod tables;
