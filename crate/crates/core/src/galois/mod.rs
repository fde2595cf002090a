//! Exact arithmetic over small finite fields and their extensions:
//! elements, polynomials, cyclotomic cosets and minimal polynomials.

mod cyclotomic;
mod field;
mod poly;
mod text;

pub use cyclotomic::{
    cyclotomic_coset, cyclotomic_cosets, minimal_polynomial, multiplicative_order, CosetError,
};
pub use field::{Elem, Field, FieldError, MAX_ORDER};
pub use poly::{Poly, PolyError};
pub use text::format_elem;
