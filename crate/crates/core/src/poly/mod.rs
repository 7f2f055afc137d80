//! Multi-indices and homogeneous polynomials over the rationals.

mod form;
mod multi_index;

pub(crate) use form::PowerTable;
pub use form::ScalarForm;
pub use multi_index::{multinomial, MultiIndex};
