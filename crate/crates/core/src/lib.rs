//! Minimal polynomial-coefficient relations among iterates of a
//! pseudo-linear map `theta = d/dx + T` over `Q(x)`, and four D-finite
//! operations built on top of them.

pub mod arith;
pub mod cli;
pub mod error;
pub mod instances;
pub mod linalg;
pub mod ore;
pub mod pseudolin;

pub use error::{Error, Result};
