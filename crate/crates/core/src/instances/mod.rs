//! The four reductions to the minimal-relation problem: telescopers,
//! differential resolvents, LCLMs and symmetric products.

mod algebraic;
mod closure;
mod hermite;

pub use algebraic::{
    bound_algebraic, build_algebraic, resolvent, resolvent_empirical_curve, resolvent_generic_bound, verify_resolvent,
    AlgebraicInstance,
};
pub use closure::{
    bound_lclm, bound_symprod, bound_symprod_general, build_lclm, build_symprod, lclm, symprod, symprod_conjecture,
    verify_lclm, verify_symprod, ClosureInstance, ClosureKind, SERIES_PRECISION,
};
pub use hermite::{
    apply_to_fraction, bound_hermite, build_hermite, genericity_check, hermite_reduce, telescoper, verify_certificate,
    verify_telescoper, HermiteInstance, QFrac,
};
