//! Finite commutative rings with identity.

mod finite;
mod spec;
mod validate;

pub use finite::{
    build_poly_quotient, build_poly_quotient_with, build_product, build_product_with,
    build_structure_ring, build_structure_ring_with, build_zmod, build_zmod_with, Element,
    FiniteRing, RingId,
};
pub use spec::{Constructor, RingSpec, StructureSpec};
pub use validate::{
    validate_ring_axioms, validate_ring_axioms_exhaustive, ValidationReport, Violation,
};
