//! Finite commutative rings, their ideal lattices, annihilating-ideal and
//! zero-divisor graphs, graph invariants, and mechanical checks of the
//! structural results that relate them.

pub mod error;
pub mod graph;
pub mod ideal;
pub mod invariants;
pub mod ring;
pub mod theorems;
pub mod zerodiv;

pub use error::{Error, Limits, Result};
pub use graph::{build_ag, build_zd, make_family, Family, GraphKind, SimpleGraph};
pub use ideal::{enumerate_ideals, enumerate_ideals_with, Ideal, IdealLattice};
pub use invariants::{InvariantReport, Shape};
pub use ring::{
    build_poly_quotient, build_product, build_structure_ring, build_zmod, Element, FiniteRing,
    RingSpec,
};
pub use theorems::{
    default_corpus, run_corpus, CorpusReport, CorpusSpec, Outcome, RingAnalysis, TheoremVerdict,
};
pub use zerodiv::{
    is_reduced, nilradical, zero_divisor_set, zr_condition_profile, ZeroDivisorSet, ZrProfile,
};
