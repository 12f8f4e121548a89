use thiserror::Error;

use crate::ring::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),

    #[error("ring `{ring}` violates the ring axioms: {violation}")]
    Axiom { ring: String, violation: Violation },

    #[error("resource limit exceeded for `{subject}`: {detail}")]
    Resource { subject: String, detail: String },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn resource(subject: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Resource {
            subject: subject.into(),
            detail: detail.into(),
        }
    }
}

/// Size caps shared by ring construction, lattice enumeration and the
/// exhaustive graph searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    pub max_ring_order: usize,
    pub max_ideals: usize,
    pub max_search_vertices: usize,
    /// Backtracking nodes allowed per chromatic-number query.
    pub max_coloring_steps: u64,
    /// Maximal cliques enumerated per graph before giving up.
    pub max_cliques: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ring_order: 4096,
            max_ideals: 20_000,
            max_search_vertices: 600,
            max_coloring_steps: 50_000_000,
            max_cliques: 200_000,
        }
    }
}
