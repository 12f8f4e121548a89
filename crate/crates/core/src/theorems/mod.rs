//! Mechanical checks of the structural results over rings and graphs.

pub mod analysis;
pub mod corpus;
pub mod graph_checks;
pub mod ring_checks;
pub mod verdict;

pub use analysis::{FactorFacts, RingAnalysis, Splitting};
pub use corpus::{
    default_corpus, run_corpus, CorpusReport, CorpusSpec, GraphEntry, RandomGraphs, SubjectFailure,
    TheoremSummary,
};
pub use graph_checks::{expected_s_vertices, graph_verdicts};
pub use ring_checks::ring_verdicts;
pub use verdict::{Outcome, Side, TheoremVerdict};
