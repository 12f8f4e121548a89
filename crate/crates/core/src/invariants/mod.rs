//! Graph invariants: distances, cycles, cliques, colorings, shapes and
//! Smarandache vertices.

pub mod clique;
pub mod coloring;
pub mod metric;
pub mod report;
pub mod shape;
pub mod smarandache;

pub use clique::{clique_number, is_clique, maximal_cliques, maximum_clique};
pub use coloring::{chromatic_number, is_proper_coloring, optimal_coloring, Coloring};
pub use metric::{diameter, distances_from, girth, is_connected, shortest_path, Diameter, Girth};
pub use report::InvariantReport;
pub use shape::{bipartition, classify_shape, is_bipartite, multipartite_parts, Shape};
pub use smarandache::{is_valid_witness, s_witness, smarandache_vertices, SWitness};
