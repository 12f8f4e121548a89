use serde::Serialize;

use crate::error::{Limits, Result};
use crate::graph::SimpleGraph;
use crate::invariants::clique::maximum_clique;
use crate::invariants::coloring::optimal_coloring;
use crate::invariants::metric::{diameter, girth, is_connected, Diameter, Girth};
use crate::invariants::shape::{bipartition, classify_shape, Shape};
use crate::invariants::smarandache::{smarandache_vertices, SWitness};

/// Every invariant of one graph, computed once.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub diameter: Diameter,
    pub girth: Girth,
    /// `None` when the exact searches were skipped.
    pub clique_number: Option<usize>,
    #[serde(skip)]
    pub max_clique: Vec<usize>,
    pub chromatic_number: Option<usize>,
    #[serde(skip)]
    pub coloring: Vec<usize>,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub shape: Shape,
    pub s_vertices: Vec<SWitness>,
}

impl InvariantReport {
    pub fn compute(g: &SimpleGraph, limits: &Limits) -> Result<InvariantReport> {
        let max_clique = maximum_clique(g, limits)?;
        let coloring = optimal_coloring(g, limits)?;
        let mut report = InvariantReport::compute_basic(g);
        report.clique_number = Some(max_clique.len());
        report.max_clique = max_clique;
        report.chromatic_number = Some(coloring.chi);
        report.coloring = coloring.colors;
        Ok(report)
    }

    /// Everything except clique number and chromatic number; polynomial time.
    pub fn compute_basic(g: &SimpleGraph) -> InvariantReport {
        InvariantReport {
            vertices: g.order(),
            edges: g.edge_count(),
            connected: is_connected(g),
            diameter: diameter(g),
            girth: girth(g),
            clique_number: None,
            max_clique: Vec::new(),
            chromatic_number: None,
            coloring: Vec::new(),
            bipartition: bipartition(g),
            shape: classify_shape(g),
            s_vertices: smarandache_vertices(g),
        }
    }

    pub fn has_s_vertex(&self) -> bool {
        !self.s_vertices.is_empty()
    }

    pub fn is_s_vertex(&self, v: usize) -> bool {
        self.s_vertices.iter().any(|w| w.vertex == v)
    }

    pub fn s_vertex_set(&self) -> Vec<usize> {
        self.s_vertices.iter().map(|w| w.vertex).collect()
    }

    /// Human-readable summary using the graph's labels.
    pub fn render_text(&self, g: &SimpleGraph) -> String {
        let names = |vs: &[usize]| -> String {
            let l: Vec<&str> = vs.iter().map(|&v| g.label(v)).collect();
            format!("{{{}}}", l.join(", "))
        };
        let mut out = String::new();
        out.push_str(&format!("graph: {}\n", g.name()));
        out.push_str(&format!("vertices: {}\n", self.vertices));
        out.push_str(&format!("edges: {}\n", self.edges));
        out.push_str(&format!("connected: {}\n", self.connected));
        out.push_str(&format!("diameter: {}", self.diameter));
        match &self.diameter {
            Diameter::Finite {
                witness: (u, v),
                value,
            } if *value > 0 => out.push_str(&format!(" ({} .. {})", g.label(*u), g.label(*v))),
            Diameter::Infinite { witness: (u, v) } => {
                out.push_str(&format!(" ({} .. {})", g.label(*u), g.label(*v)))
            }
            _ => {}
        }
        out.push('\n');
        out.push_str(&format!("girth: {}", self.girth));
        if let Girth::Finite { cycle, .. } = &self.girth {
            out.push_str(&format!(" {}", names(cycle)));
        }
        out.push('\n');
        if let (Some(omega), Some(chi)) = (self.clique_number, self.chromatic_number) {
            out.push_str(&format!(
                "clique number: {} {}\n",
                omega,
                names(&self.max_clique)
            ));
            out.push_str(&format!("chromatic number: {chi}\n"));
        }
        match &self.bipartition {
            Some((a, b)) => out.push_str(&format!("bipartite: {} | {}\n", names(a), names(b))),
            None => out.push_str("bipartite: no\n"),
        }
        out.push_str(&format!("shape: {}\n", self.shape));
        out.push_str(&format!("s-vertices: {}\n", self.s_vertices.len()));
        for w in &self.s_vertices {
            out.push_str(&format!(
                "  {}: x={} b={} y={}\n",
                g.label(w.vertex),
                g.label(w.x),
                g.label(w.b),
                g.label(w.y)
            ));
        }
        out
    }
}
