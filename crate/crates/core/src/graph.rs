//! Simple graphs: annihilating-ideal graphs, zero-divisor graphs and the
//! synthetic families used to exercise the S-vertex results.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::IdealLattice;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GraphKind {
    /// Annihilating-ideal graph `AG(R)`.
    Ag,
    /// Zero-divisor graph `Γ(R)`.
    Zd,
    Synthetic,
}

/// Undirected loop-free graph with labeled vertices and bitset rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    kind: GraphKind,
    name: String,
    labels: Vec<String>,
    adj: Vec<FixedBitSet>,
    /// Lattice index (AG), element index (Γ) or vertex index (synthetic).
    sources: Vec<usize>,
    /// Per-vertex `I² = (0)`; only meaningful for AG.
    square_zero: Vec<bool>,
}

impl SimpleGraph {
    /// Edgeless synthetic graph on vertices `v0..v{n-1}`.
    pub fn empty(name: impl Into<String>, n: usize) -> SimpleGraph {
        let labels = (0..n).map(|i| format!("v{i}")).collect();
        SimpleGraph::with_labels(GraphKind::Synthetic, name, labels)
    }

    fn with_labels(kind: GraphKind, name: impl Into<String>, labels: Vec<String>) -> SimpleGraph {
        let n = labels.len();
        SimpleGraph {
            kind,
            name: name.into(),
            labels,
            adj: vec![FixedBitSet::with_capacity(n); n],
            sources: (0..n).collect(),
            square_zero: vec![false; n],
        }
    }

    /// Synthetic graph from labels and an edge list.
    pub fn from_edges(
        name: impl Into<String>,
        labels: Vec<String>,
        edges: &[(usize, usize)],
    ) -> Result<SimpleGraph> {
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::Usage(format!("duplicate vertex label `{dup}`")));
        }
        let mut g = SimpleGraph::with_labels(GraphKind::Synthetic, name, labels);
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        let n = self.order();
        if i >= n || j >= n {
            return Err(Error::Usage(format!(
                "edge ({i}, {j}) out of range for {n} vertices"
            )));
        }
        if i == j {
            return Err(Error::Usage(format!("self-loop at vertex {i}")));
        }
        self.adj[i].insert(j);
        self.adj[j].insert(i);
        Ok(())
    }

    /// Drops the edge if present; used to build corrupted fixtures.
    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.adj[i].set(j, false);
        self.adj[j].set(i, false);
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, row) in self.adj.iter().enumerate() {
            out.extend(row.ones().filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }

    pub fn source(&self, v: usize) -> usize {
        self.sources[v]
    }

    pub fn is_square_zero(&self, v: usize) -> bool {
        self.square_zero[v]
    }

    pub fn vertex_of_source(&self, source: usize) -> Option<usize> {
        self.sources.iter().position(|&s| s == source)
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Checks symmetry and loop-freeness of the adjacency rows.
    pub fn is_well_formed(&self) -> bool {
        (0..self.order()).all(|i| {
            !self.adj[i].contains(i) && self.adj[i].ones().all(|j| self.adj[j].contains(i))
        })
    }

    /// DOT text: vertices in order, then one line per edge in lexicographic order.
    pub fn export_dot(&self) -> String {
        let mut out = format!("graph {} {{\n", quote(&self.name));
        for l in &self.labels {
            out.push_str(&format!("  {};\n", quote(l)));
        }
        for (i, j) in self.edges() {
            out.push_str(&format!(
                "  {} -- {};\n",
                quote(&self.labels[i]),
                quote(&self.labels[j])
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }

    pub fn export_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("graph serialization cannot fail")
    }

    /// Parses `{"vertices": [...], "edges": [[i, j], ...]}` as a synthetic graph.
    pub fn from_json(name: impl Into<String>, text: &str) -> Result<SimpleGraph> {
        let parsed: GraphJson = serde_json::from_str(text)?;
        parsed.into_graph(name)
    }
}

/// Structured graph layout shared by export and corpus files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn into_graph(self, name: impl Into<String>) -> Result<SimpleGraph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::from_edges(name, self.vertices, &edges)
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `AG(R)`: vertices are the nonzero ideals with nonzero annihilator, in
/// lattice order; `I – J` iff `I ≠ J` and `IJ = (0)`.
pub fn build_ag(ring: &FiniteRing, lattice: &IdealLattice) -> SimpleGraph {
    let vertices = lattice.annihilating_ideals();
    let labels = vertices.iter().map(|&i| lattice.label(ring, i)).collect();
    let mut g = SimpleGraph::with_labels(GraphKind::Ag, format!("AG({})", ring.name()), labels);
    for (a, &i) in vertices.iter().enumerate() {
        for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
            if lattice.product_is_zero(i, j) {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
    }
    g.square_zero = vertices
        .iter()
        .map(|&i| lattice.is_square_zero(i))
        .collect();
    g.sources = vertices;
    g
}

/// `Γ(R)`: vertices are the nonzero zero-divisors in element order;
/// `x – y` iff `x ≠ y` and `xy = 0`.
pub fn build_zd(ring: &FiniteRing) -> SimpleGraph {
    let vertices: Vec<usize> = ring
        .elements()
        .filter(|&a| a != ring.zero() && ring.is_zero_divisor(a))
        .collect();
    let labels = vertices
        .iter()
        .map(|&a| ring.label(a).to_string())
        .collect();
    let mut g = SimpleGraph::with_labels(GraphKind::Zd, format!("ZD({})", ring.name()), labels);
    for (a, &x) in vertices.iter().enumerate() {
        for (b, &y) in vertices.iter().enumerate().skip(a + 1) {
            if ring.mul(x, y) == ring.zero() {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
    }
    g.square_zero = vertices
        .iter()
        .map(|&a| ring.mul(a, a) == ring.zero())
        .collect();
    g.sources = vertices;
    g
}

/// Parameterized synthetic graph families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,n}`.
    Star(usize),
    /// Path on `n` vertices.
    Path(usize),
    Cycle(usize),
    /// Two stars with `a` and `b` leaves whose centers are joined.
    Bistar(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// `K_s` plus one outside vertex joined to `t` clique vertices.
    CliquePlusVertex {
        clique: usize,
        attached: usize,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "K_{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "K_{{{m},{n}}}"),
            Family::Star(n) => write!(f, "K_{{1,{n}}}"),
            Family::Path(n) => write!(f, "P_{n}"),
            Family::Cycle(n) => write!(f, "C_{n}"),
            Family::Bistar(a, b) => write!(f, "B_{{{a},{b}}}"),
            Family::CompleteMultipartite(parts) => {
                let p: Vec<String> = parts.iter().map(|s| s.to_string()).collect();
                write!(f, "K_{{{}}}", p.join(","))
            }
            Family::CliquePlusVertex { clique, attached } => write!(f, "K_{clique}+x({attached})"),
        }
    }
}

/// Builds a family member. Vertex layout: parts in order, centers first
/// for stars and bistars, the outside vertex last for clique-plus-vertex.
pub fn make_family(family: &Family) -> Result<SimpleGraph> {
    let bad = |why: &str| Err(Error::Usage(format!("{family}: {why}")));
    let name = family.to_string();
    let mut edges = Vec::new();
    let n = match family {
        Family::Complete(n) => {
            if *n == 0 {
                return bad("needs at least one vertex");
            }
            for i in 0..*n {
                edges.extend((i + 1..*n).map(|j| (i, j)));
            }
            *n
        }
        Family::CompleteBipartite(a, b) => {
            return make_family(&Family::CompleteMultipartite(vec![*a, *b]))
                .map(|g| rename(g, name));
        }
        Family::Star(leaves) => {
            if *leaves == 0 {
                return bad("needs at least one leaf");
            }
            edges.extend((1..=*leaves).map(|j| (0, j)));
            leaves + 1
        }
        Family::Path(n) => {
            if *n == 0 {
                return bad("needs at least one vertex");
            }
            edges.extend((1..*n).map(|i| (i - 1, i)));
            *n
        }
        Family::Cycle(n) => {
            if *n < 3 {
                return bad("needs at least three vertices");
            }
            edges.extend((1..*n).map(|i| (i - 1, i)));
            edges.push((0, n - 1));
            *n
        }
        Family::Bistar(a, b) => {
            if *a == 0 || *b == 0 {
                return bad("each star needs at least one leaf");
            }
            edges.push((0, 1));
            edges.extend((0..*a).map(|k| (0, 2 + k)));
            edges.extend((0..*b).map(|k| (1, 2 + a + k)));
            a + b + 2
        }
        Family::CompleteMultipartite(parts) => {
            if parts.len() < 2 || parts.contains(&0) {
                return bad("needs at least two nonempty parts");
            }
            let mut part_of = Vec::new();
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(p, size));
            }
            for i in 0..part_of.len() {
                for j in i + 1..part_of.len() {
                    if part_of[i] != part_of[j] {
                        edges.push((i, j));
                    }
                }
            }
            part_of.len()
        }
        Family::CliquePlusVertex { clique, attached } => {
            if *clique == 0 || attached > clique {
                return bad("attachment count must not exceed a nonempty clique");
            }
            for i in 0..*clique {
                edges.extend((i + 1..*clique).map(|j| (i, j)));
            }
            edges.extend((0..*attached).map(|i| (i, *clique)));
            clique + 1
        }
    };
    let mut g = SimpleGraph::empty(name, n);
    for (i, j) in edges {
        g.add_edge(i, j)?;
    }
    Ok(g)
}

fn rename(mut g: SimpleGraph, name: String) -> SimpleGraph {
    g.name = name;
    g
}
