//! Corpus runs: build every ring and graph of a corpus, evaluate every
//! applicable check, and aggregate the verdicts into a sorted report.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Limits, Result};
use crate::graph::{make_family, Family, SimpleGraph};
use crate::invariants::{maximal_cliques, InvariantReport};
use crate::ring::{RingSpec, StructureSpec};
use crate::theorems::analysis::RingAnalysis;
use crate::theorems::graph_checks::graph_verdicts;
use crate::theorems::ring_checks::ring_verdicts;
use crate::theorems::verdict::{Outcome, TheoremVerdict};

/// An explicitly listed graph. When `family` is given, the graph is also
/// checked against that family's exact S-vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphEntry {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
}

impl GraphEntry {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        GraphEntry {
            name: g.name().to_string(),
            vertices: g.labels().to_vec(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            family: None,
        }
    }

    pub fn build(&self) -> Result<SimpleGraph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::from_edges(&self.name, self.vertices.clone(), &edges)
    }
}

/// `count` Erdős–Rényi graphs on `1..=max_vertices` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomGraphs {
    pub count: usize,
    pub max_vertices: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    pub rings: Vec<RingSpec>,
    pub families: Vec<Family>,
    pub graphs: Vec<GraphEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub random_graphs: Option<RandomGraphs>,
    pub limits: Limits,
}

impl CorpusSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("corpus specs always serialize")
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
            && self.families.is_empty()
            && self.graphs.is_empty()
            && self.random_graphs.is_none_or(|r| r.count == 0)
    }
}

/// A subject that could not be built or analysed within the limits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubjectFailure {
    pub subject: String,
    pub kind: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub holds: usize,
    pub vacuous: usize,
    pub violated: usize,
    /// HOLDS verdicts whose sides were all true.
    pub holds_true: usize,
    /// HOLDS verdicts whose sides were all false.
    pub holds_false: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub subjects: usize,
    pub verdicts: Vec<TheoremVerdict>,
    pub failures: Vec<SubjectFailure>,
    pub summary: BTreeMap<String, TheoremSummary>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CorpusReport {
    pub fn violations(&self) -> impl Iterator<Item = &TheoremVerdict> {
        self.verdicts.iter().filter(|v| v.is_violated())
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn verdict(&self, theorem_id: &str, subject: &str) -> Option<&TheoremVerdict> {
        self.verdicts
            .iter()
            .find(|v| v.theorem_id == theorem_id && v.subject == subject)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "subjects: {}, verdicts: {}, violated: {}, failures: {}\n",
            self.subjects,
            self.verdicts.len(),
            self.violations().count(),
            self.failures.len()
        );
        out.push_str(
            "theorem                              holds (true/false)  vacuous  violated\n",
        );
        for (id, s) in &self.summary {
            out.push_str(&format!(
                "{id:<36} {:>5} ({}/{}){:>pad$}{:>7}  {:>8}\n",
                s.holds,
                s.holds_true,
                s.holds_false,
                "",
                s.vacuous,
                s.violated,
                pad =
                    12usize.saturating_sub(format!("{}{}", s.holds_true, s.holds_false).len() + 3),
            ));
        }
        for f in &self.failures {
            out.push_str(&format!(
                "FAILED {} [{}]: {}\n",
                f.subject, f.kind, f.message
            ));
        }
        for v in self.violations() {
            out.push_str(&format!("{v}\n"));
        }
        out
    }
}

enum Task {
    Ring(RingSpec),
    Graph(
        std::result::Result<SimpleGraph, (String, Error)>,
        Option<Family>,
    ),
}

impl Task {
    fn subject(&self) -> String {
        match self {
            Task::Ring(spec) => spec.name.clone(),
            Task::Graph(Ok(g), _) => g.name().to_string(),
            Task::Graph(Err((name, _)), _) => name.clone(),
        }
    }
}

/// Runs every check on every subject using `jobs` worker threads. The
/// report content does not depend on `jobs`.
pub fn run_corpus(spec: &CorpusSpec, jobs: usize) -> Result<CorpusReport> {
    if jobs == 0 {
        return Err(Error::Usage("at least one job is required".into()));
    }
    let start = Instant::now();
    let tasks = tasks(spec);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))?;
    let limits = spec.limits;
    let results: Vec<(String, Result<Vec<TheoremVerdict>>)> = pool.install(|| {
        tasks
            .into_par_iter()
            .map(|t| (t.subject(), run_task(t, &limits)))
            .collect()
    });

    let subjects = results.len();
    let mut verdicts = Vec::new();
    let mut failures = Vec::new();
    for (subject, r) in results {
        match r {
            Ok(v) => verdicts.extend(v),
            Err(e) => failures.push(SubjectFailure {
                subject,
                kind: error_kind(&e),
                message: e.to_string(),
            }),
        }
    }
    verdicts.sort_by(|a, b| (&a.theorem_id, &a.subject).cmp(&(&b.theorem_id, &b.subject)));
    failures.sort_by(|a, b| a.subject.cmp(&b.subject));

    let mut summary: BTreeMap<String, TheoremSummary> = BTreeMap::new();
    for v in &verdicts {
        let s = summary.entry(v.theorem_id.clone()).or_default();
        match v.verdict {
            Outcome::Holds => {
                s.holds += 1;
                match v.shared_value() {
                    Some(true) => s.holds_true += 1,
                    Some(false) => s.holds_false += 1,
                    None => {}
                }
            }
            Outcome::Vacuous => s.vacuous += 1,
            Outcome::Violated => s.violated += 1,
        }
    }
    Ok(CorpusReport {
        subjects,
        verdicts,
        failures,
        summary,
        elapsed: start.elapsed(),
    })
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidSpec(_) | Error::Parse(_) => "invalid",
        Error::Axiom { .. } => "axiom",
        Error::Resource { .. } => "resource",
        Error::Usage(_) => "usage",
    }
}

fn tasks(spec: &CorpusSpec) -> Vec<Task> {
    let mut out: Vec<Task> = spec.rings.iter().cloned().map(Task::Ring).collect();
    for f in &spec.families {
        let g = make_family(f).map_err(|e| (f.to_string(), e));
        out.push(Task::Graph(g, Some(f.clone())));
    }
    for entry in &spec.graphs {
        let g = entry.build().map_err(|e| (entry.name.clone(), e));
        out.push(Task::Graph(g, entry.family.clone()));
    }
    if let Some(r) = spec.random_graphs {
        out.extend((0..r.count).map(|i| Task::Graph(Ok(random_graph(&r, i)), None)));
    }
    out
}

fn run_task(task: Task, limits: &Limits) -> Result<Vec<TheoremVerdict>> {
    match task {
        Task::Ring(spec) => {
            let ring = spec.build_with(limits)?;
            let a = RingAnalysis::new(ring, limits)?;
            let mut out = ring_verdicts(&a);
            out.extend(graph_verdicts(
                &a.ag,
                &a.ag_report,
                Some(&a.ag_cliques),
                None,
            ));
            out.extend(graph_verdicts(&a.zd, &a.zd_report, None, None));
            Ok(out)
        }
        Task::Graph(g, family) => {
            let g = g.map_err(|(_, e)| e)?;
            let report = InvariantReport::compute(&g, limits)?;
            let cliques = maximal_cliques(&g, limits)?;
            Ok(graph_verdicts(&g, &report, Some(&cliques), family.as_ref()))
        }
    }
}

/// The `index`-th random graph of a batch; independent of every other
/// index, so batches can be generated in any order.
pub fn random_graph(r: &RandomGraphs, index: usize) -> SimpleGraph {
    let mut rng =
        ChaCha8Rng::seed_from_u64(r.seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n = rng.gen_range(1..=r.max_vertices.max(1));
    let p: f64 = rng.gen_range(0.2..0.9);
    let mut g = SimpleGraph::empty(format!("random[{}:{index}]", r.seed), n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b).expect("indices in range");
            }
        }
    }
    g
}

const FACTORS: usize = 9;

fn factor(i: usize) -> RingSpec {
    match i {
        0 => RingSpec::zmod(2),
        1 => RingSpec::zmod(3),
        2 => RingSpec::zmod(4),
        3 => RingSpec::zmod(5),
        4 => RingSpec::zmod(8),
        5 => RingSpec::zmod(9),
        6 => RingSpec::poly_quotient(2, vec![1, 1, 1]).with_name("F4"),
        7 => RingSpec::poly_quotient(2, vec![0, 0, 1]),
        _ => RingSpec::poly_quotient(3, vec![0, 0, 1]),
    }
}

fn factor_order(i: usize) -> u64 {
    [2, 3, 4, 5, 8, 9, 4, 4, 9][i]
}

/// Multiplication table over `e_0 = 1, e_1, ..` from the products of
/// non-identity basis elements; unlisted products are zero.
pub fn unital_table(rank: usize, products: &[(usize, usize, Vec<i64>)]) -> Vec<Vec<Vec<i64>>> {
    let unit = |j: usize| {
        let mut v = vec![0; rank];
        v[j] = 1;
        v
    };
    let mut t = vec![vec![vec![0; rank]; rank]; rank];
    for j in 0..rank {
        t[0][j] = unit(j);
        t[j][0] = unit(j);
    }
    for (i, j, v) in products {
        t[*i][*j] = v.clone();
        t[*j][*i] = v.clone();
    }
    t
}

/// The 32-element ring `Z4[x,y,z]/(x²−2, y²−2, z², 2x, 2y, 2z, xy, xz, yz−2)`.
pub fn weak2_spec() -> RingSpec {
    let two = vec![2, 0, 0, 0];
    RingSpec::structure(
        "Z4[x,y,z]/(x^2-2,y^2-2,z^2,2x,2y,2z,xy,xz,yz-2)",
        StructureSpec {
            orders: vec![4, 2, 2, 2],
            one: 0,
            table: unital_table(4, &[(1, 1, two.clone()), (2, 2, two.clone()), (2, 3, two)]),
        },
    )
}

/// `Z2[x,y]/(x², xy, y²)`, the local ring of order 8 whose maximal ideal
/// squares to zero.
pub fn square_zero_222_spec() -> RingSpec {
    RingSpec::structure(
        "Z2[x,y]/(x^2,xy,y^2)",
        StructureSpec {
            orders: vec![2, 2, 2],
            one: 0,
            table: unital_table(3, &[]),
        },
    )
}

/// `Z2[x,y]/(x², y²)` with basis `1, x, y, xy`.
pub fn dual_square_spec() -> RingSpec {
    RingSpec::structure(
        "Z2[x,y]/(x^2,y^2)",
        StructureSpec {
            orders: vec![2, 2, 2, 2],
            one: 0,
            table: unital_table(4, &[(1, 2, vec![0, 0, 0, 1])]),
        },
    )
}

pub fn default_rings() -> Vec<RingSpec> {
    let mut rings: Vec<RingSpec> = (2..=100).map(RingSpec::zmod).collect();
    rings.extend([125, 625].map(RingSpec::zmod));
    for i in 0..FACTORS {
        for j in i..FACTORS {
            rings.push(RingSpec::product(vec![factor(i), factor(j)]));
        }
    }
    for i in 0..FACTORS {
        for j in i..FACTORS {
            for k in j..FACTORS {
                if factor_order(i) * factor_order(j) * factor_order(k) <= 512 {
                    rings.push(RingSpec::product(vec![factor(i), factor(j), factor(k)]));
                }
            }
        }
    }
    rings.push(weak2_spec());
    rings.push(square_zero_222_spec());
    rings.push(dual_square_spec());
    rings.extend([
        RingSpec::poly_quotient(2, vec![0, 0, 0, 1]),
        RingSpec::poly_quotient(2, vec![0, 0, 0, 0, 1]),
        RingSpec::poly_quotient(3, vec![0, 0, 0, 1]),
        RingSpec::poly_quotient(4, vec![0, 0, 1]),
        RingSpec::poly_quotient(4, vec![1, 1, 1]),
    ]);
    rings
}

pub fn default_families() -> Vec<Family> {
    let mut f: Vec<Family> = (1..=8).map(Family::Complete).collect();
    for m in 1..=5 {
        for n in m..=5 {
            f.push(Family::CompleteBipartite(m, n));
        }
    }
    f.extend((1..=8).map(Family::Star));
    for a in 1..=4 {
        for b in a..=4 {
            f.push(Family::Bistar(a, b));
        }
    }
    f.extend((1..=8).map(Family::Path));
    f.extend((3..=12).map(Family::Cycle));
    for r in 3..=4 {
        multisets(r, 1, &mut Vec::new(), &mut f);
    }
    for clique in 3..=5 {
        for attached in 0..=clique {
            f.push(Family::CliquePlusVertex { clique, attached });
        }
    }
    f
}

/// Non-increasing part lists of length `r` over `{1, 2, 3}`.
fn multisets(r: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Family>) {
    if cur.len() == r {
        let mut parts = cur.clone();
        parts.reverse();
        out.push(Family::CompleteMultipartite(parts));
        return;
    }
    for s in min..=3 {
        cur.push(s);
        multisets(r, s, cur, out);
        cur.pop();
    }
}

/// The tree-like girth-4 graph: two hubs sharing `duals` common
/// neighbours, with a pendant on one hub.
pub fn figure1_graph(duals: usize) -> SimpleGraph {
    let mut labels = vec!["a".to_string(), "b".to_string(), "p".to_string()];
    labels.extend((1..=duals).map(|i| format!("d{i}")));
    let mut edges = vec![(1, 2)];
    for d in 3..3 + duals {
        edges.push((0, d));
        edges.push((1, d));
    }
    SimpleGraph::from_edges(format!("Figure1[{duals}]"), labels, &edges)
        .expect("labels are distinct")
}

pub fn petersen_graph() -> SimpleGraph {
    let mut g = SimpleGraph::empty("Petersen", 10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).expect("in range");
        g.add_edge(i, i + 5).expect("in range");
        g.add_edge(i + 5, (i + 2) % 5 + 5).expect("in range");
    }
    g
}

/// Mycielskian of `C_5`: triangle-free with `χ = 4`.
pub fn grotzsch_graph() -> SimpleGraph {
    let mut g = SimpleGraph::empty("Grotzsch", 11);
    for i in 0..5 {
        let j = (i + 1) % 5;
        g.add_edge(i, j).expect("in range");
        g.add_edge(i + 5, j).expect("in range");
        g.add_edge(j + 5, i).expect("in range");
        g.add_edge(i + 5, 10).expect("in range");
    }
    g
}

pub fn default_corpus() -> CorpusSpec {
    let mut graphs: Vec<GraphEntry> = (2..=4)
        .map(|d| GraphEntry::from_graph(&figure1_graph(d)))
        .collect();
    graphs.push(GraphEntry::from_graph(&petersen_graph()));
    graphs.push(GraphEntry::from_graph(&grotzsch_graph()));
    CorpusSpec {
        rings: default_rings(),
        families: default_families(),
        graphs,
        random_graphs: Some(RandomGraphs {
            count: 500,
            max_vertices: 10,
            seed: 1,
        }),
        limits: Limits::default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{chromatic_number, clique_number, girth, Shape};

    #[test]
    fn default_corpus_round_trips() {
        let c = default_corpus();
        assert_eq!(CorpusSpec::from_json(&c.to_json()).unwrap(), c);
        let names: std::collections::BTreeSet<&str> =
            c.rings.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names.len(), c.rings.len(), "ring names must be unique");
        assert!(c.rings.len() >= 250);
    }

    #[test]
    fn named_graphs() {
        let g = figure1_graph(3);
        assert!(matches!(
            crate::invariants::classify_shape(&g),
            Shape::Figure1 {
                outer_hub: 0,
                inner_hub: 1,
                pendant: 2,
                ..
            }
        ));
        let p = petersen_graph();
        assert_eq!(p.edge_count(), 15);
        assert_eq!(girth(&p).value(), Some(5));
        let limits = Limits::default();
        let z = grotzsch_graph();
        assert_eq!(z.edge_count(), 20);
        assert_eq!(clique_number(&z, &limits).unwrap(), 2);
        assert_eq!(chromatic_number(&z, &limits).unwrap(), 4);
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let r = RandomGraphs {
            count: 3,
            max_vertices: 10,
            seed: 7,
        };
        for i in 0..3 {
            assert_eq!(random_graph(&r, i).edges(), random_graph(&r, i).edges());
        }
        assert!((0..20).any(|i| random_graph(&r, i).order() > 5));
    }

    #[test]
    fn empty_corpus_is_clean() {
        let report = run_corpus(&CorpusSpec::default(), 1).unwrap();
        assert_eq!(report.subjects, 0);
        assert!(report.verdicts.is_empty() && report.is_clean());
    }

    #[test]
    fn broken_ring_is_recorded_not_fatal() {
        let spec = CorpusSpec {
            rings: vec![RingSpec::zmod(6), RingSpec::zmod(1)],
            ..CorpusSpec::default()
        };
        let report = run_corpus(&spec, 2).unwrap();
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].kind, "invalid");
        assert!(report.verdicts.iter().any(|v| v.subject == "Z6"));
    }

    #[test]
    fn every_pair_appears_once() {
        let spec = CorpusSpec {
            rings: vec![RingSpec::zmod(12), RingSpec::zmod(8)],
            families: vec![Family::Cycle(5)],
            ..CorpusSpec::default()
        };
        let report = run_corpus(&spec, 2).unwrap();
        let mut keys: Vec<(&str, &str)> = report
            .verdicts
            .iter()
            .map(|v| (v.theorem_id.as_str(), v.subject.as_str()))
            .collect();
        let n = keys.len();
        keys.dedup();
        assert_eq!(keys.len(), n);
        assert!(report.is_clean(), "{}", report.render_text());
    }
}
