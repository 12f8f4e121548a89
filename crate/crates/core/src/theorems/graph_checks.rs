//! Checks that depend only on a graph: the S-vertex lemmas, the coloring
//! proposition and the bipartite statement, plus exact S-vertex sets for
//! the synthetic families.

use crate::graph::{Family, SimpleGraph};
use crate::invariants::{
    distances_from, is_valid_witness, multipartite_parts, InvariantReport, Shape,
};
use crate::theorems::analysis::labels;
use crate::theorems::verdict::{implication, side, TheoremVerdict};

/// Graphs up to this order are searched for embedded chordless cycles.
pub const EMBEDDED_CYCLE_ORDER: usize = 10;

/// Runs every graph-level check. `cliques` are the maximal cliques when
/// they were enumerated; clique-based checks are skipped otherwise, as is
/// the coloring check when the report has no chromatic number.
pub fn graph_verdicts(
    g: &SimpleGraph,
    report: &InvariantReport,
    cliques: Option<&[Vec<usize>]>,
    family: Option<&Family>,
) -> Vec<TheoremVerdict> {
    let subject = g.name();
    let n = g.order();
    let s_set = report.s_vertex_set();
    let no_s = s_set.is_empty();
    let first_s = || {
        report
            .s_vertices
            .first()
            .map(|w| {
                format!(
                    "{} is an S-vertex via x={}, b={}, y={}",
                    g.label(w.vertex),
                    g.label(w.x),
                    g.label(w.b),
                    g.label(w.y)
                )
            })
            .unwrap_or_default()
    };
    let mut out = Vec::new();

    let complete = n >= 1 && g.edge_count() == n * (n - 1) / 2;
    out.push(implication(
        "lemma.triv1.1",
        subject,
        side("complete", complete),
        side("no S-vertices", no_s),
        first_s,
    ));

    let star = report.shape.is_star() || matches!(family, Some(Family::Star(_)));
    out.push(implication(
        "lemma.triv1.2",
        subject,
        side("star", star),
        side("no S-vertices", no_s),
        first_s,
    ));

    let bipartite_complete = report.shape.is_complete_bipartite()
        || matches!(
            family,
            Some(Family::CompleteBipartite(..) | Family::Star(_))
        );
    out.push(implication(
        "lemma.triv1.3",
        subject,
        side("complete bipartite", bipartite_complete),
        side("no S-vertices", no_s),
        first_s,
    ));

    out.push(multipartite_check(g, report));
    out.push(bistar_check(g, report, family));
    out.push(cycle_check(g, report));
    out.push(distance_three_check(g, report));

    if let Some(cliques) = cliques {
        out.push(clique_outsider_check(g, report, cliques));
    }

    if let (Some(omega), Some(chi)) = (report.clique_number, report.chromatic_number) {
        let premise = report.connected && n > 0 && omega >= 3 && no_s;
        out.push(implication(
            "prop.color",
            subject,
            side("connected, ω ≥ 3, no S-vertices", premise),
            side("ω = χ", omega == chi),
            || format!("ω = {omega}, χ = {chi}"),
        ));
    }

    let basic_ok = report.s_vertices.iter().all(|w| is_valid_witness(g, w))
        && n >= 4
        && g.edge_count() >= 3
        && s_set.iter().all(|&v| g.degree(v) >= 2);
    out.push(implication(
        "svertex.basic",
        subject,
        side("has S-vertex", !no_s),
        side("≥ 4 vertices, ≥ 3 edges, S-degrees ≥ 2", basic_ok),
        || {
            format!(
                "{} vertices, {} edges, S-vertices {}",
                n,
                g.edge_count(),
                labels(g, &s_set)
            )
        },
    ));

    let girth_ok = matches!(report.girth.value(), None | Some(4));
    out.push(implication(
        "thm.bipart.2",
        subject,
        side("complete bipartite", bipartite_complete),
        side("no S-vertices and girth ∈ {4, ∞}", no_s && girth_ok),
        || format!("girth {}; {}", report.girth, first_s()),
    ));

    if let Some(f) = family {
        let expected = expected_s_vertices(f);
        out.push(implication(
            "family.s_vertices",
            subject,
            side(format!("family {f}"), true),
            side("S-vertex set matches the family", expected == s_set),
            || {
                format!(
                    "expected {}, found {}",
                    labels(g, &expected),
                    labels(g, &s_set)
                )
            },
        ));
    }
    out
}

fn multipartite_check(g: &SimpleGraph, report: &InvariantReport) -> TheoremVerdict {
    let parts = multipartite_parts(g).filter(|p| p.len() >= 3);
    let big: Vec<&Vec<usize>> = parts.iter().flatten().filter(|p| p.len() >= 2).collect();
    let premise = !big.is_empty();
    let required: Vec<usize> = if big.len() >= 2 {
        (0..g.order()).collect()
    } else if let Some(v1) = big.first() {
        (0..g.order()).filter(|v| !v1.contains(v)).collect()
    } else {
        Vec::new()
    };
    let missing: Vec<usize> = required
        .iter()
        .copied()
        .filter(|&v| !report.is_s_vertex(v))
        .collect();
    implication(
        "lemma.triv1.4",
        g.name(),
        side("complete r-partite, r ≥ 3, a part of size ≥ 2", premise),
        side("required vertices are S-vertices", missing.is_empty()),
        || format!("not S-vertices: {}", labels(g, &missing)),
    )
}

/// Centers of a bistar: a tree whose non-leaf vertices are exactly two
/// adjacent vertices, each carrying at least one leaf.
pub fn bistar_centers(g: &SimpleGraph) -> Option<(usize, usize)> {
    let n = g.order();
    if n < 4 || g.edge_count() != n - 1 || !crate::invariants::is_connected(g) {
        return None;
    }
    let inner: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 2).collect();
    match inner[..] {
        [a, b] if g.adjacent(a, b) => Some((a, b)),
        _ => None,
    }
}

fn bistar_check(
    g: &SimpleGraph,
    report: &InvariantReport,
    family: Option<&Family>,
) -> TheoremVerdict {
    let centers = match family {
        Some(Family::Bistar(..)) => Some((0, 1)),
        _ => bistar_centers(g),
    };
    let expected: Vec<usize> = centers
        .map(|(a, b)| {
            let mut v = vec![a, b];
            v.sort_unstable();
            v
        })
        .unwrap_or_default();
    let found = report.s_vertex_set();
    implication(
        "lemma.triv1.5",
        g.name(),
        side("bistar", centers.is_some()),
        side("S-vertices are exactly the two centers", found == expected),
        || {
            format!(
                "expected {}, found {}",
                labels(g, &expected),
                labels(g, &found)
            )
        },
    )
}

/// Vertex sets of all chordless cycles of length ≥ 5.
pub fn chordless_long_cycles(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for start in 0..g.order() {
        let mut path = vec![start];
        extend_chordless(g, &mut path, &mut out);
    }
    out
}

fn extend_chordless(g: &SimpleGraph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let start = path[0];
    let last = *path.last().expect("path is nonempty");
    for w in g.neighbors(last).ones() {
        if w <= start || path.contains(&w) {
            continue;
        }
        if path.len() == 1 {
            path.push(w);
            extend_chordless(g, path, out);
            path.pop();
            continue;
        }
        // w may touch only `last` among interior vertices, and `start`
        // only when it closes the cycle
        let interior = &path[1..path.len() - 1];
        if interior.iter().any(|&p| g.adjacent(p, w)) {
            continue;
        }
        if g.adjacent(w, start) {
            // each cycle is found in both directions; keep one
            if path.len() + 1 >= 5 && path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
            continue;
        }
        path.push(w);
        extend_chordless(g, path, out);
        path.pop();
    }
}

fn cycle_check(g: &SimpleGraph, report: &InvariantReport) -> TheoremVerdict {
    let mut cycles = Vec::new();
    if let Shape::Cycle { vertices } = &report.shape {
        cycles.push(vertices.clone());
    } else if g.order() <= EMBEDDED_CYCLE_ORDER {
        cycles = chordless_long_cycles(g);
    }
    let bad = cycles
        .iter()
        .find(|c| c.iter().any(|&v| !report.is_s_vertex(v)));
    implication(
        "lemma.triv1.6",
        g.name(),
        side("chordless cycle of length ≥ 5", !cycles.is_empty()),
        side("its vertices are S-vertices", bad.is_none()),
        || {
            format!(
                "cycle {} has a non-S vertex",
                labels(g, bad.expect("violation"))
            )
        },
    )
}

fn distance_three_check(g: &SimpleGraph, report: &InvariantReport) -> TheoremVerdict {
    let mut pair = None;
    'outer: for u in 0..g.order() {
        for (v, d) in distances_from(g, u).into_iter().enumerate() {
            if d == Some(3) {
                pair = Some((u, v));
                break 'outer;
            }
        }
    }
    implication(
        "lemma.triv1.7",
        g.name(),
        side("some d(x, y) = 3", pair.is_some()),
        side("has S-vertex", report.has_s_vertex()),
        || {
            let (u, v) = pair.expect("violation has a pair");
            format!("d({}, {}) = 3", g.label(u), g.label(v))
        },
    )
}

/// For each maximal clique `C` with `|C| ≥ 3` and each vertex `x ∉ C` with
/// `t` neighbors in `C`: `1 ≤ t ≤ |C|−2` forces all of `C` to be S-vertices
/// and `t = |C|−1` forces those `t` neighbors to be.
fn clique_outsider_check(
    g: &SimpleGraph,
    report: &InvariantReport,
    cliques: &[Vec<usize>],
) -> TheoremVerdict {
    let mut applies = false;
    let mut failure = None;
    'search: for c in cliques.iter().filter(|c| c.len() >= 3) {
        for x in (0..g.order()).filter(|x| !c.contains(x)) {
            let linked: Vec<usize> = c.iter().copied().filter(|&v| g.adjacent(x, v)).collect();
            let t = linked.len();
            let required: &[usize] = if (1..=c.len() - 2).contains(&t) {
                c
            } else if t == c.len() - 1 {
                &linked
            } else {
                continue;
            };
            applies = true;
            if let Some(&v) = required.iter().find(|&&v| !report.is_s_vertex(v)) {
                failure = Some((c.clone(), x, t, v));
                break 'search;
            }
        }
    }
    implication(
        "lemma.triv2",
        g.name(),
        side(
            "clique |C| ≥ 3 with an outside vertex linked to 1..|C|−1 of it",
            applies,
        ),
        side("forced vertices are S-vertices", failure.is_none()),
        || {
            let (c, x, t, v) = failure.clone().expect("violation");
            format!(
                "C = {}, x = {} with {} links, {} is not an S-vertex",
                labels(g, &c),
                g.label(x),
                t,
                g.label(v)
            )
        },
    )
}

/// Exact S-vertex set of a family member under the vertex layout of
/// [`crate::graph::make_family`].
pub fn expected_s_vertices(family: &Family) -> Vec<usize> {
    match family {
        Family::Complete(_) | Family::Star(_) | Family::CompleteBipartite(..) => Vec::new(),
        Family::Path(n) => {
            if *n >= 4 {
                (1..n - 1).collect()
            } else {
                Vec::new()
            }
        }
        Family::Cycle(n) => {
            if *n >= 5 {
                (0..*n).collect()
            } else {
                Vec::new()
            }
        }
        Family::Bistar(..) => vec![0, 1],
        Family::CompleteMultipartite(parts) => {
            let total: usize = parts.iter().sum();
            let big: Vec<usize> = (0..parts.len()).filter(|&p| parts[p] >= 2).collect();
            if parts.len() < 3 || big.is_empty() {
                return Vec::new();
            }
            if big.len() >= 2 {
                return (0..total).collect();
            }
            let start: usize = parts[..big[0]].iter().sum();
            let end = start + parts[big[0]];
            (0..total).filter(|v| !(start..end).contains(v)).collect()
        }
        Family::CliquePlusVertex { clique, attached } => {
            let (s, t) = (*clique, *attached);
            if s < 3 || t == 0 || t == s {
                Vec::new()
            } else if t <= s - 2 {
                (0..s).collect()
            } else {
                (0..t).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Limits;
    use crate::graph::make_family;
    use crate::invariants::maximal_cliques;
    use crate::theorems::verdict::Outcome;

    fn run(f: &Family) -> Vec<TheoremVerdict> {
        let g = make_family(f).unwrap();
        let r = InvariantReport::compute(&g, &Limits::default()).unwrap();
        let c = maximal_cliques(&g, &Limits::default()).unwrap();
        graph_verdicts(&g, &r, Some(&c), Some(f))
    }

    #[test]
    fn families_pass_every_check() {
        for f in [
            Family::Complete(5),
            Family::Star(3),
            Family::CompleteBipartite(2, 3),
            Family::Bistar(2, 3),
            Family::Cycle(7),
            Family::Path(6),
            Family::CompleteMultipartite(vec![2, 1, 1]),
            Family::CompleteMultipartite(vec![2, 2, 1]),
            Family::CliquePlusVertex {
                clique: 5,
                attached: 2,
            },
            Family::CliquePlusVertex {
                clique: 4,
                attached: 3,
            },
        ] {
            for v in run(&f) {
                assert_ne!(v.verdict, Outcome::Violated, "{v}");
            }
        }
    }

    #[test]
    fn corrupted_complete_graph_is_caught() {
        let mut g = make_family(&Family::Complete(4)).unwrap();
        g.remove_edge(0, 1);
        let r = InvariantReport::compute(&g, &Limits::default()).unwrap();
        let v = graph_verdicts(&g, &r, None, Some(&Family::Complete(4)));
        let fam = v
            .iter()
            .find(|v| v.theorem_id == "family.s_vertices")
            .unwrap();
        assert_eq!(fam.verdict, Outcome::Violated);
        assert!(fam.witness.as_ref().unwrap().contains("expected {}"));
    }

    #[test]
    fn chordless_cycles() {
        let c6 = make_family(&Family::Cycle(6)).unwrap();
        assert_eq!(chordless_long_cycles(&c6).len(), 1);
        let mut chorded = c6.clone();
        chorded.add_edge(0, 3).unwrap();
        assert!(chordless_long_cycles(&chorded).is_empty());
        assert!(chordless_long_cycles(&make_family(&Family::Complete(6)).unwrap()).is_empty());
    }

    #[test]
    fn bistar_detection() {
        let b = make_family(&Family::Bistar(1, 3)).unwrap();
        assert_eq!(bistar_centers(&b), Some((0, 1)));
        assert_eq!(
            bistar_centers(&make_family(&Family::Path(4)).unwrap()),
            Some((1, 2))
        );
        assert_eq!(
            bistar_centers(&make_family(&Family::Star(4)).unwrap()),
            None
        );
    }
}
