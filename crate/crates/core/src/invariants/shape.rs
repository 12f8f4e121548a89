use std::fmt;

use serde::Serialize;

use crate::graph::SimpleGraph;
use crate::invariants::metric::is_connected;

/// Shape class. Detection follows the variant order below and the first
/// match wins, so `K_2` is a star and `C_4` is `K_{2,2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag")]
pub enum Shape {
    #[serde(rename = "EMPTY")]
    Empty,
    #[serde(rename = "K1")]
    K1,
    /// `K_n`, `n ≥ 3`.
    #[serde(rename = "K_n")]
    Complete { n: usize },
    /// `K_{m,n}` with both parts of size at least 2.
    #[serde(rename = "K_{m,n}")]
    CompleteBipartite { parts: [Vec<usize>; 2] },
    /// `K_{1,n}`; for `K_2` the center is the first vertex.
    #[serde(rename = "STAR")]
    Star { center: usize, leaves: Vec<usize> },
    /// `P_n`, `n ≥ 4`, vertices in path order.
    #[serde(rename = "PATH_n")]
    Path { vertices: Vec<usize> },
    /// `C_n`, `n ≥ 5`, vertices in cycle order.
    #[serde(rename = "CYCLE_n")]
    Cycle { vertices: Vec<usize> },
    /// At least three parts.
    #[serde(rename = "COMPLETE_MULTIPARTITE")]
    CompleteMultipartite { parts: Vec<Vec<usize>> },
    /// Two non-adjacent hubs, a pendant on the inner hub, and `duals ≥ 2`
    /// further vertices adjacent to exactly the two hubs.
    #[serde(rename = "FIGURE1")]
    Figure1 {
        outer_hub: usize,
        inner_hub: usize,
        pendant: usize,
        duals: Vec<usize>,
    },
    #[serde(rename = "OTHER")]
    Other,
}

impl Shape {
    pub fn tag(&self) -> &'static str {
        match self {
            Shape::Empty => "EMPTY",
            Shape::K1 => "K1",
            Shape::Complete { .. } => "K_n",
            Shape::CompleteBipartite { .. } => "K_{m,n}",
            Shape::Star { .. } => "STAR",
            Shape::Path { .. } => "PATH_n",
            Shape::Cycle { .. } => "CYCLE_n",
            Shape::CompleteMultipartite { .. } => "COMPLETE_MULTIPARTITE",
            Shape::Figure1 { .. } => "FIGURE1",
            Shape::Other => "OTHER",
        }
    }

    pub fn is_star(&self) -> bool {
        matches!(self, Shape::Star { .. })
    }

    /// Complete in the wide sense: `K_1`, a `K_2` star, or `K_n`.
    pub fn is_complete(&self) -> bool {
        match self {
            Shape::K1 | Shape::Complete { .. } => true,
            Shape::Star { leaves, .. } => leaves.len() == 1,
            _ => false,
        }
    }

    pub fn is_k2(&self) -> bool {
        matches!(self, Shape::Star { leaves, .. } if leaves.len() == 1)
    }

    pub fn is_complete_bipartite(&self) -> bool {
        matches!(self, Shape::Star { .. } | Shape::CompleteBipartite { .. })
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Empty => f.write_str("EMPTY"),
            Shape::K1 => f.write_str("K_1"),
            Shape::Complete { n } => write!(f, "K_{n}"),
            Shape::CompleteBipartite { parts } => {
                let (a, b) = (parts[0].len(), parts[1].len());
                write!(f, "K_{{{},{}}}", a.min(b), a.max(b))
            }
            Shape::Star { leaves, .. } => write!(f, "K_{{1,{}}}", leaves.len()),
            Shape::Path { vertices } => write!(f, "P_{}", vertices.len()),
            Shape::Cycle { vertices } => write!(f, "C_{}", vertices.len()),
            Shape::CompleteMultipartite { parts } => {
                let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
                sizes.sort_unstable_by(|a, b| b.cmp(a));
                let s: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                write!(f, "K_{{{}}}", s.join(","))
            }
            Shape::Figure1 { duals, .. } => write!(f, "FIGURE1(duals={})", duals.len()),
            Shape::Other => f.write_str("OTHER"),
        }
    }
}

/// Parts of `g` if non-adjacency is an equivalence relation (i.e. `g` is
/// complete multipartite, counting edgeless graphs as one part).
pub fn multipartite_parts(g: &SimpleGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&u| u == v || !g.adjacent(u, v)).collect();
        for &u in &class {
            if part_of[u] != usize::MAX {
                return None;
            }
            part_of[u] = parts.len();
        }
        parts.push(class);
    }
    // no edge inside a part, and every edge to every other part
    for part in &parts {
        for &u in part {
            if g.degree(u) != n - part.len() || part.iter().any(|&w| g.adjacent(u, w)) {
                return None;
            }
        }
    }
    Some(parts)
}

pub fn classify_shape(g: &SimpleGraph) -> Shape {
    let n = g.order();
    match n {
        0 => return Shape::Empty,
        1 => return Shape::K1,
        _ => {}
    }
    if let Some(parts) = multipartite_parts(g) {
        match parts.len() {
            p if p == n && n >= 3 => return Shape::Complete { n },
            2 => {
                let (a, b) = (&parts[0], &parts[1]);
                if a.len() == 1 {
                    return Shape::Star {
                        center: a[0],
                        leaves: b.clone(),
                    };
                }
                if b.len() == 1 {
                    return Shape::Star {
                        center: b[0],
                        leaves: a.clone(),
                    };
                }
                return Shape::CompleteBipartite {
                    parts: [a.clone(), b.clone()],
                };
            }
            p if p >= 3 => return Shape::CompleteMultipartite { parts },
            _ => {}
        }
    }
    if !is_connected(g) {
        return Shape::Other;
    }
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if n >= 4 && g.edge_count() == n - 1 && degrees.iter().all(|&d| d <= 2) {
        let start = degrees
            .iter()
            .position(|&d| d == 1)
            .expect("a path has an end");
        return Shape::Path {
            vertices: walk(g, start),
        };
    }
    if n >= 5 && degrees.iter().all(|&d| d == 2) {
        return Shape::Cycle {
            vertices: walk(g, 0),
        };
    }
    figure1(g).unwrap_or(Shape::Other)
}

/// Follows a path or cycle from `start`, always stepping to the smallest
/// unvisited neighbor.
fn walk(g: &SimpleGraph, start: usize) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut out = vec![start];
    seen[start] = true;
    let mut v = start;
    while let Some(w) = g.neighbors(v).ones().find(|&w| !seen[w]) {
        seen[w] = true;
        out.push(w);
        v = w;
    }
    out
}

fn figure1(g: &SimpleGraph) -> Option<Shape> {
    let n = g.order();
    if n < 5 {
        return None;
    }
    let pendants: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let [pendant] = pendants[..] else {
        return None;
    };
    let inner_hub = g.neighbors(pendant).ones().next()?;
    let far: Vec<usize> = (0..n)
        .filter(|&v| v != pendant && v != inner_hub && !g.adjacent(v, inner_hub))
        .collect();
    let [outer_hub] = far[..] else {
        return None;
    };
    let duals: Vec<usize> = (0..n)
        .filter(|&v| v != pendant && v != inner_hub && v != outer_hub)
        .collect();
    let ok = duals.len() >= 2
        && duals
            .iter()
            .all(|&d| g.degree(d) == 2 && g.adjacent(d, inner_hub) && g.adjacent(d, outer_hub))
        && g.degree(outer_hub) == duals.len()
        && g.degree(inner_hub) == duals.len() + 1;
    ok.then_some(Shape::Figure1 {
        outer_hub,
        inner_hub,
        pendant,
        duals,
    })
}

/// Two-coloring by BFS; `None` when an odd cycle exists. The part holding
/// the lowest vertex of each component is listed first.
pub fn bipartition(g: &SimpleGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u).ones() {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    let a = (0..n).filter(|&v| side[v] == 0).collect();
    let b = (0..n).filter(|&v| side[v] == 1).collect();
    Some((a, b))
}

pub fn is_bipartite(g: &SimpleGraph) -> bool {
    bipartition(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn shape(f: Family) -> Shape {
        classify_shape(&make_family(&f).unwrap())
    }

    #[test]
    fn priority_order() {
        assert_eq!(shape(Family::Complete(1)), Shape::K1);
        assert_eq!(shape(Family::Complete(2)).to_string(), "K_{1,1}");
        assert_eq!(shape(Family::Path(2)).to_string(), "K_{1,1}");
        assert_eq!(shape(Family::Path(3)).to_string(), "K_{1,2}");
        assert_eq!(shape(Family::Cycle(3)).to_string(), "K_3");
        assert_eq!(shape(Family::Cycle(4)).to_string(), "K_{2,2}");
        assert_eq!(shape(Family::Cycle(5)).to_string(), "C_5");
        assert_eq!(shape(Family::Path(4)).to_string(), "P_4");
        assert_eq!(shape(Family::Star(4)).tag(), "STAR");
        assert_eq!(
            shape(Family::CompleteBipartite(3, 2)).to_string(),
            "K_{2,3}"
        );
        assert_eq!(
            shape(Family::CompleteMultipartite(vec![1, 2, 1])).to_string(),
            "K_{2,1,1}"
        );
        assert_eq!(
            shape(Family::CompleteMultipartite(vec![1, 1, 1])).tag(),
            "K_n"
        );
        assert_eq!(shape(Family::Bistar(2, 2)), Shape::Other);
        assert_eq!(classify_shape(&SimpleGraph::empty("e", 0)), Shape::Empty);
        assert_eq!(classify_shape(&SimpleGraph::empty("e", 3)), Shape::Other);
    }

    #[test]
    fn star_center_and_path_order() {
        let s = shape(Family::Star(3));
        assert_eq!(
            s,
            Shape::Star {
                center: 0,
                leaves: vec![1, 2, 3]
            }
        );
        let p = shape(Family::Path(5));
        assert_eq!(
            p,
            Shape::Path {
                vertices: vec![0, 1, 2, 3, 4]
            }
        );
    }

    fn figure(duals: usize) -> SimpleGraph {
        // 0 = outer hub, 1 = inner hub, 2 = pendant, 3.. = duals
        let mut g = SimpleGraph::empty("fig", duals + 3);
        g.add_edge(1, 2).unwrap();
        for d in 3..duals + 3 {
            g.add_edge(0, d).unwrap();
            g.add_edge(1, d).unwrap();
        }
        g
    }

    #[test]
    fn figure_one_pattern() {
        assert_eq!(classify_shape(&figure(1)).tag(), "PATH_n");
        for d in 2..6 {
            let s = classify_shape(&figure(d));
            assert_eq!(
                s,
                Shape::Figure1 {
                    outer_hub: 0,
                    inner_hub: 1,
                    pendant: 2,
                    duals: (3..d + 3).collect()
                }
            );
        }
        let mut g = figure(3);
        g.add_edge(0, 1).unwrap();
        assert_eq!(classify_shape(&g), Shape::Other);
    }

    #[test]
    fn bipartitions() {
        let p4 = make_family(&Family::Path(4)).unwrap();
        let (a, b) = bipartition(&p4).unwrap();
        assert_eq!((a.len(), b.len()), (2, 2));
        assert!(!is_bipartite(&make_family(&Family::Cycle(5)).unwrap()));
        assert!(is_bipartite(&SimpleGraph::empty("e", 0)));
    }
}
