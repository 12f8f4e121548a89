use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diameter {
    /// No vertices.
    Undefined,
    /// Largest distance, with a pair attaining it.
    Finite {
        value: usize,
        witness: (usize, usize),
    },
    /// Disconnected, with an unreachable pair.
    Infinite { witness: (usize, usize) },
}

impl Diameter {
    pub fn value(&self) -> Option<usize> {
        match self {
            Diameter::Finite { value, .. } => Some(*value),
            _ => None,
        }
    }

    /// `diam ≤ k`; an undefined diameter counts as satisfying every bound.
    pub fn at_most(&self, k: usize) -> bool {
        match self {
            Diameter::Undefined => true,
            Diameter::Finite { value, .. } => *value <= k,
            Diameter::Infinite { .. } => false,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Undefined => f.write_str("undefined"),
            Diameter::Finite { value, .. } => write!(f, "{value}"),
            Diameter::Infinite { .. } => f.write_str("infinite"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite { value, .. } => s.serialize_u64(*value as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Girth {
    /// Length of a shortest cycle, with one such cycle.
    Finite {
        value: usize,
        cycle: Vec<usize>,
    },
    Infinite,
}

impl Girth {
    pub fn value(&self) -> Option<usize> {
        match self {
            Girth::Finite { value, .. } => Some(*value),
            Girth::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Girth::Infinite)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite { value, .. } => write!(f, "{value}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite { value, .. } => s.serialize_u64(*value as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// BFS distances from `source`; `None` for unreachable vertices.
pub fn distances_from(g: &SimpleGraph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or(0) + 1;
        for w in g.neighbors(u).ones() {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// A shortest path from `from` to `to`, if one exists.
pub fn shortest_path(g: &SimpleGraph, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.order()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut v = to;
            while v != from {
                v = parent[v];
                path.push(v);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).ones() {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// True for the empty graph.
pub fn is_connected(g: &SimpleGraph) -> bool {
    g.is_empty() || distances_from(g, 0).iter().all(Option::is_some)
}

/// All-pairs BFS; the witness is the first pair in index order attaining
/// the maximum (or the first unreachable pair).
pub fn diameter(g: &SimpleGraph) -> Diameter {
    if g.is_empty() {
        return Diameter::Undefined;
    }
    let mut best = (0, (0, 0));
    for u in 0..g.order() {
        let dist = distances_from(g, u);
        for (v, d) in dist.iter().enumerate().skip(u + 1) {
            match d {
                None => return Diameter::Infinite { witness: (u, v) },
                Some(d) if *d > best.0 => best = (*d, (u, v)),
                _ => {}
            }
        }
    }
    Diameter::Finite {
        value: best.0,
        witness: best.1,
    }
}

/// BFS from every vertex; a non-tree edge `u–w` closes a cycle of length
/// `d(u) + d(w) + 1`, and the minimum over all roots is exact.
pub fn girth(g: &SimpleGraph) -> Girth {
    let n = g.order();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|(b, _)| 2 * dist[u] >= *b) {
                break;
            }
            for w in g.neighbors(u).ones() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] && parent[w] != u {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().is_none_or(|(b, _)| len < *b) {
                        best = Some((len, close_cycle(&parent, root, u, w)));
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|(b, _)| *b == 3) {
            break;
        }
    }
    match best {
        Some((value, cycle)) => Girth::Finite { value, cycle },
        None => Girth::Infinite,
    }
}

fn close_cycle(parent: &[usize], root: usize, u: usize, w: usize) -> Vec<usize> {
    let climb = |mut v: usize| {
        let mut path = vec![v];
        while v != root {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let mut cycle = climb(u);
    cycle.reverse();
    let back = climb(w);
    cycle.extend(back[..back.len() - 1].iter().copied());
    cycle
}
