//! Brute-force oracles shared by the integration tests. Each one follows
//! a definition directly and shares no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use annigraph::{CorpusSpec, FiniteRing, SimpleGraph};

pub fn default_corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/default.json")
}

pub fn load_default_corpus() -> CorpusSpec {
    let text = std::fs::read_to_string(default_corpus_path()).expect("corpus/default.json");
    CorpusSpec::from_json(&text).expect("default corpus parses")
}

pub fn divisor_count(n: u64) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}

/// Vertices `a` with distinct `x, b, y ≠ a`, edges `a–x`, `a–b`, `b–y`
/// and no edge `x–y`.
pub fn brute_s_vertices(g: &SimpleGraph) -> Vec<usize> {
    let n = g.order();
    (0..n)
        .filter(|&a| {
            (0..n).any(|x| {
                (0..n).any(|b| {
                    (0..n).any(|y| {
                        let distinct: BTreeSet<usize> = [a, x, b, y].into();
                        distinct.len() == 4
                            && g.adjacent(a, x)
                            && g.adjacent(a, b)
                            && g.adjacent(b, y)
                            && !g.adjacent(x, y)
                    })
                })
            })
        })
        .collect()
}

/// Does some vertex of `g` witness `a` as an S-vertex with `w` among `x, b, y`?
pub fn has_witness_through(g: &SimpleGraph, a: usize, w: usize) -> bool {
    let n = g.order();
    (0..n).any(|x| {
        (0..n).any(|b| {
            (0..n).any(|y| {
                let distinct: BTreeSet<usize> = [a, x, b, y].into();
                distinct.len() == 4
                    && [x, b, y].contains(&w)
                    && g.adjacent(a, x)
                    && g.adjacent(a, b)
                    && g.adjacent(b, y)
                    && !g.adjacent(x, y)
            })
        })
    })
}

/// Smallest `k` admitting a proper coloring, by trying all `k^n` maps.
pub fn brute_chromatic(g: &SimpleGraph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(a, b)| colors[a] != colors[b]) {
                return k;
            }
            // odometer increment
            let mut i = 0;
            while i < n && colors[i] + 1 == k {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}

pub fn brute_clique_number(g: &SimpleGraph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|a| {
                (a + 1..n).all(|b| mask & (1 << a) == 0 || mask & (1 << b) == 0 || g.adjacent(a, b))
            })
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// `{r : r·i = 0 for every i ∈ members}`.
pub fn brute_annihilator(ring: &FiniteRing, members: &[usize]) -> BTreeSet<usize> {
    ring.elements()
        .filter(|&r| members.iter().all(|&i| ring.mul(r, i) == ring.zero()))
        .collect()
}

pub fn brute_nilpotents(ring: &FiniteRing) -> BTreeSet<usize> {
    ring.elements()
        .filter(|&a| {
            let mut p = a;
            for _ in 0..ring.order() {
                if p == ring.zero() {
                    return true;
                }
                p = ring.mul(p, a);
            }
            p == ring.zero()
        })
        .collect()
}

/// Every ideal generated by a single element, as sorted member lists.
pub fn brute_principal_ideals(ring: &FiniteRing) -> BTreeSet<Vec<usize>> {
    ring.elements()
        .map(|a| {
            let set: BTreeSet<usize> = ring.elements().map(|r| ring.mul(r, a)).collect();
            set.into_iter().collect()
        })
        .collect()
}

/// Distances by Floyd–Warshall; `None` for unreachable pairs.
pub fn all_pairs(g: &SimpleGraph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
        for j in g.neighbors(i).ones() {
            d[i][j] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}
