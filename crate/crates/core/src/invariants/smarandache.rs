use serde::Serialize;

use crate::graph::SimpleGraph;

/// `a` is an S-vertex via distinct `x, b, y` (all ≠ a) with edges
/// `a–x`, `a–b`, `b–y` and no edge `x–y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SWitness {
    pub vertex: usize,
    pub x: usize,
    pub b: usize,
    pub y: usize,
}

/// First witness for `a`, searching `b ∈ N(a)`, then `x ∈ N(a)`, then
/// `y ∈ N(b) \ N(x)`.
pub fn s_witness(g: &SimpleGraph, a: usize) -> Option<SWitness> {
    let na = g.neighbors(a);
    for b in na.ones() {
        for x in na.ones().filter(|&x| x != b) {
            let mut ys = g.neighbors(b).clone();
            ys.difference_with(g.neighbors(x));
            ys.set(a, false);
            ys.set(x, false);
            if let Some(y) = ys.ones().next() {
                return Some(SWitness { vertex: a, x, b, y });
            }
        }
    }
    None
}

/// All S-vertices with their witnesses, in vertex order.
pub fn smarandache_vertices(g: &SimpleGraph) -> Vec<SWitness> {
    (0..g.order()).filter_map(|a| s_witness(g, a)).collect()
}

pub fn is_valid_witness(g: &SimpleGraph, w: &SWitness) -> bool {
    let SWitness { vertex: a, x, b, y } = *w;
    let distinct = [a, x, b, y]
        .iter()
        .enumerate()
        .all(|(i, p)| [a, x, b, y][i + 1..].iter().all(|q| q != p));
    distinct && g.adjacent(a, x) && g.adjacent(a, b) && g.adjacent(b, y) && !g.adjacent(x, y)
}
