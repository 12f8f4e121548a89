use fixedbitset::FixedBitSet;

use crate::error::{Error, Limits, Result};
use crate::graph::SimpleGraph;

pub(crate) fn check_search_cap(g: &SimpleGraph, limits: &Limits) -> Result<()> {
    if g.order() > limits.max_search_vertices {
        return Err(Error::resource(
            g.name(),
            format!(
                "{} vertices exceed the exact-search cap of {}",
                g.order(),
                limits.max_search_vertices
            ),
        ));
    }
    Ok(())
}

/// A maximum clique (sorted), found by branch and bound with a greedy
/// coloring bound. Empty for the empty graph.
pub fn maximum_clique(g: &SimpleGraph, limits: &Limits) -> Result<Vec<usize>> {
    check_search_cap(g, limits)?;
    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(g, &mut current, all, &mut best);
    best.sort_unstable();
    Ok(best)
}

pub fn clique_number(g: &SimpleGraph, limits: &Limits) -> Result<usize> {
    maximum_clique(g, limits).map(|c| c.len())
}

/// Greedy sequential coloring of `cand`; returns vertices with their color
/// numbers (1-based, nondecreasing).
fn color_bound(g: &SimpleGraph, cand: &FixedBitSet) -> Vec<(usize, usize)> {
    let mut uncolored = cand.clone();
    let mut out = Vec::with_capacity(cand.count_ones(..));
    let mut color = 0;
    while uncolored.count_ones(..) > 0 {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.ones().next() {
            q.set(v, false);
            q.difference_with(g.neighbors(v));
            uncolored.set(v, false);
            out.push((v, color));
        }
    }
    out
}

fn expand(g: &SimpleGraph, current: &mut Vec<usize>, mut cand: FixedBitSet, best: &mut Vec<usize>) {
    let order = color_bound(g, &cand);
    for &(v, color) in order.iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.neighbors(v));
        if next.count_ones(..) == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        cand.set(v, false);
    }
}

/// All maximal cliques (each sorted, list sorted), by Bron–Kerbosch with
/// pivoting. Fails once more than `limits.max_cliques` are found.
pub fn maximal_cliques(g: &SimpleGraph, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    check_search_cap(g, limits)?;
    let n = g.order();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, p, x, &mut out, limits.max_cliques)?;
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    g: &SimpleGraph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    if p.count_ones(..) == 0 {
        if x.count_ones(..) == 0 {
            out.push(r.clone());
            if out.len() > cap {
                return Err(Error::resource(
                    g.name(),
                    format!("more than {cap} maximal cliques"),
                ));
            }
        }
        return Ok(());
    }
    let pivot = p
        .union(&x)
        .max_by_key(|&u| g.neighbors(u).intersection(&p).count())
        .expect("p is nonempty");
    let mut todo = p.clone();
    todo.difference_with(g.neighbors(pivot));
    for v in todo.ones() {
        let mut np = p.clone();
        np.intersect_with(g.neighbors(v));
        let mut nx = x.clone();
        nx.intersect_with(g.neighbors(v));
        r.push(v);
        bron_kerbosch(g, r, np, nx, out, cap)?;
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
    Ok(())
}

pub fn is_clique(g: &SimpleGraph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(k, &u)| vertices[k + 1..].iter().all(|&v| g.adjacent(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn omega(f: Family) -> usize {
        clique_number(&make_family(&f).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn family_clique_numbers() {
        assert_eq!(omega(Family::Complete(6)), 6);
        assert_eq!(omega(Family::CompleteBipartite(3, 4)), 2);
        assert_eq!(omega(Family::Cycle(5)), 2);
        assert_eq!(omega(Family::Cycle(3)), 3);
        assert_eq!(omega(Family::CompleteMultipartite(vec![2, 3, 1, 2])), 4);
        assert_eq!(omega(Family::Path(1)), 1);
        assert_eq!(
            clique_number(&SimpleGraph::empty("e", 0), &Limits::default()).unwrap(),
            0
        );
    }

    #[test]
    fn maximal_cliques_of_a_bistar() {
        let g = make_family(&Family::Bistar(2, 1)).unwrap();
        let cliques = maximal_cliques(&g, &Limits::default()).unwrap();
        assert_eq!(
            cliques,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 4]]
        );
    }

    #[test]
    fn caps() {
        let g = make_family(&Family::Complete(10)).unwrap();
        let tight = Limits {
            max_search_vertices: 9,
            ..Limits::default()
        };
        assert!(matches!(
            clique_number(&g, &tight),
            Err(Error::Resource { .. })
        ));
        let few = Limits {
            max_cliques: 3,
            ..Limits::default()
        };
        let c6 = make_family(&Family::Cycle(6)).unwrap();
        assert!(maximal_cliques(&c6, &few).is_err());
    }
}
