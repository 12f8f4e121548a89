use crate::error::{Error, Limits, Result};
use crate::graph::SimpleGraph;
use crate::invariants::clique::{check_search_cap, maximum_clique};

/// An optimal proper coloring; `colors[v] < chi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub chi: usize,
    pub colors: Vec<usize>,
}

pub fn chromatic_number(g: &SimpleGraph, limits: &Limits) -> Result<usize> {
    optimal_coloring(g, limits).map(|c| c.chi)
}

/// Iterative deepening on `k` from `ω`: each round is a backtracking
/// search over vertices in descending-degree order. A greedy coloring in
/// the same order supplies the upper end.
pub fn optimal_coloring(g: &SimpleGraph, limits: &Limits) -> Result<Coloring> {
    check_search_cap(g, limits)?;
    let n = g.order();
    if n == 0 {
        return Ok(Coloring {
            chi: 0,
            colors: Vec::new(),
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let greedy = greedy_coloring(g, &order);
    let upper = greedy.iter().max().map_or(0, |c| c + 1);
    let lower = maximum_clique(g, limits)?.len();

    let mut search = Search {
        g,
        order: &order,
        colors: vec![usize::MAX; n],
        steps: 0,
        budget: limits.max_coloring_steps,
    };
    for k in lower..upper {
        if search.try_k(k)? {
            return Ok(Coloring {
                chi: k,
                colors: search.colors,
            });
        }
    }
    Ok(Coloring {
        chi: upper,
        colors: greedy,
    })
}

fn greedy_coloring(g: &SimpleGraph, order: &[usize]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.order()];
    for &v in order {
        let used: Vec<usize> = g.neighbors(v).ones().map(|w| colors[w]).collect();
        colors[v] = (0..)
            .find(|c| !used.contains(c))
            .expect("a free color exists");
    }
    colors
}

struct Search<'a> {
    g: &'a SimpleGraph,
    order: &'a [usize],
    colors: Vec<usize>,
    steps: u64,
    budget: u64,
}

impl Search<'_> {
    fn try_k(&mut self, k: usize) -> Result<bool> {
        self.colors.iter_mut().for_each(|c| *c = usize::MAX);
        self.extend(0, k, 0)
    }

    /// Colors `order[i..]`; `used` colors appear so far, and new colors are
    /// opened one at a time to skip permuted duplicates.
    fn extend(&mut self, i: usize, k: usize, used: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::resource(
                self.g.name(),
                format!("coloring search exceeded {} steps", self.budget),
            ));
        }
        let v = self.order[i];
        let mut blocked = vec![false; k];
        for w in self.g.neighbors(v).ones() {
            if self.colors[w] < k {
                blocked[self.colors[w]] = true;
            }
        }
        for c in 0..k.min(used + 1) {
            if blocked[c] {
                continue;
            }
            self.colors[v] = c;
            if self.extend(i + 1, k, used.max(c + 1))? {
                return Ok(true);
            }
        }
        self.colors[v] = usize::MAX;
        Ok(false)
    }
}

pub fn is_proper_coloring(g: &SimpleGraph, colors: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}
