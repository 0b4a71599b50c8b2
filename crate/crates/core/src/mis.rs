//! Exact maximum independent set / minimum vertex cover by branch and reduce.
//!
//! Each connected component is solved separately. At every search node the
//! candidate set is reduced (isolated and pendant vertices, closed-neighborhood
//! domination), a clique is finished directly, and the remaining subproblem is
//! bounded by a greedy clique cover before branching on a maximum-degree
//! vertex (lowest index on ties), include-branch first.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub node_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolverStats {
    pub nodes: u64,
    pub reductions: u64,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    /// Vertex cover number α.
    pub cover_size: usize,
    /// Independence number β.
    pub independence: usize,
    pub witness_cover: Vec<usize>,
    pub witness_independent: Vec<usize>,
    pub stats: SolverStats,
}

pub fn max_independent_set(g: &Graph, config: &SolverConfig) -> Result<CoverResult> {
    let n = g.order();
    let mut search = Search {
        g,
        best: Vec::new(),
        stats: SolverStats::default(),
        budget: config.node_budget,
    };
    let mut independent = Vec::new();
    for comp in g.components() {
        search.stats.components += 1;
        let cand = BitSet::from_iter(n, comp.iter().copied());
        search.best = greedy(g, &cand);
        search.branch(cand, Vec::new())?;
        independent.append(&mut search.best);
    }
    independent.sort_unstable();
    let in_set = BitSet::from_iter(n, independent.iter().copied());
    let cover: Vec<usize> = (0..n).filter(|&v| !in_set.contains(v)).collect();
    Ok(CoverResult {
        cover_size: cover.len(),
        independence: independent.len(),
        witness_cover: cover,
        witness_independent: independent,
        stats: search.stats,
    })
}

/// Re-checks both witnesses against the adjacency and Gallai's identity.
pub fn verify_witness(g: &Graph, result: &CoverResult) -> bool {
    let n = g.order();
    let valid_ids = |s: &[usize]| s.iter().all(|&v| v < n) && s.windows(2).all(|w| w[0] < w[1]);
    if !valid_ids(&result.witness_cover) || !valid_ids(&result.witness_independent) {
        return false;
    }
    let cover = BitSet::from_iter(n, result.witness_cover.iter().copied());
    let covers_all = g
        .edges()
        .iter()
        .all(|&(u, v)| cover.contains(u) || cover.contains(v));
    covers_all
        && g.is_independent(&result.witness_independent)
        && result.witness_cover.len() == result.cover_size
        && result.witness_independent.len() == result.independence
        && result.cover_size + result.independence == n
}

/// Minimum-degree greedy independent set, used as the initial incumbent.
fn greedy(g: &Graph, cand: &BitSet) -> Vec<usize> {
    let mut cand = cand.clone();
    let mut out = Vec::new();
    while let Some(v) = cand
        .iter()
        .min_by_key(|&v| (g.neighbors(v).intersection_count(&cand), v))
    {
        out.push(v);
        cand.remove(v);
        cand.difference_with(g.neighbors(v));
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    stats: SolverStats,
    budget: u64,
}

impl Search<'_> {
    fn degree(&self, v: usize, cand: &BitSet) -> usize {
        self.g.neighbors(v).intersection_count(cand)
    }

    fn branch(&mut self, mut cand: BitSet, mut chosen: Vec<usize>) -> Result<()> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget {
            return Err(Error::NodeBudget {
                budget: self.budget,
                stats: self.stats,
            });
        }
        self.reduce(&mut cand, &mut chosen);

        if cand.is_empty() {
            self.offer(chosen);
            return Ok(());
        }
        if self.is_clique(&cand) {
            chosen.push(cand.first().expect("non-empty"));
            self.offer(chosen);
            return Ok(());
        }
        if chosen.len() + self.clique_cover_bound(&cand) <= self.best.len() {
            return Ok(());
        }

        let pivot = cand
            .iter()
            .max_by_key(|&v| (self.degree(v, &cand), std::cmp::Reverse(v)))
            .expect("non-empty");

        let mut with = cand.clone();
        with.remove(pivot);
        with.difference_with(self.g.neighbors(pivot));
        let mut chosen_with = chosen.clone();
        chosen_with.push(pivot);
        self.branch(with, chosen_with)?;

        cand.remove(pivot);
        self.branch(cand, chosen)
    }

    fn offer(&mut self, chosen: Vec<usize>) {
        if chosen.len() > self.best.len() {
            self.best = chosen;
        }
    }

    fn is_clique(&self, cand: &BitSet) -> bool {
        let k = cand.count();
        cand.iter().all(|v| self.degree(v, cand) + 1 == k)
    }

    /// Safe reductions, applied to a fixpoint.
    fn reduce(&mut self, cand: &mut BitSet, chosen: &mut Vec<usize>) {
        loop {
            let mut changed = false;
            let order: Vec<usize> = cand.iter().collect();
            for v in order {
                if !cand.contains(v) {
                    continue;
                }
                let nbrs = self.g.neighbors(v).intersection(cand);
                match nbrs.count() {
                    0 => {
                        chosen.push(v);
                        cand.remove(v);
                    }
                    1 => {
                        chosen.push(v);
                        cand.remove(v);
                        cand.remove(nbrs.first().expect("one neighbor"));
                    }
                    _ => {
                        // v dominates a neighbor u when N[u] ⊆ N[v]; then v can go
                        let mut closed_v = nbrs.clone();
                        closed_v.insert(v);
                        let dominated = nbrs.iter().any(|u| {
                            let mut closed_u = self.g.neighbors(u).intersection(cand);
                            closed_u.insert(u);
                            closed_u.is_subset(&closed_v)
                        });
                        if !dominated {
                            continue;
                        }
                        cand.remove(v);
                    }
                }
                self.stats.reductions += 1;
                changed = true;
            }
            if !changed {
                return;
            }
        }
    }

    /// Greedy partition of `cand` into cliques, lowest degree first; any
    /// independent set takes at most one vertex per clique.
    fn clique_cover_bound(&self, cand: &BitSet) -> usize {
        let mut order: Vec<(usize, usize)> = cand.iter().map(|v| (self.degree(v, cand), v)).collect();
        order.sort_unstable();
        let mut commons: Vec<BitSet> = Vec::new();
        for (_, v) in order {
            match commons.iter_mut().find(|c| c.contains(v)) {
                Some(common) => common.intersect_with(self.g.neighbors(v)),
                None => commons.push(self.g.neighbors(v).intersection(cand)),
            }
        }
        commons.len()
    }
}
