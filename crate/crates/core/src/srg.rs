//! Mutually maximally distant (MMD) pairs, the strong resolving graph, and
//! brute-force strong/plain metric dimension oracles.
//!
//! Cross-component pairs: `Unreachable` compares above every finite
//! distance, so two vertices in different components are always MMD, while
//! a finite `d(u, v)` loses against any unreachable neighbor distance.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Distance, DistanceMatrix, Graph};
use crate::par::{map_range, Execution};

pub const DEFAULT_ORACLE_CAP: usize = 12;

/// `u` and `v` are MMD iff no neighbor of either is farther from the other
/// than `d(u, v)`.
pub fn is_mmd(dist: &DistanceMatrix, g: &Graph, u: usize, v: usize) -> bool {
    debug_assert_ne!(u, v);
    let duv = dist.get(u, v);
    g.neighbors(u).iter().all(|w| dist.get(v, w) <= duv)
        && g.neighbors(v).iter().all(|w| dist.get(u, w) <= duv)
}

/// `G_SR` alongside its base graph, on the same vertex indices.
#[derive(Debug, Clone)]
pub struct SrgGraph {
    pub base: Graph,
    pub srg: Graph,
    /// Vertices with at least one MMD partner.
    pub mmd_support: Vec<usize>,
}

/// For one vertex `v`, `beyond[k]` holds every vertex farther than `k`
/// from `v` (unreachable ones included).
struct FarSets {
    beyond: Vec<BitSet>,
}

impl FarSets {
    fn new(row: &[Distance]) -> Self {
        let n = row.len();
        let max = row.iter().filter_map(|d| d.finite()).max().unwrap_or(0) as usize;
        let mut beyond = vec![BitSet::new(n); max + 1];
        for (w, d) in row.iter().enumerate() {
            let reach = d.finite().map_or(max + 1, |k| k as usize);
            for set in beyond.iter_mut().take(reach) {
                set.insert(w);
            }
        }
        FarSets { beyond }
    }

    /// Whether some member of `nbrs` is farther than `d` from this vertex.
    fn exceeds(&self, nbrs: &BitSet, d: Distance) -> bool {
        match d {
            Distance::Unreachable => false,
            Distance::Finite(k) => self
                .beyond
                .get(k as usize)
                .is_some_and(|far| far.intersects(nbrs)),
        }
    }
}

/// Builds `G_SR` with one bitset test per ordered pair instead of a scan
/// over neighbors; agrees with [`is_mmd`] pair by pair.
pub fn build_srg(g: &Graph, dist: &DistanceMatrix, exec: Execution) -> SrgGraph {
    let n = g.order();
    let far: Vec<FarSets> = map_range(n, exec, |v| FarSets::new(dist.row(v)));
    let partners: Vec<Vec<usize>> = map_range(n, exec, |u| {
        (u + 1..n)
            .filter(|&v| {
                let d = dist.get(u, v);
                !far[v].exceeds(g.neighbors(u), d) && !far[u].exceeds(g.neighbors(v), d)
            })
            .collect()
    });
    let mut srg = Graph::new(n);
    for (u, vs) in partners.iter().enumerate() {
        for &v in vs {
            srg.add_edge(u, v);
        }
    }
    if let Some(labels) = g.labels() {
        srg = srg.with_labels(labels.to_vec());
    }
    let mmd_support = (0..n).filter(|&v| srg.degree(v) > 0).collect();
    SrgGraph {
        base: g.clone(),
        srg,
        mmd_support,
    }
}

/// Whether `w` strongly resolves `u` and `v`: one of them lies on a
/// shortest `w`-path to the other. `None` when any of the three pairwise
/// distances is unreachable.
pub fn strongly_resolves(dist: &DistanceMatrix, w: usize, u: usize, v: usize) -> Option<bool> {
    let wu = dist.get(w, u).finite()?;
    let wv = dist.get(w, v).finite()?;
    let uv = dist.get(u, v).finite()?;
    Some(wu == wv + uv || wv == wu + uv)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongBasis {
    pub size: usize,
    pub witness: Vec<usize>,
}

fn check_oracle_input(g: &Graph, cap: usize) -> Result<DistanceMatrix> {
    let n = g.order();
    if n > cap || n > 64 {
        return Err(Error::OracleCap {
            vertices: n,
            cap: cap.min(64),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.all_pairs_distances(Execution::Sequential))
}

/// Exhaustive minimum strong resolving set; the witness is the
/// lexicographically smallest among the minimum ones.
pub fn brute_min_strong_resolving(g: &Graph, cap: usize) -> Result<StrongBasis> {
    let dist = check_oracle_input(g, cap)?;
    let n = g.order();
    // for each pair, the mask of vertices resolving it
    let masks: Vec<u64> = (0..n)
        .tuple_combinations()
        .map(|(u, v)| {
            (0..n)
                .filter(|&w| strongly_resolves(&dist, w, u, v) == Some(true))
                .fold(0u64, |m, w| m | 1 << w)
        })
        .collect();
    for k in 0..=n {
        for set in (0..n).combinations(k) {
            let chosen = set.iter().fold(0u64, |m, &w| m | 1 << w);
            if masks.iter().all(|&m| m & chosen != 0) {
                return Ok(StrongBasis {
                    size: k,
                    witness: set,
                });
            }
        }
    }
    unreachable!("the full vertex set strongly resolves every pair")
}

/// Exhaustive metric dimension: smallest `S` giving every vertex a distinct
/// distance vector to `S`.
pub fn brute_metric_dimension(g: &Graph, cap: usize) -> Result<usize> {
    let dist = check_oracle_input(g, cap)?;
    let n = g.order();
    for k in 0..=n {
        let found = (0..n).combinations(k).any(|set| {
            let mut seen = HashSet::with_capacity(n);
            (0..n).all(|v| {
                let repr: Vec<Distance> = set.iter().map(|&s| dist.get(v, s)).collect();
                seen.insert(repr)
            })
        });
        if found {
            return Ok(k);
        }
    }
    unreachable!("the full vertex set resolves every vertex")
}
