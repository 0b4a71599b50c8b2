//! Dense undirected graphs over packed bit rows, with exact BFS distances.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::par::{map_range, Execution};

/// Hop distance, or the explicit unreachable value (ordered above every
/// finite distance).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("infinite"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u32(*d),
            Distance::Unreachable => s.serialize_str("infinite"),
        }
    }
}

/// Simple undirected graph: symmetric, irreflexive adjacency bit rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(order: usize) -> Self {
        Graph {
            rows: vec![BitSet::new(order); order],
            labels: None,
        }
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Graph::new(order);
        for u in 0..order {
            for v in u + 1..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(order: usize) -> Self {
        let mut g = Graph::new(order);
        for u in 1..order {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(order);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u != v {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::InvalidVertex {
                id: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "no loops");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, row) in self.rows.iter().enumerate() {
            out.extend(row.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement_graph(&self) -> Graph {
        let n = self.order();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(u, row)| {
                let mut c = row.complement();
                c.remove(u);
                c
            })
            .collect();
        debug_assert!(n == 0 || n == self.rows[0].capacity());
        Graph {
            rows,
            labels: self.labels.clone(),
        }
    }

    /// Subgraph induced by `subset`, renumbered in the order given.
    pub fn induced(&self, subset: &[usize]) -> Result<Graph> {
        for &v in subset {
            self.check_vertex(v)?;
        }
        let mut g = Graph::new(subset.len());
        for (i, &u) in subset.iter().enumerate() {
            for (j, &v) in subset.iter().enumerate().skip(i + 1) {
                if u != v && self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(subset.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    pub fn is_clique(&self, subset: &[usize]) -> Result<bool> {
        for &v in subset {
            self.check_vertex(v)?;
        }
        Ok(subset
            .iter()
            .enumerate()
            .all(|(i, &u)| subset[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v))))
    }

    pub fn is_independent(&self, subset: &[usize]) -> bool {
        subset
            .iter()
            .enumerate()
            .all(|(i, &u)| subset[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.rows[u].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS layer distances from `source`.
    pub fn bfs_row(&self, source: usize) -> Vec<Distance> {
        let n = self.order();
        let mut row = vec![Distance::Unreachable; n];
        row[source] = Distance::Finite(0);
        let mut visited = BitSet::new(n);
        visited.insert(source);
        let mut frontier = visited.clone();
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = BitSet::new(n);
            for u in frontier.iter() {
                next.union_with(&self.rows[u]);
            }
            next.difference_with(&visited);
            for v in next.iter() {
                row[v] = Distance::Finite(depth);
            }
            visited.union_with(&next);
            frontier = next;
        }
        row
    }

    pub fn all_pairs_distances(&self, exec: Execution) -> DistanceMatrix {
        let n = self.order();
        let rows = map_range(n, exec, |s| self.bfs_row(s));
        DistanceMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Maximum distance; `Unreachable` for a disconnected graph.
    pub fn diameter(&self, dist: &DistanceMatrix) -> Distance {
        dist.max()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Row-major all-pairs distance table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// Largest entry; `Finite(0)` for graphs with fewer than two vertices.
    pub fn max(&self) -> Distance {
        self.data.iter().copied().max().unwrap_or(Distance::Finite(0))
    }
}
