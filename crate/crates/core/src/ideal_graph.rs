//! The intersection graph `G(R)`: non-trivial ideals, adjacent iff their
//! intersection is non-zero.

use crate::error::Result;
use crate::graph::Graph;
use crate::ring::{IdealVector, RingSpec};

#[derive(Debug, Clone)]
pub struct IntersectionGraph {
    pub spec: RingSpec,
    pub vertices: Vec<IdealVector>,
    pub graph: Graph,
}

impl IntersectionGraph {
    pub fn build(spec: &RingSpec, vertex_budget: usize) -> Result<Self> {
        let vertices = spec.enumerate_vertices(vertex_budget)?;
        let mut graph = Graph::new(vertices.len());
        for (i, a) in vertices.iter().enumerate() {
            for (j, b) in vertices.iter().enumerate().skip(i + 1) {
                if a.meets(b) {
                    graph.add_edge(i, j);
                }
            }
        }
        let labels = vertices.iter().map(IdealVector::to_string).collect();
        Ok(IntersectionGraph {
            spec: spec.clone(),
            vertices,
            graph: graph.with_labels(labels),
        })
    }

    pub fn index_of(&self, ideal: &IdealVector) -> Option<usize> {
        self.vertices.binary_search(ideal).ok()
    }

    /// Vertex indices whose ideals have no zero component (the stratum `A_0`).
    pub fn full_support(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| self.vertices[i].nzc() == 0)
            .collect()
    }
}
