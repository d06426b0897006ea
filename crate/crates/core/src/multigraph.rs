//! Loopless multigraphs and the utilities behind the packing-to-ring
//! construction: edge multiplicity and collapsing to a simple graph.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use std::collections::BTreeMap;

/// A loopless multigraph: unordered pairs with multiplicities `>= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: BTreeMap<(u32, u32), u32>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: BTreeMap::new(),
        }
    }

    /// Adds one copy of edge `(a, b)`.
    pub fn add_edge(&mut self, a: u32, b: u32) -> Result<()> {
        if a == b {
            return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
        }
        if a.max(b) as usize >= self.n {
            return Err(Error::InvalidGraph(format!(
                "endpoint {} out of range for n={}",
                a.max(b),
                self.n
            )));
        }
        let key = (a.min(b), a.max(b));
        *self.edges.entry(key).or_insert(0) += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total edge count, multiplicities included.
    pub fn edge_count(&self) -> usize {
        self.edges.values().map(|&m| m as usize).sum()
    }

    /// Number of distinct vertex pairs carrying at least one edge.
    pub fn distinct_pair_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity(&self, a: u32, b: u32) -> u32 {
        let key = (a.min(b), a.max(b));
        self.edges.get(&key).copied().unwrap_or(0)
    }

    /// Pairs with their multiplicities, ascending by pair.
    pub fn pairs(&self) -> impl Iterator<Item = ((u32, u32), u32)> + '_ {
        self.edges.iter().map(|(&p, &m)| (p, m))
    }
}

/// Maximum number of parallel edges between any vertex pair; 0 if edgeless.
pub fn edge_multiplicity(f: &Multigraph) -> u32 {
    f.edges.values().copied().max().unwrap_or(0)
}

/// Keeps one edge per pair that had multiplicity `>= 1`.
pub fn simplify_multigraph(f: &Multigraph) -> SimpleGraph {
    let pairs: Vec<(u32, u32)> = f.edges.keys().copied().collect();
    // Pairs come from a validated multigraph, so this cannot fail.
    SimpleGraph::from_edges(f.n, &pairs).expect("multigraph pairs are valid simple edges")
}
