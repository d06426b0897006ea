//! Edge colorings with first-occurrence color normalization, and the
//! representing-graph construction (one lowest-index edge per color).

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A total edge coloring of a host graph.
///
/// Colors are abstract ids normalized to first-occurrence order: scanning the
/// host's edges by index, each newly seen color id exceeds all previously
/// seen ids by exactly one, so the id set is always `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    host: SimpleGraph,
    /// Color of the i-th host edge (ascending edge-index order).
    colors: Vec<u32>,
    color_count: u32,
}

impl EdgeColoring {
    /// Builds a coloring from per-edge colors given in ascending edge-index
    /// order of the host's edges. Input ids may be arbitrary; they are
    /// normalized on construction.
    pub fn new(host: SimpleGraph, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != host.edge_count() {
            return Err(Error::InvalidColoring(format!(
                "expected {} colors, got {}",
                host.edge_count(),
                colors.len()
            )));
        }
        let (colors, color_count) = normalize(&colors);
        Ok(EdgeColoring {
            host,
            colors,
            color_count,
        })
    }

    /// The all-edges-distinct coloring of `host`.
    pub fn rainbow(host: SimpleGraph) -> Self {
        let m = host.edge_count();
        EdgeColoring {
            host,
            colors: (0..m as u32).collect(),
            color_count: m as u32,
        }
    }

    /// The single-color coloring of `host` (no colors if edgeless).
    pub fn monochromatic(host: SimpleGraph) -> Self {
        let m = host.edge_count();
        EdgeColoring {
            host,
            colors: vec![0; m],
            color_count: if m == 0 { 0 } else { 1 },
        }
    }

    #[inline]
    pub fn host(&self) -> &SimpleGraph {
        &self.host
    }

    /// Number of distinct colors `k`; ids are exactly `0..k`.
    #[inline]
    pub fn color_count(&self) -> u32 {
        self.color_count
    }

    /// Color of the i-th host edge in ascending edge-index order.
    #[inline]
    pub fn color_at_position(&self, pos: usize) -> u32 {
        self.colors[pos]
    }

    /// Colors by host-edge position.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Color of edge `(u, v)`, which must be a host edge.
    pub fn color_of(&self, u: u32, v: u32) -> Option<u32> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if !self.host.has_edge(a, b) {
            return None;
        }
        let idx = crate::graph::edge_index(self.host.n(), a, b);
        let pos = self.position_of_index(idx);
        Some(self.colors[pos])
    }

    /// Rank of an edge index among the host's edges. For complete hosts this
    /// is the identity.
    pub fn position_of_index(&self, idx: usize) -> usize {
        if self.host.is_complete() {
            return idx;
        }
        self.host
            .edge_set()
            .iter()
            .position(|i| i == idx)
            .expect("edge index not in host")
    }

    /// The spanning subgraph with, for each color, the lowest-index edge of
    /// that color. Its edge count equals the number of colors, and any
    /// subset of its edges is rainbow under this coloring.
    pub fn representing_graph(&self) -> SimpleGraph {
        let n = self.host.n();
        let mut seen = vec![false; self.color_count as usize];
        let mut picked = Vec::with_capacity(self.color_count as usize);
        for (pos, idx) in self.host.edge_set().iter().enumerate() {
            let c = self.colors[pos] as usize;
            if !seen[c] {
                seen[c] = true;
                picked.push(crate::graph::edge_at(n, idx));
            }
        }
        SimpleGraph::from_edges(n, &picked).expect("host edges are valid")
    }

    /// Applies a vertex relabeling and renormalizes.
    pub fn permuted(&self, perm: &[u32]) -> Result<Self> {
        let host = self.host.permuted(perm)?;
        let n = host.n();
        let mut by_index: Vec<(usize, u32)> = self
            .host
            .edges()
            .zip(&self.colors)
            .map(|((u, v), &c)| {
                let (a, b) = {
                    let pu = perm[u as usize];
                    let pv = perm[v as usize];
                    (pu.min(pv), pu.max(pv))
                };
                (crate::graph::edge_index(n, a, b), c)
            })
            .collect();
        by_index.sort_unstable();
        EdgeColoring::new(host, by_index.into_iter().map(|(_, c)| c).collect())
    }
}

/// First-occurrence normalization: returns the renamed colors and the count.
fn normalize(colors: &[u32]) -> (Vec<u32>, u32) {
    let mut rename: Vec<Option<u32>> = Vec::new();
    let mut next = 0u32;
    let mut out = Vec::with_capacity(colors.len());
    for &c in colors {
        let c = c as usize;
        if c >= rename.len() {
            rename.resize(c + 1, None);
        }
        let id = *rename[c].get_or_insert_with(|| {
            let id = next;
            next += 1;
            id
        });
        out.push(id);
    }
    (out, next)
}
