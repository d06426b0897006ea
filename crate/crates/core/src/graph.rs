//! Labeled simple graphs on `0..n` with a lexicographic edge-index bitset.
//!
//! Every host, subgraph and witness in this crate is a [`SimpleGraph`]: a
//! vertex count plus a set of unordered pairs stored as a bitset keyed by the
//! edge index `u*n - u*(u+1)/2 + (v - u - 1)` for `u < v`. The index is a
//! bijection onto `0..n*(n-1)/2` for the complete graph, which makes edge
//! sets, colorings and witnesses directly comparable.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Hard cap on vertex counts. Adjacency is kept as one `u64` mask per vertex
/// and the tool is meant for desk-scale instances anyway.
pub const MAX_VERTICES: usize = 62;

/// Returns the lexicographic index of edge `(u, v)` with `u < v` in a graph
/// on `n` vertices.
#[inline]
pub fn edge_index(n: usize, u: u32, v: u32) -> usize {
    debug_assert!(u < v && (v as usize) < n);
    let u = u as usize;
    let v = v as usize;
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Inverse of [`edge_index`]: the `idx`-th unordered pair of `0..n`.
#[inline]
pub fn edge_at(n: usize, idx: usize) -> (u32, u32) {
    debug_assert!(idx < n * (n - 1) / 2);
    let mut u = 0usize;
    let mut base = 0usize;
    loop {
        let row = n - u - 1;
        if idx < base + row {
            let v = u + 1 + (idx - base);
            return (u as u32, v as u32);
        }
        base += row;
        u += 1;
    }
}

/// Number of unordered pairs of `0..n`.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

// ============================================================================
// Edge bitset
// ============================================================================

/// A set of edge indices backed by `u64` words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeSet {
    bits: Vec<u64>,
    len: usize,
}

impl EdgeSet {
    /// Empty set with capacity for `capacity` indices.
    pub fn new(capacity: usize) -> Self {
        EdgeSet {
            bits: vec![0; capacity.div_ceil(64)],
            len: 0,
        }
    }

    #[inline]
    pub fn contains(&self, idx: usize) -> bool {
        (self.bits[idx / 64] >> (idx % 64)) & 1 == 1
    }

    /// Inserts `idx`; returns `false` if it was already present.
    #[inline]
    pub fn insert(&mut self, idx: usize) -> bool {
        let w = &mut self.bits[idx / 64];
        let mask = 1u64 << (idx % 64);
        if *w & mask != 0 {
            return false;
        }
        *w |= mask;
        self.len += 1;
        true
    }

    /// Removes `idx`; returns `false` if it was absent.
    #[inline]
    pub fn remove(&mut self, idx: usize) -> bool {
        let w = &mut self.bits[idx / 64];
        let mask = 1u64 << (idx % 64);
        if *w & mask == 0 {
            return false;
        }
        *w &= !mask;
        self.len -= 1;
        true
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// True if the two sets share at least one index.
    pub fn intersects(&self, other: &EdgeSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    /// True if `self` is a subset of `other`.
    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Ascending iterator over the contained indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &bits)| {
            let mut rest = bits;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }
}

// ============================================================================
// SimpleGraph
// ============================================================================

/// A labeled simple graph on vertices `0..n`.
///
/// Immutable after construction; all operations on it are pure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: EdgeSet,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                limit: MAX_VERTICES,
            });
        }
        Ok(SimpleGraph {
            n,
            edges: EdgeSet::new(pair_count(n)),
            adj: vec![0; n],
        })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Builds a graph from an explicit edge list. Endpoints may come in any
    /// order; loops and duplicates are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v as usize >= n {
                return Err(Error::InvalidGraph(format!(
                    "endpoint {v} out of range for n={n}"
                )));
            }
            if !g.try_insert_edge(u, v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(g)
    }

    /// Builds a graph from a set of edge indices.
    pub fn from_edge_indices(n: usize, indices: &EdgeSet) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for idx in indices.iter() {
            let (u, v) = edge_at(n, idx);
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: u32, v: u32) {
        let inserted = self.try_insert_edge(u, v);
        debug_assert!(inserted);
    }

    fn try_insert_edge(&mut self, u: u32, v: u32) -> bool {
        let idx = edge_index(self.n, u, v);
        if !self.edges.insert(idx) {
            return false;
        }
        self.adj[u as usize] |= 1 << v;
        self.adj[v as usize] |= 1 << u;
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        debug_assert!(u != v);
        (self.adj[u as usize] >> v) & 1 == 1
    }

    /// Neighbor mask of `v` (bit `i` set iff `i` is adjacent to `v`).
    #[inline]
    pub fn neighbors(&self, v: u32) -> u64 {
        self.adj[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].count_ones() as usize
    }

    /// The edge-index bitset.
    pub fn edge_set(&self) -> &EdgeSet {
        &self.edges
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending by edge index.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().map(move |idx| edge_at(self.n, idx))
    }

    /// True if every edge of `self` is an edge of `other` (same `n`).
    pub fn is_spanning_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n == other.n && self.edges.is_subset_of(&other.edges)
    }

    /// True if the graph is complete on its vertex set.
    pub fn is_complete(&self) -> bool {
        self.edge_count() == pair_count(self.n)
    }

    /// Relabels vertices by `perm` (vertex `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[u32]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length mismatch".into()));
        }
        let edges: Vec<(u32, u32)> = self
            .edges()
            .map(|(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        Self::from_edges(self.n, &edges)
    }

    /// Finds a cycle as a vertex sequence `v_0 .. v_{m-1}` (closing edge
    /// `v_{m-1} v_0` implied), or `None` for forests.
    ///
    /// Deterministic: depth-first from the lowest vertex, lowest neighbor
    /// first. Any graph with more than `n - 1` edges yields `Some`.
    pub fn find_cycle(&self) -> Option<Vec<u32>> {
        let n = self.n;
        let mut visited = vec![false; n];
        let mut parent = vec![u32::MAX; n];

        for start in 0..n as u32 {
            if visited[start as usize] {
                continue;
            }
            // Iterative DFS; the stack holds (vertex, remaining-neighbor mask).
            let mut stack: Vec<(u32, u64)> = vec![(start, self.adj[start as usize])];
            visited[start as usize] = true;
            while let Some(&mut (v, ref mut rest)) = stack.last_mut() {
                if *rest == 0 {
                    stack.pop();
                    continue;
                }
                let w = rest.trailing_zeros();
                *rest &= *rest - 1;
                if w == parent[v as usize] {
                    continue;
                }
                if !visited[w as usize] {
                    visited[w as usize] = true;
                    parent[w as usize] = v;
                    stack.push((w, self.adj[w as usize]));
                    continue;
                }
                // Back edge v -> w: w is an ancestor on the stack.
                let mut cycle = vec![v];
                let mut cur = v;
                while cur != w {
                    cur = parent[cur as usize];
                    cycle.push(cur);
                }
                cycle.reverse(); // starts at w, ends at v
                debug_assert!(cycle.len() >= 3);
                return Some(cycle);
            }
        }
        None
    }
}
