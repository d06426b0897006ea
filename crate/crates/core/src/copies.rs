//! Complete bipartite copies: enumeration inside a host and rainbow tests.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// One copy of `K_{s,t}` inside a host: an interior vertex set `X` of size
/// `s` and a disjoint exterior set `Y` of size `t`; the implied edge set is
/// all of `X x Y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KstCopy {
    #[serde(rename = "X")]
    x: Vec<u32>,
    #[serde(rename = "Y")]
    y: Vec<u32>,
}

impl KstCopy {
    /// Builds a copy, sorting both parts. Rejects `|X| < 2`, empty `Y`,
    /// overlapping parts and repeated vertices.
    pub fn new(x: Vec<u32>, y: Vec<u32>) -> Result<Self> {
        if x.len() < 2 {
            return Err(Error::UnsupportedParameter(format!(
                "interior size {} < 2",
                x.len()
            )));
        }
        if y.is_empty() {
            return Err(Error::UnsupportedParameter("empty exterior".into()));
        }
        let mut x = x;
        let mut y = y;
        x.sort_unstable();
        y.sort_unstable();
        if x.windows(2).any(|w| w[0] == w[1]) || y.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("repeated vertex in copy part".into()));
        }
        if x.iter().any(|v| y.binary_search(v).is_ok()) {
            return Err(Error::InvalidGraph("interior and exterior overlap".into()));
        }
        Ok(KstCopy { x, y })
    }

    /// Interior vertices, sorted.
    #[inline]
    pub fn interior(&self) -> &[u32] {
        &self.x
    }

    /// Exterior vertices, sorted.
    #[inline]
    pub fn exterior(&self) -> &[u32] {
        &self.y
    }

    pub fn interior_contains(&self, v: u32) -> bool {
        self.x.binary_search(&v).is_ok()
    }

    pub fn exterior_contains(&self, v: u32) -> bool {
        self.y.binary_search(&v).is_ok()
    }

    /// The `s * t` implied edges as sorted pairs, in (X, Y) scan order.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.x
            .iter()
            .cartesian_product(self.y.iter())
            .map(|(&u, &v)| (u.min(v), u.max(v)))
    }

    /// Implied edge indices for a host on `n` vertices.
    pub fn edge_indices(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        self.edge_pairs()
            .map(move |(u, v)| crate::graph::edge_index(n, u, v))
    }

    /// True if all implied edges are present in `host`.
    pub fn lies_in(&self, host: &SimpleGraph) -> bool {
        self.x
            .iter()
            .chain(&self.y)
            .all(|&v| (v as usize) < host.n())
            && self.edge_pairs().all(|(u, v)| host.has_edge(u, v))
    }
}

/// Enumerates every `K_{s,t}` copy whose implied edges lie in `g`, exactly
/// once, sorted by (sorted X, sorted Y).
///
/// When `s == t` the two part labelings of the same vertex-set pair describe
/// the same copy; the part with the smaller minimum vertex is taken as the
/// interior.
///
/// `s < 2` is rejected; `s` or `t` exceeding `n` yields an empty list.
pub fn enumerate_kst_copies(g: &SimpleGraph, s: usize, t: usize) -> Result<Vec<KstCopy>> {
    if s < 2 {
        return Err(Error::UnsupportedParameter(format!(
            "interior size s={s} < 2 (degenerate string-tie)"
        )));
    }
    if t < 1 {
        return Err(Error::UnsupportedParameter("exterior size t=0".into()));
    }
    let n = g.n();
    let mut out = Vec::new();
    if s + t > n {
        return Ok(out);
    }
    let vertices: Vec<u32> = (0..n as u32).collect();
    for x in vertices.iter().copied().combinations(s) {
        // Exterior candidates must be adjacent to every interior vertex.
        let mut common: u64 = x.iter().fold(!0u64, |acc, &v| acc & g.neighbors(v));
        for &v in &x {
            common &= !(1u64 << v);
        }
        let candidates: Vec<u32> = (0..n as u32).filter(|&v| (common >> v) & 1 == 1).collect();
        if candidates.len() < t {
            continue;
        }
        for y in candidates.iter().copied().combinations(t) {
            if s == t && y[0] < x[0] {
                // The same pair will be produced with roles swapped.
                continue;
            }
            out.push(KstCopy { x: x.clone(), y });
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Returns the canonically smallest copy whose implied edges have pairwise
/// distinct colors, or `None`.
pub fn has_rainbow_copy(c: &EdgeColoring, s: usize, t: usize) -> Result<Option<KstCopy>> {
    let copies = enumerate_kst_copies(c.host(), s, t)?;
    Ok(copies.into_iter().find(|copy| copy_is_rainbow(c, copy)))
}

/// True if the copy's implied edges have pairwise distinct colors under `c`.
pub fn copy_is_rainbow(c: &EdgeColoring, copy: &KstCopy) -> bool {
    let mut seen: Vec<u32> = copy
        .edge_pairs()
        .map(|(u, v)| c.color_of(u, v).expect("copy edge missing from host"))
        .collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}
