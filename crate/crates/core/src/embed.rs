//! Subgraph-embedding tests (non-induced, injective on the pattern's
//! non-isolated vertices).
//!
//! Two deliberately separate code paths live here: [`PatternMatcher`] is the
//! anchored backtracking used inside the extremal search, and
//! [`embeds_naive`] is a plain unanchored backtracker kept independent so
//! witnesses can be re-verified against different code.

use crate::graph::SimpleGraph;

/// A forbidden pattern compiled for repeated embedding queries.
///
/// Isolated pattern vertices are dropped; the remaining vertices are
/// reindexed `0..k`.
#[derive(Clone, Debug)]
pub struct PatternMatcher {
    /// Adjacency among active pattern vertices.
    adj: Vec<u64>,
    /// Pattern edges over reindexed vertices.
    edges: Vec<(usize, usize)>,
    /// For each pattern edge, the order in which the remaining vertices are
    /// assigned (edge endpoints first, then neighbors-of-assigned first).
    orders: Vec<Vec<usize>>,
}

impl PatternMatcher {
    pub fn new(pattern: &SimpleGraph) -> Self {
        let active: Vec<u32> = (0..pattern.n() as u32)
            .filter(|&v| pattern.degree(v) > 0)
            .collect();
        let index_of = |v: u32| active.iter().position(|&a| a == v).unwrap();
        let k = active.len();
        let mut adj = vec![0u64; k];
        let mut edges = Vec::new();
        for (u, v) in pattern.edges() {
            let (iu, iv) = (index_of(u), index_of(v));
            adj[iu] |= 1 << iv;
            adj[iv] |= 1 << iu;
            edges.push((iu, iv));
        }
        let orders = edges
            .iter()
            .map(|&(a, b)| extension_order(k, &adj, a, b))
            .collect();
        PatternMatcher { adj, edges, orders }
    }

    /// Number of non-isolated pattern vertices.
    pub fn active_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True if the pattern embeds into the host described by `host_adj`
    /// (neighbor masks) with some pattern edge mapped onto the host edge
    /// `(hu, hv)`. Patterns with no edges never touch an edge.
    pub fn embeds_touching(&self, host_adj: &[u64], hu: u32, hv: u32) -> bool {
        let k = self.active_count();
        if k == 0 || k > host_adj.len() {
            return false;
        }
        let mut assigned = vec![u32::MAX; k];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            for (pa, pb) in [(a, b), (b, a)] {
                assigned[pa] = hu;
                assigned[pb] = hv;
                let used = (1u64 << hu) | (1u64 << hv);
                if self.extend(host_adj, &self.orders[e], 2, &mut assigned, used) {
                    return true;
                }
                assigned[pa] = u32::MAX;
                assigned[pb] = u32::MAX;
            }
        }
        false
    }

    fn extend(
        &self,
        host_adj: &[u64],
        order: &[usize],
        depth: usize,
        assigned: &mut [u32],
        used: u64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        // Candidates must be adjacent (in the host) to the images of all
        // already-assigned pattern neighbors of p, and unused.
        let mut cand = !used;
        cand &= (1u64 << host_adj.len()) - 1;
        let mut nbrs = self.adj[p];
        while nbrs != 0 {
            let q = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if assigned[q] != u32::MAX {
                cand &= host_adj[assigned[q] as usize];
            }
        }
        while cand != 0 {
            let h = cand.trailing_zeros();
            cand &= cand - 1;
            assigned[p] = h;
            if self.extend(host_adj, order, depth + 1, assigned, used | (1 << h)) {
                return true;
            }
            assigned[p] = u32::MAX;
        }
        false
    }
}

/// Assignment order starting from the endpoints of pattern edge `(a, b)`:
/// repeatedly append the lowest unassigned vertex with an assigned neighbor,
/// falling back to the lowest unassigned vertex for disconnected patterns.
fn extension_order(k: usize, adj: &[u64], a: usize, b: usize) -> Vec<usize> {
    let mut order = vec![a, b];
    let mut placed = (1u64 << a) | (1u64 << b);
    while order.len() < k {
        let next = adj
            .iter()
            .enumerate()
            .position(|(v, &mask)| placed >> v & 1 == 0 && mask & placed != 0);
        let v = next.unwrap_or_else(|| (0..k).find(|&v| placed >> v & 1 == 0).unwrap());
        order.push(v);
        placed |= 1 << v;
    }
    order
}

/// Plain backtracking embedding test: assigns the pattern's non-isolated
/// vertices in label order, trying every unused host vertex. Independent of
/// [`PatternMatcher`] by design; used to re-verify witnesses.
pub fn embeds_naive(host: &SimpleGraph, pattern: &SimpleGraph) -> bool {
    let active: Vec<u32> = (0..pattern.n() as u32)
        .filter(|&v| pattern.degree(v) > 0)
        .collect();
    if active.is_empty() {
        // The edgeless pattern embeds in everything.
        return true;
    }
    if active.len() > host.n() {
        return false;
    }
    let mut map = vec![u32::MAX; active.len()];
    let mut used = vec![false; host.n()];
    naive_rec(host, pattern, &active, 0, &mut map, &mut used)
}

fn naive_rec(
    host: &SimpleGraph,
    pattern: &SimpleGraph,
    active: &[u32],
    i: usize,
    map: &mut [u32],
    used: &mut [bool],
) -> bool {
    if i == active.len() {
        return true;
    }
    'cand: for h in 0..host.n() as u32 {
        if used[h as usize] {
            continue;
        }
        for j in 0..i {
            if pattern.has_edge(active[i], active[j]) && !host.has_edge(h, map[j]) {
                continue 'cand;
            }
        }
        map[i] = h;
        used[h as usize] = true;
        if naive_rec(host, pattern, active, i + 1, map, used) {
            return true;
        }
        used[h as usize] = false;
        map[i] = u32::MAX;
    }
    false
}

/// Convenience wrapper: anchored matcher ranging over every host edge.
pub fn embeds_anywhere(matcher: &PatternMatcher, host: &SimpleGraph) -> bool {
    let adj: Vec<u64> = (0..host.n() as u32).map(|v| host.neighbors(v)).collect();
    host.edges()
        .any(|(u, v)| matcher.embeds_touching(&adj, u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c4() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn triangle_contains_no_p4() {
        let tri = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!embeds_naive(&tri, &p4()));
        assert!(!embeds_anywhere(&PatternMatcher::new(&p4()), &tri));
    }

    #[test]
    fn c4_contains_p4() {
        assert!(embeds_naive(&c4(), &p4()));
        assert!(embeds_anywhere(&PatternMatcher::new(&p4()), &c4()));
    }

    #[test]
    fn k4_contains_c4_touching_every_edge() {
        let k4 = SimpleGraph::complete(4).unwrap();
        let m = PatternMatcher::new(&c4());
        let adj: Vec<u64> = (0..4).map(|v| k4.neighbors(v)).collect();
        for (u, v) in k4.edges() {
            assert!(m.embeds_touching(&adj, u, v));
        }
    }

    #[test]
    fn non_induced_embedding() {
        // K_4 contains P_4 even though no induced P_4 exists.
        let k4 = SimpleGraph::complete(4).unwrap();
        assert!(embeds_naive(&k4, &p4()));
    }

    #[test]
    fn isolated_pattern_vertices_are_ignored() {
        // Pattern: one edge plus three isolated vertices; fits in K_2.
        let pat = SimpleGraph::from_edges(5, &[(0, 1)]).unwrap();
        let k2 = SimpleGraph::complete(2).unwrap();
        assert!(embeds_naive(&k2, &pat));
        let m = PatternMatcher::new(&pat);
        let adj: Vec<u64> = (0..2).map(|v| k2.neighbors(v)).collect();
        assert!(m.embeds_touching(&adj, 0, 1));
    }

    #[test]
    fn edgeless_pattern_embeds_vacuously() {
        let pat = SimpleGraph::empty(2).unwrap();
        assert!(embeds_naive(&SimpleGraph::empty(1).unwrap(), &pat));
        let m = PatternMatcher::new(&pat);
        let k3 = SimpleGraph::complete(3).unwrap();
        let adj: Vec<u64> = (0..3).map(|v| k3.neighbors(v)).collect();
        assert!(!m.embeds_touching(&adj, 0, 1));
    }

    #[test]
    fn both_checkers_agree_on_random_cases() {
        // Cross-check the two code paths over all subgraphs of K_4 against
        // three small patterns.
        let patterns = [
            p4(),
            c4(),
            SimpleGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap(),
        ];
        for mask in 0u32..64 {
            let edges: Vec<(u32, u32)> = (0..6)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| crate::graph::edge_at(4, i))
                .collect();
            let host = SimpleGraph::from_edges(4, &edges).unwrap();
            for pat in &patterns {
                let naive = embeds_naive(&host, pat);
                let anchored = embeds_anywhere(&PatternMatcher::new(pat), &host);
                assert_eq!(naive, anchored, "mask {mask:#b}");
            }
        }
    }
}
