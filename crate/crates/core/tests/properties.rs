//! Property-based invariants over randomized instances.

use arlab_core::{
    ar_exact, find_rainbow_string_tie, greedy_maximal_packing, has_rainbow_copy,
    interior_path_multigraph, packing_to_ring, ring_to_string_tie, validate_ring,
    validate_string_tie, EdgeColoring, KstCopy, KstRing, SimpleGraph,
};
use proptest::prelude::*;

// ============================================================================
// Coloring normalization
// ============================================================================

proptest! {
    /// Normalization is idempotent and invariant under any renaming of the
    /// input color ids.
    #[test]
    fn normalization_invariant_under_color_renaming(
        n in 3usize..7,
        raw in proptest::collection::vec(0u32..12, 21),
        perm_seed in 0u64..1000,
    ) {
        let host = SimpleGraph::complete(n).unwrap();
        let m = host.edge_count();
        let colors: Vec<u32> = raw.iter().take(m).copied().collect();
        let normalized = EdgeColoring::new(host.clone(), colors.clone()).unwrap();

        // Idempotence.
        let again = EdgeColoring::new(host.clone(), normalized.colors().to_vec()).unwrap();
        prop_assert_eq!(again.colors(), normalized.colors());

        // Renaming invariance: apply a bijection on the color ids.
        let mut ids: Vec<u32> = (0..12).collect();
        let mut state = perm_seed;
        for i in (1..ids.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            ids.swap(i, j);
        }
        let renamed: Vec<u32> = colors.iter().map(|&c| ids[c as usize]).collect();
        let renormalized = EdgeColoring::new(host, renamed).unwrap();
        prop_assert_eq!(renormalized.colors(), normalized.colors());
    }

    /// The representing graph has exactly one edge per color, and that edge
    /// selection is rainbow by construction.
    #[test]
    fn representing_graph_one_edge_per_color(
        n in 3usize..7,
        raw in proptest::collection::vec(0u32..8, 21),
    ) {
        let host = SimpleGraph::complete(n).unwrap();
        let m = host.edge_count();
        let c = EdgeColoring::new(host, raw.iter().take(m).copied().collect()).unwrap();
        let rep = c.representing_graph();
        prop_assert_eq!(rep.edge_count(), c.color_count() as usize);
        let mut seen: Vec<u32> = rep
            .edges()
            .map(|(u, v)| c.color_of(u, v).unwrap())
            .collect();
        seen.sort_unstable();
        seen.dedup();
        prop_assert_eq!(seen.len(), c.color_count() as usize);
    }
}

// ============================================================================
// Cycles
// ============================================================================

proptest! {
    /// Any graph with at least n edges contains a cycle, and the returned
    /// cycle is a real one.
    #[test]
    fn dense_graphs_have_cycles(n in 4usize..10, keep in proptest::collection::vec(any::<bool>(), 45)) {
        let complete = SimpleGraph::complete(n).unwrap();
        let edges: Vec<(u32, u32)> = complete
            .edges()
            .zip(keep.iter().cycle())
            .filter(|(_, &k)| k)
            .map(|(e, _)| e)
            .collect();
        let g = SimpleGraph::from_edges(n, &edges).unwrap();
        match g.find_cycle() {
            Some(cycle) => {
                prop_assert!(cycle.len() >= 3);
                for i in 0..cycle.len() {
                    prop_assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                sorted.dedup();
                prop_assert_eq!(sorted.len(), cycle.len());
            }
            None => {
                // Forests have fewer than n edges.
                prop_assert!(g.edge_count() < n);
            }
        }
    }
}

// ============================================================================
// Ring extraction closed loop
// ============================================================================

/// Builds a cyclic ring: interior i shares one vertex with interior i+1 and
/// the last shares one with the first; exteriors are fresh and disjoint, so
/// the copies are edge-disjoint by construction.
fn cyclic_ring(k: usize, s: usize, t: usize) -> (KstRing, SimpleGraph) {
    let mut next = k as u32; // 0..k are the shared vertices
    let mut copies = Vec::with_capacity(k);
    for i in 0..k {
        let mut interior = vec![i as u32, ((i + 1) % k) as u32];
        for _ in 2..s {
            interior.push(next);
            next += 1;
        }
        let mut exterior = Vec::with_capacity(t);
        for _ in 0..t {
            exterior.push(next);
            next += 1;
        }
        copies.push(KstCopy::new(interior, exterior).unwrap());
    }
    let host = SimpleGraph::complete(next as usize + 1).unwrap();
    (KstRing::new(copies), host)
}

proptest! {
    /// Lemma 2 as a closed loop: every generated valid ring of length >= 3
    /// in a complete host extracts to a tie that its validator accepts, the
    /// base is a proper subset of the ring, and the apex comes from a
    /// dropped copy's exterior.
    #[test]
    fn ring_extraction_closed_loop(k in 3usize..6, s in 2usize..4, t in 1usize..4) {
        let (ring, host) = cyclic_ring(k, s, t);
        let ring_report = validate_ring(&ring, &host);
        prop_assert!(ring_report.is_valid(), "generated ring invalid: {}", ring_report);

        let tie = ring_to_string_tie(&ring, &host).unwrap();
        let report = validate_string_tie(&tie, &host);
        prop_assert!(report.is_valid(), "{}", report);
        prop_assert!(tie.base.len() < ring.len());
        for c in &tie.base.copies {
            prop_assert!(ring.copies().contains(c));
        }
        let dropped: Vec<&KstCopy> = ring
            .copies()
            .iter()
            .filter(|c| !tie.base.copies.contains(c))
            .collect();
        prop_assert!(dropped.iter().any(|c| c.exterior_contains(tie.apex)));
    }
}

// ============================================================================
// Packing extraction
// ============================================================================

proptest! {
    /// Greedy packings are maximal and edge-disjoint; the interior-path
    /// multigraph has exactly k(s-1) edges; extracted rings validate and
    /// use only packing copies; packings bigger than n-1 always extract.
    #[test]
    fn packing_pipeline_invariants(
        n in 5usize..10,
        s in 2usize..4,
        keep in proptest::collection::vec(any::<bool>(), 45),
    ) {
        let complete = SimpleGraph::complete(n).unwrap();
        let edges: Vec<(u32, u32)> = complete
            .edges()
            .zip(keep.iter().cycle())
            .filter(|(_, &k)| k)
            .map(|(e, _)| e)
            .collect();
        let g = SimpleGraph::from_edges(n, &edges).unwrap();
        let p = greedy_maximal_packing(&g, s, 2).unwrap();
        prop_assert!(arlab_core::validate_packing(&p).is_valid());

        let f = interior_path_multigraph(&p);
        prop_assert_eq!(f.edge_count(), p.copies.len() * (s - 1));

        match packing_to_ring(&p) {
            Some(ring) => {
                prop_assert!(validate_ring(&ring, &g).is_valid());
                for c in ring.copies() {
                    prop_assert!(p.copies.contains(c));
                }
            }
            None => {
                prop_assert!(p.copies.len() < n, "k > n-1 must extract a ring");
            }
        }
    }
}

// ============================================================================
// Anti-Ramsey witnesses
// ============================================================================

proptest! {
    /// The AR value is isomorphism-invariant: permuting a witness coloring's
    /// vertices and renormalizing keeps it valid with the same color count.
    #[test]
    fn ar_witness_survives_vertex_permutation(perm_seed in 0u64..500) {
        let res = ar_exact(5, 2, 2).unwrap();
        let mut perm: Vec<u32> = (0..5).collect();
        let mut state = perm_seed;
        for i in (1..5).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let permuted = res.witness().permuted(&perm).unwrap();
        prop_assert_eq!(permuted.color_count() as usize, res.value());
        prop_assert!(has_rainbow_copy(&permuted, 2, 2).unwrap().is_none());
    }
}

// ============================================================================
// Tie search consistency
// ============================================================================

proptest! {
    /// Whatever the tie search returns on an arbitrary coloring is a valid
    /// rainbow tie.
    #[test]
    fn found_ties_are_valid_and_rainbow(raw in proptest::collection::vec(0u32..10, 15)) {
        let host = SimpleGraph::complete(6).unwrap();
        let c = EdgeColoring::new(host, raw).unwrap();
        if let Some(tie) = find_rainbow_string_tie(&c, 2, 2, 2).unwrap() {
            let report = validate_string_tie(&tie, c.host());
            prop_assert!(report.is_valid(), "{}", report);
            prop_assert!(arlab_core::cert::tie_is_rainbow(&c, &tie));
        }
    }
}
