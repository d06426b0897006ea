//! Seeded instance generators: random rings, edge decompositions, and
//! randomized dense packings.

use arlab_core::{
    enumerate_kst_copies, pair_count, validate_ring, EdgeSet, KstCopy, KstRing, Packing, Result,
    SimpleGraph,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Mixes an instance index into a base seed.
pub fn instance_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Options for [`random_ring`].
#[derive(Clone, Copy, Debug)]
pub struct RingGenOptions {
    pub s: usize,
    pub t: usize,
    /// Allow exterior vertices to repeat across copies and to reuse other
    /// copies' interior vertices, exercising the repeated-exterior-vertex
    /// extraction case. Default generation keeps exteriors fresh and
    /// pairwise disjoint.
    pub overlap_exteriors: bool,
}

/// Generates a random valid ring of length 1..=4 and its host: the complete
/// graph on the ring's vertices plus one spare vertex. The seed fully
/// determines the instance.
pub fn random_ring(opts: &RingGenOptions, seed: u64) -> Result<(KstRing, SimpleGraph)> {
    let RingGenOptions {
        s,
        t,
        overlap_exteriors,
    } = *opts;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(1..=4usize);

    // Interiors: a chain with one shared vertex per consecutive pair; the
    // last interior also reuses a vertex of the first to close the ring.
    let mut next: u32 = 0;
    let fresh = |count: usize, next: &mut u32| -> Vec<u32> {
        let vs: Vec<u32> = (0..count as u32).map(|i| *next + i).collect();
        *next += count as u32;
        vs
    };
    let mut interiors: Vec<Vec<u32>> = Vec::with_capacity(k);
    interiors.push(fresh(s, &mut next));
    for i in 1..k {
        let closes_ring = i == k - 1 && k >= 3;
        // Random overlap size with the previous interior; capping at s - 1
        // always leaves room for the ring-closing vertex.
        let overlap = rng.random_range(1..=(s - 1).max(1));
        let mut pool = interiors[i - 1].clone();
        let mut interior: Vec<u32> = Vec::with_capacity(s);
        for _ in 0..overlap {
            let j = rng.random_range(0..pool.len());
            interior.push(pool.swap_remove(j));
        }
        if closes_ring {
            let choices: Vec<u32> = interiors[0]
                .iter()
                .copied()
                .filter(|v| !interior.contains(v))
                .collect();
            if interior.len() < s && !choices.is_empty() {
                interior.push(choices[rng.random_range(0..choices.len())]);
            }
        }
        while interior.len() < s {
            interior.extend(fresh(1, &mut next));
        }
        interior.sort_unstable();
        interiors.push(interior);
    }

    // Exteriors: fresh disjoint sets by default; in overlap mode, slots may
    // reuse other copies' vertices subject to edge-disjointness.
    let interior_pool: Vec<u32> = {
        let mut all: Vec<u32> = interiors.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    };
    let mut used_exterior: Vec<u32> = Vec::new();
    let mut exteriors: Vec<Vec<u32>> = Vec::with_capacity(k);
    // Track implied edges incrementally to keep the copies edge-disjoint.
    let cap = pair_count(64);
    let mut used_edges = EdgeSet::new(cap);
    for interior in &interiors {
        let mut exterior: Vec<u32> = Vec::with_capacity(t);
        for _ in 0..t {
            let mut placed = false;
            if overlap_exteriors {
                for _ in 0..20 {
                    let pool: &[u32] = if rng.random_bool(0.5) && !used_exterior.is_empty() {
                        &used_exterior
                    } else {
                        &interior_pool
                    };
                    let v = pool[rng.random_range(0..pool.len())];
                    if interior.contains(&v) || exterior.contains(&v) {
                        continue;
                    }
                    let ok = interior.iter().all(|&u| {
                        !used_edges.contains(arlab_core::edge_index(64, u.min(v), u.max(v)))
                    });
                    if ok {
                        exterior.push(v);
                        placed = true;
                        break;
                    }
                }
            }
            if !placed {
                exterior.extend(fresh(1, &mut next));
            }
        }
        for &v in &exterior {
            for &u in interior {
                used_edges.insert(arlab_core::edge_index(64, u.min(v), u.max(v)));
            }
        }
        used_exterior.extend(&exterior);
        used_exterior.sort_unstable();
        used_exterior.dedup();
        exteriors.push(exterior);
    }

    let copies: Vec<KstCopy> = interiors
        .into_iter()
        .zip(exteriors)
        .map(|(x, y)| KstCopy::new(x, y))
        .collect::<Result<_>>()?;
    let max_vertex = copies
        .iter()
        .flat_map(|c| c.interior().iter().chain(c.exterior()))
        .copied()
        .max()
        .unwrap_or(0);
    let host = SimpleGraph::complete(max_vertex as usize + 2)?;
    let ring = KstRing::new(copies);
    debug_assert!(
        validate_ring(&ring, &host).is_valid(),
        "generator produced an invalid ring: {}",
        validate_ring(&ring, &host)
    );
    Ok((ring, host))
}

/// Searches for a decomposition of `E(K_n)` into edge-disjoint `K_{s,t}`
/// copies by exact-cover backtracking on the lowest uncovered edge. With
/// `distinct_interiors` the copies must also have pairwise distinct
/// interiors, which keeps the interior-path multigraph simple for `s = 2`.
pub fn kst_decomposition(
    n: usize,
    s: usize,
    t: usize,
    distinct_interiors: bool,
) -> Result<Option<Packing>> {
    let host = SimpleGraph::complete(n)?;
    let m = host.edge_count();
    if m % (s * t) != 0 {
        return Ok(None);
    }
    let copies = enumerate_kst_copies(&host, s, t)?;
    let copy_edges: Vec<Vec<usize>> = copies.iter().map(|c| c.edge_indices(n).collect()).collect();
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (id, edges) in copy_edges.iter().enumerate() {
        for &e in edges {
            by_edge[e].push(id);
        }
    }

    let mut covered = EdgeSet::new(m);
    let mut used_interiors: Vec<&[u32]> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let found = cover(
        &copies,
        &copy_edges,
        &by_edge,
        m,
        distinct_interiors,
        &mut covered,
        &mut used_interiors,
        &mut chosen,
    );
    if !found {
        return Ok(None);
    }
    Ok(Some(Packing {
        host,
        copies: chosen.iter().map(|&id| copies[id].clone()).collect(),
        s,
        t,
        maximal: true,
    }))
}

#[allow(clippy::too_many_arguments)]
fn cover<'a>(
    copies: &'a [KstCopy],
    copy_edges: &[Vec<usize>],
    by_edge: &[Vec<usize>],
    m: usize,
    distinct_interiors: bool,
    covered: &mut EdgeSet,
    used_interiors: &mut Vec<&'a [u32]>,
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(lowest) = (0..m).find(|&e| !covered.contains(e)) else {
        return true;
    };
    for &id in &by_edge[lowest] {
        if distinct_interiors && used_interiors.contains(&copies[id].interior()) {
            continue;
        }
        if copy_edges[id].iter().any(|&e| covered.contains(e)) {
            continue;
        }
        for &e in &copy_edges[id] {
            covered.insert(e);
        }
        used_interiors.push(copies[id].interior());
        chosen.push(id);
        if cover(
            copies,
            copy_edges,
            by_edge,
            m,
            distinct_interiors,
            covered,
            used_interiors,
            chosen,
        ) {
            return true;
        }
        chosen.pop();
        used_interiors.pop();
        for &e in &copy_edges[id] {
            covered.remove(e);
        }
    }
    false
}

/// A randomized greedy packing of `K_n` over a seeded shuffle of the copy
/// list, restricted to pairwise distinct interiors. Not maximal in general.
pub fn random_dense_packing(n: usize, s: usize, t: usize, seed: u64) -> Result<Packing> {
    let host = SimpleGraph::complete(n)?;
    let mut copies = enumerate_kst_copies(&host, s, t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    copies.shuffle(&mut rng);

    let mut used = EdgeSet::new(pair_count(n));
    let mut interiors: Vec<&[u32]> = Vec::new();
    let mut picked: Vec<KstCopy> = Vec::new();
    for copy in &copies {
        if interiors.contains(&copy.interior()) {
            continue;
        }
        let edges: Vec<usize> = copy.edge_indices(n).collect();
        if edges.iter().any(|&e| used.contains(e)) {
            continue;
        }
        for &e in &edges {
            used.insert(e);
        }
        interiors.push(copy.interior());
        picked.push(copy.clone());
    }
    Ok(Packing {
        host,
        copies: picked,
        s,
        t,
        maximal: false,
    })
}
