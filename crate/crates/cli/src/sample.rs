//! Seeded samplers for rainbow-free colorings.

use arlab_core::{enumerate_kst_copies, EdgeColoring, Result, SimpleGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A uniform random coloring of `E(K_n)` with color ids drawn from
/// `0..edge_count`, normalized. The seed fully determines the result.
pub fn random_coloring(n: usize, seed: u64) -> Result<EdgeColoring> {
    let host = SimpleGraph::complete(n)?;
    let m = host.edge_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors: Vec<u32> = (0..m)
        .map(|_| rng.random_range(0..m.max(1) as u32))
        .collect();
    EdgeColoring::new(host, colors)
}

/// Repairs a coloring until no rainbow `K_{s,t}` copy remains: while one
/// exists, the highest-index edge of the canonically first rainbow copy is
/// recolored with the color of that copy's lowest-index edge.
///
/// Each step removes the found copy's rainbowness and never raises the total
/// color count. A generous step cap guards against pathological cycling; on
/// cap the coloring collapses to monochromatic, which is trivially
/// rainbow-free and keeps the sampler deterministic.
pub fn repair_rainbow_free(c: EdgeColoring, s: usize, t: usize) -> Result<EdgeColoring> {
    let host = c.host().clone();
    let n = host.n();
    let copies = enumerate_kst_copies(&host, s, t)?;
    let copy_edges: Vec<Vec<usize>> = copies.iter().map(|c| c.edge_indices(n).collect()).collect();

    let mut colors = c.colors().to_vec();
    let cap = 64 * colors.len().max(1) * copy_edges.len().max(1);
    for _ in 0..cap {
        let mut rainbow: Option<&Vec<usize>> = None;
        'scan: for edges in &copy_edges {
            for (i, &e) in edges.iter().enumerate() {
                for &f in edges.iter().take(i) {
                    if colors[e] == colors[f] {
                        continue 'scan;
                    }
                }
            }
            rainbow = Some(edges);
            break;
        }
        let Some(edges) = rainbow else {
            return EdgeColoring::new(host, colors);
        };
        let lowest = *edges.iter().min().expect("copy has edges");
        let highest = *edges.iter().max().expect("copy has edges");
        colors[highest] = colors[lowest];
    }
    Ok(EdgeColoring::monochromatic(host))
}

/// Random coloring followed by repair and normalization; the result always
/// satisfies `has_rainbow_copy(.., s, t) == None`.
pub fn sample_rainbow_free_coloring(
    n: usize,
    s: usize,
    t: usize,
    seed: u64,
) -> Result<EdgeColoring> {
    let raw = random_coloring(n, seed)?;
    if n < s + t {
        // Vacuously rainbow-free; hand back the unrepaired coloring.
        return Ok(raw);
    }
    repair_rainbow_free(raw, s, t)
}
