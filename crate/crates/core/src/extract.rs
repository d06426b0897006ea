//! Constructive extractors: greedy maximal packings, the interior-path
//! multigraph, cycle-to-ring extraction, and ring-to-string-tie extraction.

use crate::copies::enumerate_kst_copies;
use crate::error::{Error, Result};
use crate::graph::{pair_count, EdgeSet, SimpleGraph};
use crate::multigraph::{simplify_multigraph, Multigraph};
use crate::strings::{validate_ring, validate_string_tie, KstRing, KstString, Packing, StringTie};
use std::collections::BTreeMap;

/// Greedily collects pairwise edge-disjoint `K_{s,t}` copies in canonical
/// enumeration order: repeatedly the smallest copy compatible with the
/// current packing. The result is maximal and deterministic.
pub fn greedy_maximal_packing(g: &SimpleGraph, s: usize, t: usize) -> Result<Packing> {
    let copies = enumerate_kst_copies(g, s, t)?;
    let n = g.n();
    let mut used = EdgeSet::new(pair_count(n));
    let mut picked = Vec::new();
    for copy in copies {
        let indices: Vec<usize> = copy.edge_indices(n).collect();
        if indices.iter().all(|&i| !used.contains(i)) {
            for &i in &indices {
                used.insert(i);
            }
            picked.push(copy);
        }
    }
    Ok(Packing {
        host: g.clone(),
        copies: picked,
        s,
        t,
        maximal: true,
    })
}

/// The multigraph `F` on the host's vertices with, for each copy, the path
/// through its sorted interior. Has exactly `k * (s - 1)` edges counted
/// with multiplicity.
pub fn interior_path_multigraph(p: &Packing) -> Multigraph {
    let mut f = Multigraph::new(p.host.n());
    for copy in &p.copies {
        for pair in copy.interior().windows(2) {
            f.add_edge(pair[0], pair[1])
                .expect("interior vertices are valid and distinct");
        }
    }
    f
}

/// Extracts a ring from a packing: builds the interior-path multigraph,
/// simplifies it, searches for a cycle, and maps the cycle's edges back to
/// their generating copies (lowest copy index per simplified edge). Returns
/// `None` when the simplified graph is a forest.
pub fn packing_to_ring(p: &Packing) -> Option<KstRing> {
    let n = p.host.n();
    let f = interior_path_multigraph(p);
    let simple = simplify_multigraph(&f);

    // Remember the lowest-index generating copy for each simplified edge.
    let mut owner: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for (id, copy) in p.copies.iter().enumerate() {
        for pair in copy.interior().windows(2) {
            owner.entry((pair[0], pair[1])).or_insert(id);
        }
    }

    let cycle = simple.find_cycle()?;
    let m = cycle.len();
    let mut seq: Vec<usize> = (0..m)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % m]);
            owner[&(a.min(b), a.max(b))]
        })
        .collect();

    // Collapse cyclically-adjacent duplicates, then cut to the shortest
    // sub-cycle with pairwise distinct copies. The wrap overlap survives the
    // cut: the entry after the window ends is the same copy as its start.
    seq.dedup();
    while seq.len() > 1 && seq.first() == seq.last() {
        seq.pop();
    }
    loop {
        let mut cut: Option<(usize, usize)> = None;
        for i in 0..seq.len() {
            for j in (i + 1)..seq.len() {
                if seq[i] == seq[j] {
                    let len = j - i;
                    if cut.is_none_or(|(ci, cj)| len < cj - ci) {
                        cut = Some((i, j));
                    }
                }
            }
        }
        match cut {
            Some((i, j)) => seq = seq[i..j].to_vec(),
            None => break,
        }
    }
    debug_assert!(seq.len() >= 2, "a cycle cannot come from a single copy");

    let ring = KstRing::new(seq.iter().map(|&id| p.copies[id].clone()).collect());
    debug_assert!(
        validate_ring(&ring, &p.host).is_valid(),
        "extracted ring failed validation: {} (n={n})",
        validate_ring(&ring, &p.host)
    );
    Some(ring)
}

/// Extracts a string-tie from a valid ring in a complete host, following
/// the constructive argument: first an apex avoiding every interior
/// (pigeonhole over the exteriors) with the owner copy dropped, then a
/// repeated exterior vertex as apex over a contiguous segment avoiding it.
///
/// The base is always a proper cyclic segment of the ring's copies, so its
/// length drops below the ring's. Rings of length at most 2 are never
/// extractable: any single-copy base has an empty tail set.
pub fn ring_to_string_tie(ring: &KstRing, host: &SimpleGraph) -> Result<StringTie> {
    let report = validate_ring(ring, host);
    if !report.is_valid() {
        return Err(Error::NotExtractable(format!("ring invalid: {report}")));
    }
    let k = ring.len();
    let copies = ring.copies();
    let exterior_union: Vec<u32> = {
        let mut all: Vec<u32> = copies
            .iter()
            .flat_map(|c| c.exterior().iter().copied())
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    };
    let in_some_interior = |v: u32| copies.iter().any(|c| c.interior_contains(v));

    let mut missing_edge: Option<(u32, u32)> = None;

    // Pigeonhole pass: apexes outside every interior, base = everything but
    // the owner copy, in ring order starting right after it.
    for &w in exterior_union.iter().filter(|&&v| !in_some_interior(v)) {
        let owner = copies
            .iter()
            .position(|c| c.exterior_contains(w))
            .expect("w came from the exterior union");
        let segment: Vec<usize> = (1..k).map(|d| (owner + d) % k).collect();
        if segment.is_empty() {
            continue;
        }
        match try_tie(ring, host, w, &segment) {
            TieAttempt::Built(tie) => return Ok(tie),
            TieAttempt::MissingEdge(e) => missing_edge.get_or_insert(e),
            TieAttempt::Structural => continue,
        };
    }

    // Segment pass: any exterior vertex as apex over every contiguous
    // cyclic segment whose interiors avoid it, longest segments first.
    for &w in &exterior_union {
        for len in (1..k).rev() {
            for start in 0..k {
                let segment: Vec<usize> = (0..len).map(|d| (start + d) % k).collect();
                if segment.iter().any(|&i| copies[i].interior_contains(w)) {
                    continue;
                }
                let dropped_owner = (0..k)
                    .filter(|i| !segment.contains(i))
                    .any(|i| copies[i].exterior_contains(w));
                if !dropped_owner {
                    continue;
                }
                match try_tie(ring, host, w, &segment) {
                    TieAttempt::Built(tie) => return Ok(tie),
                    TieAttempt::MissingEdge(e) => missing_edge.get_or_insert(e),
                    TieAttempt::Structural => continue,
                };
            }
        }
    }

    match missing_edge {
        Some((u, v)) => Err(Error::HostNotComplete(u, v)),
        None => Err(Error::NotExtractable(format!(
            "no apex and base segment yield a tie (ring length {k})"
        ))),
    }
}

enum TieAttempt {
    Built(StringTie),
    MissingEdge((u32, u32)),
    Structural,
}

fn try_tie(ring: &KstRing, host: &SimpleGraph, apex: u32, segment: &[usize]) -> TieAttempt {
    let copies = ring.copies();
    let first = copies[segment[0]].interior();
    let last = copies[*segment.last().expect("segment nonempty")].interior();
    let s = first.len();

    if segment.iter().any(|&i| copies[i].interior_contains(apex)) {
        return TieAttempt::Structural;
    }
    // Canonical choices: the s-1 smallest anchor vertices, the smallest tail.
    let anchor: Vec<u32> = first.iter().copied().take(s - 1).collect();
    let tail = match last.iter().copied().find(|v| !first.contains(v)) {
        Some(v) => v,
        None => return TieAttempt::Structural,
    };
    for v in anchor.iter().copied().chain(std::iter::once(tail)) {
        if v == apex {
            return TieAttempt::Structural;
        }
        if !host.has_edge(apex.min(v), apex.max(v)) {
            return TieAttempt::MissingEdge((apex.min(v), apex.max(v)));
        }
    }
    let tie = StringTie {
        base: KstString::new(segment.iter().map(|&i| copies[i].clone()).collect()),
        apex,
        anchor,
        tail,
    };
    if validate_string_tie(&tie, host).is_valid() {
        TieAttempt::Built(tie)
    } else {
        TieAttempt::Structural
    }
}
