//! Independent brute-force oracles for every frozen fixture value.
//!
//! Each oracle enumerates the full search space with code kept deliberately
//! separate from the library's search paths, then the library result is
//! pinned against both the oracle and the frozen constant.

use arlab_core::{
    ar_exact, enumerate_kst_copies, has_rainbow_copy, minus_one_edge_family, turan_exact,
    EdgeColoring, ForbiddenFamily, SimpleGraph,
};
use itertools::Itertools;

// ============================================================================
// Oracle: copy enumeration by raw subset scan
// ============================================================================

/// Counts K_{s,t} copies in K_n by scanning every (s+t)-subset and every
/// bipartition of it, deduplicating symmetric labelings when s == t.
fn brute_copy_count(n: usize, s: usize, t: usize) -> usize {
    if s + t > n {
        return 0;
    }
    let mut seen: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for support in (0..n as u32).combinations(s + t) {
        for x in support.iter().copied().combinations(s) {
            let y: Vec<u32> = support.iter().copied().filter(|v| !x.contains(v)).collect();
            let (cx, cy) = if s == t && y[0] < x[0] {
                (y.clone(), x.clone())
            } else {
                (x.clone(), y)
            };
            if !seen.contains(&(cx.clone(), cy.clone())) {
                seen.push((cx, cy));
            }
        }
    }
    seen.len()
}

#[test]
fn copy_counts_match_brute_force_and_closed_form() {
    for n in 2..=7usize {
        for (s, t) in [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let g = SimpleGraph::complete(n).unwrap();
            let got = enumerate_kst_copies(&g, s, t).unwrap().len();
            assert_eq!(got, brute_copy_count(n, s, t), "n={n} s={s} t={t}");
            if s + t <= n {
                let closed = if s == t {
                    binom(n, s) * binom(n - s, t) / 2
                } else {
                    binom(n, s) * binom(n - s, t)
                };
                assert_eq!(got, closed, "closed form at n={n} s={s} t={t}");
            }
        }
    }
}

#[test]
fn frozen_copy_counts() {
    let k4 = SimpleGraph::complete(4).unwrap();
    let k5 = SimpleGraph::complete(5).unwrap();
    assert_eq!(enumerate_kst_copies(&k4, 2, 2).unwrap().len(), 3);
    assert_eq!(enumerate_kst_copies(&k5, 2, 2).unwrap().len(), 15);
    assert_eq!(enumerate_kst_copies(&k4, 2, 3).unwrap().len(), 0);
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// ============================================================================
// Oracle: Turán numbers over all subgraphs
// ============================================================================

/// Plain containment test, written against adjacency matrices rather than
/// the library's embedding machinery.
fn brute_contains(n: usize, adj: &[Vec<bool>], pattern: &SimpleGraph) -> bool {
    let active: Vec<u32> = (0..pattern.n() as u32)
        .filter(|&v| pattern.degree(v) > 0)
        .collect();
    if active.is_empty() {
        return true;
    }
    if active.len() > n {
        return false;
    }
    (0..n as u32).permutations(active.len()).any(|assignment| {
        active.iter().enumerate().all(|(i, &pi)| {
            active.iter().enumerate().skip(i + 1).all(|(j, &pj)| {
                !pattern.has_edge(pi, pj) || adj[assignment[i] as usize][assignment[j] as usize]
            })
        })
    })
}

/// Maximum edges over all 2^C(n,2) subgraphs of K_n avoiding the family.
fn brute_turan(n: usize, family: &ForbiddenFamily) -> usize {
    let pairs: Vec<(u32, u32)> = (0..n as u32).tuple_combinations().collect();
    let m = pairs.len();
    let mut best = 0;
    for mask in 0u64..(1 << m) {
        let count = mask.count_ones() as usize;
        if count <= best {
            continue;
        }
        let mut adj = vec![vec![false; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u as usize][v as usize] = true;
                adj[v as usize][u as usize] = true;
            }
        }
        if family.members().iter().all(|p| !brute_contains(n, &adj, p)) {
            best = count;
        }
    }
    best
}

#[test]
fn turan_values_match_brute_force() {
    let c4 = ForbiddenFamily::single_kst(2, 2).unwrap();
    let c4_minus = minus_one_edge_family(2, 2).unwrap();
    let p3 = ForbiddenFamily::single_kst(2, 1).unwrap();

    // Frozen fixtures, each confirmed by the subset-scan oracle.
    let cases: Vec<(usize, &ForbiddenFamily, usize)> =
        vec![(4, &c4, 4), (5, &c4, 6), (4, &c4_minus, 3), (4, &p3, 2)];
    for (n, family, frozen) in cases {
        let oracle = brute_turan(n, family);
        assert_eq!(oracle, frozen, "oracle disagrees with fixture at n={n}");
        let result = turan_exact(n, family).unwrap();
        assert!(result.exact());
        assert_eq!(result.value(), frozen, "search disagrees at n={n}");
    }
}

#[test]
fn turan_monotone_in_n_and_antitone_in_family() {
    let c4 = ForbiddenFamily::single_kst(2, 2).unwrap();
    let mut prev = 0;
    for n in 2..=6 {
        let v = turan_exact(n, &c4).unwrap().value();
        assert!(v >= prev);
        prev = v;
    }
    // Adding members can only shrink the value.
    let p4_pattern = minus_one_edge_family(2, 2).unwrap().members()[0].clone();
    let c4_pattern = c4.members()[0].clone();
    let bigger = ForbiddenFamily::new(vec![c4_pattern, p4_pattern]).unwrap();
    for n in 4..=6 {
        assert!(turan_exact(n, &bigger).unwrap().value() <= turan_exact(n, &c4).unwrap().value());
    }
    // Smaller exterior is at least as restrictive.
    let k21 = ForbiddenFamily::single_kst(2, 1).unwrap();
    for n in 3..=6 {
        assert!(turan_exact(n, &k21).unwrap().value() <= turan_exact(n, &c4).unwrap().value());
    }
}

// ============================================================================
// Oracle: anti-Ramsey numbers over all normalized colorings
// ============================================================================

/// Exhaustive scan over restricted-growth color sequences of K_n's edges.
/// Returns the maximum color count of a rainbow-free coloring and the first
/// (lexicographically smallest) witness achieving it.
fn brute_ar(n: usize, s: usize, t: usize) -> (usize, Vec<u32>) {
    let host = SimpleGraph::complete(n).unwrap();
    let copies: Vec<Vec<usize>> = enumerate_kst_copies(&host, s, t)
        .unwrap()
        .iter()
        .map(|c| c.edge_indices(n).collect())
        .collect();
    let m = host.edge_count();
    let mut best = 0usize;
    let mut witness: Option<Vec<u32>> = None;
    let mut colors = vec![0u32; m];
    brute_ar_rec(0, 0, m, &copies, &mut colors, &mut best, &mut witness);
    (best, witness.expect("monochromatic coloring always valid"))
}

fn brute_ar_rec(
    i: usize,
    used: usize,
    m: usize,
    copies: &[Vec<usize>],
    colors: &mut Vec<u32>,
    best: &mut usize,
    witness: &mut Option<Vec<u32>>,
) {
    if i == m {
        let rainbow_free = copies.iter().all(|edges| {
            let mut seen: Vec<u32> = edges.iter().map(|&e| colors[e]).collect();
            seen.sort_unstable();
            seen.windows(2).any(|w| w[0] == w[1])
        });
        if rainbow_free && (witness.is_none() || used > *best) {
            *best = used;
            *witness = Some(colors.clone());
        }
        return;
    }
    for c in 0..=used as u32 {
        colors[i] = c;
        brute_ar_rec(
            i + 1,
            used + usize::from(c as usize == used),
            m,
            copies,
            colors,
            best,
            witness,
        );
    }
}

#[test]
fn ar_4_2_2_matches_oracle_and_fixture() {
    let (oracle_value, oracle_witness) = brute_ar(4, 2, 2);
    assert_eq!(oracle_value, 4);
    // Canonical witness: monochromatic star at 0 plus a rainbow triangle.
    assert_eq!(oracle_witness, vec![0, 0, 0, 1, 2, 3]);

    let res = ar_exact(4, 2, 2).unwrap();
    assert!(res.exact());
    assert_eq!(res.value(), 4);
    assert_eq!(res.witness().colors(), &oracle_witness[..]);
    assert!(has_rainbow_copy(res.witness(), 2, 2).unwrap().is_none());
}

#[test]
fn ar_5_2_2_matches_oracle_and_fixture() {
    let (oracle_value, oracle_witness) = brute_ar(5, 2, 2);
    assert_eq!(oracle_value, 5);
    assert_eq!(oracle_witness, vec![0, 0, 0, 0, 1, 1, 1, 2, 3, 4]);

    let res = ar_exact(5, 2, 2).unwrap();
    assert!(res.exact());
    assert_eq!(res.value(), 5);
    assert_eq!(res.witness().colors(), &oracle_witness[..]);
}

#[test]
fn ar_3_2_2_is_vacuous() {
    let res = ar_exact(3, 2, 2).unwrap();
    assert_eq!(res.value(), 3);
}

// ============================================================================
// Oracle: independent rainbow-tie existence scan at n = 7
// ============================================================================

/// Brute existence check for rainbow ties with base length exactly 2,
/// written directly over copy pairs without the library's search pruning.
fn brute_tie_exists_len2(c: &EdgeColoring, s: usize, t: usize) -> bool {
    let host = c.host();
    let n = host.n();
    let copies = enumerate_kst_copies(host, s, t).unwrap();
    for (a, b) in copies.iter().cartesian_product(copies.iter()) {
        if a == b {
            continue;
        }
        if !a.interior().iter().any(|v| b.interior().contains(v)) {
            continue;
        }
        let edges_a: Vec<usize> = a.edge_indices(n).collect();
        let edges_b: Vec<usize> = b.edge_indices(n).collect();
        if edges_a.iter().any(|e| edges_b.contains(e)) {
            continue;
        }
        for apex in 0..n as u32 {
            if a.interior_contains(apex) || b.interior_contains(apex) {
                continue;
            }
            for anchor in a.interior().iter().copied().combinations(s - 1) {
                for tail in b
                    .interior()
                    .iter()
                    .copied()
                    .filter(|v| !a.interior().contains(v))
                {
                    let mut all_edges = edges_a.clone();
                    all_edges.extend(&edges_b);
                    let mut ok = true;
                    for v in anchor.iter().copied().chain(std::iter::once(tail)) {
                        if v == apex {
                            ok = false;
                            break;
                        }
                        let idx = arlab_core::edge_index(n, apex.min(v), apex.max(v));
                        if all_edges.contains(&idx) {
                            ok = false;
                            break;
                        }
                        all_edges.push(idx);
                    }
                    if !ok {
                        continue;
                    }
                    let mut seen: Vec<u32> = all_edges
                        .iter()
                        .map(|&e| {
                            let (u, v) = arlab_core::edge_at(n, e);
                            c.color_of(u, v).unwrap()
                        })
                        .collect();
                    seen.sort_unstable();
                    if seen.windows(2).all(|w| w[0] != w[1]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[test]
fn rainbow_tie_existence_agrees_with_oracle_at_n7() {
    use arlab_core::find_rainbow_string_tie;

    let rainbow = EdgeColoring::rainbow(SimpleGraph::complete(7).unwrap());
    assert!(brute_tie_exists_len2(&rainbow, 2, 2));
    assert!(find_rainbow_string_tie(&rainbow, 2, 2, 2)
        .unwrap()
        .is_some());

    let mono = EdgeColoring::monochromatic(SimpleGraph::complete(7).unwrap());
    assert!(!brute_tie_exists_len2(&mono, 2, 2));
    assert!(find_rainbow_string_tie(&mono, 2, 2, 3).unwrap().is_none());

    // Two colors can never be rainbow over four edges.
    let host = SimpleGraph::complete(6).unwrap();
    let two: Vec<u32> = (0..host.edge_count() as u32).map(|i| i % 2).collect();
    let c = EdgeColoring::new(host, two).unwrap();
    assert!(!brute_tie_exists_len2(&c, 2, 2));
    assert!(find_rainbow_string_tie(&c, 2, 2, 2).unwrap().is_none());
}
