//! Bounded search for rainbow string-ties in an edge coloring.

use crate::coloring::EdgeColoring;
use crate::copies::enumerate_kst_copies;
use crate::error::{Error, Result};
use crate::graph::{edge_index, pair_count};
use crate::strings::{validate_string_tie, KstString, StringTie};
use itertools::Itertools;
use rayon::prelude::*;

/// Searches for a string-tie of base length at most `max_len` whose edges
/// (base copies plus apex edges) are pairwise distinctly colored, returning
/// the canonically smallest one or `None` within the length budget.
///
/// Canonical order: base length first, then the copy sequence, apex, anchor
/// and tail, each lexicographically.
pub fn find_rainbow_string_tie(
    c: &EdgeColoring,
    s: usize,
    t: usize,
    max_len: usize,
) -> Result<Option<StringTie>> {
    find_rainbow_string_tie_threads(c, s, t, max_len, 1)
}

/// Same search, fanning out over starting copies on `threads` workers. The
/// returned tie is the canonical minimum regardless of schedule.
pub fn find_rainbow_string_tie_threads(
    c: &EdgeColoring,
    s: usize,
    t: usize,
    max_len: usize,
    threads: usize,
) -> Result<Option<StringTie>> {
    if s < 2 {
        return Err(Error::UnsupportedParameter(format!("s={s} < 2")));
    }
    if max_len < 1 {
        return Err(Error::UnsupportedParameter("max_len must be >= 1".into()));
    }
    let host = c.host();
    let n = host.n();

    // Color lookup by edge index.
    let mut color_at = vec![u32::MAX; pair_count(n)];
    for (pos, idx) in host.edge_set().iter().enumerate() {
        color_at[idx] = c.color_at_position(pos);
    }

    let all = enumerate_kst_copies(host, s, t)?;
    // Only internally rainbow copies can appear in a rainbow tie.
    let mut copies = Vec::new();
    let mut copy_edges: Vec<Vec<usize>> = Vec::new();
    let mut copy_colors: Vec<Vec<u32>> = Vec::new();
    for copy in all {
        let edges: Vec<usize> = copy.edge_indices(n).collect();
        let mut colors: Vec<u32> = edges.iter().map(|&e| color_at[e]).collect();
        colors.sort_unstable();
        if colors.windows(2).all(|w| w[0] != w[1]) {
            copies.push(copy);
            copy_edges.push(edges);
            copy_colors.push(colors);
        }
    }

    let ctx = SearchCtx {
        c,
        color_at: &color_at,
        copies: &copies,
        copy_edges: &copy_edges,
        copy_colors: &copy_colors,
    };

    for len in 1..=max_len {
        let found = if threads <= 1 || copies.len() < 2 {
            let mut result = None;
            for start in 0..copies.len() {
                if let Some(tie) = ctx.search_from(start, len) {
                    result = Some(tie);
                    break;
                }
            }
            result
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool");
            // Each starting copy yields its own canonical minimum; the
            // smallest starting index that found anything wins, which is
            // exactly the sequential order.
            pool.install(|| {
                (0..copies.len())
                    .into_par_iter()
                    .filter_map(|start| ctx.search_from(start, len).map(|tie| (start, tie)))
                    .min_by_key(|&(start, _)| start)
                    .map(|(_, tie)| tie)
            })
        };
        if let Some(tie) = found {
            debug_assert!(validate_string_tie(&tie, c.host()).is_valid());
            return Ok(Some(tie));
        }
    }
    Ok(None)
}

struct SearchCtx<'a> {
    c: &'a EdgeColoring,
    color_at: &'a [u32],
    copies: &'a [crate::copies::KstCopy],
    copy_edges: &'a [Vec<usize>],
    copy_colors: &'a [Vec<u32>],
}

impl SearchCtx<'_> {
    /// Depth-first extension of a base string starting at copy `start`,
    /// targeting exactly `len` copies, in canonical order.
    fn search_from(&self, start: usize, len: usize) -> Option<StringTie> {
        let mut seq = vec![start];
        let mut used_edges: Vec<usize> = self.copy_edges[start].clone();
        let mut used_colors: Vec<u32> = self.copy_colors[start].clone();
        self.extend(&mut seq, &mut used_edges, &mut used_colors, len)
    }

    fn extend(
        &self,
        seq: &mut Vec<usize>,
        used_edges: &mut Vec<usize>,
        used_colors: &mut Vec<u32>,
        len: usize,
    ) -> Option<StringTie> {
        if seq.len() == len {
            return self.close(seq, used_edges, used_colors);
        }
        let last_interior = self.copies[*seq.last().expect("nonempty")].interior();
        for cand in 0..self.copies.len() {
            if seq.contains(&cand) {
                continue;
            }
            let copy = &self.copies[cand];
            if !copy.interior().iter().any(|v| last_interior.contains(v)) {
                continue;
            }
            if self.copy_edges[cand].iter().any(|e| used_edges.contains(e)) {
                continue;
            }
            if self.copy_colors[cand]
                .iter()
                .any(|c| used_colors.contains(c))
            {
                continue;
            }
            let edges_before = used_edges.len();
            let colors_before = used_colors.len();
            seq.push(cand);
            used_edges.extend_from_slice(&self.copy_edges[cand]);
            used_colors.extend_from_slice(&self.copy_colors[cand]);
            if let Some(tie) = self.extend(seq, used_edges, used_colors, len) {
                return Some(tie);
            }
            seq.pop();
            used_edges.truncate(edges_before);
            used_colors.truncate(colors_before);
        }
        None
    }

    /// Tries every (apex, anchor, tail) completion of the base in canonical
    /// order.
    fn close(&self, seq: &[usize], used_edges: &[usize], used_colors: &[u32]) -> Option<StringTie> {
        let host = self.c.host();
        let n = host.n();
        let first = self.copies[seq[0]].interior();
        let last = self.copies[*seq.last().expect("nonempty")].interior();
        let s = first.len();
        let tails: Vec<u32> = last
            .iter()
            .copied()
            .filter(|v| !first.contains(v))
            .collect();
        if tails.is_empty() {
            return None;
        }
        'apex: for w in 0..n as u32 {
            for &i in seq {
                if self.copies[i].interior_contains(w) {
                    continue 'apex;
                }
            }
            for anchor in first.iter().copied().combinations(s - 1) {
                for &tail in &tails {
                    if let Some(tie) =
                        self.try_completion(seq, w, &anchor, tail, used_edges, used_colors)
                    {
                        return Some(tie);
                    }
                }
            }
        }
        None
    }

    fn try_completion(
        &self,
        seq: &[usize],
        apex: u32,
        anchor: &[u32],
        tail: u32,
        used_edges: &[usize],
        used_colors: &[u32],
    ) -> Option<StringTie> {
        let host = self.c.host();
        let n = host.n();
        let mut apex_colors: Vec<u32> = Vec::with_capacity(anchor.len() + 1);
        for v in anchor.iter().copied().chain(std::iter::once(tail)) {
            if v == apex || !host.has_edge(apex.min(v), apex.max(v)) {
                return None;
            }
            let idx = edge_index(n, apex.min(v), apex.max(v));
            if used_edges.contains(&idx) {
                return None;
            }
            let color = self.color_at[idx];
            if used_colors.contains(&color) || apex_colors.contains(&color) {
                return None;
            }
            apex_colors.push(color);
        }
        Some(StringTie {
            base: KstString::new(seq.iter().map(|&i| self.copies[i].clone()).collect()),
            apex,
            anchor: anchor.to_vec(),
            tail,
        })
    }
}
