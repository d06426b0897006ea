//! Exact anti-Ramsey numbers `AR(K_n, K_{s,t})` by branch-and-prune over
//! normalized colorings, the distinct-plus-one-color lower-bound
//! construction, and the explicit bound calculators.

use crate::coloring::EdgeColoring;
use crate::copies::{enumerate_kst_copies, has_rainbow_copy};
use crate::error::{Error, Result};
use crate::extremal::{
    kst_closed_form, minus_one_edge_family, turan_exact_opts, ForbiddenFamily, SearchOptions,
};
use crate::graph::{pair_count, SimpleGraph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

/// Result of an exact anti-Ramsey search.
#[derive(Clone, Debug)]
pub struct ARResult {
    value: usize,
    witness: EdgeColoring,
    exact: bool,
}

impl ARResult {
    /// Assembles a result, re-verifying that the witness uses exactly
    /// `value` colors and admits no rainbow `K_{s,t}` copy.
    pub fn new(
        value: usize,
        witness: EdgeColoring,
        exact: bool,
        s: usize,
        t: usize,
    ) -> Result<Self> {
        if witness.color_count() as usize != value {
            return Err(Error::InvalidColoring(format!(
                "witness uses {} colors, claimed {value}",
                witness.color_count()
            )));
        }
        if has_rainbow_copy(&witness, s, t)?.is_some() {
            return Err(Error::InvalidColoring(
                "witness contains a rainbow copy".into(),
            ));
        }
        Ok(ARResult {
            value,
            witness,
            exact,
        })
    }

    pub fn value(&self) -> usize {
        self.value
    }

    pub fn witness(&self) -> &EdgeColoring {
        &self.witness
    }

    pub fn exact(&self) -> bool {
        self.exact
    }
}

/// The Proposition's lower-bound coloring: an extremal `{K_{s,t} - e}`-free
/// subgraph rainbow-colored, everything else in one extra color.
#[derive(Clone, Debug)]
pub struct LowerConstruction {
    pub coloring: EdgeColoring,
    /// False when the underlying Turán search ran out of budget, making the
    /// color count a best-effort lower bound only.
    pub exact: bool,
}

/// Builds the lower-bound coloring of `K_n` for the pattern `K_{s,t}`.
///
/// For `n < s + t` the rainbow condition is vacuous and the all-distinct
/// coloring is returned. Otherwise the result uses `ex(K_n, {K_{s,t}-e}) + 1`
/// colors and is verified rainbow-free on construction.
pub fn ar_lower_construction(n: usize, s: usize, t: usize) -> Result<LowerConstruction> {
    ar_lower_construction_opts(n, s, t, &SearchOptions::default())
}

pub fn ar_lower_construction_opts(
    n: usize,
    s: usize,
    t: usize,
    opts: &SearchOptions,
) -> Result<LowerConstruction> {
    check_sides(s, t)?;
    let host = SimpleGraph::complete(n)?;
    if n < s + t {
        return Ok(LowerConstruction {
            coloring: EdgeColoring::rainbow(host),
            exact: true,
        });
    }
    let family = minus_one_edge_family(s, t)?;
    let extremal = turan_exact_opts(n, &family, opts)?;
    let witness = extremal.witness();
    let fresh = extremal.value() as u32;
    let mut next = 0u32;
    let colors: Vec<u32> = host
        .edge_set()
        .iter()
        .map(|idx| {
            if witness.edge_set().contains(idx) {
                let c = next;
                next += 1;
                c
            } else {
                fresh
            }
        })
        .collect();
    let coloring = EdgeColoring::new(host, colors)?;
    if has_rainbow_copy(&coloring, s, t)?.is_some() {
        return Err(Error::InvalidColoring(
            "lower construction produced a rainbow copy".into(),
        ));
    }
    Ok(LowerConstruction {
        coloring,
        exact: extremal.exact(),
    })
}

fn check_sides(s: usize, t: usize) -> Result<()> {
    if s < 2 {
        return Err(Error::UnsupportedParameter(format!("s={s} < 2")));
    }
    if s > t {
        return Err(Error::ParameterOrder { s, t });
    }
    Ok(())
}

// ============================================================================
// Exact search
// ============================================================================

/// Computes `AR(K_n, K_{s,t})` exactly with default options.
pub fn ar_exact(n: usize, s: usize, t: usize) -> Result<ARResult> {
    ar_exact_opts(n, s, t, &SearchOptions::default())
}

/// Computes the maximum color count of a rainbow-`K_{s,t}`-free coloring of
/// `E(K_n)` and the canonical (lexicographically smallest normalized)
/// witness of that count.
///
/// Colors are assigned to edges in index order with candidates `0..=used`,
/// so color symmetry never enters the tree. Branches die when a fully
/// colored copy turns rainbow or when the remaining edges cannot beat the
/// incumbent; the representing-graph bound `ex(K_n, K_{s,t})` caps the whole
/// search.
pub fn ar_exact_opts(n: usize, s: usize, t: usize, opts: &SearchOptions) -> Result<ARResult> {
    check_sides(s, t)?;
    let host = SimpleGraph::complete(n)?;
    let m = host.edge_count();
    if n < s + t {
        // No copy exists; every coloring qualifies.
        return ARResult::new(m, EdgeColoring::rainbow(host), true, s, t);
    }

    let copies = enumerate_kst_copies(&host, s, t)?;
    let copy_edges: Vec<Vec<usize>> = copies.iter().map(|c| c.edge_indices(n).collect()).collect();
    let mut completing: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (id, edges) in copy_edges.iter().enumerate() {
        let last = *edges.iter().max().expect("copy has edges");
        completing[last].push(id);
    }

    let lower = ar_lower_construction_opts(n, s, t, opts)?;
    let lower_colors = lower.coloring.color_count() as usize;

    let rep_family = ForbiddenFamily::single_kst(s, t)?;
    let rep = turan_exact_opts(n, &rep_family, opts)?;
    // An inexact Turán value is only a lower estimate of ex and must not cap
    // the coloring search.
    let cutoff = if rep.exact() { Some(rep.value()) } else { None };

    let search = ArSearch {
        m,
        copy_edges: &copy_edges,
        completing: &completing,
        incumbent: AtomicUsize::new(lower_colors),
        cutoff,
        nodes: AtomicU64::new(0),
        budget: opts.budget,
        aborted: AtomicBool::new(false),
        saturated: AtomicBool::new(false),
        fallback: Mutex::new((lower_colors, lower.coloring.colors().to_vec())),
    };

    // Phase 1: pin down the optimum value.
    if cutoff != Some(lower_colors) {
        if opts.threads <= 1 {
            let mut colors = vec![u32::MAX; m];
            search.value_dfs(0, 0, &mut colors);
        } else {
            let tasks = search.prefix_tasks(opts.threads * 8);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .expect("thread pool");
            pool.install(|| {
                tasks.into_par_iter().for_each(|(prefix, used)| {
                    let mut colors = vec![u32::MAX; m];
                    let depth = prefix.len();
                    colors[..depth].copy_from_slice(&prefix);
                    search.value_dfs(depth, used, &mut colors);
                });
            });
        }
    }

    // The construction is a valid coloring whether or not its Turán search
    // completed, so an exhausted phase 1 alone proves the optimum.
    let exact = !search.aborted.load(Ordering::Relaxed);
    let optimum = search.incumbent.load(Ordering::Relaxed);

    if !exact {
        let (value, colors) = search.fallback.into_inner().expect("fallback lock");
        let witness = EdgeColoring::new(host, colors)?;
        return ARResult::new(value, witness, false, s, t);
    }

    // Phase 2: walk the tree in lexicographic order to the first witness
    // achieving the optimum; that coloring is the canonical one.
    let mut colors = vec![u32::MAX; m];
    let witness_colors = search
        .witness_dfs(0, 0, optimum, &mut colors)
        .expect("phase 1 proved the optimum is attainable");
    let witness = EdgeColoring::new(host, witness_colors)?;
    ARResult::new(optimum, witness, true, s, t)
}

struct ArSearch<'a> {
    m: usize,
    copy_edges: &'a [Vec<usize>],
    completing: &'a [Vec<usize>],
    incumbent: AtomicUsize,
    cutoff: Option<usize>,
    nodes: AtomicU64,
    budget: u64,
    aborted: AtomicBool,
    /// Set once the incumbent reaches the representing-graph cap; nothing
    /// better can exist, so the whole search may stop.
    saturated: AtomicBool,
    fallback: Mutex<(usize, Vec<u32>)>,
}

impl ArSearch<'_> {
    /// True if coloring edge `i` completed some copy rainbow.
    fn completes_rainbow(&self, i: usize, colors: &[u32]) -> bool {
        'copies: for &id in &self.completing[i] {
            let edges = &self.copy_edges[id];
            let mut seen = [0u32; 16];
            for (pos, &e) in edges.iter().enumerate() {
                let c = colors[e];
                for &prev in &seen[..pos] {
                    if prev == c {
                        continue 'copies;
                    }
                }
                seen[pos] = c;
            }
            return true;
        }
        false
    }

    fn value_dfs(&self, i: usize, used: usize, colors: &mut Vec<u32>) {
        if self.saturated.load(Ordering::Relaxed) || self.aborted.load(Ordering::Relaxed) {
            return;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.aborted.store(true, Ordering::Relaxed);
            return;
        }
        if i == self.m {
            let prev = self.incumbent.fetch_max(used, Ordering::Relaxed);
            if used > prev {
                let mut fb = self.fallback.lock().expect("fallback lock");
                if used > fb.0 {
                    *fb = (used, colors.clone());
                }
                if self.cutoff == Some(used) {
                    self.saturated.store(true, Ordering::Relaxed);
                }
            }
            return;
        }
        if used + (self.m - i) <= self.incumbent.load(Ordering::Relaxed) {
            return;
        }
        // New color first: drives the incumbent up quickly.
        for c in (0..=used as u32).rev() {
            colors[i] = c;
            if !self.completes_rainbow(i, colors) {
                let next_used = used + usize::from(c as usize == used);
                self.value_dfs(i + 1, next_used, colors);
            }
        }
        colors[i] = u32::MAX;
    }

    /// Lexicographic descent to the first coloring with exactly `target`
    /// colors. Sequential by design: the first hit is the canonical witness.
    fn witness_dfs(
        &self,
        i: usize,
        used: usize,
        target: usize,
        colors: &mut Vec<u32>,
    ) -> Option<Vec<u32>> {
        if i == self.m {
            debug_assert!(used <= target, "phase 2 exceeded the proven optimum");
            return (used == target).then(|| colors.clone());
        }
        if used + (self.m - i) < target {
            return None;
        }
        for c in 0..=used as u32 {
            colors[i] = c;
            if !self.completes_rainbow(i, colors) {
                let next_used = used + usize::from(c as usize == used);
                if let Some(w) = self.witness_dfs(i + 1, next_used, target, colors) {
                    return Some(w);
                }
            }
        }
        colors[i] = u32::MAX;
        None
    }

    /// Expands normalized prefixes breadth-first (in lexicographic order)
    /// until at least `want` tasks exist or the prefixes are full colorings.
    fn prefix_tasks(&self, want: usize) -> Vec<(Vec<u32>, usize)> {
        let mut tasks: Vec<(Vec<u32>, usize)> = vec![(Vec::new(), 0)];
        while tasks.len() < want && tasks[0].0.len() < self.m.min(8) {
            let mut next_level = Vec::with_capacity(tasks.len() * 2);
            for (prefix, used) in tasks {
                let i = prefix.len();
                let mut colors = vec![u32::MAX; self.m];
                colors[..i].copy_from_slice(&prefix);
                for c in 0..=used as u32 {
                    colors[i] = c;
                    if !self.completes_rainbow(i, &colors) {
                        let mut ext = prefix.clone();
                        ext.push(c);
                        next_level.push((ext, used + usize::from(c as usize == used)));
                    }
                }
            }
            tasks = next_level;
        }
        tasks
    }
}

// ============================================================================
// Bound reports
// ============================================================================

/// Every numeric bound the artifact can attach to one `(n, s, t)` row.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    /// `ex(K_n, {K_{s,t}-e}) + 1`, valid as an AR lower bound for `n >= s+t`.
    pub lower: usize,
    /// Exact anti-Ramsey value, when the search completed within budget.
    pub ar: Option<usize>,
    /// Representing-graph upper bound `ex(K_n, K_{s,t})`.
    pub upper_rep: usize,
    /// `ex(K_n, K_{s,t-1}) + slack`.
    pub upper_thm: usize,
    /// `s * (t-1) * (n-1)`, the slack read off the proof chain.
    pub slack: usize,
    /// `s * t * (n-1)`, the literal slack form, reported for transparency.
    pub slack_lemma3_literal: usize,
    /// The corollary's explicit numeric bound.
    pub upper_kst: f64,
    /// True when every component value is exact.
    pub exact: bool,
    /// True when `n < s + t`: no copy fits and `ar = C(n,2)` vacuously.
    pub vacuous: bool,
}

/// Computes the full bound report for `(n, s, t)` with default options.
pub fn theorem_bound(n: usize, s: usize, t: usize) -> Result<BoundReport> {
    theorem_bound_opts(n, s, t, &SearchOptions::default())
}

/// Assembles all bounds for one row, running the exact searches.
pub fn theorem_bound_opts(
    n: usize,
    s: usize,
    t: usize,
    opts: &SearchOptions,
) -> Result<BoundReport> {
    check_sides(s, t)?;
    if t < 2 {
        return Err(Error::UnsupportedParameter("t must be >= 2".into()));
    }
    let vacuous = n < s + t;

    let lower_fam = minus_one_edge_family(s, t)?;
    let lower_res = turan_exact_opts(n, &lower_fam, opts)?;
    let rep_res = turan_exact_opts(n, &ForbiddenFamily::single_kst(s, t)?, opts)?;
    let sub_res = turan_exact_opts(
        n,
        &ForbiddenFamily::single_kst(s.min(t - 1), s.max(t - 1))?,
        opts,
    )?;
    let slack = s * (t - 1) * (n - 1);
    let ar_res = ar_exact_opts(n, s, t, opts)?;

    let exact = lower_res.exact() && rep_res.exact() && sub_res.exact() && ar_res.exact();
    Ok(BoundReport {
        n,
        s,
        t,
        lower: lower_res.value() + 1,
        ar: ar_res.exact().then_some(ar_res.value()),
        upper_rep: rep_res.value(),
        upper_thm: sub_res.value() + slack,
        slack,
        slack_lemma3_literal: s * t * (n - 1),
        upper_kst: corollary_bound(n, s, t)?,
        exact,
        vacuous,
    })
}

/// The corollary's explicit numeric AR upper bound:
/// `kst(n, min(s, t-1), max(s, t-1)) + s*(t-1)*(n-1)`.
///
/// The pattern sides are reordered before the KST formula when `t-1 < s`,
/// since the Turán function is symmetric in the pattern's sides; at side 1
/// the closed form degenerates to the exact star bound.
pub fn corollary_bound(n: usize, s: usize, t: usize) -> Result<f64> {
    check_sides(s, t)?;
    if t < 2 {
        return Err(Error::UnsupportedParameter("t must be >= 2".into()));
    }
    let (a, b) = (s.min(t - 1), s.max(t - 1));
    Ok(kst_closed_form(n, a, b) + (s * (t - 1) * (n - 1)) as f64)
}

/// `C(n, 2)`: the vacuous-host anti-Ramsey value.
pub fn vacuous_ar_value(n: usize) -> usize {
    pair_count(n)
}
