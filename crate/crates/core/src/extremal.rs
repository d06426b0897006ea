//! Exact Turán numbers by branch-and-bound over edge subsets, the `H - e`
//! family generator, and the explicit Kővári–Sós–Turán upper bound.

use crate::embed::{embeds_naive, PatternMatcher};
use crate::error::{Error, Result};
use crate::graph::{edge_at, pair_count, EdgeSet, SimpleGraph};
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

/// Knobs shared by the exhaustive searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Node budget; exceeding it yields a best-so-far result with
    /// `exact = false`.
    pub budget: u64,
    /// Worker threads. The result (value and canonical witness) is
    /// schedule-independent, so any thread count returns the same answer.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 100_000_000,
            threads: 1,
        }
    }
}

// ============================================================================
// Forbidden families
// ============================================================================

/// A non-empty family of forbidden patterns, reduced so that no member is a
/// subgraph of another. Containment is non-induced subgraph embedding;
/// isolated pattern vertices are ignored.
#[derive(Clone, Debug)]
pub struct ForbiddenFamily {
    members: Vec<SimpleGraph>,
}

impl ForbiddenFamily {
    /// Builds a family, deduplicating and dropping members implied by a
    /// smaller member (if `A` embeds into `B`, forbidding `A` already
    /// forbids `B`).
    pub fn new(members: Vec<SimpleGraph>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidFamily("empty family".into()));
        }
        let mut kept: Vec<SimpleGraph> = Vec::new();
        'outer: for m in members {
            for k in &kept {
                if embeds_naive(&m, k) {
                    // An existing member embeds into m; m is redundant.
                    continue 'outer;
                }
            }
            // Remove any previously kept member that m embeds into.
            kept.retain(|k| !embeds_naive(k, &m));
            kept.push(m);
        }
        Ok(ForbiddenFamily { members: kept })
    }

    /// The single pattern `K_{s,t}` (parts `{0..s}` and `{s..s+t}`).
    pub fn single_kst(s: usize, t: usize) -> Result<Self> {
        if s < 1 || t < 1 {
            return Err(Error::UnsupportedParameter(
                "pattern sides must be >= 1".into(),
            ));
        }
        Self::new(vec![complete_bipartite(s, t)])
    }

    pub fn members(&self) -> &[SimpleGraph] {
        &self.members
    }

    /// True if some member has no edges, making every graph contain it.
    pub fn is_vacuous(&self) -> bool {
        self.members.iter().any(|m| m.edge_count() == 0)
    }
}

fn complete_bipartite(s: usize, t: usize) -> SimpleGraph {
    let mut edges = Vec::with_capacity(s * t);
    for i in 0..s as u32 {
        for j in 0..t as u32 {
            edges.push((i, s as u32 + j));
        }
    }
    SimpleGraph::from_edges(s + t, &edges).expect("bipartite pattern is simple")
}

/// The family `{K_{s,t} - e}`: a single reduced pattern, since all edge
/// deletions of a complete bipartite graph are isomorphic. The lowest-index
/// edge is deleted; the pattern keeps its isolated vertices (embedding
/// ignores them).
pub fn minus_one_edge_family(s: usize, t: usize) -> Result<ForbiddenFamily> {
    if s < 1 || t < 1 {
        return Err(Error::UnsupportedParameter(
            "pattern sides must be >= 1".into(),
        ));
    }
    let full = complete_bipartite(s, t);
    let edges: Vec<(u32, u32)> = full.edges().skip(1).collect();
    ForbiddenFamily::new(vec![
        SimpleGraph::from_edges(s + t, &edges).expect("subset of a simple graph")
    ])
}

// ============================================================================
// Exact search
// ============================================================================

/// Result of an extremal search: the best edge count found, a canonical
/// witness, and whether the search completed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    value: usize,
    witness: SimpleGraph,
    exact: bool,
}

impl ExtremalResult {
    /// Assembles a result, independently re-verifying that the witness has
    /// `value` edges and avoids every family member (naive checker, separate
    /// from the search path). Members without edges are vacuous and skipped.
    pub fn new(
        value: usize,
        witness: SimpleGraph,
        exact: bool,
        family: &ForbiddenFamily,
    ) -> Result<Self> {
        if witness.edge_count() != value {
            return Err(Error::InvalidGraph(format!(
                "witness has {} edges, claimed {value}",
                witness.edge_count()
            )));
        }
        for m in family.members() {
            if m.edge_count() > 0 && embeds_naive(&witness, m) {
                return Err(Error::InvalidGraph(
                    "witness contains a forbidden member".into(),
                ));
            }
        }
        Ok(ExtremalResult {
            value,
            witness,
            exact,
        })
    }

    pub fn value(&self) -> usize {
        self.value
    }

    pub fn witness(&self) -> &SimpleGraph {
        &self.witness
    }

    pub fn exact(&self) -> bool {
        self.exact
    }
}

/// Computes `ex(K_n, family)` exactly with default options.
pub fn turan_exact(n: usize, family: &ForbiddenFamily) -> Result<ExtremalResult> {
    turan_exact_opts(n, family, &SearchOptions::default())
}

/// Computes `ex(K_n, family)`: the maximum edge count of a spanning subgraph
/// of `K_n` containing no family member, plus the lexicographically smallest
/// witness of that size.
///
/// Depth-first include/exclude over edges in index order, pruning branches
/// that cannot beat the incumbent and include-branches whose newest edge
/// completes a forbidden embedding.
pub fn turan_exact_opts(
    n: usize,
    family: &ForbiddenFamily,
    opts: &SearchOptions,
) -> Result<ExtremalResult> {
    if n < 1 {
        return Err(Error::UnsupportedParameter("n must be >= 1".into()));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            limit: crate::graph::MAX_VERTICES,
        });
    }
    if family.is_vacuous() {
        // Every graph contains the edgeless member; the extremal value is 0
        // by convention and no witness re-verification applies.
        return Ok(ExtremalResult {
            value: 0,
            witness: SimpleGraph::empty(n)?,
            exact: true,
        });
    }
    let matchers: Vec<PatternMatcher> = family.members().iter().map(PatternMatcher::new).collect();
    let m = pair_count(n);
    let search = TuranSearch {
        n,
        m,
        matchers: &matchers,
        incumbent: AtomicUsize::new(0),
        nodes: AtomicU64::new(0),
        budget: opts.budget,
        aborted: AtomicBool::new(false),
    };

    let root = TuranState {
        next: 0,
        count: 0,
        adj: vec![0u64; n],
        included: EdgeSet::new(m),
    };

    let best = if opts.threads <= 1 {
        let mut best = Best::none();
        search.dfs(root, true, &mut best);
        best
    } else {
        let mut tasks = Vec::new();
        let depth = split_depth(m, opts.threads);
        search.collect_tasks(root, depth, &mut tasks);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        let bests: Vec<Best> = pool.install(|| {
            tasks
                .into_par_iter()
                .map(|t| {
                    let mut best = Best::none();
                    search.dfs(t, false, &mut best);
                    best
                })
                .collect()
        });
        bests.into_iter().fold(Best::none(), Best::merge)
    };

    let exact = !search.aborted.load(Ordering::Relaxed);
    // A truncated search may never reach a leaf; the empty subgraph is
    // always family-free and serves as the best-so-far witness.
    let witness_set = best.witness.unwrap_or_else(|| EdgeSet::new(m));
    let witness = SimpleGraph::from_edge_indices(n, &witness_set)?;
    ExtremalResult::new(witness_set.len(), witness, exact, family)
}

fn split_depth(m: usize, threads: usize) -> usize {
    let mut d = 0;
    while d < m && d < 14 && (1usize << d) < threads * 8 {
        d += 1;
    }
    d
}

#[derive(Clone)]
struct TuranState {
    next: usize,
    count: usize,
    adj: Vec<u64>,
    included: EdgeSet,
}

struct Best {
    value: usize,
    witness: Option<EdgeSet>,
}

impl Best {
    fn none() -> Self {
        Best {
            value: 0,
            witness: None,
        }
    }

    fn offer(&mut self, value: usize, witness: &EdgeSet) {
        if self.witness.is_none() || value > self.value {
            self.value = value;
            self.witness = Some(witness.clone());
        }
    }

    /// Max value, ties broken by lexicographically smaller edge set. The
    /// operation is associative and commutative, so parallel reduction is
    /// schedule-independent.
    fn merge(a: Best, b: Best) -> Best {
        match (&a.witness, &b.witness) {
            (None, _) => b,
            (_, None) => a,
            (Some(wa), Some(wb)) => {
                if b.value > a.value || (b.value == a.value && edge_set_lex_less(wb, wa)) {
                    b
                } else {
                    a
                }
            }
        }
    }
}

/// True if `a` precedes `b` as ascending index sequences.
fn edge_set_lex_less(a: &EdgeSet, b: &EdgeSet) -> bool {
    let mut ia = a.iter();
    let mut ib = b.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return false,
            (None, Some(_)) => return true,
            (Some(_), None) => return false,
            (Some(x), Some(y)) => {
                if x != y {
                    return x < y;
                }
            }
        }
    }
}

struct TuranSearch<'a> {
    n: usize,
    m: usize,
    matchers: &'a [PatternMatcher],
    incumbent: AtomicUsize,
    nodes: AtomicU64,
    budget: u64,
    aborted: AtomicBool,
}

impl TuranSearch<'_> {
    /// `tight` selects the sequential pruning rule (`potential <= incumbent`);
    /// parallel tasks keep tie-capable branches alive (`potential <
    /// incumbent`) so the canonical witness never depends on the schedule.
    fn dfs(&self, mut state: TuranState, tight: bool, best: &mut Best) {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.aborted.store(true, Ordering::Relaxed);
            return;
        }
        if state.next == self.m {
            if state.count > best.value || best.witness.is_none() {
                best.offer(state.count, &state.included);
                self.incumbent.fetch_max(state.count, Ordering::Relaxed);
            }
            return;
        }
        let potential = state.count + (self.m - state.next);
        let inc = self.incumbent.load(Ordering::Relaxed);
        if potential < inc || (tight && potential == inc && best.witness.is_some()) {
            return;
        }
        let idx = state.next;
        let (u, v) = edge_at(self.n, idx);

        // Include branch first: equal-size witnesses are then visited in
        // ascending lexicographic order, so the first optimum found is the
        // canonical one.
        state.adj[u as usize] |= 1 << v;
        state.adj[v as usize] |= 1 << u;
        let blocked = self
            .matchers
            .iter()
            .any(|p| p.embeds_touching(&state.adj, u, v));
        if !blocked {
            state.included.insert(idx);
            state.count += 1;
            state.next += 1;
            self.dfs(state.clone(), tight, best);
            state.next -= 1;
            state.count -= 1;
            state.included.remove(idx);
        }
        state.adj[u as usize] &= !(1 << v);
        state.adj[v as usize] &= !(1 << u);

        state.next += 1;
        self.dfs(state, tight, best);
    }

    /// Expands the root into all viable states at `depth`, in DFS order.
    fn collect_tasks(&self, state: TuranState, depth: usize, out: &mut Vec<TuranState>) {
        if state.next == depth || state.next == self.m {
            out.push(state);
            return;
        }
        let idx = state.next;
        let (u, v) = edge_at(self.n, idx);
        let mut with = state.clone();
        with.adj[u as usize] |= 1 << v;
        with.adj[v as usize] |= 1 << u;
        let blocked = self
            .matchers
            .iter()
            .any(|p| p.embeds_touching(&with.adj, u, v));
        if !blocked {
            with.included.insert(idx);
            with.count += 1;
            with.next += 1;
            self.collect_tasks(with, depth, out);
        }
        let mut without = state;
        without.next += 1;
        self.collect_tasks(without, depth, out);
    }
}

// ============================================================================
// The Kővári–Sós–Turán bound
// ============================================================================

/// Explicit classical bound on `ex(K_n, K_{s,t})` for `2 <= s <= t`:
/// `((t-1)^(1/s) * (n-s+1) * n^(1-1/s) + (s-1) * n) / 2`.
///
/// Monotone in `n`. The concrete constant is fixed here; only its existence
/// is classical.
pub fn kst_upper_bound(n: usize, s: usize, t: usize) -> Result<f64> {
    if s < 2 {
        return Err(Error::UnsupportedParameter(format!("s={s} < 2")));
    }
    if s > t {
        return Err(Error::ParameterOrder { s, t });
    }
    Ok(kst_closed_form(n, s, t))
}

/// The raw closed form, also valid at `s = 1` where it degenerates to the
/// exact star bound `(t-1) * n / 2`. Used by the corollary composition when
/// the reduced exterior drops below the interior.
pub(crate) fn kst_closed_form(n: usize, s: usize, t: usize) -> f64 {
    let nf = n as f64;
    let sf = s as f64;
    let tf = t as f64;
    0.5 * ((tf - 1.0).powf(1.0 / sf) * (nf - sf + 1.0) * nf.powf(1.0 - 1.0 / sf) + (sf - 1.0) * nf)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_reduction_drops_supergraphs() {
        // P_3 embeds into P_4, so the family reduces to {P_3}.
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let fam = ForbiddenFamily::new(vec![p4, p3.clone()]).unwrap();
        assert_eq!(fam.members().len(), 1);
        assert_eq!(fam.members()[0], p3);
    }

    #[test]
    fn minus_one_edge_of_c4_is_p4() {
        let fam = minus_one_edge_family(2, 2).unwrap();
        assert_eq!(fam.members().len(), 1);
        let pat = &fam.members()[0];
        assert_eq!(pat.edge_count(), 3);
        // Degree sequence of P_4 over active vertices: 1,1,2,2.
        let mut degs: Vec<usize> = (0..4).map(|v| pat.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
    }

    #[test]
    fn minus_one_edge_of_k23_is_single_pattern() {
        let fam = minus_one_edge_family(2, 3).unwrap();
        assert_eq!(fam.members().len(), 1);
        assert_eq!(fam.members()[0].edge_count(), 5);
        // All five vertices stay active after one deletion.
        assert!((0..5).all(|v| fam.members()[0].degree(v) > 0));
    }

    #[test]
    fn minus_one_edge_of_k11_is_vacuous() {
        let fam = minus_one_edge_family(1, 1).unwrap();
        assert!(fam.is_vacuous());
        let res = turan_exact(4, &fam).unwrap();
        assert_eq!(res.value(), 0);
        assert!(res.exact());
    }

    #[test]
    fn turan_small_host_is_complete() {
        // n < s + t: no copy fits, K_n itself is the witness.
        let fam = ForbiddenFamily::single_kst(2, 3).unwrap();
        let res = turan_exact(4, &fam).unwrap();
        assert_eq!(res.value(), 6);
        assert!(res.witness().is_complete());
    }

    #[test]
    fn turan_c4_known_values() {
        let fam = ForbiddenFamily::single_kst(2, 2).unwrap();
        assert_eq!(turan_exact(4, &fam).unwrap().value(), 4);
        assert_eq!(turan_exact(5, &fam).unwrap().value(), 6);
    }

    #[test]
    fn turan_p4_and_p3_values() {
        assert_eq!(
            turan_exact(4, &minus_one_edge_family(2, 2).unwrap())
                .unwrap()
                .value(),
            3
        );
        let p3 = ForbiddenFamily::single_kst(2, 1).unwrap();
        assert_eq!(turan_exact(4, &p3).unwrap().value(), 2);
    }

    #[test]
    fn turan_parallel_matches_sequential() {
        let fam = ForbiddenFamily::single_kst(2, 2).unwrap();
        let seq = turan_exact_opts(
            6,
            &fam,
            &SearchOptions {
                budget: 1 << 40,
                threads: 1,
            },
        )
        .unwrap();
        let par = turan_exact_opts(
            6,
            &fam,
            &SearchOptions {
                budget: 1 << 40,
                threads: 4,
            },
        )
        .unwrap();
        assert_eq!(seq.value(), par.value());
        assert_eq!(seq.witness(), par.witness());
    }

    #[test]
    fn budget_exhaustion_reports_inexact() {
        let fam = ForbiddenFamily::single_kst(2, 2).unwrap();
        let res = turan_exact_opts(
            6,
            &fam,
            &SearchOptions {
                budget: 10,
                threads: 1,
            },
        )
        .unwrap();
        assert!(!res.exact());
    }

    #[test]
    fn kst_bound_values() {
        assert_eq!(kst_upper_bound(16, 2, 2).unwrap(), 38.0);
        assert!(matches!(
            kst_upper_bound(5, 3, 2),
            Err(Error::ParameterOrder { .. })
        ));
        // Bound dominates the exact value.
        let fam = ForbiddenFamily::single_kst(2, 2).unwrap();
        let exact = turan_exact(4, &fam).unwrap().value() as f64;
        assert!(kst_upper_bound(4, 2, 2).unwrap() >= exact);
    }

    #[test]
    fn kst_bound_monotone_in_n() {
        let mut prev = 0.0;
        for n in 4..40 {
            let b = kst_upper_bound(n, 2, 3).unwrap();
            assert!(b >= prev);
            prev = b;
        }
    }
}
