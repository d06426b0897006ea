//! Exact desk-scale Turán and anti-Ramsey numbers for complete bipartite
//! patterns, together with the structural machinery relating them:
//! `K_{s,t}`-strings, rings and string-ties, constructive extractors, and
//! machine-checkable certificates.
//!
//! The centerpiece relations, each of which the companion CLI can verify
//! empirically on exact instances:
//!
//! * sandwich: `ex(K_n, {K_{s,t}-e}) + 1 <= AR(K_n, K_{s,t}) <= ex(K_n, K_{s,t})`
//! * slack bound: `AR(K_n, K_{s,t}) <= ex(K_n, K_{s,t-1}) + s(t-1)(n-1)`
//! * explicit growth: `AR(K_n, K_{s,t}) <= c * n^(2 - 1/s)`
//!
//! Everything is deterministic: searches return canonical
//! (lexicographically smallest) witnesses independent of thread count.

pub mod antiramsey;
pub mod cert;
pub mod coloring;
pub mod copies;
pub mod embed;
pub mod error;
pub mod extract;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod multigraph;
pub mod strings;
pub mod tie_search;

pub use antiramsey::{
    ar_exact, ar_exact_opts, ar_lower_construction, corollary_bound, theorem_bound,
    theorem_bound_opts, ARResult, BoundReport,
};
pub use cert::{validate_certificate, CertReport, Certificate, FamilySpec};
pub use coloring::EdgeColoring;
pub use copies::{enumerate_kst_copies, has_rainbow_copy, KstCopy};
pub use error::{Error, Result};
pub use extract::{
    greedy_maximal_packing, interior_path_multigraph, packing_to_ring, ring_to_string_tie,
};
pub use extremal::{
    kst_upper_bound, minus_one_edge_family, turan_exact, turan_exact_opts, ExtremalResult,
    ForbiddenFamily, SearchOptions,
};
pub use graph::{edge_at, edge_index, pair_count, EdgeSet, SimpleGraph, MAX_VERTICES};
pub use multigraph::{edge_multiplicity, simplify_multigraph, Multigraph};
pub use strings::{
    validate_packing, validate_ring, validate_string, validate_string_tie, KstRing, KstString,
    Packing, StringTie, ValidationReport,
};
pub use tie_search::{find_rainbow_string_tie, find_rainbow_string_tie_threads};
