//! `K_{s,t}`-strings, rings, string-ties and packings, plus their
//! validators.
//!
//! Validators never fail with an exception: malformed structures produce a
//! report listing every violated clause. Degenerate-but-valid cases (rings
//! of length 1 or 2, apexes sitting inside an exterior) surface as warnings.

use crate::copies::KstCopy;
use crate::graph::{pair_count, EdgeSet, SimpleGraph};
use std::fmt;

/// An ordered sequence `B_1..B_k` of edge-disjoint copies whose consecutive
/// interiors intersect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KstString {
    pub copies: Vec<KstCopy>,
}

impl KstString {
    pub fn new(copies: Vec<KstCopy>) -> Self {
        KstString { copies }
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }
}

/// A string whose first and last interiors also intersect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KstRing {
    pub string: KstString,
}

impl KstRing {
    pub fn new(copies: Vec<KstCopy>) -> Self {
        KstRing {
            string: KstString::new(copies),
        }
    }

    pub fn copies(&self) -> &[KstCopy] {
        &self.string.copies
    }

    pub fn len(&self) -> usize {
        self.string.len()
    }

    pub fn is_empty(&self) -> bool {
        self.string.is_empty()
    }
}

/// A string plus an apex vertex outside every interior, joined to `s - 1`
/// vertices of the first interior (the anchor) and to one vertex of the
/// last interior that avoids the first (the tail).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringTie {
    pub base: KstString,
    pub apex: u32,
    pub anchor: Vec<u32>,
    pub tail: u32,
}

impl StringTie {
    /// Edges the apex contributes: anchor edges plus the tail edge.
    pub fn apex_edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.anchor
            .iter()
            .copied()
            .chain(std::iter::once(self.tail))
            .map(|v| (self.apex.min(v), self.apex.max(v)))
    }
}

/// A collection of pairwise edge-disjoint copies in a host, optionally
/// claimed maximal.
#[derive(Clone, Debug)]
pub struct Packing {
    pub host: SimpleGraph,
    pub copies: Vec<KstCopy>,
    pub s: usize,
    pub t: usize,
    pub maximal: bool,
}

// ============================================================================
// Reports
// ============================================================================

/// Outcome of validating a structure: empty `violations` means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
    warnings: Vec<Warning>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn warnings(&self) -> &[Warning] {
        &self.warnings
    }

    fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    fn warn(&mut self, w: Warning) {
        self.warnings.push(w);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")?;
        } else {
            write!(f, "invalid:")?;
            for v in &self.violations {
                write!(f, " [{v}]")?;
            }
        }
        for w in &self.warnings {
            write!(f, " (warning: {w})")?;
        }
        Ok(())
    }
}

/// A violated structural clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyString,
    /// Copy part sizes differ from the first copy's.
    SizeMismatch {
        copy: usize,
        interior: usize,
        exterior: usize,
    },
    /// Copies `first` and `second` share an implied edge.
    EdgesOverlap {
        first: usize,
        second: usize,
    },
    /// Interiors of copies `position` and `position + 1` are disjoint.
    MissingOverlap {
        position: usize,
    },
    /// First and last interiors of a ring are disjoint.
    MissingWrapOverlap,
    /// An implied edge of `copy` is absent from the host.
    OutsideHost {
        copy: usize,
        edge: (u32, u32),
    },
    /// A copy vertex is not a host vertex.
    VertexOutOfRange {
        copy: usize,
        vertex: u32,
    },
    /// The apex lies in the interior of base copy `copy`.
    ApexInInterior {
        copy: usize,
    },
    ApexOutOfRange {
        vertex: u32,
    },
    AnchorSize {
        expected: usize,
        found: usize,
    },
    AnchorOutsideFirstInterior {
        vertex: u32,
    },
    TailNotInLastInterior {
        vertex: u32,
    },
    TailInFirstInterior {
        vertex: u32,
    },
    /// A required apex edge is absent from the host.
    MissingApexEdge {
        edge: (u32, u32),
    },
    /// A packing claims maximality but another disjoint copy exists.
    NotMaximal {
        interior: Vec<u32>,
        exterior: Vec<u32>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyString => write!(f, "string has no copies"),
            Violation::SizeMismatch {
                copy,
                interior,
                exterior,
            } => write!(
                f,
                "copy {copy} has part sizes ({interior}, {exterior}) unlike the first copy"
            ),
            Violation::EdgesOverlap { first, second } => {
                write!(f, "copies {first} and {second} share an edge")
            }
            Violation::MissingOverlap { position } => write!(
                f,
                "interiors {position} and {} do not intersect",
                position + 1
            ),
            Violation::MissingWrapOverlap => {
                write!(f, "first and last interiors do not intersect")
            }
            Violation::OutsideHost { copy, edge } => {
                write!(
                    f,
                    "copy {copy} edge ({}, {}) missing from host",
                    edge.0, edge.1
                )
            }
            Violation::VertexOutOfRange { copy, vertex } => {
                write!(f, "copy {copy} vertex {vertex} out of host range")
            }
            Violation::ApexInInterior { copy } => {
                write!(f, "apex lies in interior of copy {copy}")
            }
            Violation::ApexOutOfRange { vertex } => write!(f, "apex {vertex} out of host range"),
            Violation::AnchorSize { expected, found } => {
                write!(f, "anchor has {found} vertices, expected {expected}")
            }
            Violation::AnchorOutsideFirstInterior { vertex } => {
                write!(f, "anchor vertex {vertex} not in the first interior")
            }
            Violation::TailNotInLastInterior { vertex } => {
                write!(f, "tail {vertex} not in the last interior")
            }
            Violation::TailInFirstInterior { vertex } => {
                write!(f, "tail {vertex} lies in the first interior")
            }
            Violation::MissingApexEdge { edge } => {
                write!(f, "apex edge ({}, {}) missing from host", edge.0, edge.1)
            }
            Violation::NotMaximal { interior, exterior } => {
                write!(
                    f,
                    "not maximal: disjoint copy X={interior:?} Y={exterior:?} exists"
                )
            }
        }
    }
}

/// A non-fatal observation about a valid structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// Rings of length 1 (identity overlap) or 2 (wrap equals the
    /// consecutive overlap) satisfy the definition trivially.
    DegenerateRing { length: usize },
    /// The apex sits inside the exterior of base copy `copy`; permitted,
    /// but its apex edges then reuse copy edges.
    ApexInExterior { copy: usize },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::DegenerateRing { length } => write!(f, "degenerate ring of length {length}"),
            Warning::ApexInExterior { copy } => {
                write!(f, "apex lies in the exterior of copy {copy}")
            }
        }
    }
}

// ============================================================================
// Validators
// ============================================================================

fn sorted_intersects(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Checks every string clause: non-emptiness, uniform part sizes, host
/// containment, pairwise edge-disjointness and consecutive interior overlap.
pub fn validate_string(s: &KstString, host: &SimpleGraph) -> ValidationReport {
    let mut report = ValidationReport::default();
    validate_string_into(s, host, &mut report);
    report
}

fn validate_string_into(s: &KstString, host: &SimpleGraph, report: &mut ValidationReport) {
    if s.copies.is_empty() {
        report.push(Violation::EmptyString);
        return;
    }
    let s0 = s.copies[0].interior().len();
    let t0 = s.copies[0].exterior().len();
    let n = host.n();

    let mut edge_sets: Vec<EdgeSet> = Vec::with_capacity(s.copies.len());
    for (i, copy) in s.copies.iter().enumerate() {
        if copy.interior().len() != s0 || copy.exterior().len() != t0 {
            report.push(Violation::SizeMismatch {
                copy: i,
                interior: copy.interior().len(),
                exterior: copy.exterior().len(),
            });
        }
        let mut set = EdgeSet::new(pair_count(n));
        let mut in_range = true;
        for &v in copy.interior().iter().chain(copy.exterior()) {
            if v as usize >= n {
                report.push(Violation::VertexOutOfRange { copy: i, vertex: v });
                in_range = false;
            }
        }
        if in_range {
            for (u, v) in copy.edge_pairs() {
                if !host.has_edge(u, v) {
                    report.push(Violation::OutsideHost {
                        copy: i,
                        edge: (u, v),
                    });
                }
                set.insert(crate::graph::edge_index(n, u, v));
            }
        }
        edge_sets.push(set);
    }
    for i in 0..edge_sets.len() {
        for j in (i + 1)..edge_sets.len() {
            if edge_sets[i].intersects(&edge_sets[j]) {
                report.push(Violation::EdgesOverlap {
                    first: i,
                    second: j,
                });
            }
        }
    }
    for i in 0..s.copies.len().saturating_sub(1) {
        if !sorted_intersects(s.copies[i].interior(), s.copies[i + 1].interior()) {
            report.push(Violation::MissingOverlap { position: i });
        }
    }
}

/// String validity plus the wrap clause `x_1 ∩ x_k ≠ ∅`.
pub fn validate_ring(r: &KstRing, host: &SimpleGraph) -> ValidationReport {
    let mut report = validate_string(&r.string, host);
    let k = r.len();
    if k == 0 {
        return report;
    }
    if k >= 2 && !sorted_intersects(r.copies()[0].interior(), r.copies()[k - 1].interior()) {
        report.push(Violation::MissingWrapOverlap);
    }
    if k <= 2 {
        report.warn(Warning::DegenerateRing { length: k });
    }
    report
}

/// Base-string validity plus the apex clauses: the apex avoids every base
/// interior, the anchor is `s - 1` vertices of the first interior, the tail
/// is a last-interior vertex outside the first interior, and all apex edges
/// exist in the host.
pub fn validate_string_tie(tie: &StringTie, host: &SimpleGraph) -> ValidationReport {
    let mut report = validate_string(&tie.base, host);
    if tie.base.copies.is_empty() {
        return report;
    }
    let n = host.n();
    if tie.apex as usize >= n {
        report.push(Violation::ApexOutOfRange { vertex: tie.apex });
        return report;
    }
    for (i, copy) in tie.base.copies.iter().enumerate() {
        if copy.interior_contains(tie.apex) {
            report.push(Violation::ApexInInterior { copy: i });
        }
        if copy.exterior_contains(tie.apex) {
            report.warn(Warning::ApexInExterior { copy: i });
        }
    }
    let s = tie.base.copies[0].interior().len();
    let first = tie.base.copies[0].interior();
    let last = tie.base.copies[tie.base.copies.len() - 1].interior();
    if tie.anchor.len() != s - 1 {
        report.push(Violation::AnchorSize {
            expected: s - 1,
            found: tie.anchor.len(),
        });
    }
    for &v in &tie.anchor {
        if !first.contains(&v) {
            report.push(Violation::AnchorOutsideFirstInterior { vertex: v });
        }
    }
    if !last.contains(&tie.tail) {
        report.push(Violation::TailNotInLastInterior { vertex: tie.tail });
    } else if first.contains(&tie.tail) {
        report.push(Violation::TailInFirstInterior { vertex: tie.tail });
    }
    for (u, v) in tie.apex_edges() {
        if u == v || v as usize >= n || !host.has_edge(u, v) {
            report.push(Violation::MissingApexEdge { edge: (u, v) });
        }
    }
    report
}

/// Pairwise edge-disjointness and host containment; when the packing claims
/// maximality, re-checks it by scanning for a disjoint leftover copy.
pub fn validate_packing(p: &Packing) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = p.host.n();
    let mut used = EdgeSet::new(pair_count(n));
    for (i, copy) in p.copies.iter().enumerate() {
        if copy.interior().len() != p.s || copy.exterior().len() != p.t {
            report.push(Violation::SizeMismatch {
                copy: i,
                interior: copy.interior().len(),
                exterior: copy.exterior().len(),
            });
        }
        for &v in copy.interior().iter().chain(copy.exterior()) {
            if v as usize >= n {
                report.push(Violation::VertexOutOfRange { copy: i, vertex: v });
            }
        }
        let mut overlapped = false;
        for (u, v) in copy.edge_pairs() {
            if (v as usize) < n {
                if !p.host.has_edge(u, v) {
                    report.push(Violation::OutsideHost {
                        copy: i,
                        edge: (u, v),
                    });
                }
                if !used.insert(crate::graph::edge_index(n, u, v)) {
                    overlapped = true;
                }
            }
        }
        if overlapped {
            // Attribute the overlap to the first earlier copy that shares an edge.
            for j in 0..i {
                let shares = p.copies[j]
                    .edge_pairs()
                    .any(|e1| p.copies[i].edge_pairs().any(|e2| e1 == e2));
                if shares {
                    report.push(Violation::EdgesOverlap {
                        first: j,
                        second: i,
                    });
                    break;
                }
            }
        }
    }
    if p.maximal && report.is_valid() {
        if let Ok(all) = crate::copies::enumerate_kst_copies(&p.host, p.s, p.t) {
            for copy in all {
                let disjoint = copy.edge_indices(n).all(|idx| !used.contains(idx));
                if disjoint {
                    report.push(Violation::NotMaximal {
                        interior: copy.interior().to_vec(),
                        exterior: copy.exterior().to_vec(),
                    });
                    break;
                }
            }
        }
    }
    report
}
