//! Harness library behind the `arlab` binary: seeded samplers, instance
//! generators, and the lemma/bound verification runs.

pub mod gen;
pub mod sample;
pub mod verify;

pub use gen::{
    instance_seed, kst_decomposition, random_dense_packing, random_ring, RingGenOptions,
};
pub use sample::{random_coloring, repair_rainbow_free, sample_rainbow_free_coloring};
pub use verify::{
    render_csv, verify_bounds, verify_lemma1, verify_lemma2, verify_lemma3, BoundsOutput, Outcome,
    RunParams, RunStats, VerificationRun,
};
