//! Exact-arithmetic positional-scoring elections and Condorcet-loser analysis.
//!
//! A positional scoring rule over `m` alternatives is a nonincreasing vector
//! `s` normalized to `s(1) = 1`, `s(m) = 0`: every voter grants `s(k)` points
//! to the alternative they rank `k`-th, and the highest total wins. The Borda
//! rule (equally spaced scores) is the only such rule that can never elect a
//! Condorcet loser, an alternative that loses every head-to-head majority
//! contest. Every other rule can, and this crate makes that failure concrete:
//! given any non-Borda rule `f` and any second rule `f'`, it synthesizes an
//! explicit profile on which `f` uniquely elects a Condorcet loser while `f'`
//! does not elect it, for any `m >= 3`.
//!
//! All election arithmetic is exact (big rationals, big integers); floats
//! appear only in Monte Carlo summaries. The main entry points:
//!
//! - [`model`]: profiles, score vectors, tallies, majority margins.
//! - [`witness3`]: closed-form three-alternative witness constructions.
//! - [`reduce`]: score-vector reductions that drive the recursion on `m`.
//! - [`witnessgen`]: the full recursive synthesizer and witness verifier.
//! - [`oracle`]: exhaustive enumeration, audits, and minimality searches.
//! - [`montecarlo`]: seeded sampling of how often rules elect Condorcet losers.
//! - [`cli`]: the command-line front end (`cldom` binary).
//!
//! The `examples/` directory demonstrates each capability end to end.

pub mod cli;
pub mod error;
pub mod model;
pub mod montecarlo;
pub mod oracle;
pub mod reduce;
pub mod witness3;
pub mod witnessgen;

pub use error::{Error, Result};
pub use model::{
    format_rational, parse_rational, parse_score_vector, read_profile, write_profile, Alt,
    Alternatives, Count, LinearOrder, MajorityMatrix, Profile, Rational, ScoreVector,
};
pub use montecarlo::{
    count_selections, estimate_cl_selection, sample_profile, sample_seed, table2_sweep, Culture,
    Estimate, SelectionCounts, SweepRow,
};
pub use oracle::{
    borda_audit, dominance_scan, enumerate_anonymous_profiles, minimal_witness_search, selects_cl,
    EnumerationSpace, ScanReport, ScanRow, DEFAULT_BUDGET,
};
pub use reduce::{classify, derived_vectors, DerivedVectors, ReductionCase};
pub use witness3::{witness_three, ThreeCase, WitnessParameters};
pub use witnessgen::{verify_witness, witness, TraceStep, WitnessReport};
