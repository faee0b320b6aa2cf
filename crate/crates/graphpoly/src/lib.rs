//! Exact computation of graph polynomial families on complete graphs, with
//! brute-force oracles for small graphs and analytics for residue sequences.
//!
//! The crate is organised around six subsystems:
//!
//! * [`exact`] — arbitrary-precision integers/rationals and sparse
//!   multivariate Laurent polynomials with substitution and exact division.
//! * [`graph`] — small labelled graphs, edge-subset enumeration and
//!   connected-component statistics.
//! * [`brute`] — definition-faithful polynomial oracles by direct summation;
//!   ground truth for every faster path.
//! * [`engine`] — fast exact engines for the complete graph `K_n`: the
//!   Tutte rewrite via the random-cluster partition function, matching and
//!   Hermite recurrences, trivariate convolutions, closed forms, and modular
//!   sequence generators for long scans.
//! * [`modseq`] — ultimate-period detection, trivial-zero detection,
//!   Berlekamp–Massey over prime fields and exact integer-recurrence search.
//! * [`checkers`] — executable verdicts for the theorems, propositions and
//!   conjectures the engines are built to probe.

pub mod brute;
pub mod checkers;
pub mod engine;
pub mod exact;
pub mod graph;
pub mod modseq;

pub use exact::{LaurentPoly, PolyError};
pub use graph::{EdgeSubset, EnumBudget, GraphError, SmallGraph};
pub use modseq::{PeriodReport, ResidueSequence};
