//! Token graphs `F_k(G)`, multiset graphs `M_k(G)`, and explicit Hamiltonian
//! cycles of `M_2` over generalized fan graphs `F_{m,n} = E_m + P_n` and
//! joins `G_1 + G_2`.
//!
//! The crate is split along the lines of the work it does:
//!
//! * [`graph`]: simple graphs with 1-based ids and the base families.
//! * [`multiset`]: k-multisets, k-subsets and the symmetric-difference graphs built on them.
//! * [`fan`]: the constructive cycles, cut-set certificates and the overall decision.
//! * [`oracle`]: independent verification and exhaustive search.
//! * [`explorer`]: scans over small labeled graphs.
//! * [`format`] and [`graph6`]: text formats.

pub mod error;
pub mod explorer;
pub mod fan;
pub mod format;
pub mod graph;
pub mod graph6;
pub mod multiset;
pub mod oracle;

pub use error::{Error, Result};
pub use fan::{CycleSeq, Decision};
pub use graph::{FanLabel, FanLabeling, Graph, Vertex};
pub use multiset::{LabeledBigGraph, MultisetVertex, TokenKind};
pub use oracle::SearchOutcome;
