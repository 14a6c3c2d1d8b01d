//! Exact computation of the higher Frobenius-Schur indicators of the
//! Drinfel'd double of a symmetric group.
//!
//! The crate is organised around a small pipeline:
//!
//! * [`perm`] — permutations, conjugacy classes and centralizers of `S_n`;
//! * [`cyclo`] — exact arithmetic in cyclotomic fields `Q(zeta_N)`;
//! * [`chartab`] — irreducible character tables of centralizer subgroups;
//! * [`indicator`] — the class-bucketed indicator formula and the
//!   divisor-of-exponent reduction;
//! * [`equivalence`] — grouping of induced characters with identical
//!   indicator vectors and the zero audit;
//! * [`hopf`] — a brute-force Hopf-algebra oracle for small groups;
//! * [`witness`] — constructive non-emptiness certificates;
//! * [`report`] / [`checkpoint`] — emitters and the resumable store used by
//!   the chunked large-`n` mode.

pub mod chartab;
pub mod checkpoint;
pub mod cyclo;
pub mod equivalence;
pub mod hopf;
pub mod indicator;
pub mod perm;
pub mod report;
pub mod witness;

pub use chartab::CharacterTable;
pub use cyclo::Cyclotomic;
pub use indicator::{GammaSet, IndicatorMatrix};
pub use perm::{GroupContext, Permutation, Subgroup};
