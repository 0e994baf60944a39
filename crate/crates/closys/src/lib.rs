//! Analysis of finite closure systems and their implication bases.
//!
//! The crate models a closure system as a universe plus an explicit
//! intersection-closed family of closed sets, and provides:
//!
//! - closure operators realized from implication sets (forward
//!   chaining) and from closed-set families (intersection of closed
//!   supersets), with the model-family enumeration connecting the two;
//! - the quasi-closed, critical, and essential sets of a system and the
//!   saturation operator they induce;
//! - construction of the canonical basis, validity checking of an
//!   arbitrary implication set against a system (with witnesses for
//!   failures), and an independent brute-force validity check;
//! - mixing of valid bases across essential sets;
//! - exhaustive searches for all optimal (minimum total size) bases,
//!   with per-essential-set right-side mass reporting;
//! - a plain-text document format and deterministic report
//!   serialization backing the `closys` command-line tool.
//!
//! Everything enumerative is guarded by explicit universe caps and, for
//! the optimal searches, an evaluation budget, so misuse fails loudly
//! instead of running forever.

pub mod basis;
pub mod document;
mod error;
pub mod mixing;
pub mod optimal;
pub mod quasi;
pub mod random;
pub mod report;
pub mod sets;
pub mod system;

pub use basis::{
    basis_size, canonical_basis, check_basis, check_basis_oracle, group_by_essential,
    left_sides_saturate_to_critical, BasisVerdict, BasisViolation, EssentialGrouping,
};
pub use document::{parse_set_literal, DocumentBody, SystemDocument};
pub use error::Error;
pub use mixing::{mix_bases, MixSpec};
pub use optimal::{
    enumerate_optimal_bases, enumerate_optimal_bases_unrestricted,
    left_sides_are_minimal_generators, verify_right_sum_constancy, OptimalReport, SearchLimits,
    SearchSpace,
};
pub use quasi::{
    critical_sets, essential_sets, is_quasi_closed, quasi_closed_sets, quasi_closed_witness,
    saturation, QuasiReport,
};
pub use report::{serialize_report, Report};
pub use sets::{
    intersection_closure, is_intersection_closed, AttrSet, SetFamily, Universe,
    DEFAULT_ENUMERATION_CAP, MAX_ELEMENTS,
};
pub use system::{models_family, ClosureSystem, Implication, ImplicationSet};

pub type Result<T> = std::result::Result<T, Error>;
