//! Quasi-closed, critical, and essential sets, and the saturation
//! operator they induce.
//!
//! A set Q is quasi-closed for a system when Q is not closed but the
//! closed family stays intersection-closed after adding Q; equivalently,
//! every closed set either contains Q or meets it inside the family.
//! Adjoining all quasi-closed sets to the closed family again yields an
//! intersection-closed family, whose closure operator is the saturation
//! operator. A quasi-closed set is critical when no properly smaller
//! quasi-closed set has the same closure, and the closures of
//! quasi-closed sets are the essential sets.
//!
//! Everything here enumerates the 2^n subsets and applies the
//! definitions directly. This module is the trusted reference layer, so
//! it stays brute force behind the universe cap.

use crate::error::Error;
use crate::sets::{AttrSet, SetFamily};
use crate::system::ClosureSystem;
use crate::Result;

/// Definitional test: `q` is not closed, and every closed set either
/// contains `q` or intersects it to another closed set.
pub fn is_quasi_closed(sys: &ClosureSystem, q: AttrSet) -> bool {
    if sys.is_closed(q) {
        return false;
    }
    sys.closed()
        .iter()
        .all(|s| q.is_subset_of(s) || sys.is_closed(s & q))
}

/// All quasi-closed sets of the system, in canonical order.
pub fn quasi_closed_sets(sys: &ClosureSystem) -> Result<SetFamily> {
    sys.universe().check_enumerable()?;
    Ok(sys
        .universe()
        .subsets()
        .filter(|q| is_quasi_closed(sys, *q))
        .collect())
}

/// Quasi-closed sets that are minimal for their closure: no properly
/// smaller quasi-closed set closes to the same set.
pub fn critical_sets(sys: &ClosureSystem) -> Result<SetFamily> {
    let quasi = quasi_closed_sets(sys)?;
    Ok(critical_from_quasi(sys, &quasi))
}

fn critical_from_quasi(sys: &ClosureSystem, quasi: &SetFamily) -> SetFamily {
    let closures: Vec<AttrSet> = quasi.iter().map(|q| sys.closure(q)).collect();
    quasi
        .iter()
        .enumerate()
        .filter(|(i, q)| {
            !quasi
                .iter()
                .enumerate()
                .any(|(j, s)| s.is_proper_subset_of(*q) && closures[j] == closures[*i])
        })
        .map(|(_, q)| q)
        .collect()
}

/// Closures of the quasi-closed sets, deduplicated.
pub fn essential_sets(sys: &ClosureSystem) -> Result<SetFamily> {
    let quasi = quasi_closed_sets(sys)?;
    Ok(quasi.iter().map(|q| sys.closure(q)).collect())
}

/// Saturation of `a`: the least member of the closed-plus-quasi-closed
/// family containing `a`. Computed from the explicit family; this is
/// the reference definition.
pub fn saturation(sys: &ClosureSystem, a: AttrSet) -> Result<AttrSet> {
    let report = QuasiReport::compute(sys)?;
    Ok(report.saturate(a))
}

/// Given two systems on one universe whose closed families satisfy
/// `smaller.closed() ⊊ larger.closed()`, returns a set that is
/// quasi-closed for the smaller system and closed in the larger one:
/// the canonically first member of the difference, which by minimality
/// of cardinality has no subset in the difference.
pub fn quasi_closed_witness(smaller: &ClosureSystem, larger: &ClosureSystem) -> Result<AttrSet> {
    let diff = larger.closed().difference(smaller.closed());
    if diff.is_empty() || !smaller.closed().is_subfamily_of(larger.closed()) {
        return Err(Error::NotProperSubfamily);
    }
    let witness = diff.iter().next().expect("difference is nonempty");
    debug_assert!(is_quasi_closed(smaller, witness));
    Ok(witness)
}

/// The quasi-closed structure of a system, computed in one pass so
/// callers can reuse it: the quasi-closed sets, the critical subsets,
/// the essential sets, and the family realizing the saturation
/// operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiReport {
    pub quasi_closed: SetFamily,
    pub critical: SetFamily,
    pub essential: SetFamily,
    pub saturation_family: SetFamily,
}

impl QuasiReport {
    pub fn compute(sys: &ClosureSystem) -> Result<Self> {
        let quasi_closed = quasi_closed_sets(sys)?;
        let critical = critical_from_quasi(sys, &quasi_closed);
        let essential: SetFamily = quasi_closed.iter().map(|q| sys.closure(q)).collect();
        let saturation_family = sys.closed().union(&quasi_closed);
        Ok(QuasiReport {
            quasi_closed,
            critical,
            essential,
            saturation_family,
        })
    }

    /// Least member of the saturation family containing `a`.
    pub fn saturate(&self, a: AttrSet) -> AttrSet {
        let mut result = None;
        for s in &self.saturation_family {
            if a.is_subset_of(s) {
                result = Some(match result {
                    None => s,
                    Some(r) => r & s,
                });
            }
        }
        result.expect("the full set contains every set")
    }
}
