//! Basis construction and validity checking.
//!
//! The canonical basis pairs every critical set with its closure. An
//! arbitrary implication set is a valid basis of a system exactly when
//! (1) each right side lies inside the closure of its left side, and
//! (2) every quasi-closed set is refuted by some implication whose left
//! side it contains and whose right side it misses. [`check_basis`]
//! decides validity through that characterization and produces a
//! witness on failure; [`check_basis_oracle`] decides it independently
//! by comparing model families over the whole powerset, so the two
//! routes can be tested against each other.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::quasi::QuasiReport;
use crate::sets::AttrSet;
use crate::system::{models_family, ClosureSystem, Implication, ImplicationSet};
use crate::Result;

/// Why an implication set fails to be a basis of a system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisViolation {
    /// An implication whose right side is not contained in the closure
    /// of its left side.
    RightSideOutsideClosure(Implication),
    /// A quasi-closed set that no implication refutes.
    UnrefutedQuasiClosed(AttrSet),
}

/// Outcome of [`check_basis`]. `equivalent` holds exactly when
/// `violation` is absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisVerdict {
    pub equivalent: bool,
    pub violation: Option<BasisViolation>,
}

impl BasisVerdict {
    fn pass() -> Self {
        BasisVerdict {
            equivalent: true,
            violation: None,
        }
    }

    fn fail(violation: BasisViolation) -> Self {
        BasisVerdict {
            equivalent: false,
            violation: Some(violation),
        }
    }
}

/// The canonical basis: one implication per critical set, mapping it to
/// its closure (the closure is kept whole on the right side).
pub fn canonical_basis(sys: &ClosureSystem) -> Result<ImplicationSet> {
    let critical = crate::quasi::critical_sets(sys)?;
    Ok(critical
        .iter()
        .map(|c| Implication::new(c, sys.closure(c)))
        .collect())
}

/// Decides whether `sigma` is a valid basis of `sys`, reporting the
/// first violation in canonical order; right-side violations are
/// checked before unrefuted quasi-closed sets.
pub fn check_basis(sigma: &ImplicationSet, sys: &ClosureSystem) -> Result<BasisVerdict> {
    for imp in sigma {
        if !imp.rhs.is_subset_of(sys.closure(imp.lhs)) {
            return Ok(BasisVerdict::fail(BasisViolation::RightSideOutsideClosure(
                imp,
            )));
        }
    }
    let quasi = crate::quasi::quasi_closed_sets(sys)?;
    for q in &quasi {
        let refuted = sigma
            .iter()
            .any(|imp| imp.lhs.is_subset_of(q) && !imp.rhs.is_subset_of(q));
        if !refuted {
            return Ok(BasisVerdict::fail(BasisViolation::UnrefutedQuasiClosed(q)));
        }
    }
    Ok(BasisVerdict::pass())
}

/// Independent validity check: enumerates the model family of `sigma`
/// over the whole powerset and compares it with the closed family.
pub fn check_basis_oracle(sigma: &ImplicationSet, sys: &ClosureSystem) -> Result<bool> {
    Ok(models_family(sigma, sys.universe())? == *sys.closed())
}

/// For a valid basis, tests that every critical set is the saturation
/// of some left side. This always holds for valid bases on a finite
/// universe; the function exists so that the fact can be exercised
/// empirically.
pub fn left_sides_saturate_to_critical(
    sigma: &ImplicationSet,
    sys: &ClosureSystem,
) -> Result<bool> {
    let verdict = check_basis(sigma, sys)?;
    if !verdict.equivalent {
        return Err(Error::NotABasis {
            detail: describe_violation(sys, verdict.violation),
        });
    }
    let report = QuasiReport::compute(sys)?;
    let saturations: Vec<AttrSet> = sigma.iter().map(|imp| report.saturate(imp.lhs)).collect();
    let holds = report.critical.iter().all(|c| saturations.contains(&c));
    Ok(holds)
}

fn describe_violation(sys: &ClosureSystem, violation: Option<BasisViolation>) -> String {
    match violation {
        Some(BasisViolation::RightSideOutsideClosure(imp)) => format!(
            "right side outside closure in {}",
            sys.universe().render_implication(imp)
        ),
        Some(BasisViolation::UnrefutedQuasiClosed(q)) => format!(
            "unrefuted quasi-closed set {}",
            sys.universe().render_set(q)
        ),
        None => "no violation".to_string(),
    }
}

/// Sum of |lhs| + |rhs| over all implications.
pub fn basis_size(sigma: &ImplicationSet) -> usize {
    sigma.iter().map(|imp| imp.size()).sum()
}

/// `sigma` partitioned by the closure of each left side: implications
/// closing to an essential set are grouped under it, the rest are kept
/// visible under `non_essential`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EssentialGrouping {
    pub by_essential: BTreeMap<AttrSet, ImplicationSet>,
    pub non_essential: ImplicationSet,
}

pub fn group_by_essential(
    sigma: &ImplicationSet,
    sys: &ClosureSystem,
) -> Result<EssentialGrouping> {
    let essential = crate::quasi::essential_sets(sys)?;
    let mut grouping = EssentialGrouping::default();
    for imp in sigma {
        let target = sys.closure(imp.lhs);
        if essential.contains(target) {
            grouping.by_essential.entry(target).or_default().insert(imp);
        } else {
            grouping.non_essential.insert(imp);
        }
    }
    Ok(grouping)
}
