//! Mixing implication bases across essential sets.
//!
//! Implications targeting distinct essential sets are independent: pick
//! one valid source basis per essential set, keep from each source only
//! the implications whose left side closes to its paired essential set,
//! and the union is again a valid basis. [`mix_bases`] performs that
//! construction and asserts the resulting validity, so a failure here
//! means a broken invariant rather than a recoverable condition.

use crate::basis::check_basis;
use crate::error::Error;
use crate::quasi::essential_sets;
use crate::sets::{AttrSet, SetFamily};
use crate::system::{ClosureSystem, Implication, ImplicationSet};
use crate::Result;

/// One valid source basis per essential set of the target system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixSpec {
    pub sources: Vec<(AttrSet, ImplicationSet)>,
}

impl MixSpec {
    pub fn new(sources: Vec<(AttrSet, ImplicationSet)>) -> Self {
        MixSpec { sources }
    }

    /// Pairs the given bases with the essential sets of `sys` in
    /// canonical essential-set order.
    pub fn in_canonical_order(sys: &ClosureSystem, bases: Vec<ImplicationSet>) -> Result<Self> {
        let essential = essential_sets(sys)?;
        if essential.len() != bases.len() {
            return Err(Error::EssentialSetMismatch {
                detail: format!(
                    "{} essential sets but {} source bases",
                    essential.len(),
                    bases.len()
                ),
            });
        }
        Ok(MixSpec {
            sources: essential.iter().zip(bases).collect(),
        })
    }
}

/// Union over the sources of the implications targeting each paired
/// essential set. Every source must be a valid basis of `sys` and the
/// pairing must cover each essential set exactly once.
pub fn mix_bases(spec: &MixSpec, sys: &ClosureSystem) -> Result<ImplicationSet> {
    let essential = essential_sets(sys)?;
    let keys: SetFamily = spec.sources.iter().map(|(e, _)| *e).collect();
    if keys.len() != spec.sources.len() {
        return Err(Error::EssentialSetMismatch {
            detail: "duplicate essential-set key".to_string(),
        });
    }
    if keys != essential {
        return Err(Error::EssentialSetMismatch {
            detail: format!(
                "expected {} essential sets, got keys {}",
                essential.len(),
                render_family(sys, &keys)
            ),
        });
    }
    for (index, (_, sigma)) in spec.sources.iter().enumerate() {
        if !check_basis(sigma, sys)?.equivalent {
            return Err(Error::InvalidSourceBasis { index });
        }
    }

    let mixed: ImplicationSet = spec
        .sources
        .iter()
        .flat_map(|(target, sigma)| {
            sigma
                .iter()
                .filter(|imp| sys.closure(imp.lhs) == *target)
                .collect::<Vec<Implication>>()
        })
        .collect();

    let verdict = check_basis(&mixed, sys)?;
    assert!(
        verdict.equivalent,
        "mixing valid bases produced an invalid basis; this falsifies a structural invariant"
    );
    Ok(mixed)
}

fn render_family(sys: &ClosureSystem, fam: &SetFamily) -> String {
    let parts: Vec<String> = fam.iter().map(|s| sys.universe().render_set(s)).collect();
    parts.join(", ")
}
