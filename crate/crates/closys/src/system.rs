//! Implications, the families they model, and closure systems backed by
//! an explicit intersection-closed family.
//!
//! A set S obeys an implication A -> B when A is not contained in S or B
//! is contained in S. The sets obeying every member of an implication
//! set form an intersection-closed family containing the full set, so
//! every implication set describes a closure system; conversely a
//! closure system realizes its closure operator by intersecting the
//! closed supersets of the argument.

use crate::error::Error;
use crate::sets::{closure_violation, AttrSet, ClosureViolation, SetFamily, Universe};
use crate::Result;

/// An ordered pair of sets, written `lhs -> rhs`. No relationship
/// between the two sides is required by the type itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Implication {
    pub lhs: AttrSet,
    pub rhs: AttrSet,
}

impl Implication {
    pub fn new(lhs: AttrSet, rhs: AttrSet) -> Self {
        Implication { lhs, rhs }
    }

    /// True iff `s` obeys this implication: lhs not contained in s, or
    /// rhs contained in s.
    pub fn obeyed_by(&self, s: AttrSet) -> bool {
        !self.lhs.is_subset_of(s) || self.rhs.is_subset_of(s)
    }

    /// |lhs| + |rhs|, the implication's contribution to a basis size.
    pub fn size(&self) -> usize {
        self.lhs.len() + self.rhs.len()
    }
}

/// A deduplicated set of implications in canonical order (by lhs, then
/// rhs, under the family order).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ImplicationSet {
    imps: Vec<Implication>,
}

impl ImplicationSet {
    pub fn new() -> Self {
        ImplicationSet::default()
    }

    pub fn from_implications<I: IntoIterator<Item = Implication>>(imps: I) -> Self {
        let mut imps: Vec<Implication> = imps.into_iter().collect();
        imps.sort_unstable();
        imps.dedup();
        ImplicationSet { imps }
    }

    pub fn len(&self) -> usize {
        self.imps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.imps.is_empty()
    }

    pub fn contains(&self, imp: Implication) -> bool {
        self.imps.binary_search(&imp).is_ok()
    }

    pub fn insert(&mut self, imp: Implication) -> bool {
        match self.imps.binary_search(&imp) {
            Ok(_) => false,
            Err(pos) => {
                self.imps.insert(pos, imp);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Implication> + '_ {
        self.imps.iter().copied()
    }

    pub fn as_slice(&self) -> &[Implication] {
        &self.imps
    }

    /// True iff `s` obeys every implication.
    pub fn obeyed_by(&self, s: AttrSet) -> bool {
        self.imps.iter().all(|imp| imp.obeyed_by(s))
    }

    /// Least superset of `start` obeying every implication: forward
    /// chaining to the fixpoint, scanning in canonical order. The
    /// fixpoint is unique, so the scan order only affects the work done.
    pub fn close(&self, start: AttrSet) -> AttrSet {
        let mut current = start;
        loop {
            let mut changed = false;
            for imp in &self.imps {
                if imp.lhs.is_subset_of(current) && !imp.rhs.is_subset_of(current) {
                    current = current | imp.rhs;
                    changed = true;
                }
            }
            if !changed {
                return current;
            }
        }
    }
}

impl FromIterator<Implication> for ImplicationSet {
    fn from_iter<I: IntoIterator<Item = Implication>>(iter: I) -> Self {
        ImplicationSet::from_implications(iter)
    }
}

impl<'a> IntoIterator for &'a ImplicationSet {
    type Item = Implication;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Implication>>;
    fn into_iter(self) -> Self::IntoIter {
        self.imps.iter().copied()
    }
}

/// All subsets of the universe obeying every implication, in canonical
/// order. This is the deliberately brute-force 2^n enumeration the rest
/// of the crate is validated against; the universe cap guards it.
pub fn models_family(sigma: &ImplicationSet, universe: &Universe) -> Result<SetFamily> {
    universe.check_enumerable()?;
    Ok(universe.subsets().filter(|s| sigma.obeyed_by(*s)).collect())
}

/// A universe together with an intersection-closed family of closed
/// sets containing the full set.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosureSystem {
    universe: Universe,
    closed: SetFamily,
}

impl ClosureSystem {
    /// Validates that `closed` contains the full set and every pairwise
    /// intersection; the error names the first offending pair.
    pub fn new(universe: Universe, closed: SetFamily) -> Result<Self> {
        match closure_violation(&closed, &universe) {
            None => Ok(ClosureSystem { universe, closed }),
            Some(ClosureViolation::MissingFullSet) => Err(Error::MissingFullSet),
            Some(ClosureViolation::MissingMeet { left, right }) => {
                Err(Error::NotIntersectionClosed {
                    left: universe.render_set(left),
                    right: universe.render_set(right),
                    meet: universe.render_set(left & right),
                })
            }
        }
    }

    /// The system whose closed sets are the models of `sigma`.
    pub fn from_implications(universe: Universe, sigma: &ImplicationSet) -> Result<Self> {
        let closed = models_family(sigma, &universe)?;
        Ok(ClosureSystem { universe, closed })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn closed(&self) -> &SetFamily {
        &self.closed
    }

    /// Closure of `a`: the intersection of every closed superset. The
    /// full set is always closed, so the result is well defined and is
    /// the least closed superset of `a`.
    pub fn closure(&self, a: AttrSet) -> AttrSet {
        let mut result = self.universe.full_set();
        for s in &self.closed {
            if a.is_subset_of(s) {
                result = result & s;
            }
        }
        result
    }

    pub fn is_closed(&self, a: AttrSet) -> bool {
        self.closed.contains(a)
    }
}
