//! Element universes, attribute sets with bit-vector semantics, and
//! canonically ordered set families.
//!
//! Every other module works over these three types. An [`AttrSet`] is a
//! plain bit mask; the [`Universe`] fixes which bit belongs to which
//! element name and how sets are rendered. A [`SetFamily`] keeps its
//! members deduplicated and in canonical order: ascending cardinality,
//! ties broken lexicographically by the bit vector in universe order
//! (the set containing the earlier element comes first).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::Error;
use crate::Result;

/// Hard limit imposed by the u64 bit representation.
pub const MAX_ELEMENTS: usize = 64;

/// Default cap on universes fed to the 2^n enumeration operations.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// An ordered collection of distinct element names. The position of a
/// name in the declaration fixes its bit in every [`AttrSet`].
#[derive(Debug, Clone)]
pub struct Universe {
    names: Vec<String>,
    enumeration_cap: usize,
}

impl Universe {
    /// Builds a universe from its element names, in declaration order.
    ///
    /// Fails on an empty list, an empty name, a duplicate name, or more
    /// than [`MAX_ELEMENTS`] names.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if names.len() > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge {
                size: names.len(),
                cap: MAX_ELEMENTS,
            });
        }
        let mut seen = BTreeSet::new();
        let mut owned = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if name.is_empty() {
                return Err(Error::InvalidName {
                    name: String::new(),
                    line: 0,
                });
            }
            if !seen.insert(name.to_string()) {
                return Err(Error::DuplicateElement {
                    name: name.to_string(),
                });
            }
            owned.push(name.to_string());
        }
        Ok(Universe {
            names: owned,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        })
    }

    /// Replaces the cap consulted by the subset-enumeration operations.
    /// Values above [`MAX_ELEMENTS`] are clamped.
    pub fn with_enumeration_cap(mut self, cap: usize) -> Self {
        self.enumeration_cap = cap.min(MAX_ELEMENTS);
        self
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one element
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn enumeration_cap(&self) -> usize {
        self.enumeration_cap
    }

    /// Errs when this universe is too large for a 2^n subset enumeration.
    pub fn check_enumerable(&self) -> Result<()> {
        if self.len() > self.enumeration_cap {
            Err(Error::UniverseTooLarge {
                size: self.len(),
                cap: self.enumeration_cap,
            })
        } else {
            Ok(())
        }
    }

    /// The full set X.
    pub fn full_set(&self) -> AttrSet {
        AttrSet::full(self.len())
    }

    /// Builds a set from element names.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<AttrSet> {
        let mut bits = 0u64;
        for name in names {
            let name = name.as_ref();
            match self.index_of(name) {
                Some(i) => bits |= 1 << i,
                None => {
                    return Err(Error::UnknownElement {
                        name: name.to_string(),
                        line: None,
                    })
                }
            }
        }
        Ok(AttrSet { bits })
    }

    /// Iterates over all 2^n subsets in raw mask order. Callers that
    /// need canonical order must sort; callers that need the cap must
    /// call [`Universe::check_enumerable`] first.
    pub fn subsets(&self) -> impl Iterator<Item = AttrSet> {
        let n = self.len();
        debug_assert!(n < MAX_ELEMENTS);
        (0..(1u64 << n)).map(|bits| AttrSet { bits })
    }

    /// Renders a set as `{a b}` in universe order.
    pub fn render_set(&self, set: AttrSet) -> String {
        let names: Vec<&str> = set.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", names.join(" "))
    }

    /// Renders an implication as `{a} -> {b c}`.
    pub fn render_implication(&self, imp: crate::system::Implication) -> String {
        format!(
            "{} -> {}",
            self.render_set(imp.lhs),
            self.render_set(imp.rhs)
        )
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Universe {}

/// A subset of a universe, stored as a bit mask. Bit i corresponds to
/// the i-th declared element. Comparison is the canonical family order:
/// cardinality first, then lexicographic by bit vector in universe
/// order with the earlier element sorting first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AttrSet {
    bits: u64,
}

impl AttrSet {
    pub const EMPTY: AttrSet = AttrSet { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        AttrSet { bits }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            AttrSet { bits: u64::MAX }
        } else {
            AttrSet {
                bits: (1u64 << n) - 1,
            }
        }
    }

    pub fn singleton(index: usize) -> Self {
        AttrSet { bits: 1 << index }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, index: usize) -> bool {
        self.bits >> index & 1 == 1
    }

    pub fn with(self, index: usize) -> Self {
        AttrSet {
            bits: self.bits | (1 << index),
        }
    }

    pub fn without(self, index: usize) -> Self {
        AttrSet {
            bits: self.bits & !(1 << index),
        }
    }

    pub fn is_subset_of(self, other: AttrSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset_of(self, other: AttrSet) -> bool {
        self.bits != other.bits && self.is_subset_of(other)
    }

    /// Indices of the members, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl BitAnd for AttrSet {
    type Output = AttrSet;
    fn bitand(self, rhs: AttrSet) -> AttrSet {
        AttrSet {
            bits: self.bits & rhs.bits,
        }
    }
}

impl BitOr for AttrSet {
    type Output = AttrSet;
    fn bitor(self, rhs: AttrSet) -> AttrSet {
        AttrSet {
            bits: self.bits | rhs.bits,
        }
    }
}

impl Sub for AttrSet {
    type Output = AttrSet;
    fn sub(self, rhs: AttrSet) -> AttrSet {
        AttrSet {
            bits: self.bits & !rhs.bits,
        }
    }
}

impl Ord for AttrSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.bits ^ other.bits;
            if diff == 0 {
                Ordering::Equal
            } else if self.bits >> diff.trailing_zeros() & 1 == 1 {
                // self owns the earliest differing element
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for AttrSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AttrSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.bits)
    }
}

/// A deduplicated collection of sets over one universe, kept in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SetFamily {
    sets: Vec<AttrSet>,
}

impl SetFamily {
    pub fn empty() -> Self {
        SetFamily::default()
    }

    pub fn from_sets<I: IntoIterator<Item = AttrSet>>(sets: I) -> Self {
        let mut sets: Vec<AttrSet> = sets.into_iter().collect();
        sets.sort_unstable();
        sets.dedup();
        SetFamily { sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: AttrSet) -> bool {
        self.sets.binary_search(&set).is_ok()
    }

    /// Inserts a set, keeping canonical order. Returns false when the
    /// set was already present.
    pub fn insert(&mut self, set: AttrSet) -> bool {
        match self.sets.binary_search(&set) {
            Ok(_) => false,
            Err(pos) => {
                self.sets.insert(pos, set);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = AttrSet> + '_ {
        self.sets.iter().copied()
    }

    pub fn as_slice(&self) -> &[AttrSet] {
        &self.sets
    }

    /// Members of `self` missing from `other`, in canonical order.
    pub fn difference(&self, other: &SetFamily) -> SetFamily {
        SetFamily::from_sets(self.iter().filter(|s| !other.contains(*s)))
    }

    /// Union of the two families.
    pub fn union(&self, other: &SetFamily) -> SetFamily {
        SetFamily::from_sets(self.iter().chain(other.iter()))
    }

    /// True when every member of `self` belongs to `other`.
    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.iter().all(|s| other.contains(s))
    }
}

impl FromIterator<AttrSet> for SetFamily {
    fn from_iter<I: IntoIterator<Item = AttrSet>>(iter: I) -> Self {
        SetFamily::from_sets(iter)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = AttrSet;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, AttrSet>>;
    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter().copied()
    }
}

/// Smallest superset of `fam` plus the full set that is closed under
/// pairwise intersection. Idempotent.
pub fn intersection_closure(fam: &SetFamily, universe: &Universe) -> SetFamily {
    let mut family: BTreeSet<AttrSet> = fam.iter().collect();
    family.insert(universe.full_set());
    let mut work: Vec<AttrSet> = family.iter().copied().collect();
    while let Some(s) = work.pop() {
        let snapshot: Vec<AttrSet> = family.iter().copied().collect();
        for t in snapshot {
            let meet = s & t;
            if family.insert(meet) {
                work.push(meet);
            }
        }
    }
    SetFamily::from_sets(family)
}

/// True iff `fam` contains the full set and every pairwise intersection.
pub fn is_intersection_closed(fam: &SetFamily, universe: &Universe) -> bool {
    closure_violation(fam, universe).is_none()
}

/// Why a family fails to be intersection-closed, if it does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureViolation {
    MissingFullSet,
    MissingMeet { left: AttrSet, right: AttrSet },
}

/// First violation of intersection-closedness in canonical pair order,
/// or `None` when the family is a valid closed-set family.
pub fn closure_violation(fam: &SetFamily, universe: &Universe) -> Option<ClosureViolation> {
    if !fam.contains(universe.full_set()) {
        return Some(ClosureViolation::MissingFullSet);
    }
    let sets = fam.as_slice();
    for (i, &s) in sets.iter().enumerate() {
        for &t in &sets[i + 1..] {
            if !fam.contains(s & t) {
                return Some(ClosureViolation::MissingMeet { left: s, right: t });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe(names: &[&str]) -> Universe {
        Universe::new(names).unwrap()
    }

    fn set(u: &Universe, names: &[&str]) -> AttrSet {
        u.set_of(names).unwrap()
    }

    #[test]
    fn universe_rejects_bad_inputs() {
        assert_eq!(Universe::new::<&str>(&[]), Err(Error::EmptyUniverse));
        assert!(matches!(
            Universe::new(&["a", "a"]),
            Err(Error::DuplicateElement { .. })
        ));
        assert!(matches!(
            Universe::new(&["a", ""]),
            Err(Error::InvalidName { .. })
        ));
        let too_many: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        assert!(matches!(
            Universe::new(&too_many),
            Err(Error::UniverseTooLarge { .. })
        ));
    }

    #[test]
    fn canonical_order_is_cardinality_then_lexicographic() {
        let u = universe(&["a", "b", "c"]);
        let a = set(&u, &["a"]);
        let b = set(&u, &["b"]);
        let c = set(&u, &["c"]);
        let ab = set(&u, &["a", "b"]);
        let ac = set(&u, &["a", "c"]);
        let bc = set(&u, &["b", "c"]);
        assert!(a < b && b < c);
        assert!(c < ab, "cardinality dominates");
        assert!(ab < ac && ac < bc);
    }

    #[test]
    fn canonical_order_prefers_earlier_elements_across_gaps() {
        let u = universe(&["a", "b", "c", "d"]);
        let ad = set(&u, &["a", "d"]);
        let bc = set(&u, &["b", "c"]);
        assert!(ad < bc, "dictionary order on element sequences");
    }

    #[test]
    fn family_orders_and_dedups() {
        let u = universe(&["a", "b"]);
        let fam = SetFamily::from_sets(vec![
            u.full_set(),
            set(&u, &["a"]),
            AttrSet::EMPTY,
            set(&u, &["a"]),
        ]);
        let listed: Vec<AttrSet> = fam.iter().collect();
        assert_eq!(listed, vec![AttrSet::EMPTY, set(&u, &["a"]), u.full_set()]);
    }

    #[test]
    fn closure_of_empty_family_is_full_set_only() {
        let u = universe(&["a", "b"]);
        let closed = intersection_closure(&SetFamily::empty(), &u);
        assert_eq!(closed, SetFamily::from_sets(vec![u.full_set()]));
    }

    #[test]
    fn closure_of_two_singletons_adds_meet_and_full_set() {
        let u = universe(&["a", "b"]);
        let fam = SetFamily::from_sets(vec![set(&u, &["a"]), set(&u, &["b"])]);
        let closed = intersection_closure(&fam, &u);
        let expected = SetFamily::from_sets(vec![
            AttrSet::EMPTY,
            set(&u, &["a"]),
            set(&u, &["b"]),
            u.full_set(),
        ]);
        assert_eq!(closed, expected);
    }

    #[test]
    fn closure_of_overlapping_pairs() {
        let u = universe(&["a", "b", "c"]);
        let fam = SetFamily::from_sets(vec![set(&u, &["a", "b"]), set(&u, &["b", "c"])]);
        let closed = intersection_closure(&fam, &u);
        let expected = SetFamily::from_sets(vec![
            set(&u, &["b"]),
            set(&u, &["a", "b"]),
            set(&u, &["b", "c"]),
            u.full_set(),
        ]);
        assert_eq!(closed, expected);
    }

    #[test]
    fn intersection_closed_checks() {
        let u2 = universe(&["a", "b"]);
        let chain = SetFamily::from_sets(vec![AttrSet::EMPTY, set(&u2, &["a"]), u2.full_set()]);
        assert!(is_intersection_closed(&chain, &u2));

        let no_empty =
            SetFamily::from_sets(vec![set(&u2, &["a"]), set(&u2, &["b"]), u2.full_set()]);
        assert!(!is_intersection_closed(&no_empty, &u2));

        let u3 = universe(&["a", "b", "c"]);
        let missing_meet = SetFamily::from_sets(vec![
            set(&u3, &["a", "b"]),
            set(&u3, &["b", "c"]),
            u3.full_set(),
        ]);
        assert!(!is_intersection_closed(&missing_meet, &u3));
        assert_eq!(
            closure_violation(&missing_meet, &u3),
            Some(ClosureViolation::MissingMeet {
                left: set(&u3, &["a", "b"]),
                right: set(&u3, &["b", "c"]),
            })
        );
    }

    #[test]
    fn render_set_uses_universe_order() {
        let u = universe(&["b", "a"]);
        let s = set(&u, &["a", "b"]);
        assert_eq!(u.render_set(s), "{b a}");
        assert_eq!(u.render_set(AttrSet::EMPTY), "{}");
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let names: Vec<String> = (0..30).map(|i| format!("e{i}")).collect();
        let u = Universe::new(&names).unwrap();
        assert_eq!(
            u.check_enumerable(),
            Err(Error::UniverseTooLarge { size: 30, cap: 24 })
        );
        let raised = u.with_enumeration_cap(32);
        assert!(raised.check_enumerable().is_ok());
    }
}
