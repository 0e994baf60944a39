//! Exhaustive search for optimal bases (minimum total size), and the
//! empirical checks built on top of it.
//!
//! Two search spaces are implemented. The restricted space assigns one
//! implication group to every critical set C, drawing left sides from
//! the minimum-cardinality sets saturating to C and right sides from
//! the nonempty subsets of the closure of C; a group is a single
//! implication except for the critical set generated by the empty set,
//! where the right side may also be split across several
//! empty-left-side implications at no size cost. The
//! unrestricted space ranges over arbitrary sets of implications with
//! nonempty right sides contained in the closure of their left side.
//! The restricted space is the production search; the unrestricted one
//! exists to cross-check it on tiny universes, and if the two ever
//! disagree the unrestricted result is the correct one.
//!
//! Both searches enumerate every basis attaining the minimum, so the
//! reports can state whether the per-essential-set right-side mass is
//! the same across all optimal bases.

use std::collections::BTreeMap;

use crate::basis::basis_size;
use crate::error::Error;
use crate::quasi::QuasiReport;
use crate::sets::AttrSet;
use crate::system::{ClosureSystem, Implication, ImplicationSet};
use crate::Result;

/// Universes above this size are rejected outright: coverage masks use
/// u128 bits, one per quasi-closed set, and 2^7 - 1 still fits.
const HARD_SEARCH_CAP: usize = 7;

/// Which candidate space a search explored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchSpace {
    Restricted,
    Unrestricted,
}

impl SearchSpace {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchSpace::Restricted => "restricted",
            SearchSpace::Unrestricted => "unrestricted",
        }
    }
}

/// Caps for the optimal-basis searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest universe the search will accept.
    pub max_universe: usize,
    /// Number of candidate evaluations before the search gives up and
    /// reports a partial result.
    pub budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_universe: 5,
            budget: 10_000_000,
        }
    }
}

/// Result of an optimal-basis search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalReport {
    pub space: SearchSpace,
    /// False when the budget ran out; the rest of the report then
    /// describes only the part of the space that was visited.
    pub complete: bool,
    pub evaluations: u64,
    pub optimal_size: usize,
    /// Every basis attaining the minimum, in canonical order.
    pub optimal_bases: Vec<ImplicationSet>,
    /// Per essential set, the sum of right-side cardinalities over the
    /// implications whose left side closes to it, taken from the first
    /// optimal basis.
    pub right_sums: BTreeMap<AttrSet, usize>,
    /// True when `right_sums` is identical across all optimal bases.
    pub constancy: bool,
    /// True when the multiset of left-side saturations per essential
    /// set is identical across all optimal bases. Reported, not
    /// asserted: nothing established here guarantees it.
    pub saturation_profiles_agree: bool,
}

// Everything the searches need, flattened to plain masks. Tables are
// indexed by the subset's bit pattern.
struct SearchContext {
    n: usize,
    closure: Vec<u64>,
    saturate: Vec<u64>,
    quasi: Vec<u64>,
    criticals: Vec<u64>,
    full_cover: u128,
}

impl SearchContext {
    fn build(sys: &ClosureSystem, report: &QuasiReport) -> Self {
        let n = sys.universe().len();
        let size = 1usize << n;
        let mut closure = Vec::with_capacity(size);
        let mut saturate = Vec::with_capacity(size);
        for bits in 0..size as u64 {
            let a = AttrSet::from_bits(bits);
            closure.push(sys.closure(a).bits());
            saturate.push(report.saturate(a).bits());
        }
        let quasi: Vec<u64> = report.quasi_closed.iter().map(|q| q.bits()).collect();
        let criticals: Vec<u64> = report.critical.iter().map(|c| c.bits()).collect();
        let full_cover = if quasi.is_empty() {
            0
        } else {
            u128::MAX >> (128 - quasi.len())
        };
        SearchContext {
            n,
            closure,
            saturate,
            quasi,
            criticals,
            full_cover,
        }
    }

    // Which quasi-closed sets the implication lhs -> rhs refutes.
    fn cover(&self, lhs: u64, rhs: u64) -> u128 {
        let mut mask = 0u128;
        for (j, &q) in self.quasi.iter().enumerate() {
            if lhs & !q == 0 && rhs & !q != 0 {
                mask |= 1 << j;
            }
        }
        mask
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    lhs: u64,
    rhs: u64,
    size: usize,
    cover: u128,
}

impl Candidate {
    fn implication(&self) -> Implication {
        Implication::new(AttrSet::from_bits(self.lhs), AttrSet::from_bits(self.rhs))
    }
}

fn candidate_order(a: &Candidate, b: &Candidate) -> std::cmp::Ordering {
    let (al, bl) = (AttrSet::from_bits(a.lhs), AttrSet::from_bits(b.lhs));
    let (ar, br) = (AttrSet::from_bits(a.rhs), AttrSet::from_bits(b.rhs));
    al.cmp(&bl).then(ar.cmp(&br))
}

// The implications assigned to one critical set. Usually a single
// implication; for the critical set generated by the empty set, a
// group of empty-left-side implications whose disjoint right sides
// split one set B. Such a split has the same total size and refutes
// exactly the same quasi-closed sets as the merged implication
// {} -> B, so every block partition yields another optimal basis.
#[derive(Debug, Clone)]
struct CandidateGroup {
    imps: Vec<Candidate>,
    size: usize,
    cover: u128,
}

impl CandidateGroup {
    fn single(cand: Candidate) -> Self {
        CandidateGroup {
            size: cand.size,
            cover: cand.cover,
            imps: vec![cand],
        }
    }
}

// All partitions of the elements of `mask` into disjoint nonempty
// blocks, each partition sorted canonically.
fn block_partitions(mask: u64) -> Vec<Vec<u64>> {
    let elements: Vec<u64> = AttrSet::from_bits(mask).iter().map(|i| 1u64 << i).collect();
    let mut out = Vec::new();
    let mut blocks: Vec<u64> = Vec::new();
    fn recurse(elements: &[u64], pos: usize, blocks: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if pos == elements.len() {
            let mut sorted = blocks.clone();
            sorted.sort_unstable_by_key(|&b| AttrSet::from_bits(b));
            out.push(sorted);
            return;
        }
        for i in 0..blocks.len() {
            blocks[i] |= elements[pos];
            recurse(elements, pos + 1, blocks, out);
            blocks[i] &= !elements[pos];
        }
        blocks.push(elements[pos]);
        recurse(elements, pos + 1, blocks, out);
        blocks.pop();
    }
    recurse(&elements, 0, &mut blocks, &mut out);
    out
}

// All nonempty submasks of `mask`, unsorted.
fn nonempty_submasks(mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut sub = mask;
    while sub != 0 {
        out.push(sub);
        sub = (sub - 1) & mask;
    }
    out
}

fn check_caps(sys: &ClosureSystem, limits: &SearchLimits) -> Result<()> {
    let n = sys.universe().len();
    let cap = limits.max_universe.min(HARD_SEARCH_CAP);
    if n > cap {
        return Err(Error::UniverseTooLarge { size: n, cap });
    }
    Ok(())
}

/// Searches the restricted candidate space for every basis of minimum
/// total size.
pub fn enumerate_optimal_bases(
    sys: &ClosureSystem,
    limits: &SearchLimits,
) -> Result<OptimalReport> {
    check_caps(sys, limits)?;
    let report = QuasiReport::compute(sys)?;
    let ctx = SearchContext::build(sys, &report);

    // Candidate groups per critical set: minimum-cardinality left sides
    // saturating to the critical set, crossed with the nonempty subsets
    // of its closure. When the minimum left side is empty, the right
    // side may additionally be split into disjoint blocks.
    let mut per_critical: Vec<Vec<CandidateGroup>> = Vec::with_capacity(ctx.criticals.len());
    for &c in &ctx.criticals {
        let mut lhs_cands: Vec<u64> = nonempty_submasks(c)
            .into_iter()
            .chain(std::iter::once(0))
            .filter(|&a| ctx.saturate[a as usize] == c)
            .collect();
        let min_card = lhs_cands
            .iter()
            .map(|a| a.count_ones())
            .min()
            .expect("a critical set saturates to itself");
        lhs_cands.retain(|a| a.count_ones() == min_card);
        lhs_cands.sort_unstable_by_key(|&a| AttrSet::from_bits(a));

        let closure_of_c = ctx.closure[c as usize];
        let mut groups = Vec::new();
        for rhs in nonempty_submasks(closure_of_c) {
            if min_card == 0 {
                for blocks in block_partitions(rhs) {
                    let imps: Vec<Candidate> = blocks
                        .iter()
                        .map(|&b| Candidate {
                            lhs: 0,
                            rhs: b,
                            size: b.count_ones() as usize,
                            cover: ctx.cover(0, b),
                        })
                        .collect();
                    groups.push(CandidateGroup {
                        size: rhs.count_ones() as usize,
                        cover: ctx.cover(0, rhs),
                        imps,
                    });
                }
            } else {
                for &lhs in &lhs_cands {
                    groups.push(CandidateGroup::single(Candidate {
                        lhs,
                        rhs,
                        size: (lhs.count_ones() + rhs.count_ones()) as usize,
                        cover: ctx.cover(lhs, rhs),
                    }));
                }
            }
        }
        groups.sort_by(|a, b| {
            let ia: Vec<Implication> = a.imps.iter().map(Candidate::implication).collect();
            let ib: Vec<Implication> = b.imps.iter().map(Candidate::implication).collect();
            ia.cmp(&ib)
        });
        per_critical.push(groups);
    }

    // Suffix aggregates for pruning.
    let k = per_critical.len();
    let mut suffix_possible = vec![0u128; k + 1];
    let mut suffix_min_size = vec![0usize; k + 1];
    for i in (0..k).rev() {
        let possible: u128 = per_critical[i].iter().fold(0, |acc, g| acc | g.cover);
        let min_size = per_critical[i]
            .iter()
            .map(|g| g.size)
            .min()
            .unwrap_or(usize::MAX);
        suffix_possible[i] = suffix_possible[i + 1] | possible;
        suffix_min_size[i] = suffix_min_size[i + 1].saturating_add(min_size);
    }

    let mut search = AssignmentSearch {
        per_critical: &per_critical,
        suffix_possible: &suffix_possible,
        suffix_min_size: &suffix_min_size,
        full_cover: ctx.full_cover,
        budget: limits.budget,
        evaluations: 0,
        exhausted: false,
        best: usize::MAX,
        found: Vec::new(),
        chosen: Vec::new(),
    };
    search.dfs(0, 0, 0);

    let complete = !search.exhausted;
    let evaluations = search.evaluations;
    let (best, found) = (search.best, search.found);
    Ok(finish_report(
        SearchSpace::Restricted,
        &ctx,
        complete,
        evaluations,
        best,
        found,
    ))
}

struct AssignmentSearch<'a> {
    per_critical: &'a [Vec<CandidateGroup>],
    suffix_possible: &'a [u128],
    suffix_min_size: &'a [usize],
    full_cover: u128,
    budget: u64,
    evaluations: u64,
    exhausted: bool,
    best: usize,
    found: Vec<(usize, Vec<Candidate>)>,
    chosen: Vec<Candidate>,
}

impl AssignmentSearch<'_> {
    fn dfs(&mut self, i: usize, cover: u128, size: usize) {
        if self.exhausted {
            return;
        }
        if i == self.per_critical.len() {
            self.evaluations += 1;
            if self.evaluations > self.budget {
                self.exhausted = true;
                return;
            }
            if cover == self.full_cover {
                if size < self.best {
                    self.best = size;
                    self.found.clear();
                }
                if size == self.best {
                    self.found.push((size, self.chosen.clone()));
                }
            }
            return;
        }
        if cover | self.suffix_possible[i] != self.full_cover {
            return;
        }
        if self.suffix_min_size[i] != usize::MAX
            && size.saturating_add(self.suffix_min_size[i]) > self.best
        {
            return;
        }
        for idx in 0..self.per_critical[i].len() {
            let (group_cover, group_size, imp_count) = {
                let group = &self.per_critical[i][idx];
                self.chosen.extend(group.imps.iter().copied());
                (group.cover, group.size, group.imps.len())
            };
            self.dfs(i + 1, cover | group_cover, size + group_size);
            self.chosen.truncate(self.chosen.len() - imp_count);
            if self.exhausted {
                return;
            }
        }
    }
}

/// Searches the unrestricted space: every set of implications with a
/// nonempty right side contained in the closure of its left side. Only
/// practical on tiny universes; used to cross-check the restricted
/// search.
pub fn enumerate_optimal_bases_unrestricted(
    sys: &ClosureSystem,
    limits: &SearchLimits,
) -> Result<OptimalReport> {
    check_caps(sys, limits)?;
    let report = QuasiReport::compute(sys)?;
    let ctx = SearchContext::build(sys, &report);

    // Implications that refute nothing can never appear in a basis of
    // minimum size (dropping one keeps validity and sheds weight), so
    // the pool keeps only useful candidates.
    let mut pool = Vec::new();
    for lhs in 0..(1u64 << ctx.n) {
        for rhs in nonempty_submasks(ctx.closure[lhs as usize]) {
            let cover = ctx.cover(lhs, rhs);
            if cover != 0 {
                pool.push(Candidate {
                    lhs,
                    rhs,
                    size: (lhs.count_ones() + rhs.count_ones()) as usize,
                    cover,
                });
            }
        }
    }
    pool.sort_unstable_by(candidate_order);

    // The canonical basis is a full cover, so its size bounds the
    // optimum from above.
    let canonical: ImplicationSet = ctx
        .criticals
        .iter()
        .map(|&c| {
            Implication::new(
                AttrSet::from_bits(c),
                AttrSet::from_bits(ctx.closure[c as usize]),
            )
        })
        .collect();

    let covering: Vec<Vec<usize>> = (0..ctx.quasi.len())
        .map(|j| {
            pool.iter()
                .enumerate()
                .filter(|(_, c)| c.cover >> j & 1 == 1)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let mut search = CoverSearch {
        pool: &pool,
        covering: &covering,
        full_cover: ctx.full_cover,
        budget: limits.budget,
        evaluations: 0,
        exhausted: false,
        best: basis_size(&canonical),
        found: Vec::new(),
        chosen: Vec::new(),
        excluded: vec![false; pool.len()],
    };
    search.dfs(0, 0);

    let complete = !search.exhausted;
    let evaluations = search.evaluations;
    let (best, found) = (search.best, search.found);
    Ok(finish_report(
        SearchSpace::Unrestricted,
        &ctx,
        complete,
        evaluations,
        best,
        found,
    ))
}

struct CoverSearch<'a> {
    pool: &'a [Candidate],
    covering: &'a [Vec<usize>],
    full_cover: u128,
    budget: u64,
    evaluations: u64,
    exhausted: bool,
    best: usize,
    found: Vec<(usize, Vec<Candidate>)>,
    chosen: Vec<usize>,
    excluded: Vec<bool>,
}

impl CoverSearch<'_> {
    fn dfs(&mut self, cover: u128, size: usize) {
        if self.exhausted {
            return;
        }
        self.evaluations += 1;
        if self.evaluations > self.budget {
            self.exhausted = true;
            return;
        }
        if cover == self.full_cover {
            if size < self.best {
                self.best = size;
                self.found.clear();
            }
            if size == self.best {
                let cands = self.chosen.iter().map(|&i| self.pool[i]).collect();
                self.found.push((size, cands));
            }
            return;
        }

        // Branch on the uncovered quasi-closed set with the fewest
        // available refuting implications; bail out early when some
        // uncovered set cannot be refuted cheaply enough.
        let mut branch: Option<usize> = None;
        let mut branch_count = usize::MAX;
        let mut hardest_min_size = 0usize;
        for (j, cands) in self.covering.iter().enumerate() {
            if cover >> j & 1 == 1 {
                continue;
            }
            let mut count = 0;
            let mut min_size = usize::MAX;
            for &idx in cands {
                if !self.excluded[idx] {
                    count += 1;
                    min_size = min_size.min(self.pool[idx].size);
                }
            }
            if count == 0 {
                return;
            }
            hardest_min_size = hardest_min_size.max(min_size);
            if count < branch_count {
                branch_count = count;
                branch = Some(j);
            }
        }
        let branch = branch.expect("cover is not full, so something is uncovered");
        if size.saturating_add(hardest_min_size) > self.best {
            return;
        }

        // Partition by the implication chosen for the branch set: after
        // exploring covers containing candidate idx, exclude it so the
        // remaining branches enumerate covers without it.
        let choices: Vec<usize> = self.covering[branch]
            .iter()
            .copied()
            .filter(|&idx| !self.excluded[idx])
            .collect();
        let mut flipped = Vec::with_capacity(choices.len());
        for idx in choices {
            if !self.exhausted && size + self.pool[idx].size <= self.best {
                self.chosen.push(idx);
                self.dfs(cover | self.pool[idx].cover, size + self.pool[idx].size);
                self.chosen.pop();
            }
            self.excluded[idx] = true;
            flipped.push(idx);
        }
        for idx in flipped {
            self.excluded[idx] = false;
        }
    }
}

fn finish_report(
    space: SearchSpace,
    ctx: &SearchContext,
    complete: bool,
    evaluations: u64,
    best: usize,
    found: Vec<(usize, Vec<Candidate>)>,
) -> OptimalReport {
    let mut bases: Vec<ImplicationSet> = found
        .into_iter()
        .map(|(_, cands)| {
            cands
                .into_iter()
                .map(|c| Implication::new(AttrSet::from_bits(c.lhs), AttrSet::from_bits(c.rhs)))
                .collect()
        })
        .collect();
    bases.sort_unstable();
    bases.dedup();

    let right_sum_maps: Vec<BTreeMap<AttrSet, usize>> = bases
        .iter()
        .map(|basis| {
            let mut sums = BTreeMap::new();
            for imp in basis {
                let target = AttrSet::from_bits(ctx.closure[imp.lhs.bits() as usize]);
                *sums.entry(target).or_insert(0) += imp.rhs.len();
            }
            sums
        })
        .collect();
    let profiles: Vec<BTreeMap<AttrSet, Vec<AttrSet>>> = bases
        .iter()
        .map(|basis| {
            let mut profile: BTreeMap<AttrSet, Vec<AttrSet>> = BTreeMap::new();
            for imp in basis {
                let target = AttrSet::from_bits(ctx.closure[imp.lhs.bits() as usize]);
                profile
                    .entry(target)
                    .or_default()
                    .push(AttrSet::from_bits(ctx.saturate[imp.lhs.bits() as usize]));
            }
            profile.values_mut().for_each(|v| v.sort_unstable());
            profile
        })
        .collect();

    let constancy = right_sum_maps.windows(2).all(|w| w[0] == w[1]);
    let saturation_profiles_agree = profiles.windows(2).all(|w| w[0] == w[1]);
    let right_sums = right_sum_maps.into_iter().next().unwrap_or_default();
    let optimal_size = if bases.is_empty() { 0 } else { best };

    OptimalReport {
        space,
        complete,
        evaluations,
        optimal_size,
        optimal_bases: bases,
        right_sums,
        constancy,
        saturation_profiles_agree,
    }
}

/// True iff every left side in `sigma` has minimum cardinality among
/// the sets with the same saturation. Optimal bases are expected to
/// satisfy this; the function exists to test that expectation.
pub fn left_sides_are_minimal_generators(
    sigma: &ImplicationSet,
    sys: &ClosureSystem,
) -> Result<bool> {
    sys.universe().check_enumerable()?;
    let report = QuasiReport::compute(sys)?;
    let mut min_card: BTreeMap<AttrSet, usize> = BTreeMap::new();
    for a in sys.universe().subsets() {
        let s = report.saturate(a);
        let entry = min_card.entry(s).or_insert(usize::MAX);
        *entry = (*entry).min(a.len());
    }
    Ok(sigma
        .iter()
        .all(|imp| imp.lhs.len() == min_card[&report.saturate(imp.lhs)]))
}

/// Runs the restricted optimal search and reports whether the
/// per-essential-set right-side mass is constant across all optimal
/// bases. Meaningful only when the search completes within budget.
pub fn verify_right_sum_constancy(sys: &ClosureSystem, limits: &SearchLimits) -> Result<bool> {
    Ok(enumerate_optimal_bases(sys, limits)?.constancy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{canonical_basis, check_basis, check_basis_oracle};
    use crate::sets::{SetFamily, Universe};

    fn universe(names: &[&str]) -> Universe {
        Universe::new(names).unwrap()
    }

    fn set(u: &Universe, names: &[&str]) -> AttrSet {
        u.set_of(names).unwrap()
    }

    fn imp(u: &Universe, lhs: &[&str], rhs: &[&str]) -> Implication {
        Implication::new(set(u, lhs), set(u, rhs))
    }

    fn system_from(u: &Universe, imps: &[(&[&str], &[&str])]) -> ClosureSystem {
        let sigma = ImplicationSet::from_implications(
            imps.iter()
                .map(|(l, r)| Implication::new(set(u, l), set(u, r))),
        );
        ClosureSystem::from_implications(u.clone(), &sigma).unwrap()
    }

    #[test]
    fn single_implication_system_on_two_elements() {
        let u = universe(&["a", "b"]);
        let sys = system_from(&u, &[(&["a"], &["b"])]);
        let report = enumerate_optimal_bases(&sys, &SearchLimits::default()).unwrap();
        assert!(report.complete);
        assert_eq!(report.optimal_size, 2);
        let minimal = ImplicationSet::from_implications(vec![imp(&u, &["a"], &["b"])]);
        assert!(report.optimal_bases.contains(&minimal));
        assert_eq!(report.right_sums[&set(&u, &["a", "b"])], 1);
        assert!(report.constancy);
        for basis in &report.optimal_bases {
            assert!(check_basis(basis, &sys).unwrap().equivalent);
            assert_eq!(basis_size(basis), 2);
        }
    }

    #[test]
    fn powerset_system_has_the_empty_basis() {
        let u = universe(&["a", "b"]);
        let sys = ClosureSystem::from_implications(u.clone(), &ImplicationSet::new()).unwrap();
        let report = enumerate_optimal_bases(&sys, &SearchLimits::default()).unwrap();
        assert!(report.complete);
        assert_eq!(report.optimal_size, 0);
        assert_eq!(report.optimal_bases, vec![ImplicationSet::new()]);
        assert!(report.right_sums.is_empty());
        assert!(report.constancy);
    }

    #[test]
    fn two_essential_sets_have_unit_right_sums() {
        let u = universe(&["a", "b", "c"]);
        let sys = system_from(&u, &[(&["a"], &["c"]), (&["b"], &["c"])]);
        let report = enumerate_optimal_bases(&sys, &SearchLimits::default()).unwrap();
        assert!(report.complete);
        assert!(report.constancy);
        assert_eq!(report.right_sums[&set(&u, &["a", "c"])], 1);
        assert_eq!(report.right_sums[&set(&u, &["b", "c"])], 1);
        assert!(verify_right_sum_constancy(&sys, &SearchLimits::default()).unwrap());
    }

    #[test]
    fn restricted_and_unrestricted_agree_on_a_small_system() {
        let u = universe(&["a", "b", "c"]);
        let sys = system_from(&u, &[(&["a"], &["b"])]);
        let restricted = enumerate_optimal_bases(&sys, &SearchLimits::default()).unwrap();
        let unrestricted =
            enumerate_optimal_bases_unrestricted(&sys, &SearchLimits::default()).unwrap();
        assert!(restricted.complete && unrestricted.complete);
        assert_eq!(restricted.optimal_size, unrestricted.optimal_size);
        assert_eq!(restricted.optimal_bases, unrestricted.optimal_bases);
        for basis in &unrestricted.optimal_bases {
            assert!(check_basis_oracle(basis, &sys).unwrap());
        }
    }

    #[test]
    fn empty_generator_right_sides_may_split() {
        // only X is closed, so the empty set is the lone critical set
        // and {} -> {a b} can be split into {} -> {a}, {} -> {b} at no
        // size cost
        let u = universe(&["a", "b"]);
        let fam = SetFamily::from_sets(vec![u.full_set()]);
        let sys = ClosureSystem::new(u.clone(), fam).unwrap();
        let report = enumerate_optimal_bases(&sys, &SearchLimits::default()).unwrap();
        assert!(report.complete);
        assert_eq!(report.optimal_size, 2);
        let merged = ImplicationSet::from_implications(vec![imp(&u, &[], &["a", "b"])]);
        let split = ImplicationSet::from_implications(vec![
            imp(&u, &[], &["a"]),
            imp(&u, &[], &["b"]),
        ]);
        assert_eq!(report.optimal_bases, vec![split, merged]);
        // both carry the same right-side mass on the one essential set
        assert!(report.constancy);
        assert_eq!(report.right_sums[&u.full_set()], 2);
        // but their left-side saturation multisets differ in size
        assert!(!report.saturation_profiles_agree);
    }

    #[test]
    fn minimal_generator_examples() {
        let u = universe(&["a", "b"]);
        let sys = system_from(&u, &[(&["a"], &["b"])]);
        let optimal = ImplicationSet::from_implications(vec![imp(&u, &["a"], &["b"])]);
        assert!(left_sides_are_minimal_generators(&optimal, &sys).unwrap());

        let u3 = universe(&["a", "b", "c"]);
        let sys3 = system_from(&u3, &[(&["a"], &["b"])]);
        let canonical = canonical_basis(&sys3).unwrap();
        assert!(left_sides_are_minimal_generators(&canonical, &sys3).unwrap());
    }

    #[test]
    fn padded_left_side_fails_the_minimal_generator_check() {
        // closed family {{c}, X}: the saturation of {a} is {a c}, so a
        // left side {a c} is one element too fat.
        let u = universe(&["a", "b", "c"]);
        let fam = SetFamily::from_sets(vec![set(&u, &["c"]), u.full_set()]);
        let sys = ClosureSystem::new(u.clone(), fam).unwrap();
        let padded = ImplicationSet::from_implications(vec![imp(&u, &["a", "c"], &["b"])]);
        assert!(!left_sides_are_minimal_generators(&padded, &sys).unwrap());
    }

    #[test]
    fn budget_exhaustion_reports_incomplete() {
        let u = universe(&["a", "b", "c"]);
        let sys = system_from(&u, &[(&["a"], &["c"]), (&["b"], &["c"])]);
        let limits = SearchLimits {
            max_universe: 5,
            budget: 1,
        };
        let report = enumerate_optimal_bases(&sys, &limits).unwrap();
        assert!(!report.complete);
    }

    #[test]
    fn oversized_universe_is_rejected() {
        let names: Vec<String> = (0..6).map(|i| format!("e{i}")).collect();
        let u = Universe::new(&names).unwrap();
        let sys = ClosureSystem::from_implications(u, &ImplicationSet::new()).unwrap();
        assert_eq!(
            enumerate_optimal_bases(&sys, &SearchLimits::default()),
            Err(Error::UniverseTooLarge { size: 6, cap: 5 })
        );
    }
}
