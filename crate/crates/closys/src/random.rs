//! Seeded generators for systems, families, and implication sets.
//!
//! The randomized test suites lean on these; they are deterministic for
//! a fixed RNG seed. Families come out intersection-closed by
//! construction, and [`valid_basis_variants`] produces distinct valid
//! bases of one system for the mixing tests.

use std::collections::BTreeMap;

use rand::Rng;

use crate::basis::{canonical_basis, check_basis};
use crate::quasi::QuasiReport;
use crate::sets::{intersection_closure, AttrSet, SetFamily, Universe};
use crate::system::{ClosureSystem, Implication, ImplicationSet};

/// Universe named `a`, `b`, ... for small n, `e0`, `e1`, ... beyond 26.
pub fn letters(n: usize) -> Universe {
    let names: Vec<String> = if n <= 26 {
        (0..n)
            .map(|i| char::from(b'a' + i as u8).to_string())
            .collect()
    } else {
        (0..n).map(|i| format!("e{i}")).collect()
    };
    Universe::new(&names).expect("letter universes are valid")
}

pub fn random_subset<R: Rng>(rng: &mut R, universe: &Universe) -> AttrSet {
    let n = universe.len();
    let mask = if n == 64 {
        rng.random::<u64>()
    } else {
        rng.random::<u64>() & ((1u64 << n) - 1)
    };
    AttrSet::from_bits(mask)
}

/// A random intersection-closed family containing the full set.
pub fn random_family<R: Rng>(rng: &mut R, universe: &Universe) -> SetFamily {
    let seeds = rng.random_range(0..=(1usize << universe.len().min(6)));
    let fam: SetFamily = (0..seeds).map(|_| random_subset(rng, universe)).collect();
    intersection_closure(&fam, universe)
}

pub fn random_implication_set<R: Rng>(
    rng: &mut R,
    universe: &Universe,
    max_count: usize,
) -> ImplicationSet {
    let count = rng.random_range(0..=max_count);
    (0..count)
        .map(|_| Implication::new(random_subset(rng, universe), random_subset(rng, universe)))
        .collect()
}

/// A random closure system, built either from a random family or from
/// the models of a random implication set.
pub fn random_system<R: Rng>(rng: &mut R, universe: &Universe) -> ClosureSystem {
    if rng.random_bool(0.5) {
        let fam = random_family(rng, universe);
        ClosureSystem::new(universe.clone(), fam).expect("closure output is a valid family")
    } else {
        let sigma = random_implication_set(rng, universe, universe.len() + 2);
        ClosureSystem::from_implications(universe.clone(), &sigma)
            .expect("universe is within the enumeration cap")
    }
}

/// A random proper subsystem of `sys`: keeps a random part of the
/// closed family and intersection-closes it (which stays inside the
/// family). Returns `None` when the draw reproduces the whole family.
pub fn random_proper_subsystem<R: Rng>(rng: &mut R, sys: &ClosureSystem) -> Option<ClosureSystem> {
    let kept: SetFamily = sys
        .closed()
        .iter()
        .filter(|_| rng.random_bool(0.5))
        .collect();
    let fam = intersection_closure(&kept, sys.universe());
    if fam.len() == sys.closed().len() {
        None
    } else {
        Some(ClosureSystem::new(sys.universe().clone(), fam).expect("subfamily stays closed"))
    }
}

/// Applies one to three random edits to an implication set: drop an
/// implication, add a random one, or rewrite one side.
pub fn mutate_implications<R: Rng>(
    rng: &mut R,
    sigma: &ImplicationSet,
    universe: &Universe,
) -> ImplicationSet {
    let mut imps: Vec<Implication> = sigma.iter().collect();
    for _ in 0..rng.random_range(1..=3) {
        match rng.random_range(0..4) {
            0 if !imps.is_empty() => {
                let i = rng.random_range(0..imps.len());
                imps.remove(i);
            }
            1 => imps.push(Implication::new(
                random_subset(rng, universe),
                random_subset(rng, universe),
            )),
            2 if !imps.is_empty() => {
                let i = rng.random_range(0..imps.len());
                imps[i].rhs = random_subset(rng, universe);
            }
            3 if !imps.is_empty() => {
                let i = rng.random_range(0..imps.len());
                imps[i].lhs = random_subset(rng, universe);
            }
            _ => {}
        }
    }
    ImplicationSet::from_implications(imps)
}

/// Up to `want` distinct valid bases of `sys`, starting from the
/// canonical basis. Variants redraw each left side among the
/// minimum-cardinality generators of its critical set and each right
/// side among the nonempty subsets of the critical set's closure,
/// keeping only draws that still pass the validity check. A final
/// fallback appends the inert implication X -> X, which never changes
/// the model family.
pub fn valid_basis_variants<R: Rng>(
    rng: &mut R,
    sys: &ClosureSystem,
    want: usize,
) -> Vec<ImplicationSet> {
    let canonical = canonical_basis(sys).expect("universe within cap");
    let report = QuasiReport::compute(sys).expect("universe within cap");
    let mut out = vec![canonical.clone()];

    let mut generators: BTreeMap<AttrSet, Vec<AttrSet>> = BTreeMap::new();
    for c in &report.critical {
        let mut gens: Vec<AttrSet> = sys
            .universe()
            .subsets()
            .filter(|a| a.is_subset_of(c) && report.saturate(*a) == c)
            .collect();
        let min_card = gens.iter().map(|a| a.len()).min().unwrap_or(0);
        gens.retain(|a| a.len() == min_card);
        gens.sort_unstable();
        generators.insert(c, gens);
    }

    let mut attempts = 0;
    while out.len() < want && attempts < 80 {
        attempts += 1;
        let variant: ImplicationSet = report
            .critical
            .iter()
            .map(|c| {
                let gens = &generators[&c];
                let lhs = gens[rng.random_range(0..gens.len())];
                let closure = sys.closure(c);
                let rhs = loop {
                    let draw = random_subset(rng, sys.universe()) & closure;
                    if !draw.is_empty() {
                        break draw;
                    }
                };
                Implication::new(lhs, rhs)
            })
            .collect();
        if !out.contains(&variant)
            && check_basis(&variant, sys)
                .map(|v| v.equivalent)
                .unwrap_or(false)
        {
            out.push(variant);
        }
    }

    if out.len() < want {
        let full = sys.universe().full_set();
        let mut padded = canonical;
        padded.insert(Implication::new(full, full));
        if !out.contains(&padded) {
            out.push(padded);
        }
    }
    out.truncate(want);
    out
}
