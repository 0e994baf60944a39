//! Acceptance suite. Each test prints one `criterion N ...: PASS/FAIL`
//! line (run with `--nocapture` to see them) and asserts zero failures
//! within the stated runtime limit.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use closys::optimal::{
    enumerate_optimal_bases, enumerate_optimal_bases_unrestricted,
    left_sides_are_minimal_generators, SearchLimits,
};
use closys::random::{
    letters, mutate_implications, random_implication_set, random_proper_subsystem, random_system,
    valid_basis_variants,
};
use closys::{
    canonical_basis, check_basis, check_basis_oracle, essential_sets, is_intersection_closed,
    is_quasi_closed, left_sides_saturate_to_critical, mix_bases, quasi_closed_witness, AttrSet,
    ClosureSystem, ImplicationSet, MixSpec, SetFamily, SystemDocument,
};

fn verdict(criterion: &str, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

#[test]
fn criterion_1_closure_operator_axioms() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC01);
    let mut failures = 0u64;
    let trials = 200;
    for _ in 0..trials {
        let n = rng.random_range(1..=8);
        let u = letters(n);
        let sys = random_system(&mut rng, &u);
        let closures: Vec<AttrSet> = u.subsets().map(|a| sys.closure(a)).collect();
        for a in u.subsets() {
            let ca = closures[a.bits() as usize];
            if !a.is_subset_of(ca) {
                failures += 1;
            }
            if closures[ca.bits() as usize] != ca {
                failures += 1;
            }
            for b in u.subsets() {
                if a.is_subset_of(b) && !ca.is_subset_of(closures[b.bits() as usize]) {
                    failures += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures == 0 && elapsed <= Duration::from_secs(60);
    verdict(
        "1 (closure-operator axioms)",
        ok,
        &format!(
            "{trials} systems, {failures} failures, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
    assert_eq!(failures, 0);
    assert!(elapsed <= Duration::from_secs(60), "ran {elapsed:?}");
}

#[test]
fn criterion_2_validity_check_biconditional() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC02);
    let mut disagreements = 0u64;
    let trials = 500;
    for trial in 0..trials {
        let n = rng.random_range(1..=6);
        let u = letters(n);
        let sys = random_system(&mut rng, &u);
        let sigma = match trial % 3 {
            0 => random_implication_set(&mut rng, &u, n + 3),
            1 => {
                let canonical = canonical_basis(&sys).unwrap();
                mutate_implications(&mut rng, &canonical, &u)
            }
            _ => {
                let variants = valid_basis_variants(&mut rng, &sys, 2);
                let pick = variants[rng.random_range(0..variants.len())].clone();
                if rng.random_bool(0.5) {
                    mutate_implications(&mut rng, &pick, &u)
                } else {
                    pick
                }
            }
        };
        let fast = check_basis(&sigma, &sys).unwrap().equivalent;
        let slow = check_basis_oracle(&sigma, &sys).unwrap();
        if fast != slow {
            disagreements += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = disagreements == 0 && elapsed <= Duration::from_secs(120);
    verdict(
        "2 (validity-check biconditional)",
        ok,
        &format!(
            "{trials} pairs, {disagreements} disagreements, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
    assert_eq!(disagreements, 0);
    assert!(elapsed <= Duration::from_secs(120), "ran {elapsed:?}");
}

#[test]
fn criterion_3_witness_between_nested_families() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC03);
    let mut failures = 0u64;
    let mut produced = 0;
    while produced < 200 {
        let n = rng.random_range(1..=7);
        let u = letters(n);
        let larger = random_system(&mut rng, &u);
        if larger.closed().len() <= 1 {
            continue;
        }
        let Some(smaller) = random_proper_subsystem(&mut rng, &larger) else {
            continue;
        };
        produced += 1;
        let witness = quasi_closed_witness(&smaller, &larger).unwrap();
        if !is_quasi_closed(&smaller, witness) || !larger.is_closed(witness) {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "3 (nested-family witness)",
        failures == 0,
        &format!(
            "{produced} pairs, {failures} failures, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
    assert_eq!(failures, 0);
}

#[test]
fn criterion_4_canonical_basis_validity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC04);
    let mut failures = 0u64;
    let trials = 200;
    for _ in 0..trials {
        let n = rng.random_range(1..=7);
        let u = letters(n);
        let sys = random_system(&mut rng, &u);
        let canonical = canonical_basis(&sys).unwrap();
        if !check_basis(&canonical, &sys).unwrap().equivalent
            || !check_basis_oracle(&canonical, &sys).unwrap()
            || !left_sides_saturate_to_critical(&canonical, &sys).unwrap()
        {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "4 (canonical basis validity)",
        failures == 0,
        &format!(
            "{trials} systems, {failures} failures, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
    assert_eq!(failures, 0);
}

#[test]
fn criterion_5_basis_mixing() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC05);
    let mut failures = 0u64;
    let mut mixes = 0u64;
    let trials = 100;
    for _ in 0..trials {
        let n = rng.random_range(1..=5);
        let u = letters(n);
        let sys = random_system(&mut rng, &u);
        let bases = valid_basis_variants(&mut rng, &sys, 3);
        assert!(bases.len() >= 2, "need at least two distinct valid bases");
        let essential = essential_sets(&sys).unwrap();
        let k = essential.len() as u32;
        let total = (bases.len() as u64).saturating_pow(k);
        for counter in 0..total.min(50) {
            let mut digits = counter;
            let picks: Vec<ImplicationSet> = (0..k)
                .map(|_| {
                    let pick = bases[(digits % bases.len() as u64) as usize].clone();
                    digits /= bases.len() as u64;
                    pick
                })
                .collect();
            let spec = MixSpec::in_canonical_order(&sys, picks).unwrap();
            let mixed = mix_bases(&spec, &sys).unwrap();
            mixes += 1;
            if !check_basis_oracle(&mixed, &sys).unwrap() {
                failures += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures == 0 && elapsed <= Duration::from_secs(300);
    verdict(
        "5 (basis mixing)",
        ok,
        &format!(
            "{trials} systems, {mixes} mixes, {failures} failures, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
    assert_eq!(failures, 0);
    assert!(elapsed <= Duration::from_secs(300), "ran {elapsed:?}");
}

#[test]
fn criterion_6_and_8_right_sums_and_minimal_generators() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC68);
    let limits = SearchLimits {
        max_universe: 4,
        budget: 1_000_000,
    };
    let mut confirmed = 0u64;
    let mut attempts = 0u64;
    let mut disagreements = 0u64;
    let mut constancy_failures = 0u64;
    let mut generator_failures = 0u64;
    let mut bases_checked = 0u64;
    while confirmed < 50 && attempts < 400 {
        attempts += 1;
        let n = match rng.random_range(0..10) {
            0 => 2,
            1..=3 => 3,
            _ => 4,
        };
        let u = letters(n);
        let sys = random_system(&mut rng, &u);
        let restricted = enumerate_optimal_bases(&sys, &limits).unwrap();
        if !restricted.complete {
            continue;
        }
        let unrestricted = enumerate_optimal_bases_unrestricted(&sys, &limits).unwrap();
        if !unrestricted.complete {
            continue;
        }
        if restricted.optimal_size != unrestricted.optimal_size
            || restricted.optimal_bases != unrestricted.optimal_bases
        {
            disagreements += 1;
            continue;
        }
        confirmed += 1;
        if !restricted.constancy {
            constancy_failures += 1;
        }
        for basis in &restricted.optimal_bases {
            bases_checked += 1;
            assert!(check_basis(basis, &sys).unwrap().equivalent);
            assert_eq!(closys::basis_size(basis), restricted.optimal_size);
            if !left_sides_are_minimal_generators(basis, &sys).unwrap() {
                generator_failures += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let ok6 = confirmed >= 50
        && disagreements == 0
        && constancy_failures == 0
        && elapsed <= Duration::from_secs(600);
    verdict(
        "6 (right-side mass constancy)",
        ok6,
        &format!(
            "{confirmed} confirmed systems ({attempts} attempts), {disagreements} cross-check disagreements, {constancy_failures} constancy failures, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
    let ok8 = generator_failures == 0;
    verdict(
        "8 (minimal left-side generators)",
        ok8,
        &format!("{bases_checked} optimal bases, {generator_failures} failures"),
    );
    assert!(confirmed >= 50, "only {confirmed} systems confirmed");
    assert_eq!(disagreements, 0);
    assert_eq!(constancy_failures, 0);
    assert_eq!(generator_failures, 0);
    assert!(elapsed <= Duration::from_secs(600), "ran {elapsed:?}");
}

// Every intersection-closed family containing the full set, for n <= 3.
fn all_systems(n: usize) -> Vec<ClosureSystem> {
    let u = letters(n);
    let subsets = 1usize << n;
    let full_index = subsets - 1;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << subsets) {
        if mask >> full_index & 1 == 0 {
            continue;
        }
        let fam: SetFamily = (0..subsets)
            .filter(|s| mask >> s & 1 == 1)
            .map(|s| AttrSet::from_bits(s as u64))
            .collect();
        if is_intersection_closed(&fam, &u) {
            out.push(ClosureSystem::new(u.clone(), fam).unwrap());
        }
    }
    out
}

#[test]
fn criterion_7_restricted_search_soundness() {
    let start = Instant::now();
    let limits = SearchLimits {
        max_universe: 4,
        budget: 10_000_000,
    };
    let mut disagreements = 0u64;
    let mut systems = 0u64;
    for (n, expected_count) in [(1usize, 2usize), (2, 7), (3, 61)] {
        let all = all_systems(n);
        assert_eq!(
            all.len(),
            expected_count,
            "closure-system count on {n} elements"
        );
        for sys in all {
            systems += 1;
            let restricted = enumerate_optimal_bases(&sys, &limits).unwrap();
            let unrestricted = enumerate_optimal_bases_unrestricted(&sys, &limits).unwrap();
            assert!(restricted.complete && unrestricted.complete);
            if restricted.optimal_size != unrestricted.optimal_size
                || restricted.optimal_bases != unrestricted.optimal_bases
            {
                disagreements += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "7 (restricted-search soundness)",
        disagreements == 0,
        &format!(
            "{systems} systems (every system on up to 3 elements), {disagreements} disagreements, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
    assert_eq!(disagreements, 0);
}

// --- criterion 9: CLI determinism and document round trips ---

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run_cli(args: &[&str]) -> (Vec<u8>, i32) {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_closys"))
        .args(args)
        .env_remove("CLOSYS_UNIVERSE_CAP")
        .env_remove("CLOSYS_OPTIMAL_CAP")
        .output()
        .expect("binary runs");
    (output.stdout, output.status.code().unwrap_or(-1))
}

#[test]
fn criterion_9_cli_determinism_and_round_trip() {
    let start = Instant::now();
    let one = fixture("one_imp.txt");
    let two = fixture("two_imp.txt");
    let family = fixture("family.txt");
    let family_bad = fixture("family_bad.txt");
    let basis_good = fixture("basis_good.txt");
    let basis_bad = fixture("basis_bad.txt");
    let src_full = fixture("src_full.txt");
    let src_trim = fixture("src_trim.txt");
    let forced = fixture("forced.txt");

    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["closure", &one, "--of", "a"], 0),
        (vec!["closure", &one, "--of", ""], 0),
        (vec!["closed-sets", &one], 0),
        (vec!["closed-sets", &family], 0),
        (vec!["closed-sets", &family_bad], 2),
        (vec!["quasi", &one], 0),
        (vec!["quasi", &family], 0),
        (vec!["critical", &two], 0),
        (vec!["essential", &two], 0),
        (vec!["saturation", &one, "--of", "a,c"], 0),
        (vec!["canonical", &two], 0),
        (vec!["canonical", &forced], 0),
        (vec!["check", &one, "--basis", &basis_good], 0),
        (vec!["check", &one, "--basis", &basis_bad], 1),
        (vec!["mix", &two, "--sources", &src_full, &src_trim], 0),
        (vec!["optimal", &two], 0),
        (vec!["optimal", &two, "--budget", "1"], 3),
        (vec!["verify-optright", &two], 0),
        (vec!["verify-optright", &family], 0),
    ];

    let mut mismatches = 0u64;
    for (args, expected_code) in &cases {
        let (out1, code1) = run_cli(args);
        let (out2, code2) = run_cli(args);
        if out1 != out2 || code1 != code2 {
            mismatches += 1;
            eprintln!("nondeterministic output for {args:?}");
        }
        if code1 != *expected_code {
            mismatches += 1;
            eprintln!("exit code {code1} (expected {expected_code}) for {args:?}");
        }
    }

    // closed-sets output is itself a valid family document
    let (closed_out, _) = run_cli(&["closed-sets", &one]);
    let reparsed = SystemDocument::parse(std::str::from_utf8(&closed_out).unwrap()).unwrap();
    assert!(reparsed.to_system().is_ok());

    // document round trip on generated documents
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC09);
    let mut round_trips = 0u64;
    let mut round_trip_failures = 0u64;
    for _ in 0..100 {
        let n = rng.random_range(1..=6);
        let u = letters(n);
        let doc = if rng.random_bool(0.5) {
            let sigma = random_implication_set(&mut rng, &u, 6);
            SystemDocument {
                universe: u,
                body: closys::DocumentBody::Implications(sigma),
            }
        } else {
            let count = rng.random_range(1..=8);
            let fam: SetFamily = (0..count)
                .map(|_| closys::random::random_subset(&mut rng, &u))
                .collect();
            SystemDocument {
                universe: u,
                body: closys::DocumentBody::Family(fam),
            }
        };
        round_trips += 1;
        let text = doc.serialize();
        let parsed = SystemDocument::parse(&text).unwrap();
        if parsed != doc || SystemDocument::parse(&parsed.serialize()).unwrap() != parsed {
            round_trip_failures += 1;
        }
    }

    let elapsed = start.elapsed();
    let ok = mismatches == 0 && round_trip_failures == 0;
    verdict(
        "9 (CLI determinism and round trip)",
        ok,
        &format!(
            "{} subcommand runs, {mismatches} mismatches, {round_trips} round trips, {round_trip_failures} failures, {:.1}s",
            cases.len() * 2,
            elapsed.as_secs_f64()
        ),
    );
    assert_eq!(mismatches, 0);
    assert_eq!(round_trip_failures, 0);
}
