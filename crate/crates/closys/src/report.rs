//! Deterministic, line-oriented serialization of analysis reports.
//!
//! Sets are rendered `{a b}` in universe order; equal inputs always
//! produce byte-identical output.

use std::fmt::Write as _;

use crate::basis::{BasisVerdict, BasisViolation};
use crate::optimal::OptimalReport;
use crate::quasi::QuasiReport;
use crate::sets::{SetFamily, Universe};

/// The reports the command-line surface can serialize.
#[derive(Debug, Clone, Copy)]
pub enum Report<'a> {
    Quasi(&'a QuasiReport),
    Verdict(&'a BasisVerdict),
    Optimal(&'a OptimalReport),
}

pub fn serialize_report(report: Report<'_>, universe: &Universe) -> String {
    match report {
        Report::Quasi(r) => serialize_quasi_report(r, universe),
        Report::Verdict(v) => serialize_verdict(v, universe),
        Report::Optimal(r) => serialize_optimal_report(r, universe),
    }
}

fn family_section(out: &mut String, name: &str, fam: &SetFamily, universe: &Universe) {
    writeln!(out, "{name}: {}", fam.len()).unwrap();
    for set in fam {
        writeln!(out, "  {}", universe.render_set(set)).unwrap();
    }
}

pub fn serialize_quasi_report(report: &QuasiReport, universe: &Universe) -> String {
    let mut out = String::new();
    family_section(&mut out, "quasi_closed", &report.quasi_closed, universe);
    family_section(&mut out, "critical", &report.critical, universe);
    family_section(&mut out, "essential", &report.essential, universe);
    family_section(
        &mut out,
        "saturation_family",
        &report.saturation_family,
        universe,
    );
    out
}

pub fn serialize_verdict(verdict: &BasisVerdict, universe: &Universe) -> String {
    match verdict.violation {
        None => "equivalent: true\n".to_string(),
        Some(BasisViolation::RightSideOutsideClosure(imp)) => format!(
            "equivalent: false\nviolation: right-side-outside-closure {}\n",
            universe.render_implication(imp)
        ),
        Some(BasisViolation::UnrefutedQuasiClosed(q)) => format!(
            "equivalent: false\nviolation: unrefuted-quasi-closed {}\n",
            universe.render_set(q)
        ),
    }
}

pub fn serialize_optimal_report(report: &OptimalReport, universe: &Universe) -> String {
    let mut out = String::new();
    writeln!(out, "space: {}", report.space.as_str()).unwrap();
    writeln!(out, "complete: {}", report.complete).unwrap();
    writeln!(out, "evaluations: {}", report.evaluations).unwrap();
    writeln!(out, "optimal_size: {}", report.optimal_size).unwrap();
    writeln!(out, "optimal_bases: {}", report.optimal_bases.len()).unwrap();
    for basis in &report.optimal_bases {
        writeln!(out, "basis:").unwrap();
        for imp in basis {
            writeln!(out, "  {}", universe.render_implication(imp)).unwrap();
        }
    }
    writeln!(out, "right_sums:").unwrap();
    for (essential, sum) in &report.right_sums {
        writeln!(out, "  {}: {}", universe.render_set(*essential), sum).unwrap();
    }
    writeln!(out, "constancy: {}", report.constancy).unwrap();
    writeln!(
        out,
        "saturation_profiles_agree: {}",
        report.saturation_profiles_agree
    )
    .unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasi::QuasiReport as QR;
    use crate::sets::SetFamily;
    use crate::system::{ClosureSystem, Implication, ImplicationSet};

    #[test]
    fn empty_quasi_report_prefix() {
        let u = Universe::new(&["a", "b"]).unwrap();
        let powerset = ClosureSystem::from_implications(u.clone(), &ImplicationSet::new()).unwrap();
        let report = QR::compute(&powerset).unwrap();
        let text = serialize_quasi_report(&report, &u);
        assert!(text.starts_with("quasi_closed: 0\ncritical: 0\nessential: 0\n"));
    }

    #[test]
    fn verdict_lines_match_the_fixed_format() {
        let u = Universe::new(&["a", "b", "c"]).unwrap();
        let sigma = ImplicationSet::from_implications(vec![Implication::new(
            u.set_of(&["a"]).unwrap(),
            u.set_of(&["b"]).unwrap(),
        )]);
        let sys = ClosureSystem::from_implications(u.clone(), &sigma).unwrap();

        let ok = crate::basis::check_basis(&sigma, &sys).unwrap();
        assert_eq!(serialize_verdict(&ok, &u), "equivalent: true\n");

        let missing = crate::basis::check_basis(&ImplicationSet::new(), &sys).unwrap();
        assert_eq!(
            serialize_verdict(&missing, &u),
            "equivalent: false\nviolation: unrefuted-quasi-closed {a}\n"
        );
    }

    #[test]
    fn quasi_report_lists_every_section() {
        let u = Universe::new(&["a", "b", "c"]).unwrap();
        let sigma = ImplicationSet::from_implications(vec![Implication::new(
            u.set_of(&["a"]).unwrap(),
            u.set_of(&["b"]).unwrap(),
        )]);
        let sys = ClosureSystem::from_implications(u.clone(), &sigma).unwrap();
        let report = QR::compute(&sys).unwrap();
        let text = serialize_quasi_report(&report, &u);
        assert!(
            text.starts_with("quasi_closed: 1\n  {a}\ncritical: 1\n  {a}\nessential: 1\n  {a b}\n")
        );
        assert!(text.contains("saturation_family: 7\n"));
    }

    #[test]
    fn reports_are_deterministic() {
        let u = Universe::new(&["a", "b"]).unwrap();
        let sigma = ImplicationSet::from_implications(vec![Implication::new(
            u.set_of(&["a"]).unwrap(),
            u.set_of(&["b"]).unwrap(),
        )]);
        let sys = ClosureSystem::from_implications(u.clone(), &sigma).unwrap();
        let report =
            crate::optimal::enumerate_optimal_bases(&sys, &crate::optimal::SearchLimits::default())
                .unwrap();
        let once = serialize_optimal_report(&report, &u);
        let twice = serialize_optimal_report(&report, &u);
        assert_eq!(once, twice);
        assert!(once.starts_with("space: restricted\ncomplete: true\n"));
    }

    #[test]
    fn serialize_report_dispatches() {
        let u = Universe::new(&["a"]).unwrap();
        let fam = SetFamily::from_sets(vec![u.full_set()]);
        let sys = ClosureSystem::new(u.clone(), fam).unwrap();
        let quasi = QR::compute(&sys).unwrap();
        assert_eq!(
            serialize_report(Report::Quasi(&quasi), &u),
            serialize_quasi_report(&quasi, &u)
        );
    }
}
