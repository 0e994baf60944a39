//! Command-line surface over the closure-system library.
//!
//! One subcommand per construct; all output is deterministic. Exit
//! codes: 0 success or property holds, 1 property fails (witness
//! printed), 2 input error, 3 enumeration cap or search budget
//! exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use closys::document::DocumentBody;
use closys::optimal::{enumerate_optimal_bases, SearchLimits};
use closys::quasi::QuasiReport;
use closys::report::{serialize_optimal_report, serialize_quasi_report, serialize_verdict};
use closys::{
    canonical_basis, check_basis, mix_bases, parse_set_literal, ClosureSystem, Error,
    ImplicationSet, MixSpec, SystemDocument,
};

/// Environment variable overriding the universe cap for the 2^n
/// enumeration operations (default 24).
const UNIVERSE_CAP_VAR: &str = "CLOSYS_UNIVERSE_CAP";

/// Environment variable overriding the universe cap for the optimal
/// basis search (default 5).
const OPTIMAL_CAP_VAR: &str = "CLOSYS_OPTIMAL_CAP";

#[derive(Parser)]
#[command(
    name = "closys",
    version,
    about = "Analyze finite closure systems and their implication bases",
    after_help = "Exit codes: 0 success/property holds, 1 property fails, 2 input error, \
                  3 cap or budget exceeded.\n\
                  Environment: CLOSYS_UNIVERSE_CAP caps the 2^n enumerations (default 24); \
                  CLOSYS_OPTIMAL_CAP caps the optimal search universe (default 5)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closure of a set in the system
    Closure {
        file: PathBuf,
        /// Comma-separated element names ("" for the empty set)
        #[arg(long)]
        of: String,
    },
    /// All closed sets, printed as a family document
    ClosedSets { file: PathBuf },
    /// Quasi-closed, critical, and essential sets with the saturation family
    Quasi { file: PathBuf },
    /// Critical sets, printed as a family document
    Critical { file: PathBuf },
    /// Essential sets, printed as a family document
    Essential { file: PathBuf },
    /// Saturation of a set in the system
    Saturation {
        file: PathBuf,
        /// Comma-separated element names ("" for the empty set)
        #[arg(long)]
        of: String,
    },
    /// Canonical basis, printed as an implication document
    Canonical { file: PathBuf },
    /// Check an implication document against a system
    Check {
        system_file: PathBuf,
        /// Implication document holding the candidate basis
        #[arg(long)]
        basis: PathBuf,
    },
    /// Mix source bases, one per essential set in canonical order
    Mix {
        system_file: PathBuf,
        /// Implication documents, one per essential set
        #[arg(long, num_args = 1.., required = true)]
        sources: Vec<PathBuf>,
    },
    /// Search for all optimal bases
    Optimal {
        file: PathBuf,
        /// Evaluation budget for the search
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check that right-side mass per essential set is constant across
    /// all optimal bases
    VerifyOptright { file: PathBuf },
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::UniverseTooLarge { .. } => 3,
            _ => 2,
        };
        Failure {
            message: err.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Closure { file, of } => {
            let sys = load_system(&file)?;
            let set = parse_set_literal(sys.universe(), &of)?;
            println!("{}", sys.universe().render_set(sys.closure(set)));
            Ok(0)
        }
        Command::ClosedSets { file } => {
            let sys = load_system(&file)?;
            let doc = SystemDocument {
                universe: sys.universe().clone(),
                body: DocumentBody::Family(sys.closed().clone()),
            };
            print!("{}", doc.serialize());
            Ok(0)
        }
        Command::Quasi { file } => {
            let sys = load_system(&file)?;
            let report = QuasiReport::compute(&sys)?;
            print!("{}", serialize_quasi_report(&report, sys.universe()));
            Ok(0)
        }
        Command::Critical { file } => {
            let sys = load_system(&file)?;
            let report = QuasiReport::compute(&sys)?;
            let doc = SystemDocument {
                universe: sys.universe().clone(),
                body: DocumentBody::Family(report.critical),
            };
            print!("{}", doc.serialize());
            Ok(0)
        }
        Command::Essential { file } => {
            let sys = load_system(&file)?;
            let report = QuasiReport::compute(&sys)?;
            let doc = SystemDocument {
                universe: sys.universe().clone(),
                body: DocumentBody::Family(report.essential),
            };
            print!("{}", doc.serialize());
            Ok(0)
        }
        Command::Saturation { file, of } => {
            let sys = load_system(&file)?;
            let set = parse_set_literal(sys.universe(), &of)?;
            let report = QuasiReport::compute(&sys)?;
            println!("{}", sys.universe().render_set(report.saturate(set)));
            Ok(0)
        }
        Command::Canonical { file } => {
            let sys = load_system(&file)?;
            let basis = canonical_basis(&sys)?;
            let doc = SystemDocument {
                universe: sys.universe().clone(),
                body: DocumentBody::Implications(basis),
            };
            print!("{}", doc.serialize());
            Ok(0)
        }
        Command::Check { system_file, basis } => {
            let sys = load_system(&system_file)?;
            let sigma = load_implications(&basis, &sys)?;
            let verdict = check_basis(&sigma, &sys)?;
            print!("{}", serialize_verdict(&verdict, sys.universe()));
            Ok(if verdict.equivalent { 0 } else { 1 })
        }
        Command::Mix {
            system_file,
            sources,
        } => {
            let sys = load_system(&system_file)?;
            let mut bases = Vec::with_capacity(sources.len());
            for path in &sources {
                bases.push(load_implications(path, &sys)?);
            }
            let spec = MixSpec::in_canonical_order(&sys, bases)?;
            let mixed = mix_bases(&spec, &sys)?;
            let doc = SystemDocument {
                universe: sys.universe().clone(),
                body: DocumentBody::Implications(mixed),
            };
            print!("{}", doc.serialize());
            Ok(0)
        }
        Command::Optimal { file, budget } => {
            let sys = load_system(&file)?;
            let report = enumerate_optimal_bases(&sys, &search_limits(budget)?)?;
            print!("{}", serialize_optimal_report(&report, sys.universe()));
            Ok(if report.complete { 0 } else { 3 })
        }
        Command::VerifyOptright { file } => {
            let sys = load_system(&file)?;
            let report = enumerate_optimal_bases(&sys, &search_limits(None)?)?;
            print!("{}", serialize_optimal_report(&report, sys.universe()));
            if !report.complete {
                Ok(3)
            } else if report.constancy {
                Ok(0)
            } else {
                Ok(1)
            }
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn env_cap(var: &str) -> Result<Option<usize>, Failure> {
    match std::env::var(var) {
        Ok(value) => value
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Failure::input(format!("{var} must be a non-negative integer"))),
        Err(_) => Ok(None),
    }
}

fn load_system(path: &Path) -> Result<ClosureSystem, Failure> {
    let text = read_text(path)?;
    let mut doc = SystemDocument::parse(&text).map_err(|e| prefixed(path, e))?;
    if let Some(cap) = env_cap(UNIVERSE_CAP_VAR)? {
        doc.universe = doc.universe.with_enumeration_cap(cap);
    }
    doc.to_system().map_err(|e| prefixed(path, e))
}

fn load_implications(path: &Path, sys: &ClosureSystem) -> Result<ImplicationSet, Failure> {
    let text = read_text(path)?;
    let doc = SystemDocument::parse(&text).map_err(|e| prefixed(path, e))?;
    if doc.universe != *sys.universe() {
        return Err(Failure::input(format!(
            "{}: universe does not match the system universe",
            path.display()
        )));
    }
    match doc.body {
        DocumentBody::Implications(sigma) => Ok(sigma),
        DocumentBody::Family(_) => Err(Failure::input(format!(
            "{}: expected an implication document",
            path.display()
        ))),
    }
}

fn prefixed(path: &Path, err: Error) -> Failure {
    let failure = Failure::from(err);
    Failure {
        message: format!("{}: {}", path.display(), failure.message),
        code: failure.code,
    }
}

fn search_limits(budget: Option<u64>) -> Result<SearchLimits, Failure> {
    let mut limits = SearchLimits::default();
    if let Some(cap) = env_cap(OPTIMAL_CAP_VAR)? {
        limits.max_universe = cap;
    }
    if let Some(budget) = budget {
        limits.budget = budget;
    }
    Ok(limits)
}
