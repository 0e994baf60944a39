use thiserror::Error;

/// Errors shared by the whole crate: input validation, document parsing,
/// and the enumeration caps that guard the 2^n operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,

    #[error("universe has {size} elements, exceeding the cap of {cap}")]
    UniverseTooLarge { size: usize, cap: usize },

    #[error("duplicate element name `{name}`")]
    DuplicateElement { name: String },

    #[error("line {line}: invalid element name `{name}`")]
    InvalidName { name: String, line: usize },

    #[error("unknown element name `{name}`{}", fmt_line(*.line))]
    UnknownElement { name: String, line: Option<usize> },

    #[error("missing `universe:` declaration")]
    MissingUniverse,

    #[error("line {line}: implication and family lines cannot be mixed in one document")]
    MixedDocument { line: usize },

    #[error("line {line}: {message}")]
    MalformedLine { line: usize, message: String },

    #[error("family is not intersection-closed: {left} and {right} intersect to {meet}, which is missing")]
    NotIntersectionClosed {
        left: String,
        right: String,
        meet: String,
    },

    #[error("family does not contain the full universe")]
    MissingFullSet,

    #[error("first family must be a proper subfamily of the second")]
    NotProperSubfamily,

    #[error("implication set is not a basis of the system: {detail}")]
    NotABasis { detail: String },

    #[error("source basis {index} is not a valid basis of the target system")]
    InvalidSourceBasis { index: usize },

    #[error("mix sources must pair every essential set exactly once: {detail}")]
    EssentialSetMismatch { detail: String },
}

fn fmt_line(line: Option<usize>) -> String {
    match line {
        Some(l) => format!(" at line {l}"),
        None => String::new(),
    }
}
