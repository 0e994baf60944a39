//! The plain-text document format for systems and bases.
//!
//! A document is line oriented. `#` starts a comment running to the end
//! of the line; blank lines are ignored. The first significant line
//! declares the universe:
//!
//! ```text
//! universe: a b c
//! ```
//!
//! The body is either a list of implications, one per line, written
//! `LHS -> RHS` with each side a whitespace-separated (possibly empty)
//! list of element names, or a list of sets, one per line, written
//! `{ a b }` (`{ }` for the empty set). The two body forms cannot be
//! mixed. A document with no body lines is an empty implication list.

use std::fmt::Write as _;

use crate::error::Error;
use crate::sets::{AttrSet, SetFamily, Universe};
use crate::system::{ClosureSystem, Implication, ImplicationSet};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentBody {
    Implications(ImplicationSet),
    Family(SetFamily),
}

/// A parsed system document: the universe plus either an implication
/// list or a set family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDocument {
    pub universe: Universe,
    pub body: DocumentBody,
}

impl SystemDocument {
    pub fn parse(text: &str) -> Result<SystemDocument> {
        let mut universe: Option<Universe> = None;
        let mut implications: Vec<Implication> = Vec::new();
        let mut family: Vec<AttrSet> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let Some(u) = &universe else {
                let rest = line
                    .strip_prefix("universe:")
                    .ok_or(Error::MissingUniverse)?;
                let names: Vec<&str> = rest.split_whitespace().collect();
                for name in &names {
                    validate_name(name, line_no)?;
                }
                universe = Some(Universe::new(&names)?);
                continue;
            };
            if let Some(inner) = line.strip_prefix('{') {
                if !implications.is_empty() {
                    return Err(Error::MixedDocument { line: line_no });
                }
                let inner = inner
                    .strip_suffix('}')
                    .ok_or_else(|| Error::MalformedLine {
                        line: line_no,
                        message: "family line must end with `}`".to_string(),
                    })?;
                family.push(parse_names(u, inner, line_no)?);
            } else if let Some((lhs, rhs)) = line.split_once("->") {
                if family.is_empty() {
                    if rhs.contains("->") {
                        return Err(Error::MalformedLine {
                            line: line_no,
                            message: "more than one `->` on an implication line".to_string(),
                        });
                    }
                    implications.push(Implication::new(
                        parse_names(u, lhs, line_no)?,
                        parse_names(u, rhs, line_no)?,
                    ));
                } else {
                    return Err(Error::MixedDocument { line: line_no });
                }
            } else {
                return Err(Error::MalformedLine {
                    line: line_no,
                    message: "expected `LHS -> RHS` or `{ names }`".to_string(),
                });
            }
        }

        let universe = universe.ok_or(Error::MissingUniverse)?;
        let body = if family.is_empty() {
            DocumentBody::Implications(ImplicationSet::from_implications(implications))
        } else {
            DocumentBody::Family(SetFamily::from_sets(family))
        };
        Ok(SystemDocument { universe, body })
    }

    /// Canonical text form; `parse` of the output reproduces `self`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "universe: {}", self.universe.names().join(" ")).unwrap();
        match &self.body {
            DocumentBody::Implications(sigma) => {
                for imp in sigma {
                    writeln!(out, "{}", render_implication_line(&self.universe, imp)).unwrap();
                }
            }
            DocumentBody::Family(fam) => {
                for set in fam {
                    writeln!(out, "{}", render_family_line(&self.universe, set)).unwrap();
                }
            }
        }
        out
    }

    /// Interprets the document as a closure system: implication bodies
    /// through their model family, family bodies validated as given.
    pub fn to_system(&self) -> Result<ClosureSystem> {
        match &self.body {
            DocumentBody::Implications(sigma) => {
                ClosureSystem::from_implications(self.universe.clone(), sigma)
            }
            DocumentBody::Family(fam) => ClosureSystem::new(self.universe.clone(), fam.clone()),
        }
    }

    /// The implication body, if this is an implication document.
    pub fn implications(&self) -> Option<&ImplicationSet> {
        match &self.body {
            DocumentBody::Implications(sigma) => Some(sigma),
            DocumentBody::Family(_) => None,
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn validate_name(name: &str, line: usize) -> Result<()> {
    let bad_chars = ['{', '}', ',', '#'];
    if name.contains(bad_chars) || name.contains("->") || name == "universe:" {
        return Err(Error::InvalidName {
            name: name.to_string(),
            line,
        });
    }
    Ok(())
}

fn parse_names(universe: &Universe, text: &str, line: usize) -> Result<AttrSet> {
    let mut set = AttrSet::EMPTY;
    for token in text.split_whitespace() {
        match universe.index_of(token) {
            Some(i) => set = set.with(i),
            None => {
                return Err(Error::UnknownElement {
                    name: token.to_string(),
                    line: Some(line),
                })
            }
        }
    }
    Ok(set)
}

fn names_of(universe: &Universe, set: AttrSet) -> String {
    let names: Vec<&str> = set.iter().map(|i| universe.name(i)).collect();
    names.join(" ")
}

fn render_implication_line(universe: &Universe, imp: Implication) -> String {
    format!(
        "{} -> {}",
        names_of(universe, imp.lhs),
        names_of(universe, imp.rhs)
    )
    .trim()
    .to_string()
}

fn render_family_line(universe: &Universe, set: AttrSet) -> String {
    if set.is_empty() {
        "{ }".to_string()
    } else {
        format!("{{ {} }}", names_of(universe, set))
    }
}

/// Parses a comma-separated set literal such as `a,b` (empty string for
/// the empty set), as used on the command line.
pub fn parse_set_literal(universe: &Universe, text: &str) -> Result<AttrSet> {
    let mut set = AttrSet::EMPTY;
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        match universe.index_of(token) {
            Some(i) => set = set.with(i),
            None => {
                return Err(Error::UnknownElement {
                    name: token.to_string(),
                    line: None,
                })
            }
        }
    }
    Ok(set)
}
