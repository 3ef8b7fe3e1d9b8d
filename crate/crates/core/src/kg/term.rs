//! RDF terms, triples and triple sets.
//!
//! Ordering of every type here follows the canonical N-Triples rendering of
//! its terms, so iterating a [`TripleSet`] yields canonical line order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::model::{Datatype, PropertyValue};

pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL: &str = "http://www.w3.org/2002/07/owl#";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("not an absolute IRI: `{0}`")]
    InvalidIri(String),
    #[error("unsupported literal datatype <{0}>")]
    UnsupportedDatatype(String),
    #[error("lexical form `{lexical}` is not a valid {datatype}")]
    InvalidLexical {
        lexical: String,
        datatype: &'static str,
    },
}

/// An absolute IRI.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Iri(String);

impl Iri {
    pub fn new(iri: impl Into<String>) -> Result<Self, TermError> {
        let iri = iri.into();
        let scheme_ok = match iri.split_once(':') {
            Some((scheme, _)) => {
                let mut chars = scheme.chars();
                matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
                    && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
            }
            None => false,
        };
        let chars_ok = iri
            .chars()
            .all(|c| c > ' ' && !matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\'));
        if scheme_ok && chars_ok {
            Ok(Iri(iri))
        } else {
            Err(TermError::InvalidIri(iri))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub(crate) fn xsd(local: &str) -> Iri {
        Iri(format!("{XSD}{local}"))
    }

    pub(crate) fn rdf_type() -> Iri {
        Iri(format!("{RDF}type"))
    }

    pub(crate) fn rdfs_subclass_of() -> Iri {
        Iri(format!("{RDFS}subClassOf"))
    }

    pub(crate) fn owl(local: &str) -> Iri {
        Iri(format!("{OWL}{local}"))
    }

    /// Appends a local name; the result is still absolute and valid as long
    /// as `local` is made of word characters.
    pub(crate) fn join(base: &Iri, local: &str) -> Iri {
        debug_assert!(local.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'));
        Iri(format!("{}{}", base.0, local))
    }
}

impl Ord for Iri {
    fn cmp(&self, other: &Self) -> Ordering {
        // Compare as rendered `<iri>`: the closing bracket takes part.
        self.0
            .bytes()
            .chain(std::iter::once(b'>'))
            .cmp(other.0.bytes().chain(std::iter::once(b'>')))
    }
}

impl PartialOrd for Iri {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

/// A literal with one of the supported XSD datatypes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    lexical: String,
    datatype: Datatype,
}

impl Literal {
    pub fn new(lexical: impl Into<String>, datatype: Datatype) -> Result<Self, TermError> {
        let lexical = lexical.into();
        let ok = match datatype {
            Datatype::String => true,
            Datatype::Integer => {
                let digits = lexical.strip_prefix('-').unwrap_or(&lexical);
                !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
            }
            Datatype::Decimal => crate::model::is_decimal_lexical(&lexical),
            Datatype::Boolean => lexical == "true" || lexical == "false",
        };
        if ok {
            Ok(Literal { lexical, datatype })
        } else {
            Err(TermError::InvalidLexical {
                lexical,
                datatype: datatype.xsd_local_name(),
            })
        }
    }

    pub fn string(value: impl Into<String>) -> Self {
        Literal {
            lexical: value.into(),
            datatype: Datatype::String,
        }
    }

    /// Resolves a datatype IRI to one of the supported datatypes.
    pub fn datatype_from_iri(iri: &str) -> Result<Datatype, TermError> {
        let local = iri
            .strip_prefix(XSD)
            .ok_or_else(|| TermError::UnsupportedDatatype(iri.to_string()))?;
        match local {
            "string" => Ok(Datatype::String),
            "integer" => Ok(Datatype::Integer),
            "decimal" => Ok(Datatype::Decimal),
            "boolean" => Ok(Datatype::Boolean),
            _ => Err(TermError::UnsupportedDatatype(iri.to_string())),
        }
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> Datatype {
        self.datatype
    }

    pub fn datatype_iri(&self) -> Iri {
        Iri::xsd(self.datatype.xsd_local_name())
    }
}

impl From<&PropertyValue> for Literal {
    fn from(value: &PropertyValue) -> Self {
        Literal {
            lexical: value.lexical(),
            datatype: value.datatype(),
        }
    }
}

pub(crate) fn escape_literal(s: &str, out: &mut String) {
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            _ => out.push(c),
        }
    }
}

impl fmt::Display for Literal {
    /// `xsd:string` literals render without a datatype suffix.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut quoted = String::with_capacity(self.lexical.len() + 2);
        quoted.push('"');
        escape_literal(&self.lexical, &mut quoted);
        quoted.push('"');
        match self.datatype {
            Datatype::String => f.write_str(&quoted),
            _ => write!(f, "{quoted}^^{}", self.datatype_iri()),
        }
    }
}

impl Ord for Literal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Iri {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Iri(Iri),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(i) => Some(i),
            Term::Literal(_) => None,
        }
    }
}

impl From<Iri> for Term {
    fn from(value: Iri) -> Self {
        Term::Iri(value)
    }
}

impl From<Literal> for Term {
    fn from(value: Literal) -> Self {
        Term::Literal(value)
    }
}

impl Serialize for Term {
    /// Rendered in N-Triples form.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Term::Iri(a), Term::Iri(b)) => a.cmp(b),
            (Term::Literal(a), Term::Literal(b)) => a.cmp(b),
            // `"` sorts before `<`
            (Term::Literal(_), Term::Iri(_)) => Ordering::Less,
            (Term::Iri(_), Term::Literal(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(i) => i.fmt(f),
            Term::Literal(l) => l.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub subject: Iri,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: Iri, predicate: Iri, object: impl Into<Term>) -> Self {
        Triple {
            subject,
            predicate,
            object: object.into(),
        }
    }
}

impl fmt::Display for Triple {
    /// One N-Triples statement, without line terminator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

/// Duplicate-free triples in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TripleSet {
    triples: BTreeSet<Triple>,
}

impl TripleSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, triple: Triple) -> bool {
        self.triples.insert(triple)
    }

    pub fn remove(&mut self, triple: &Triple) -> bool {
        self.triples.remove(triple)
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.contains(triple)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    pub fn union(&self, other: &TripleSet) -> TripleSet {
        self.triples.union(&other.triples).cloned().collect()
    }
}

impl FromIterator<Triple> for TripleSet {
    fn from_iter<T: IntoIterator<Item = Triple>>(iter: T) -> Self {
        TripleSet {
            triples: iter.into_iter().collect(),
        }
    }
}

impl Extend<Triple> for TripleSet {
    fn extend<T: IntoIterator<Item = Triple>>(&mut self, iter: T) {
        self.triples.extend(iter)
    }
}

impl<'a> IntoIterator for &'a TripleSet {
    type Item = &'a Triple;
    type IntoIter = std::collections::btree_set::Iter<'a, Triple>;
    fn into_iter(self) -> Self::IntoIter {
        self.triples.iter()
    }
}
