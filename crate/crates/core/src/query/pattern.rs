use std::fmt;

use thiserror::Error;

use crate::kg::{Iri, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("MALFORMED_PATTERN: {0}")]
    MalformedPattern(String),
}

/// A pattern position: a constant term or a named variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternTerm {
    Var(String),
    Const(Term),
}

impl PatternTerm {
    pub fn var(name: &str) -> Self {
        PatternTerm::Var(name.to_string())
    }

    pub fn iri(iri: &Iri) -> Self {
        PatternTerm::Const(Term::Iri(iri.clone()))
    }

    pub fn as_var(&self) -> Option<&str> {
        match self {
            PatternTerm::Var(v) => Some(v),
            PatternTerm::Const(_) => None,
        }
    }
}

impl From<Term> for PatternTerm {
    fn from(value: Term) -> Self {
        PatternTerm::Const(value)
    }
}

impl fmt::Display for PatternTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternTerm::Var(v) => write!(f, "?{v}"),
            PatternTerm::Const(t) => t.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriplePattern {
    pub subject: PatternTerm,
    pub predicate: PatternTerm,
    pub object: PatternTerm,
}

impl TriplePattern {
    pub fn new(subject: PatternTerm, predicate: PatternTerm, object: PatternTerm) -> Self {
        TriplePattern {
            subject,
            predicate,
            object,
        }
    }

    pub fn positions(&self) -> [&PatternTerm; 3] {
        [&self.subject, &self.predicate, &self.object]
    }
}

impl fmt::Display for TriplePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.subject, self.predicate, self.object)
    }
}

/// A non-empty conjunction of triple patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    triples: Vec<TriplePattern>,
}

fn valid_var(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Pattern {
    pub fn new(triples: Vec<TriplePattern>) -> Result<Self, QueryError> {
        if triples.is_empty() {
            return Err(QueryError::MalformedPattern(
                "pattern has no triple patterns".into(),
            ));
        }
        for tp in &triples {
            for pos in tp.positions() {
                if let Some(v) = pos.as_var() {
                    if !valid_var(v) {
                        return Err(QueryError::MalformedPattern(format!(
                            "invalid variable name `{v}`"
                        )));
                    }
                }
            }
            for (pos, what) in [(&tp.subject, "subject"), (&tp.predicate, "predicate")] {
                if let PatternTerm::Const(Term::Literal(_)) = pos {
                    return Err(QueryError::MalformedPattern(format!(
                        "literal in {what} position: {tp}"
                    )));
                }
            }
        }
        Ok(Pattern { triples })
    }

    pub fn triples(&self) -> &[TriplePattern] {
        &self.triples
    }

    /// Distinct variable names, sorted.
    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = self
            .triples
            .iter()
            .flat_map(|t| t.positions())
            .filter_map(|p| p.as_var().map(str::to_string))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.triples.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" . "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kg::Literal;

    #[test]
    fn rejects_empty_and_bad_patterns() {
        assert!(Pattern::new(vec![]).is_err());
        let bad_var = TriplePattern::new(
            PatternTerm::var("1x"),
            PatternTerm::var("p"),
            PatternTerm::var("o"),
        );
        assert!(Pattern::new(vec![bad_var]).is_err());
        let lit_subject = TriplePattern::new(
            PatternTerm::Const(Term::Literal(Literal::string("x"))),
            PatternTerm::var("p"),
            PatternTerm::var("o"),
        );
        assert!(matches!(
            Pattern::new(vec![lit_subject]),
            Err(QueryError::MalformedPattern(_))
        ));
    }

    #[test]
    fn variables_are_sorted_and_distinct() {
        let tp = TriplePattern::new(
            PatternTerm::var("s"),
            PatternTerm::var("p"),
            PatternTerm::var("s"),
        );
        let p = Pattern::new(vec![tp.clone(), tp]).unwrap();
        assert_eq!(p.variables(), vec!["p".to_string(), "s".to_string()]);
    }
}
