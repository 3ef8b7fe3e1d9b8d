//! Canonical N-Triples: one statement per line, lines in sorted order, LF
//! endings, no blank nodes.

use std::fmt::Write as _;

use thiserror::Error;

use crate::model::Datatype;

use super::term::{Iri, Literal, Term, Triple, TripleSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("SYNTAX_ERROR at line {line}: {message}")]
pub struct NTriplesError {
    pub line: usize,
    pub message: String,
}

pub fn serialize_ntriples(ts: &TripleSet) -> String {
    let mut out = String::new();
    for t in ts {
        writeln!(out, "{t}").expect("writing to a String");
    }
    out
}

/// Parses N-Triples restricted to IRIs and literals of the supported
/// datatypes. Blank lines and `#` comments are skipped; triple order is
/// irrelevant.
pub fn parse_ntriples(text: &str) -> Result<TripleSet, NTriplesError> {
    let mut ts = TripleSet::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let triple = LineParser { rest: trimmed }
            .triple()
            .map_err(|message| NTriplesError {
                line: line_no,
                message,
            })?;
        ts.insert(triple);
    }
    Ok(ts)
}

struct LineParser<'a> {
    rest: &'a str,
}

impl<'a> LineParser<'a> {
    fn triple(mut self) -> Result<Triple, String> {
        let subject = self.iri("subject")?;
        self.skip_ws();
        let predicate = self.iri("predicate")?;
        self.skip_ws();
        let object = self.term()?;
        self.skip_ws();
        self.rest = self
            .rest
            .strip_prefix('.')
            .ok_or_else(|| "expected terminal `.`".to_string())?;
        self.skip_ws();
        if !self.rest.is_empty() && !self.rest.starts_with('#') {
            return Err(format!("unexpected trailing input `{}`", self.rest));
        }
        Ok(Triple {
            subject,
            predicate,
            object,
        })
    }

    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start_matches([' ', '\t']);
    }

    fn iri(&mut self, position: &str) -> Result<Iri, String> {
        if self.rest.starts_with("_:") {
            return Err(format!("blank node {position} is not supported"));
        }
        let body = self
            .rest
            .strip_prefix('<')
            .ok_or_else(|| format!("expected IRI as {position}"))?;
        let end = body
            .find('>')
            .ok_or_else(|| "unterminated IRI".to_string())?;
        let raw = &body[..end];
        self.rest = &body[end + 1..];
        let decoded = if raw.contains('\\') {
            unescape(raw, false)?
        } else {
            raw.to_string()
        };
        Iri::new(decoded).map_err(|e| e.to_string())
    }

    fn term(&mut self) -> Result<Term, String> {
        if self.rest.starts_with('"') {
            self.literal().map(Term::Literal)
        } else {
            self.iri("object").map(Term::Iri)
        }
    }

    fn literal(&mut self) -> Result<Literal, String> {
        let body = &self.rest[1..];
        let mut end = None;
        let mut escaped = false;
        for (i, c) in body.char_indices() {
            match c {
                _ if escaped => escaped = false,
                '\\' => escaped = true,
                '"' => {
                    end = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let end = end.ok_or_else(|| "unterminated literal".to_string())?;
        let lexical = unescape(&body[..end], true)?;
        self.rest = &body[end + 1..];
        if self.rest.starts_with('@') {
            return Err("language-tagged literals are not supported".into());
        }
        let datatype = if let Some(after) = self.rest.strip_prefix("^^") {
            self.rest = after;
            let iri = self.iri("datatype")?;
            Literal::datatype_from_iri(iri.as_str()).map_err(|e| e.to_string())?
        } else {
            Datatype::String
        };
        Literal::new(lexical, datatype).map_err(|e| e.to_string())
    }
}

fn unescape(s: &str, allow_echar: bool) -> Result<String, String> {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        let e = chars.next().ok_or_else(|| "dangling escape".to_string())?;
        let simple = match e {
            't' => Some('\t'),
            'b' => Some('\u{8}'),
            'n' => Some('\n'),
            'r' => Some('\r'),
            'f' => Some('\u{c}'),
            '"' => Some('"'),
            '\'' => Some('\''),
            '\\' => Some('\\'),
            _ => None,
        };
        match (simple, e) {
            (Some(ch), _) if allow_echar => out.push(ch),
            (_, 'u' | 'U') => {
                let n = if e == 'u' { 4 } else { 8 };
                let hex: String = chars.by_ref().take(n).collect();
                if hex.len() != n {
                    return Err("truncated unicode escape".into());
                }
                let code = u32::from_str_radix(&hex, 16)
                    .map_err(|_| format!("bad unicode escape `{hex}`"))?;
                out.push(
                    char::from_u32(code).ok_or_else(|| format!("invalid code point {code:#x}"))?,
                );
            }
            _ => return Err(format!("invalid escape `\\{e}`")),
        }
    }
    Ok(out)
}
