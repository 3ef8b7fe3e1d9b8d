//! Human-oriented Turtle rendering: prefixes declared up front, one block
//! per subject, predicates in sorted order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::model::Datatype;

use super::term::{escape_literal, Iri, Term, TripleSet};
use super::vocab::Vocabulary;

pub fn serialize_turtle(ts: &TripleSet, vocab: &Vocabulary) -> String {
    let prefixes = vocab.prefixes();
    let mut out = String::new();
    for (prefix, ns) in &prefixes {
        writeln!(out, "@prefix {prefix}: <{ns}> .").unwrap();
    }

    let mut by_subject: BTreeMap<&Iri, BTreeMap<&Iri, Vec<&Term>>> = BTreeMap::new();
    for t in ts {
        by_subject
            .entry(&t.subject)
            .or_default()
            .entry(&t.predicate)
            .or_default()
            .push(&t.object);
    }
    let rdf_type = Iri::rdf_type();
    for (subject, predicates) in by_subject {
        out.push('\n');
        out.push_str(&name(subject, &prefixes));
        let n = predicates.len();
        for (i, (predicate, objects)) in predicates.into_iter().enumerate() {
            let p = if *predicate == rdf_type {
                "a".to_string()
            } else {
                name(predicate, &prefixes)
            };
            let objs: Vec<String> = objects.iter().map(|o| term(o, &prefixes)).collect();
            let end = if i + 1 == n { " ." } else { " ;" };
            write!(out, "\n    {p} {}{end}", objs.join(", ")).unwrap();
        }
        out.push('\n');
    }
    out
}

fn name(iri: &Iri, prefixes: &[(&str, String)]) -> String {
    for (prefix, ns) in prefixes {
        if let Some(local) = iri.as_str().strip_prefix(ns.as_str()) {
            if !local.is_empty() && local.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return format!("{prefix}:{local}");
            }
        }
    }
    iri.to_string()
}

fn term(t: &Term, prefixes: &[(&str, String)]) -> String {
    match t {
        Term::Iri(i) => name(i, prefixes),
        Term::Literal(l) => {
            let mut s = String::from("\"");
            escape_literal(l.lexical(), &mut s);
            s.push('"');
            if l.datatype() != Datatype::String {
                s.push_str("^^");
                s.push_str(&name(&l.datatype_iri(), prefixes));
            }
            s
        }
    }
}
