//! Completeness and logic reports, each computed purely by pattern queries
//! over the exported triples.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::kg::{Iri, Predicate, Term, TripleSet, Vocabulary};
use crate::model::MetaKind;

use super::engine::match_pattern;
use super::pattern::{Pattern, PatternTerm, TriplePattern};

/// A directed link between two individuals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Link {
    pub from: Iri,
    pub to: Iri,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CompletenessReport {
    /// graph → object, graph → relationship
    pub graph_members: BTreeSet<Link>,
    /// object → point, relationship → role
    pub structure_links: BTreeSet<Link>,
    /// owner → property
    pub property_links: BTreeSet<Link>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ConnectionRow {
    pub relationship: Iri,
    pub input: Iri,
    pub output: Iri,
    pub input_point: Option<Iri>,
    pub output_point: Option<Iri>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DirectionRow {
    pub graph: Iri,
    pub relationship: Iri,
    pub input: Iri,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LogicReport {
    pub connections: BTreeSet<ConnectionRow>,
    pub directions: BTreeSet<DirectionRow>,
}

fn var(name: &str) -> PatternTerm {
    PatternTerm::var(name)
}

fn links(ts: &TripleSet, vocab: &Vocabulary, predicate: Predicate) -> BTreeSet<Link> {
    let pattern = Pattern::new(vec![TriplePattern::new(
        var("from"),
        PatternTerm::iri(&vocab.predicate(predicate)),
        var("to"),
    )])
    .expect("well-formed");
    match_pattern(ts, &pattern)
        .project(&["from", "to"])
        .into_iter()
        .filter_map(|row| match (&row[0], &row[1]) {
            (Term::Iri(from), Term::Iri(to)) => Some(Link {
                from: from.clone(),
                to: to.clone(),
            }),
            _ => None,
        })
        .collect()
}

/// Membership, structure and property queries.
pub fn completeness_report(ts: &TripleSet, vocab: &Vocabulary) -> CompletenessReport {
    let mut graph_members = links(ts, vocab, Predicate::GraphIncludingObject);
    graph_members.extend(links(ts, vocab, Predicate::GraphIncludingRelationship));
    let mut structure_links = links(ts, vocab, Predicate::LinkObjectAndPoint);
    structure_links.extend(links(ts, vocab, Predicate::LinkRelationshipAndRole));
    CompletenessReport {
        graph_members,
        structure_links,
        property_links: links(ts, vocab, Predicate::HasProperty),
    }
}

/// The connection query: two connectors of one graph, both linked from the
/// same relationship, each linked to an object, the first connecting to the
/// second.
pub fn connection_pattern(vocab: &Vocabulary) -> Pattern {
    let p = |pred: Predicate| PatternTerm::iri(&vocab.predicate(pred));
    let connector_class = PatternTerm::iri(&vocab.kind_class(MetaKind::Connector));
    let rdf_type = PatternTerm::iri(&Iri::rdf_type());
    Pattern::new(vec![
        TriplePattern::new(var("c1"), rdf_type.clone(), connector_class.clone()),
        TriplePattern::new(var("c2"), rdf_type, connector_class),
        TriplePattern::new(
            var("graph"),
            p(Predicate::GraphIncludingConnector),
            var("c1"),
        ),
        TriplePattern::new(
            var("graph"),
            p(Predicate::GraphIncludingConnector),
            var("c2"),
        ),
        TriplePattern::new(
            var("c1"),
            p(Predicate::LinkFromRelationship),
            var("relationship"),
        ),
        TriplePattern::new(
            var("c2"),
            p(Predicate::LinkFromRelationship),
            var("relationship"),
        ),
        TriplePattern::new(var("c1"), p(Predicate::LinkToObject), var("input")),
        TriplePattern::new(var("c2"), p(Predicate::LinkToObject), var("output")),
        TriplePattern::new(var("c1"), p(Predicate::Connect), var("c2")),
    ])
    .expect("well-formed")
}

pub fn logic_report(ts: &TripleSet, vocab: &Vocabulary) -> LogicReport {
    let solutions = match_pattern(ts, &connection_pattern(vocab));
    let mut points: BTreeMap<Iri, Vec<Option<Iri>>> = BTreeMap::new();
    for link in links(ts, vocab, Predicate::RoleBindingPoint) {
        points.entry(link.from).or_default().push(Some(link.to));
    }
    let points_of = |c: &Iri| points.get(c).cloned().unwrap_or_else(|| vec![None]);

    let mut report = LogicReport::default();
    let rows = solutions.project(&["graph", "relationship", "input", "output", "c1", "c2"]);
    for row in rows {
        let iris: Vec<Iri> = row.iter().filter_map(|t| t.as_iri().cloned()).collect();
        let [graph, relationship, input, output, c1, c2] = <[Iri; 6]>::try_from(iris)
            .ok()
            .unwrap_or_else(|| unreachable!("connection variables bind IRIs only"));
        for input_point in points_of(&c1) {
            for output_point in points_of(&c2) {
                report.connections.insert(ConnectionRow {
                    relationship: relationship.clone(),
                    input: input.clone(),
                    output: output.clone(),
                    input_point: input_point.clone(),
                    output_point,
                });
            }
        }
        report.directions.insert(DirectionRow {
            graph,
            relationship,
            input,
        });
    }
    report
}

fn opt(i: &Option<Iri>) -> &str {
    i.as_ref().map_or("-", |i| i.as_str())
}

impl CompletenessReport {
    pub fn is_empty(&self) -> bool {
        self.graph_members.is_empty()
            && self.structure_links.is_empty()
            && self.property_links.is_empty()
    }

    /// Sorted tab-separated rows.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (tag, set) in [
            ("graph_member", &self.graph_members),
            ("property", &self.property_links),
            ("structure", &self.structure_links),
        ] {
            for l in set {
                writeln!(out, "{tag}\t{}\t{}", l.from.as_str(), l.to.as_str()).unwrap();
            }
        }
        out
    }
}

impl LogicReport {
    pub fn is_empty(&self) -> bool {
        self.connections.is_empty() && self.directions.is_empty()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for c in &self.connections {
            writeln!(
                out,
                "connection\t{}\t{}\t{}\t{}\t{}",
                c.relationship.as_str(),
                c.input.as_str(),
                c.output.as_str(),
                opt(&c.input_point),
                opt(&c.output_point)
            )
            .unwrap();
        }
        for d in &self.directions {
            writeln!(
                out,
                "direction\t{}\t{}\t{}",
                d.graph.as_str(),
                d.relationship.as_str(),
                d.input.as_str()
            )
            .unwrap();
        }
        out
    }
}

impl fmt::Display for CompletenessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "completeness: {} graph member(s), {} structure link(s), {} property link(s)",
            self.graph_members.len(),
            self.structure_links.len(),
            self.property_links.len()
        )?;
        f.write_str(&self.to_tsv())
    }
}

impl fmt::Display for LogicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "logic: {} connection(s), {} direction(s)",
            self.connections.len(),
            self.directions.len()
        )?;
        f.write_str(&self.to_tsv())
    }
}
