//! Compares what the queries recover from a triple set against the model's
//! own ground truth.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::kg::{Iri, TripleSet, Vocabulary};
use crate::model::{InstanceId, MetaModel, Model};

use super::report::{
    completeness_report, logic_report, CompletenessReport, ConnectionRow, DirectionRow, Link,
    LogicReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Section {
    GraphMembers,
    StructureLinks,
    PropertyLinks,
    Connections,
    Directions,
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Section::GraphMembers => "graph_members",
            Section::StructureLinks => "structure_links",
            Section::PropertyLinks => "property_links",
            Section::Connections => "connections",
            Section::Directions => "directions",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiffEntry {
    /// A model fact the triples do not reproduce. `fact` lists the IRIs of
    /// the fact's columns, `-` standing for an absent point.
    Missing { section: Section, fact: Vec<String> },
    /// A recovered fact with no counterpart in the model.
    Unexpected { section: Section, fact: Vec<String> },
    /// The relationship is recovered but starts from another object.
    DirectionMismatch {
        relationship: String,
        expected_input: String,
        found_input: String,
    },
}

impl fmt::Display for DiffEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffEntry::Missing { section, fact } => write!(f, "missing {section}: {}", fact.join(" ")),
            DiffEntry::Unexpected { section, fact } => write!(f, "unexpected {section}: {}", fact.join(" ")),
            DiffEntry::DirectionMismatch { relationship, expected_input, found_input } => write!(
                f,
                "direction mismatch on {relationship}: expected input {expected_input}, found {found_input}"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationDiff {
    pub entries: Vec<DiffEntry>,
}

impl VerificationDiff {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

impl fmt::Display for VerificationDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "diff: empty");
        }
        writeln!(
            f,
            "diff: {} entr{}",
            self.entries.len(),
            if self.entries.len() == 1 { "y" } else { "ies" }
        )?;
        for e in &self.entries {
            writeln!(f, "  {e}")?;
        }
        Ok(())
    }
}

/// Completeness facts read straight off the model.
pub fn expected_completeness(m: &Model, vocab: &Vocabulary) -> CompletenessReport {
    let ind = |id: &InstanceId| -> Iri {
        let (_, ty) = m.element(id).expect("element of a valid model");
        vocab.individual(ty, id)
    };
    let graph = ind(&m.graph_id);
    let mut report = CompletenessReport::default();
    for id in m.objects.keys().chain(m.relationships.keys()) {
        report.graph_members.insert(Link {
            from: graph.clone(),
            to: ind(id),
        });
    }
    for (id, p) in &m.points {
        report.structure_links.insert(Link {
            from: ind(&p.owner),
            to: ind(id),
        });
    }
    for (id, r) in &m.roles {
        report.structure_links.insert(Link {
            from: ind(&r.owner),
            to: ind(id),
        });
    }
    for (id, p) in &m.properties {
        report.property_links.insert(Link {
            from: ind(&p.owner),
            to: ind(id),
        });
    }
    report
}

/// Connections and directions read straight off the model.
pub fn expected_logic(m: &Model, vocab: &Vocabulary) -> LogicReport {
    let ind = |id: &InstanceId| -> Iri {
        let (_, ty) = m.element(id).expect("element of a valid model");
        vocab.individual(ty, id)
    };
    let graph = ind(&m.graph_id);
    let mut report = LogicReport::default();
    for c in &m.connections {
        let relationship = ind(&c.relationship);
        report.connections.insert(ConnectionRow {
            relationship: relationship.clone(),
            input: ind(&c.start.object),
            output: ind(&c.end.object),
            input_point: c.start.point.as_ref().map(ind),
            output_point: c.end.point.as_ref().map(ind),
        });
        report.directions.insert(DirectionRow {
            graph: graph.clone(),
            relationship,
            input: ind(&c.start.object),
        });
    }
    report
}

fn link_fact(l: &Link) -> Vec<String> {
    vec![l.from.as_str().to_string(), l.to.as_str().to_string()]
}

fn connection_fact(c: &ConnectionRow) -> Vec<String> {
    let opt = |p: &Option<Iri>| {
        p.as_ref()
            .map_or("-".to_string(), |p| p.as_str().to_string())
    };
    vec![
        c.relationship.as_str().to_string(),
        c.input.as_str().to_string(),
        c.output.as_str().to_string(),
        opt(&c.input_point),
        opt(&c.output_point),
    ]
}

fn direction_fact(d: &DirectionRow) -> Vec<String> {
    vec![
        d.graph.as_str().to_string(),
        d.relationship.as_str().to_string(),
        d.input.as_str().to_string(),
    ]
}

fn diff_sets<T: Ord>(
    section: Section,
    expected: &BTreeSet<T>,
    actual: &BTreeSet<T>,
    fact: impl Fn(&T) -> Vec<String>,
    out: &mut Vec<DiffEntry>,
) {
    for e in expected.difference(actual) {
        out.push(DiffEntry::Missing {
            section,
            fact: fact(e),
        });
    }
    for a in actual.difference(expected) {
        out.push(DiffEntry::Unexpected {
            section,
            fact: fact(a),
        });
    }
}

/// Diffs the query reports over `ts` against the model. Empty iff the
/// triples reproduce every membership, structure, property, connection and
/// direction fact of the model and nothing more.
pub fn verify(m: &Model, _mm: &MetaModel, ts: &TripleSet, vocab: &Vocabulary) -> VerificationDiff {
    let want_c = expected_completeness(m, vocab);
    let got_c = completeness_report(ts, vocab);
    let want_l = expected_logic(m, vocab);
    let got_l = logic_report(ts, vocab);

    let mut entries = Vec::new();
    diff_sets(
        Section::GraphMembers,
        &want_c.graph_members,
        &got_c.graph_members,
        link_fact,
        &mut entries,
    );
    diff_sets(
        Section::StructureLinks,
        &want_c.structure_links,
        &got_c.structure_links,
        link_fact,
        &mut entries,
    );
    diff_sets(
        Section::PropertyLinks,
        &want_c.property_links,
        &got_c.property_links,
        link_fact,
        &mut entries,
    );
    diff_sets(
        Section::Connections,
        &want_l.connections,
        &got_l.connections,
        connection_fact,
        &mut entries,
    );

    // A direction that is missing on one side and present with another input
    // on the other is a single mismatch.
    let mut missing: BTreeSet<&DirectionRow> =
        want_l.directions.difference(&got_l.directions).collect();
    let mut extra: BTreeSet<&DirectionRow> =
        got_l.directions.difference(&want_l.directions).collect();
    for want in missing.clone() {
        let found = extra
            .iter()
            .find(|d| d.graph == want.graph && d.relationship == want.relationship)
            .copied();
        if let Some(found) = found {
            entries.push(DiffEntry::DirectionMismatch {
                relationship: want.relationship.as_str().to_string(),
                expected_input: want.input.as_str().to_string(),
                found_input: found.input.as_str().to_string(),
            });
            missing.remove(want);
            extra.remove(found);
        }
    }
    for d in missing {
        entries.push(DiffEntry::Missing {
            section: Section::Directions,
            fact: direction_fact(d),
        });
    }
    for d in extra {
        entries.push(DiffEntry::Unexpected {
            section: Section::Directions,
            fact: direction_fact(d),
        });
    }
    entries.sort();
    VerificationDiff { entries }
}
