//! Meta-models become classes: one class per kind, one subclass per declared
//! type, connector rules as `Connector` individuals. Models become
//! individuals of those subclasses, linked by the vocabulary's object
//! properties.

use thiserror::Error;

use crate::model::{ConnectorBinding, InstanceId, MetaKind, MetaModel, Model};
use crate::validate::{validate_metamodel, validate_model, ValidationReport};

use super::term::{Iri, Literal, Triple, TripleSet};
use super::vocab::{Predicate, PropertyCategory, Vocabulary};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error("INVALID_INPUT: {0}")]
    InvalidInput(ValidationReport),
}

/// Exports against a fixed vocabulary.
#[derive(Debug, Clone, Default)]
pub struct Exporter {
    vocab: Vocabulary,
}

impl Exporter {
    pub fn new(vocab: Vocabulary) -> Self {
        Exporter { vocab }
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn export_metamodel(&self, mm: &MetaModel) -> Result<TripleSet, ExportError> {
        let report = validate_metamodel(mm);
        if !report.ok() {
            return Err(ExportError::InvalidInput(report));
        }
        let v = &self.vocab;
        let rdf_type = Iri::rdf_type();
        let mut ts = TripleSet::new();

        for p in Predicate::ALL {
            let class = match p.category() {
                PropertyCategory::Object => "ObjectProperty",
                PropertyCategory::Data => "DatatypeProperty",
                PropertyCategory::Annotation => "AnnotationProperty",
            };
            ts.insert(Triple::new(
                v.predicate(p),
                rdf_type.clone(),
                Iri::owl(class),
            ));
        }
        for kind in MetaKind::ALL {
            ts.insert(Triple::new(
                v.kind_class(kind),
                rdf_type.clone(),
                Iri::owl("Class"),
            ));
        }
        for (kind, name) in mm.declarations() {
            let class = v.type_class(name);
            ts.insert(Triple::new(
                class.clone(),
                Iri::rdfs_subclass_of(),
                v.kind_class(kind),
            ));
            if let Some(icon) = mm.icon_path(kind, name) {
                ts.insert(Triple::new(
                    class,
                    v.predicate(Predicate::IconPath),
                    Literal::string(icon),
                ));
            }
        }
        for (cid, c) in &mm.connectors {
            let ind = v.connector_rule(cid);
            ts.insert(Triple::new(
                ind.clone(),
                rdf_type.clone(),
                v.kind_class(MetaKind::Connector),
            ));
            ts.insert(Triple::new(
                ind.clone(),
                v.predicate(Predicate::LinkFromRelationship),
                v.type_class(&c.relationship_type),
            ));
            ts.insert(Triple::new(
                ind.clone(),
                v.predicate(Predicate::RoleBindingObject),
                v.type_class(&c.role_type),
            ));
            ts.insert(Triple::new(
                ind.clone(),
                v.predicate(Predicate::LinkToObject),
                v.type_class(&c.target.object_type),
            ));
            if let Some(point) = &c.target.point_type {
                ts.insert(Triple::new(
                    ind,
                    v.predicate(Predicate::RoleBindingPoint),
                    v.type_class(point),
                ));
            }
        }
        for rule in &mm.rules {
            ts.insert(Triple::new(
                v.connector_rule(&rule.start),
                v.predicate(Predicate::Connect),
                v.connector_rule(&rule.end),
            ));
        }
        Ok(ts)
    }

    pub fn export_model(&self, mm: &MetaModel, m: &Model) -> Result<TripleSet, ExportError> {
        let report = validate_metamodel(mm);
        if !report.ok() {
            return Err(ExportError::InvalidInput(report));
        }
        let report = validate_model(mm, m);
        if !report.ok() {
            return Err(ExportError::InvalidInput(report));
        }
        let v = &self.vocab;
        let rdf_type = Iri::rdf_type();
        let ind = |id: &InstanceId| -> Iri {
            let (_, ty) = m.element(id).expect("validated model");
            v.individual(ty, id)
        };
        let graph = ind(&m.graph_id);
        let mut ts = TripleSet::new();
        ts.insert(Triple::new(
            graph.clone(),
            rdf_type.clone(),
            v.type_class(&m.graph_type),
        ));

        for (id, ty) in &m.objects {
            let o = v.individual(ty, id);
            ts.insert(Triple::new(o.clone(), rdf_type.clone(), v.type_class(ty)));
            ts.insert(Triple::new(
                graph.clone(),
                v.predicate(Predicate::GraphIncludingObject),
                o,
            ));
        }
        for (id, ty) in &m.relationships {
            let r = v.individual(ty, id);
            ts.insert(Triple::new(r.clone(), rdf_type.clone(), v.type_class(ty)));
            ts.insert(Triple::new(
                graph.clone(),
                v.predicate(Predicate::GraphIncludingRelationship),
                r,
            ));
        }
        for (id, p) in &m.points {
            let point = v.individual(&p.point_type, id);
            ts.insert(Triple::new(
                point.clone(),
                rdf_type.clone(),
                v.type_class(&p.point_type),
            ));
            ts.insert(Triple::new(
                ind(&p.owner),
                v.predicate(Predicate::LinkObjectAndPoint),
                point,
            ));
        }
        for (id, r) in &m.roles {
            let role = v.individual(&r.role_type, id);
            ts.insert(Triple::new(
                role.clone(),
                rdf_type.clone(),
                v.type_class(&r.role_type),
            ));
            ts.insert(Triple::new(
                ind(&r.owner),
                v.predicate(Predicate::LinkRelationshipAndRole),
                role,
            ));
        }
        for (id, p) in &m.properties {
            let prop = v.individual(&p.property_type, id);
            ts.insert(Triple::new(
                prop.clone(),
                rdf_type.clone(),
                v.type_class(&p.property_type),
            ));
            ts.insert(Triple::new(
                ind(&p.owner),
                v.predicate(Predicate::HasProperty),
                prop.clone(),
            ));
            ts.insert(Triple::new(
                prop,
                v.predicate(Predicate::HasValue),
                Literal::from(&p.value),
            ));
        }
        for (id, path) in &m.icon_overrides {
            ts.insert(Triple::new(
                ind(id),
                v.predicate(Predicate::ModelIconPath),
                Literal::string(path),
            ));
        }
        for c in &m.connections {
            let relationship = ind(&c.relationship);
            let mut side = |b: &ConnectorBinding| -> Iri {
                let conn = v.connection_connector(&b.role);
                ts.insert(Triple::new(
                    conn.clone(),
                    rdf_type.clone(),
                    v.kind_class(MetaKind::Connector),
                ));
                ts.insert(Triple::new(
                    graph.clone(),
                    v.predicate(Predicate::GraphIncludingConnector),
                    conn.clone(),
                ));
                ts.insert(Triple::new(
                    conn.clone(),
                    v.predicate(Predicate::LinkFromRelationship),
                    relationship.clone(),
                ));
                ts.insert(Triple::new(
                    conn.clone(),
                    v.predicate(Predicate::LinkToObject),
                    ind(&b.object),
                ));
                ts.insert(Triple::new(
                    conn.clone(),
                    v.predicate(Predicate::RoleBindingObject),
                    ind(&b.role),
                ));
                if let Some(p) = &b.point {
                    ts.insert(Triple::new(
                        conn.clone(),
                        v.predicate(Predicate::RoleBindingPoint),
                        ind(p),
                    ));
                }
                conn
            };
            let start = side(&c.start);
            let end = side(&c.end);
            ts.insert(Triple::new(start, v.predicate(Predicate::Connect), end));
        }
        Ok(ts)
    }
}

/// [`Exporter::export_metamodel`] with the default vocabulary.
pub fn export_metamodel(mm: &MetaModel) -> Result<TripleSet, ExportError> {
    Exporter::default().export_metamodel(mm)
}

/// [`Exporter::export_model`] with the default vocabulary.
pub fn export_model(mm: &MetaModel, m: &Model) -> Result<TripleSet, ExportError> {
    Exporter::default().export_model(mm, m)
}
