//! The export vocabulary: namespace, predicates, class IRIs and the IRI
//! minting scheme for types and individuals.

use crate::model::{InstanceId, MetaKind, TypeName};

use super::term::{Iri, TermError};

/// Default `se` namespace.
pub const DEFAULT_BASE: &str = "http://www.zkhoneycomb.com/formats/metagInOwl#";
pub const DEFAULT_PREFIX: &str = "se";

/// Closed set of namespace predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    GraphIncludingObject,
    GraphIncludingRelationship,
    LinkObjectAndPoint,
    LinkRelationshipAndRole,
    HasProperty,
    GraphIncludingConnector,
    LinkFromRelationship,
    LinkToObject,
    Connect,
    RoleBindingObject,
    RoleBindingPoint,
    IconPath,
    HasValue,
    ModelIconPath,
}

/// OWL property category a predicate is declared as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyCategory {
    Object,
    Data,
    Annotation,
}

impl Predicate {
    pub const ALL: [Predicate; 14] = [
        Predicate::GraphIncludingObject,
        Predicate::GraphIncludingRelationship,
        Predicate::LinkObjectAndPoint,
        Predicate::LinkRelationshipAndRole,
        Predicate::HasProperty,
        Predicate::GraphIncludingConnector,
        Predicate::LinkFromRelationship,
        Predicate::LinkToObject,
        Predicate::Connect,
        Predicate::RoleBindingObject,
        Predicate::RoleBindingPoint,
        Predicate::IconPath,
        Predicate::HasValue,
        Predicate::ModelIconPath,
    ];

    pub fn local_name(self) -> &'static str {
        match self {
            Predicate::GraphIncludingObject => "graphIncludingObject",
            Predicate::GraphIncludingRelationship => "graphIncludingRelationship",
            Predicate::LinkObjectAndPoint => "linkObjectAndPoint",
            Predicate::LinkRelationshipAndRole => "linkRelationshipAndRole",
            Predicate::HasProperty => "hasProperty",
            Predicate::GraphIncludingConnector => "graphIncludingConnector",
            Predicate::LinkFromRelationship => "linkFromRelationship",
            Predicate::LinkToObject => "linkToObject",
            Predicate::Connect => "connect",
            Predicate::RoleBindingObject => "roleBindingObject",
            Predicate::RoleBindingPoint => "roleBindingPoint",
            Predicate::IconPath => "iconPath",
            Predicate::HasValue => "hasValue",
            Predicate::ModelIconPath => "modelIconPath",
        }
    }

    pub fn category(self) -> PropertyCategory {
        match self {
            Predicate::IconPath => PropertyCategory::Annotation,
            Predicate::HasValue | Predicate::ModelIconPath => PropertyCategory::Data,
            _ => PropertyCategory::Object,
        }
    }
}

/// Names no declared type may take: they would mint the same IRI as a kind
/// class or a predicate.
pub fn reserved_names() -> impl Iterator<Item = &'static str> {
    MetaKind::ALL
        .iter()
        .map(|k| k.class_name())
        .chain(Predicate::ALL.iter().map(|p| p.local_name()))
}

/// Namespace plus minting rules. Cheap to clone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    base: Iri,
    prefix: String,
}

impl Default for Vocabulary {
    fn default() -> Self {
        Vocabulary {
            base: Iri::new(DEFAULT_BASE).expect("default base is absolute"),
            prefix: DEFAULT_PREFIX.to_string(),
        }
    }
}

impl Vocabulary {
    /// A vocabulary rooted at another namespace, still using the `se` prefix.
    pub fn with_base(base: &str) -> Result<Self, TermError> {
        Ok(Vocabulary {
            base: Iri::new(base)?,
            prefix: DEFAULT_PREFIX.to_string(),
        })
    }

    pub fn base(&self) -> &Iri {
        &self.base
    }

    pub fn prefix(&self) -> &str {
        &self.prefix
    }

    pub fn predicate(&self, p: Predicate) -> Iri {
        Iri::join(&self.base, p.local_name())
    }

    /// Reverse lookup of a namespace predicate.
    pub fn predicate_of(&self, iri: &Iri) -> Option<Predicate> {
        let local = iri.as_str().strip_prefix(self.base.as_str())?;
        Predicate::ALL.into_iter().find(|p| p.local_name() == local)
    }

    pub fn kind_class(&self, kind: MetaKind) -> Iri {
        Iri::join(&self.base, kind.class_name())
    }

    pub fn type_class(&self, name: &TypeName) -> Iri {
        Iri::join(&self.base, name.as_str())
    }

    /// `base + TypeName + "_" + InstanceId`
    pub fn individual(&self, type_name: &TypeName, id: &InstanceId) -> Iri {
        Iri::join(&self.base, &format!("{}_{}", type_name, id))
    }

    /// Meta-level connector rule individual.
    pub fn connector_rule(&self, connector: &InstanceId) -> Iri {
        Iri::join(&self.base, &format!("Connector_{connector}"))
    }

    /// Instance-level connector individual for the connection side bound by
    /// `role`.
    pub fn connection_connector(&self, role: &InstanceId) -> Iri {
        Iri::join(&self.base, &format!("Connector_{role}"))
    }

    /// True for the namespace predicates and for `rdf:type` /
    /// `rdfs:subClassOf`.
    pub fn allows_predicate(&self, iri: &Iri) -> bool {
        self.predicate_of(iri).is_some()
            || *iri == Iri::rdf_type()
            || *iri == Iri::rdfs_subclass_of()
    }

    /// Prefix declarations used by Turtle output.
    pub fn prefixes(&self) -> Vec<(&str, String)> {
        vec![
            ("owl", super::term::OWL.to_string()),
            ("rdf", super::term::RDF.to_string()),
            ("rdfs", super::term::RDFS.to_string()),
            (self.prefix.as_str(), self.base.as_str().to_string()),
            ("xsd", super::term::XSD.to_string()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{id, tn};

    #[test]
    fn eleven_object_properties() {
        let n = Predicate::ALL
            .iter()
            .filter(|p| p.category() == PropertyCategory::Object)
            .count();
        assert_eq!(n, 11);
    }

    #[test]
    fn minting_scheme() {
        let v = Vocabulary::default();
        assert_eq!(
            v.individual(&tn("Part"), &id("pump")).as_str(),
            "http://www.zkhoneycomb.com/formats/metagInOwl#Part_pump"
        );
        assert_eq!(
            v.kind_class(MetaKind::Object).as_str(),
            format!("{DEFAULT_BASE}Object")
        );
        assert_eq!(
            v.predicate_of(&v.predicate(Predicate::Connect)),
            Some(Predicate::Connect)
        );
    }

    #[test]
    fn custom_base() {
        let v = Vocabulary::with_base("urn:test:").unwrap();
        assert_eq!(v.type_class(&tn("Block")).as_str(), "urn:test:Block");
        assert!(Vocabulary::with_base("not absolute").is_err());
    }
}
