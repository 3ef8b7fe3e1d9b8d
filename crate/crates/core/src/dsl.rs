//! Document formats for meta-models (`.gopprr.json`) and models
//! (`.model.json`).
//!
//! Both are JSON objects with exactly three keys:
//!
//! ```json
//! { "format_version": 1, "kind": "metamodel", "payload": { ... } }
//! ```
//!
//! Parsing is strict: unknown keys, duplicate declarations and unsupported
//! versions are errors. Emission is canonical: keys sorted, declarations
//! sorted by name (rules, slots and connections by their fields), two-space
//! indentation, LF line endings and a trailing newline.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::model::{
    Connection, ConnectionRule, Connector, ConnectorBinding, ConnectorTarget, Datatype,
    Decomposition, InstanceId, MetaKind, MetaModel, Model, ObjectTypeDef, PointInstance,
    PropertyInstance, PropertySlot, PropertyValue, RelationshipTypeDef, RoleInstance, TypeDecl,
    TypeName,
};
use crate::validate::{validate_metamodel, validate_model, ValidationReport};

pub const FORMAT_VERSION: u32 = 1;
pub const METAMODEL_EXTENSION: &str = ".gopprr.json";
pub const MODEL_EXTENSION: &str = ".model.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SchemaCode {
    InvalidShape,
    UnsupportedVersion,
    WrongKind,
    DuplicateType,
    DuplicateId,
    DuplicateEntry,
}

impl fmt::Display for SchemaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchemaCode::InvalidShape => "INVALID_SHAPE",
            SchemaCode::UnsupportedVersion => "UNSUPPORTED_VERSION",
            SchemaCode::WrongKind => "WRONG_KIND",
            SchemaCode::DuplicateType => "DUPLICATE_TYPE",
            SchemaCode::DuplicateId => "DUPLICATE_ID",
            SchemaCode::DuplicateEntry => "DUPLICATE_ENTRY",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("SYNTAX_ERROR at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("SCHEMA_ERROR {code}: {message}")]
    Schema { code: SchemaCode, message: String },
    #[error("SEMANTIC_ERROR: {0}")]
    Semantic(ValidationReport),
}

impl DslError {
    fn schema(code: SchemaCode, message: impl Into<String>) -> Self {
        DslError::Schema {
            code,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    Metamodel,
    Model,
}

impl DocumentKind {
    fn as_str(self) -> &'static str {
        match self {
            DocumentKind::Metamodel => "metamodel",
            DocumentKind::Model => "model",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document<P> {
    format_version: u32,
    kind: DocumentKind,
    payload: P,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TypeDeclDoc {
    name: TypeName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    icon_path: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ObjectTypeDoc {
    name: TypeName,
    #[serde(default)]
    point_types: Vec<TypeName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    decomposes_to: Option<Decomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    icon_path: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationshipTypeDoc {
    name: TypeName,
    role_types: Vec<TypeName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    icon_path: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SlotDoc {
    owner_kind: MetaKind,
    owner_type: TypeName,
    property_type: TypeName,
    value_datatype: Datatype,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConnectorDoc {
    id: InstanceId,
    relationship_type: TypeName,
    role_type: TypeName,
    object_type: TypeName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    point_type: Option<TypeName>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleDoc {
    start: InstanceId,
    end: InstanceId,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MetaModelDoc {
    language_name: String,
    #[serde(default)]
    graph_types: Vec<TypeDeclDoc>,
    #[serde(default)]
    object_types: Vec<ObjectTypeDoc>,
    #[serde(default)]
    point_types: Vec<TypeDeclDoc>,
    #[serde(default)]
    relationship_types: Vec<RelationshipTypeDoc>,
    #[serde(default)]
    role_types: Vec<TypeDeclDoc>,
    #[serde(default)]
    property_types: Vec<TypeDeclDoc>,
    #[serde(default)]
    property_slots: Vec<SlotDoc>,
    #[serde(default)]
    connectors: Vec<ConnectorDoc>,
    #[serde(default)]
    rules: Vec<RuleDoc>,
    #[serde(default)]
    graph_membership: BTreeMap<TypeName, Vec<TypeName>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementDoc {
    id: InstanceId,
    #[serde(rename = "type")]
    ty: TypeName,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OwnedDoc {
    id: InstanceId,
    #[serde(rename = "type")]
    ty: TypeName,
    owner: InstanceId,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PropertyDoc {
    id: InstanceId,
    #[serde(rename = "type")]
    ty: TypeName,
    owner: InstanceId,
    value: PropertyValue,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BindingDoc {
    connector: InstanceId,
    role: InstanceId,
    object: InstanceId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    point: Option<InstanceId>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConnectionDoc {
    relationship: InstanceId,
    start: BindingDoc,
    end: BindingDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDoc {
    graph_id: InstanceId,
    graph_type: TypeName,
    #[serde(default)]
    objects: Vec<ElementDoc>,
    #[serde(default)]
    relationships: Vec<ElementDoc>,
    #[serde(default)]
    points: Vec<OwnedDoc>,
    #[serde(default)]
    roles: Vec<OwnedDoc>,
    #[serde(default)]
    properties: Vec<PropertyDoc>,
    #[serde(default)]
    connections: Vec<ConnectionDoc>,
    #[serde(default)]
    icon_overrides: BTreeMap<InstanceId, String>,
}

fn read_document<P: DeserializeOwned>(text: &str, kind: DocumentKind) -> Result<P, DslError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DslError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let Value::Object(fields) = &value else {
        return Err(DslError::schema(
            SchemaCode::InvalidShape,
            "document must be a JSON object",
        ));
    };
    match fields.get("format_version").and_then(Value::as_u64) {
        Some(v) if v == u64::from(FORMAT_VERSION) => {}
        Some(v) => {
            return Err(DslError::schema(
                SchemaCode::UnsupportedVersion,
                format!("format_version {v} is not supported (expected {FORMAT_VERSION})"),
            ))
        }
        None => {
            return Err(DslError::schema(
                SchemaCode::InvalidShape,
                "missing integer `format_version`",
            ))
        }
    }
    match fields.get("kind").and_then(Value::as_str) {
        Some(k) if k == kind.as_str() => {}
        other => {
            return Err(DslError::schema(
                SchemaCode::WrongKind,
                format!(
                    "expected kind `{}`, found {:?}",
                    kind.as_str(),
                    other.unwrap_or("nothing")
                ),
            ))
        }
    }
    let doc: Document<P> = serde_json::from_str(text)
        .map_err(|e| DslError::schema(SchemaCode::InvalidShape, e.to_string()))?;
    Ok(doc.payload)
}

fn insert_unique<K: Ord + fmt::Display, V>(
    map: &mut BTreeMap<K, V>,
    key: K,
    value: V,
    code: SchemaCode,
    what: &str,
) -> Result<(), DslError> {
    if map.contains_key(&key) {
        return Err(DslError::schema(
            code,
            format!("{what} `{key}` is declared twice"),
        ));
    }
    map.insert(key, value);
    Ok(())
}

fn unique_set<T: Ord + fmt::Debug>(
    items: impl IntoIterator<Item = T>,
    what: &str,
) -> Result<BTreeSet<T>, DslError> {
    let mut set = BTreeSet::new();
    for item in items {
        if set.contains(&item) {
            return Err(DslError::schema(
                SchemaCode::DuplicateEntry,
                format!("{what} {item:?} is listed twice"),
            ));
        }
        set.insert(item);
    }
    Ok(set)
}

fn decls(docs: Vec<TypeDeclDoc>, what: &str) -> Result<BTreeMap<TypeName, TypeDecl>, DslError> {
    let mut map = BTreeMap::new();
    for d in docs {
        insert_unique(
            &mut map,
            d.name,
            TypeDecl {
                icon_path: d.icon_path,
            },
            SchemaCode::DuplicateType,
            what,
        )?;
    }
    Ok(map)
}

/// Reads a meta-model document without semantic validation.
pub fn read_metamodel(text: &str) -> Result<MetaModel, DslError> {
    let doc: MetaModelDoc = read_document(text, DocumentKind::Metamodel)?;
    let mut mm = MetaModel::new(doc.language_name);
    mm.graph_types = decls(doc.graph_types, "graph type")?;
    mm.point_types = decls(doc.point_types, "point type")?;
    mm.role_types = decls(doc.role_types, "role type")?;
    mm.property_types = decls(doc.property_types, "property type")?;
    for o in doc.object_types {
        let def = ObjectTypeDef {
            point_types: unique_set(o.point_types, "point type")?,
            decomposes_to: o.decomposes_to,
            icon_path: o.icon_path,
        };
        insert_unique(
            &mut mm.object_types,
            o.name,
            def,
            SchemaCode::DuplicateType,
            "object type",
        )?;
    }
    for r in doc.relationship_types {
        let def = RelationshipTypeDef {
            role_types: r.role_types,
            icon_path: r.icon_path,
        };
        insert_unique(
            &mut mm.relationship_types,
            r.name,
            def,
            SchemaCode::DuplicateType,
            "relationship type",
        )?;
    }
    mm.property_slots = unique_set(
        doc.property_slots.into_iter().map(|s| PropertySlot {
            owner_kind: s.owner_kind,
            owner_type: s.owner_type,
            property_type: s.property_type,
            value_datatype: s.value_datatype,
        }),
        "property slot",
    )?;
    for c in doc.connectors {
        let connector = Connector {
            relationship_type: c.relationship_type,
            role_type: c.role_type,
            target: ConnectorTarget {
                object_type: c.object_type,
                point_type: c.point_type,
            },
        };
        insert_unique(
            &mut mm.connectors,
            c.id,
            connector,
            SchemaCode::DuplicateId,
            "connector",
        )?;
    }
    mm.rules = unique_set(
        doc.rules.into_iter().map(|r| ConnectionRule {
            start: r.start,
            end: r.end,
        }),
        "rule",
    )?;
    for (graph, members) in doc.graph_membership {
        let members = unique_set(members, "graph member")?;
        mm.graph_membership.insert(graph, members);
    }
    Ok(mm)
}

/// Reads and validates a meta-model document.
pub fn parse_metamodel(text: &str) -> Result<MetaModel, DslError> {
    let mm = read_metamodel(text)?;
    let report = validate_metamodel(&mm);
    if report.ok() {
        Ok(mm)
    } else {
        Err(DslError::Semantic(report))
    }
}

/// Reads a model document without semantic validation.
pub fn read_model(text: &str) -> Result<Model, DslError> {
    let doc: ModelDoc = read_document(text, DocumentKind::Model)?;
    let mut m = Model::new(doc.graph_id, doc.graph_type);
    for o in doc.objects {
        insert_unique(
            &mut m.objects,
            o.id,
            o.ty,
            SchemaCode::DuplicateId,
            "object",
        )?;
    }
    for r in doc.relationships {
        insert_unique(
            &mut m.relationships,
            r.id,
            r.ty,
            SchemaCode::DuplicateId,
            "relationship",
        )?;
    }
    for p in doc.points {
        let point = PointInstance {
            point_type: p.ty,
            owner: p.owner,
        };
        insert_unique(&mut m.points, p.id, point, SchemaCode::DuplicateId, "point")?;
    }
    for r in doc.roles {
        let role = RoleInstance {
            role_type: r.ty,
            owner: r.owner,
        };
        insert_unique(&mut m.roles, r.id, role, SchemaCode::DuplicateId, "role")?;
    }
    for p in doc.properties {
        let prop = PropertyInstance {
            property_type: p.ty,
            owner: p.owner,
            value: p.value,
        };
        insert_unique(
            &mut m.properties,
            p.id,
            prop,
            SchemaCode::DuplicateId,
            "property",
        )?;
    }
    let binding = |b: BindingDoc| ConnectorBinding {
        connector: b.connector,
        role: b.role,
        object: b.object,
        point: b.point,
    };
    m.connections = unique_set(
        doc.connections.into_iter().map(|c| Connection {
            relationship: c.relationship,
            start: binding(c.start),
            end: binding(c.end),
        }),
        "connection",
    )?;
    m.icon_overrides = doc.icon_overrides;
    Ok(m)
}

/// Reads a model document and validates it against `mm`, which must itself
/// be valid.
pub fn parse_model(text: &str, mm: &MetaModel) -> Result<Model, DslError> {
    let report = validate_metamodel(mm);
    if !report.ok() {
        return Err(DslError::Semantic(report));
    }
    let m = read_model(text)?;
    let report = validate_model(mm, &m);
    if report.ok() {
        Ok(m)
    } else {
        Err(DslError::Semantic(report))
    }
}

fn emit<P: Serialize>(kind: DocumentKind, payload: P) -> String {
    let doc = Document {
        format_version: FORMAT_VERSION,
        kind,
        payload,
    };
    // serde_json's Value map is ordered, which sorts every object's keys.
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
    text.push('\n');
    text
}

fn decl_docs(map: &BTreeMap<TypeName, TypeDecl>) -> Vec<TypeDeclDoc> {
    map.iter()
        .map(|(name, d)| TypeDeclDoc {
            name: name.clone(),
            icon_path: d.icon_path.clone(),
        })
        .collect()
}

pub fn emit_metamodel(mm: &MetaModel) -> String {
    let doc = MetaModelDoc {
        language_name: mm.language_name.clone(),
        graph_types: decl_docs(&mm.graph_types),
        object_types: mm
            .object_types
            .iter()
            .map(|(name, o)| ObjectTypeDoc {
                name: name.clone(),
                point_types: o.point_types.iter().cloned().collect(),
                decomposes_to: o.decomposes_to.clone(),
                icon_path: o.icon_path.clone(),
            })
            .collect(),
        point_types: decl_docs(&mm.point_types),
        relationship_types: mm
            .relationship_types
            .iter()
            .map(|(name, r)| RelationshipTypeDoc {
                name: name.clone(),
                role_types: r.role_types.clone(),
                icon_path: r.icon_path.clone(),
            })
            .collect(),
        role_types: decl_docs(&mm.role_types),
        property_types: decl_docs(&mm.property_types),
        property_slots: mm
            .property_slots
            .iter()
            .map(|s| SlotDoc {
                owner_kind: s.owner_kind,
                owner_type: s.owner_type.clone(),
                property_type: s.property_type.clone(),
                value_datatype: s.value_datatype,
            })
            .collect(),
        connectors: mm
            .connectors
            .iter()
            .map(|(id, c)| ConnectorDoc {
                id: id.clone(),
                relationship_type: c.relationship_type.clone(),
                role_type: c.role_type.clone(),
                object_type: c.target.object_type.clone(),
                point_type: c.target.point_type.clone(),
            })
            .collect(),
        rules: mm
            .rules
            .iter()
            .map(|r| RuleDoc {
                start: r.start.clone(),
                end: r.end.clone(),
            })
            .collect(),
        graph_membership: mm
            .graph_membership
            .iter()
            .map(|(g, members)| (g.clone(), members.iter().cloned().collect()))
            .collect(),
    };
    emit(DocumentKind::Metamodel, doc)
}

pub fn emit_model(m: &Model) -> String {
    let binding = |b: &ConnectorBinding| BindingDoc {
        connector: b.connector.clone(),
        role: b.role.clone(),
        object: b.object.clone(),
        point: b.point.clone(),
    };
    let doc = ModelDoc {
        graph_id: m.graph_id.clone(),
        graph_type: m.graph_type.clone(),
        objects: m
            .objects
            .iter()
            .map(|(id, ty)| ElementDoc {
                id: id.clone(),
                ty: ty.clone(),
            })
            .collect(),
        relationships: m
            .relationships
            .iter()
            .map(|(id, ty)| ElementDoc {
                id: id.clone(),
                ty: ty.clone(),
            })
            .collect(),
        points: m
            .points
            .iter()
            .map(|(id, p)| OwnedDoc {
                id: id.clone(),
                ty: p.point_type.clone(),
                owner: p.owner.clone(),
            })
            .collect(),
        roles: m
            .roles
            .iter()
            .map(|(id, r)| OwnedDoc {
                id: id.clone(),
                ty: r.role_type.clone(),
                owner: r.owner.clone(),
            })
            .collect(),
        properties: m
            .properties
            .iter()
            .map(|(id, p)| PropertyDoc {
                id: id.clone(),
                ty: p.property_type.clone(),
                owner: p.owner.clone(),
                value: p.value.clone(),
            })
            .collect(),
        connections: m
            .connections
            .iter()
            .map(|c| ConnectionDoc {
                relationship: c.relationship.clone(),
                start: binding(&c.start),
                end: binding(&c.end),
            })
            .collect(),
        icon_overrides: m.icon_overrides.clone(),
    };
    emit(DocumentKind::Model, doc)
}
