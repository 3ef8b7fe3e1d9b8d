//! GOPPRRE data model.
//!
//! A [`MetaModel`] is a modeling-language definition (M1): typed declarations
//! of the six GOPPRR kinds plus connector constraints. A [`Model`] is an
//! instance graph (M2) conforming to one meta-model.
//!
//! Both are plain values; construct them, then check them with
//! [`crate::validate`]. Collections are ordered maps and sets so that two
//! structurally equal values compare equal and serialize identically.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The seven meta-meta concepts. `Connector` is the extension kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetaKind {
    Graph,
    Object,
    Point,
    Property,
    Relationship,
    Role,
    Connector,
}

impl MetaKind {
    pub const ALL: [MetaKind; 7] = [
        MetaKind::Graph,
        MetaKind::Object,
        MetaKind::Point,
        MetaKind::Property,
        MetaKind::Relationship,
        MetaKind::Role,
        MetaKind::Connector,
    ];

    /// Class name used in exported knowledge graphs.
    pub fn class_name(self) -> &'static str {
        match self {
            MetaKind::Graph => "Graph",
            MetaKind::Object => "Object",
            MetaKind::Point => "Point",
            MetaKind::Property => "Property",
            MetaKind::Relationship => "Relationship",
            MetaKind::Role => "Role",
            MetaKind::Connector => "Connector",
        }
    }

    /// Kinds that may own property values.
    pub fn can_own_properties(self) -> bool {
        !matches!(self, MetaKind::Property | MetaKind::Connector)
    }
}

impl fmt::Display for MetaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.class_name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NameError {
    #[error("type name `{0}` must match [A-Za-z][A-Za-z0-9_]*")]
    TypeName(String),
    #[error("instance id `{0}` must match [A-Za-z0-9_]+")]
    InstanceId(String),
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Name of a declared type. Unique per kind within a meta-model.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TypeName(String);

impl TypeName {
    pub fn new(name: impl Into<String>) -> Result<Self, NameError> {
        let name = name.into();
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() && chars.all(is_word_char) => Ok(TypeName(name)),
            _ => Err(NameError::TypeName(name)),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for TypeName {
    type Error = NameError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        TypeName::new(value)
    }
}

impl From<TypeName> for String {
    fn from(value: TypeName) -> Self {
        value.0
    }
}

impl fmt::Display for TypeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Identifier of an instance (or of a connector rule). Unique across a model.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct InstanceId(String);

impl InstanceId {
    pub fn new(id: impl Into<String>) -> Result<Self, NameError> {
        let id = id.into();
        if !id.is_empty() && id.chars().all(is_word_char) {
            Ok(InstanceId(id))
        } else {
            Err(NameError::InstanceId(id))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for InstanceId {
    type Error = NameError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        InstanceId::new(value)
    }
}

impl From<InstanceId> for String {
    fn from(value: InstanceId) -> Self {
        value.0
    }
}

impl fmt::Display for InstanceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Shorthand constructors for tests and examples. Panics on invalid input.
pub fn tn(name: &str) -> TypeName {
    TypeName::new(name).expect("valid type name")
}

/// See [`tn`].
pub fn id(id: &str) -> InstanceId {
    InstanceId::new(id).expect("valid instance id")
}

/// Value datatype of a property slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Datatype {
    String,
    Integer,
    Decimal,
    Boolean,
}

impl Datatype {
    pub fn xsd_local_name(self) -> &'static str {
        match self {
            Datatype::String => "string",
            Datatype::Integer => "integer",
            Datatype::Decimal => "decimal",
            Datatype::Boolean => "boolean",
        }
    }
}

/// A typed property value. Decimals keep their lexical form so that values
/// round-trip exactly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PropertyValue {
    String(String),
    Integer(i64),
    Decimal(String),
    Boolean(bool),
}

impl PropertyValue {
    pub fn datatype(&self) -> Datatype {
        match self {
            PropertyValue::String(_) => Datatype::String,
            PropertyValue::Integer(_) => Datatype::Integer,
            PropertyValue::Decimal(_) => Datatype::Decimal,
            PropertyValue::Boolean(_) => Datatype::Boolean,
        }
    }

    pub fn lexical(&self) -> String {
        match self {
            PropertyValue::String(s) | PropertyValue::Decimal(s) => s.clone(),
            PropertyValue::Integer(i) => i.to_string(),
            PropertyValue::Boolean(b) => b.to_string(),
        }
    }

    /// Lexical-form check; only decimals can be malformed.
    pub fn is_well_formed(&self) -> bool {
        match self {
            PropertyValue::Decimal(s) => is_decimal_lexical(s),
            _ => true,
        }
    }
}

/// `-?[0-9]+(\.[0-9]+)?`
pub fn is_decimal_lexical(s: &str) -> bool {
    let s = s.strip_prefix('-').unwrap_or(s);
    let (int, frac) = match s.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (s, None),
    };
    let digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
    digits(int) && frac.is_none_or(digits)
}

/// Declaration of a graph, point, role or property type.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeDecl {
    pub icon_path: Option<String>,
}

impl TypeDecl {
    pub fn with_icon(path: impl Into<String>) -> Self {
        TypeDecl {
            icon_path: Some(path.into()),
        }
    }
}

/// Whether an object is refined by a graph as a decomposition or an
/// exploration. Both validate identically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecompositionMode {
    Decompose,
    Explore,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Decomposition {
    pub graph_type: TypeName,
    pub mode: DecompositionMode,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ObjectTypeDef {
    pub point_types: BTreeSet<TypeName>,
    pub decomposes_to: Option<Decomposition>,
    pub icon_path: Option<String>,
}

/// A relationship type and its role types. A well-formed definition has
/// exactly two distinct role types; anything else is reported by validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationshipTypeDef {
    pub role_types: Vec<TypeName>,
    pub icon_path: Option<String>,
}

impl RelationshipTypeDef {
    pub fn new(start_role: TypeName, end_role: TypeName) -> Self {
        RelationshipTypeDef {
            role_types: vec![start_role, end_role],
            icon_path: None,
        }
    }

    pub fn has_role(&self, role: &TypeName) -> bool {
        self.role_types.contains(role)
    }
}

/// Declares that elements of `owner_type` carry a `property_type` value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropertySlot {
    pub owner_kind: MetaKind,
    pub owner_type: TypeName,
    pub property_type: TypeName,
    pub value_datatype: Datatype,
}

/// What one end of a connector binds to: an object type, or a point type on
/// an object type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConnectorTarget {
    pub object_type: TypeName,
    pub point_type: Option<TypeName>,
}

impl ConnectorTarget {
    pub fn object(object_type: TypeName) -> Self {
        ConnectorTarget {
            object_type,
            point_type: None,
        }
    }

    pub fn point(object_type: TypeName, point_type: TypeName) -> Self {
        ConnectorTarget {
            object_type,
            point_type: Some(point_type),
        }
    }
}

/// Licenses one side of a connection: a role of a relationship type bound to
/// an object (or point) type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Connector {
    pub relationship_type: TypeName,
    pub role_type: TypeName,
    pub target: ConnectorTarget,
}

/// A connection rule: the ordered pair of connectors licensing the start and
/// end sides of one kind of connection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConnectionRule {
    pub start: InstanceId,
    pub end: InstanceId,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MetaModel {
    pub language_name: String,
    pub graph_types: BTreeMap<TypeName, TypeDecl>,
    pub object_types: BTreeMap<TypeName, ObjectTypeDef>,
    pub point_types: BTreeMap<TypeName, TypeDecl>,
    pub relationship_types: BTreeMap<TypeName, RelationshipTypeDef>,
    pub role_types: BTreeMap<TypeName, TypeDecl>,
    pub property_types: BTreeMap<TypeName, TypeDecl>,
    pub property_slots: BTreeSet<PropertySlot>,
    pub connectors: BTreeMap<InstanceId, Connector>,
    pub rules: BTreeSet<ConnectionRule>,
    pub graph_membership: BTreeMap<TypeName, BTreeSet<TypeName>>,
}

impl MetaModel {
    pub fn new(language_name: impl Into<String>) -> Self {
        MetaModel {
            language_name: language_name.into(),
            ..Default::default()
        }
    }

    /// Every kind under which `name` is declared.
    pub fn kinds_of(&self, name: &TypeName) -> Vec<MetaKind> {
        let mut kinds = Vec::new();
        if self.graph_types.contains_key(name) {
            kinds.push(MetaKind::Graph);
        }
        if self.object_types.contains_key(name) {
            kinds.push(MetaKind::Object);
        }
        if self.point_types.contains_key(name) {
            kinds.push(MetaKind::Point);
        }
        if self.property_types.contains_key(name) {
            kinds.push(MetaKind::Property);
        }
        if self.relationship_types.contains_key(name) {
            kinds.push(MetaKind::Relationship);
        }
        if self.role_types.contains_key(name) {
            kinds.push(MetaKind::Role);
        }
        kinds
    }

    pub fn is_declared(&self, kind: MetaKind, name: &TypeName) -> bool {
        match kind {
            MetaKind::Graph => self.graph_types.contains_key(name),
            MetaKind::Object => self.object_types.contains_key(name),
            MetaKind::Point => self.point_types.contains_key(name),
            MetaKind::Property => self.property_types.contains_key(name),
            MetaKind::Relationship => self.relationship_types.contains_key(name),
            MetaKind::Role => self.role_types.contains_key(name),
            MetaKind::Connector => false,
        }
    }

    /// All declared type names with their kind, in (kind, name) order.
    pub fn declarations(&self) -> Vec<(MetaKind, &TypeName)> {
        let mut out = Vec::new();
        out.extend(self.graph_types.keys().map(|n| (MetaKind::Graph, n)));
        out.extend(self.object_types.keys().map(|n| (MetaKind::Object, n)));
        out.extend(self.point_types.keys().map(|n| (MetaKind::Point, n)));
        out.extend(self.property_types.keys().map(|n| (MetaKind::Property, n)));
        out.extend(
            self.relationship_types
                .keys()
                .map(|n| (MetaKind::Relationship, n)),
        );
        out.extend(self.role_types.keys().map(|n| (MetaKind::Role, n)));
        out
    }

    /// Icon path declared for a type, whatever its kind.
    pub fn icon_path(&self, kind: MetaKind, name: &TypeName) -> Option<&str> {
        let path = match kind {
            MetaKind::Graph => self
                .graph_types
                .get(name)
                .and_then(|d| d.icon_path.as_ref()),
            MetaKind::Object => self
                .object_types
                .get(name)
                .and_then(|d| d.icon_path.as_ref()),
            MetaKind::Point => self
                .point_types
                .get(name)
                .and_then(|d| d.icon_path.as_ref()),
            MetaKind::Property => self
                .property_types
                .get(name)
                .and_then(|d| d.icon_path.as_ref()),
            MetaKind::Relationship => self
                .relationship_types
                .get(name)
                .and_then(|d| d.icon_path.as_ref()),
            MetaKind::Role => self.role_types.get(name).and_then(|d| d.icon_path.as_ref()),
            MetaKind::Connector => None,
        };
        path.map(String::as_str)
    }

    pub fn slot(
        &self,
        owner_kind: MetaKind,
        owner_type: &TypeName,
        property_type: &TypeName,
    ) -> Option<&PropertySlot> {
        self.property_slots.iter().find(|s| {
            s.owner_kind == owner_kind
                && &s.owner_type == owner_type
                && &s.property_type == property_type
        })
    }

    /// Rules citing the given connector on either side.
    pub fn rules_using<'a>(
        &'a self,
        connector: &'a InstanceId,
    ) -> impl Iterator<Item = &'a ConnectionRule> + 'a {
        self.rules
            .iter()
            .filter(move |r| &r.start == connector || &r.end == connector)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointInstance {
    pub point_type: TypeName,
    pub owner: InstanceId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleInstance {
    pub role_type: TypeName,
    pub owner: InstanceId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyInstance {
    pub property_type: TypeName,
    pub owner: InstanceId,
    pub value: PropertyValue,
}

/// One side of a connection: the connector that licenses it, the role
/// instance on that side, and the bound object (and optional point on it).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConnectorBinding {
    pub connector: InstanceId,
    pub role: InstanceId,
    pub object: InstanceId,
    pub point: Option<InstanceId>,
}

impl ConnectorBinding {
    pub fn endpoint(&self) -> Endpoint {
        Endpoint {
            object: self.object.clone(),
            point: self.point.clone(),
        }
    }
}

/// A relationship instance linked from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Connection {
    pub relationship: InstanceId,
    pub start: ConnectorBinding,
    pub end: ConnectorBinding,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub graph_id: InstanceId,
    pub graph_type: TypeName,
    pub objects: BTreeMap<InstanceId, TypeName>,
    pub relationships: BTreeMap<InstanceId, TypeName>,
    pub points: BTreeMap<InstanceId, PointInstance>,
    pub roles: BTreeMap<InstanceId, RoleInstance>,
    pub properties: BTreeMap<InstanceId, PropertyInstance>,
    pub connections: BTreeSet<Connection>,
    pub icon_overrides: BTreeMap<InstanceId, String>,
}

impl Model {
    pub fn new(graph_id: InstanceId, graph_type: TypeName) -> Self {
        Model {
            graph_id,
            graph_type,
            objects: BTreeMap::new(),
            relationships: BTreeMap::new(),
            points: BTreeMap::new(),
            roles: BTreeMap::new(),
            properties: BTreeMap::new(),
            connections: BTreeSet::new(),
            icon_overrides: BTreeMap::new(),
        }
    }

    /// Kind and type of the element with this id, if any. The graph itself
    /// counts as an element.
    pub fn element(&self, id: &InstanceId) -> Option<(MetaKind, &TypeName)> {
        if id == &self.graph_id {
            return Some((MetaKind::Graph, &self.graph_type));
        }
        if let Some(t) = self.objects.get(id) {
            return Some((MetaKind::Object, t));
        }
        if let Some(t) = self.relationships.get(id) {
            return Some((MetaKind::Relationship, t));
        }
        if let Some(p) = self.points.get(id) {
            return Some((MetaKind::Point, &p.point_type));
        }
        if let Some(r) = self.roles.get(id) {
            return Some((MetaKind::Role, &r.role_type));
        }
        if let Some(p) = self.properties.get(id) {
            return Some((MetaKind::Property, &p.property_type));
        }
        None
    }

    pub fn element_count(&self) -> usize {
        1 + self.objects.len()
            + self.relationships.len()
            + self.points.len()
            + self.roles.len()
            + self.properties.len()
    }

    pub fn roles_of<'a>(
        &'a self,
        relationship: &'a InstanceId,
    ) -> impl Iterator<Item = (&'a InstanceId, &'a RoleInstance)> + 'a {
        self.roles
            .iter()
            .filter(move |(_, r)| &r.owner == relationship)
    }

    pub fn points_of<'a>(
        &'a self,
        object: &'a InstanceId,
    ) -> impl Iterator<Item = (&'a InstanceId, &'a PointInstance)> + 'a {
        self.points.iter().filter(move |(_, p)| &p.owner == object)
    }

    pub fn connections_of<'a>(
        &'a self,
        relationship: &'a InstanceId,
    ) -> impl Iterator<Item = &'a Connection> + 'a {
        self.connections
            .iter()
            .filter(move |c| &c.relationship == relationship)
    }
}

/// An object, or a point on an object, at one end of a connection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endpoint {
    pub object: InstanceId,
    pub point: Option<InstanceId>,
}

impl Endpoint {
    /// The point id when the binding targets a point, else the object id.
    pub fn id(&self) -> &InstanceId {
        self.point.as_ref().unwrap_or(&self.object)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndpointError {
    #[error("UNKNOWN_RELATIONSHIP: `{0}` is not a relationship instance")]
    UnknownRelationship(InstanceId),
    #[error("DANGLING_RELATIONSHIP: relationship `{0}` takes part in no connection")]
    DanglingRelationship(InstanceId),
    #[error("relationship `{0}` takes part in more than one connection")]
    MultipleConnections(InstanceId),
}

/// The (input, output) endpoints of a relationship: its start binding's
/// endpoint and its end binding's endpoint.
pub fn connection_endpoints(
    model: &Model,
    relationship: &InstanceId,
) -> Result<(Endpoint, Endpoint), EndpointError> {
    if !model.relationships.contains_key(relationship) {
        return Err(EndpointError::UnknownRelationship(relationship.clone()));
    }
    let mut connections = model.connections_of(relationship);
    let connection = connections
        .next()
        .ok_or_else(|| EndpointError::DanglingRelationship(relationship.clone()))?;
    if connections.next().is_some() {
        return Err(EndpointError::MultipleConnections(relationship.clone()));
    }
    Ok((connection.start.endpoint(), connection.end.endpoint()))
}
