//! Structural validation of meta-models and models.
//!
//! Validation never fails: every broken invariant becomes a [`Violation`] in
//! the returned [`ValidationReport`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::kg::vocab::{reserved_names, Vocabulary};
use crate::kg::Iri;
use crate::model::{ConnectorBinding, InstanceId, MetaKind, MetaModel, Model, TypeName};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationCode {
    // meta-model
    TypeNameClash,
    ReservedName,
    UnknownType,
    PointUnowned,
    RelRoleArity,
    RelRoleDuplicate,
    SlotOwnerKind,
    SlotConflict,
    ConnUnknownType,
    ConnRoleNotOfRelationship,
    ConnPointNotOfObject,
    ConnDuplicate,
    ConnUnused,
    RuleUnknownConnector,
    RuleMismatch,
    IriCollision,
    // model
    DuplicateId,
    GraphMembership,
    PointOwner,
    PointNotAllowed,
    RoleOwner,
    RoleNotAllowed,
    RelRoleCount,
    PropOwner,
    PropNoSlot,
    PropDatatype,
    PropValue,
    IconUnknownId,
    ConnUnknownRelationship,
    ConnDuplicateRelationship,
    ConnRoleMismatch,
    ConnUnknownEndpoint,
    ConnPointOwner,
    ConnNoRule,
    ConnPairNotRule,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        use ViolationCode::*;
        match self {
            TypeNameClash => "TYPE_NAME_CLASH",
            ReservedName => "RESERVED_NAME",
            UnknownType => "UNKNOWN_TYPE",
            PointUnowned => "POINT_UNOWNED",
            RelRoleArity => "REL_ROLE_ARITY",
            RelRoleDuplicate => "REL_ROLE_DUPLICATE",
            SlotOwnerKind => "SLOT_OWNER_KIND",
            SlotConflict => "SLOT_CONFLICT",
            ConnUnknownType => "CONN_UNKNOWN_TYPE",
            ConnRoleNotOfRelationship => "CONN_ROLE_NOT_OF_RELATIONSHIP",
            ConnPointNotOfObject => "CONN_POINT_NOT_OF_OBJECT",
            ConnDuplicate => "CONN_DUPLICATE",
            ConnUnused => "CONN_UNUSED",
            RuleUnknownConnector => "RULE_UNKNOWN_CONNECTOR",
            RuleMismatch => "RULE_MISMATCH",
            IriCollision => "IRI_COLLISION",
            DuplicateId => "DUPLICATE_ID",
            GraphMembership => "GRAPH_MEMBERSHIP",
            PointOwner => "POINT_OWNER",
            PointNotAllowed => "POINT_NOT_ALLOWED",
            RoleOwner => "ROLE_OWNER",
            RoleNotAllowed => "ROLE_NOT_ALLOWED",
            RelRoleCount => "REL_ROLE_COUNT",
            PropOwner => "PROP_OWNER",
            PropNoSlot => "PROP_NO_SLOT",
            PropDatatype => "PROP_DATATYPE",
            PropValue => "PROP_VALUE",
            IconUnknownId => "ICON_UNKNOWN_ID",
            ConnUnknownRelationship => "CONN_UNKNOWN_RELATIONSHIP",
            ConnDuplicateRelationship => "CONN_DUPLICATE_RELATIONSHIP",
            ConnRoleMismatch => "CONN_ROLE_MISMATCH",
            ConnUnknownEndpoint => "CONN_UNKNOWN_ENDPOINT",
            ConnPointOwner => "CONN_POINT_OWNER",
            ConnNoRule => "CONN_NO_RULE",
            ConnPairNotRule => "CONN_PAIR_NOT_RULE",
        }
    }

    /// Violations that concern connections and their bindings.
    pub fn is_connection_code(self) -> bool {
        use ViolationCode::*;
        matches!(
            self,
            ConnUnknownRelationship
                | ConnDuplicateRelationship
                | ConnRoleMismatch
                | ConnUnknownEndpoint
                | ConnPointOwner
                | ConnNoRule
                | ConnPairNotRule
        )
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub message: String,
    pub ids: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)?;
        if !self.ids.is_empty() {
            write!(f, " [{}]", self.ids.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    ok: bool,
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort();
        violations.dedup();
        ValidationReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn ok(&self) -> bool {
        self.ok
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }

    pub fn codes(&self) -> BTreeSet<ViolationCode> {
        self.violations.iter().map(|v| v.code).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return writeln!(f, "OK");
        }
        writeln!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Collector(Vec<Violation>);

impl Collector {
    fn push<I, S>(&mut self, code: ViolationCode, message: impl Into<String>, ids: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.0.push(Violation {
            code,
            message: message.into(),
            ids: ids.into_iter().map(|s| s.to_string()).collect(),
        });
    }
}

/// Checks every meta-model invariant.
pub fn validate_metamodel(mm: &MetaModel) -> ValidationReport {
    let mut out = Collector::default();
    check_declarations(mm, &mut out);
    check_objects(mm, &mut out);
    check_relationships(mm, &mut out);
    check_slots(mm, &mut out);
    check_membership(mm, &mut out);
    check_connectors(mm, &mut out);
    check_rules(mm, &mut out);
    check_collisions(meta_iris(mm), &mut out);
    ValidationReport::from_violations(out.0)
}

fn check_declarations(mm: &MetaModel, out: &mut Collector) {
    let mut kinds: BTreeMap<&TypeName, Vec<MetaKind>> = BTreeMap::new();
    for (kind, name) in mm.declarations() {
        kinds.entry(name).or_default().push(kind);
    }
    for (name, ks) in &kinds {
        if ks.len() > 1 {
            let list: Vec<_> = ks.iter().map(|k| k.class_name()).collect();
            out.push(
                ViolationCode::TypeNameClash,
                format!("type `{name}` is declared as {}", list.join(" and ")),
                [name],
            );
        }
    }
    let reserved: BTreeSet<&str> = reserved_names().collect();
    for name in kinds.keys() {
        if reserved.contains(name.as_str()) {
            out.push(
                ViolationCode::ReservedName,
                format!("type name `{name}` is reserved by the export vocabulary"),
                [name],
            );
        }
    }
}

fn check_objects(mm: &MetaModel, out: &mut Collector) {
    for (name, def) in &mm.object_types {
        for point in &def.point_types {
            if !mm.point_types.contains_key(point) {
                out.push(
                    ViolationCode::UnknownType,
                    format!("object type `{name}` lists undeclared point type `{point}`"),
                    [name, point],
                );
            }
        }
        if let Some(d) = &def.decomposes_to {
            if !mm.graph_types.contains_key(&d.graph_type) {
                out.push(
                    ViolationCode::UnknownType,
                    format!(
                        "object type `{name}` decomposes to undeclared graph type `{}`",
                        d.graph_type
                    ),
                    [name, &d.graph_type],
                );
            }
        }
    }
    for point in mm.point_types.keys() {
        if !mm
            .object_types
            .values()
            .any(|o| o.point_types.contains(point))
        {
            out.push(
                ViolationCode::PointUnowned,
                format!("point type `{point}` is not attached to any object type"),
                [point],
            );
        }
    }
}

fn check_relationships(mm: &MetaModel, out: &mut Collector) {
    for (name, def) in &mm.relationship_types {
        if def.role_types.len() != 2 {
            out.push(
                ViolationCode::RelRoleArity,
                format!(
                    "relationship type `{name}` declares {} role type(s), expected 2",
                    def.role_types.len()
                ),
                [name],
            );
        } else if def.role_types[0] == def.role_types[1] {
            out.push(
                ViolationCode::RelRoleDuplicate,
                format!(
                    "relationship type `{name}` uses role type `{}` twice",
                    def.role_types[0]
                ),
                [name],
            );
        }
        for role in &def.role_types {
            if !mm.role_types.contains_key(role) {
                out.push(
                    ViolationCode::UnknownType,
                    format!("relationship type `{name}` uses undeclared role type `{role}`"),
                    [name, role],
                );
            }
        }
    }
}

fn check_slots(mm: &MetaModel, out: &mut Collector) {
    let mut seen: BTreeMap<(MetaKind, &TypeName, &TypeName), usize> = BTreeMap::new();
    for slot in &mm.property_slots {
        *seen
            .entry((slot.owner_kind, &slot.owner_type, &slot.property_type))
            .or_default() += 1;
        if !slot.owner_kind.can_own_properties() {
            out.push(
                ViolationCode::SlotOwnerKind,
                format!("{} types cannot own properties", slot.owner_kind),
                [&slot.owner_type, &slot.property_type],
            );
        } else if !mm.is_declared(slot.owner_kind, &slot.owner_type) {
            out.push(
                ViolationCode::UnknownType,
                format!(
                    "property slot owner `{}` is not a declared {} type",
                    slot.owner_type, slot.owner_kind
                ),
                [&slot.owner_type],
            );
        }
        if !mm.property_types.contains_key(&slot.property_type) {
            out.push(
                ViolationCode::UnknownType,
                format!(
                    "property slot uses undeclared property type `{}`",
                    slot.property_type
                ),
                [&slot.property_type],
            );
        }
    }
    for ((kind, owner, prop), n) in seen {
        if n > 1 {
            out.push(
                ViolationCode::SlotConflict,
                format!("{kind} type `{owner}` declares property `{prop}` with {n} datatypes"),
                [owner, prop],
            );
        }
    }
}

fn check_membership(mm: &MetaModel, out: &mut Collector) {
    for (graph, members) in &mm.graph_membership {
        if !mm.graph_types.contains_key(graph) {
            out.push(
                ViolationCode::UnknownType,
                format!("graph membership lists undeclared graph type `{graph}`"),
                [graph],
            );
        }
        for member in members {
            if !mm.object_types.contains_key(member) && !mm.relationship_types.contains_key(member)
            {
                out.push(
                    ViolationCode::UnknownType,
                    format!("graph type `{graph}` admits `{member}`, which is neither an object nor a relationship type"),
                    [graph, member],
                );
            }
        }
    }
}

fn check_connectors(mm: &MetaModel, out: &mut Collector) {
    let mut signatures: BTreeMap<_, Vec<&InstanceId>> = BTreeMap::new();
    for (cid, c) in &mm.connectors {
        signatures.entry(c).or_default().push(cid);
        let rel = mm.relationship_types.get(&c.relationship_type);
        if rel.is_none() {
            out.push(
                ViolationCode::ConnUnknownType,
                format!(
                    "connector `{cid}` cites undeclared relationship type `{}`",
                    c.relationship_type
                ),
                [cid.as_str(), c.relationship_type.as_str()],
            );
        }
        if !mm.role_types.contains_key(&c.role_type) {
            out.push(
                ViolationCode::ConnUnknownType,
                format!(
                    "connector `{cid}` cites undeclared role type `{}`",
                    c.role_type
                ),
                [cid.as_str(), c.role_type.as_str()],
            );
        } else if let Some(rel) = rel {
            if !rel.has_role(&c.role_type) {
                out.push(
                    ViolationCode::ConnRoleNotOfRelationship,
                    format!(
                        "connector `{cid}`: role type `{}` is not a role of `{}`",
                        c.role_type, c.relationship_type
                    ),
                    [cid.as_str(), c.role_type.as_str()],
                );
            }
        }
        let object = mm.object_types.get(&c.target.object_type);
        if object.is_none() {
            out.push(
                ViolationCode::ConnUnknownType,
                format!(
                    "connector `{cid}` cites undeclared object type `{}`",
                    c.target.object_type
                ),
                [cid.as_str(), c.target.object_type.as_str()],
            );
        }
        if let Some(point) = &c.target.point_type {
            if !mm.point_types.contains_key(point) {
                out.push(
                    ViolationCode::ConnUnknownType,
                    format!("connector `{cid}` cites undeclared point type `{point}`"),
                    [cid.as_str(), point.as_str()],
                );
            } else if let Some(object) = object {
                if !object.point_types.contains(point) {
                    out.push(
                        ViolationCode::ConnPointNotOfObject,
                        format!(
                            "connector `{cid}`: point type `{point}` is not a point of `{}`",
                            c.target.object_type
                        ),
                        [cid.as_str(), point.as_str()],
                    );
                }
            }
        }
        if mm.rules_using(cid).next().is_none() {
            out.push(
                ViolationCode::ConnUnused,
                format!("connector `{cid}` is not used by any connection rule"),
                [cid],
            );
        }
    }
    for ids in signatures.values() {
        if ids.len() > 1 {
            out.push(
                ViolationCode::ConnDuplicate,
                "connectors declare the same relationship, role and target",
                ids.iter(),
            );
        }
    }
}

fn check_rules(mm: &MetaModel, out: &mut Collector) {
    for rule in &mm.rules {
        let start = mm.connectors.get(&rule.start);
        let end = mm.connectors.get(&rule.end);
        for (cid, c) in [(&rule.start, start), (&rule.end, end)] {
            if c.is_none() {
                out.push(
                    ViolationCode::RuleUnknownConnector,
                    format!(
                        "rule ({} -> {}) cites unknown connector `{cid}`",
                        rule.start, rule.end
                    ),
                    [cid],
                );
            }
        }
        if let (Some(s), Some(e)) = (start, end) {
            if s.relationship_type != e.relationship_type {
                out.push(
                    ViolationCode::RuleMismatch,
                    format!(
                        "rule ({} -> {}) pairs connectors of different relationship types",
                        rule.start, rule.end
                    ),
                    [&rule.start, &rule.end],
                );
            } else if s.role_type == e.role_type {
                out.push(
                    ViolationCode::RuleMismatch,
                    format!(
                        "rule ({} -> {}) binds role type `{}` on both sides",
                        rule.start, rule.end, s.role_type
                    ),
                    [&rule.start, &rule.end],
                );
            }
        }
    }
}

fn meta_iris(mm: &MetaModel) -> Vec<(Iri, String)> {
    let vocab = Vocabulary::default();
    let mut iris: Vec<(Iri, String)> = Vec::new();
    // Type names that equal a reserved name are already reported.
    let reserved: BTreeSet<&str> = reserved_names().collect();
    let mut seen_types = BTreeSet::new();
    for (_, name) in mm.declarations() {
        if !reserved.contains(name.as_str()) && seen_types.insert(name) {
            iris.push((vocab.type_class(name), name.to_string()));
        }
    }
    for cid in mm.connectors.keys() {
        iris.push((vocab.connector_rule(cid), format!("connector {cid}")));
    }
    iris
}

fn check_collisions(iris: Vec<(Iri, String)>, out: &mut Collector) {
    let mut by_iri: BTreeMap<Iri, Vec<String>> = BTreeMap::new();
    for (iri, owner) in iris {
        by_iri.entry(iri).or_default().push(owner);
    }
    for (iri, owners) in by_iri {
        if owners.len() > 1 {
            out.push(
                ViolationCode::IriCollision,
                format!("{} elements would be exported as {iri}", owners.len()),
                owners,
            );
        }
    }
}

/// Checks every model invariant against its meta-model, including that each
/// connection binding is licensed by a connector and each connection by a
/// rule.
pub fn validate_model(mm: &MetaModel, m: &Model) -> ValidationReport {
    let mut out = Collector::default();
    check_ids(m, &mut out);
    check_elements(mm, m, &mut out);
    check_role_pairs(mm, m, &mut out);
    check_properties(mm, m, &mut out);
    check_connections(mm, m, &mut out);
    let mut iris = meta_iris(mm);
    iris.extend(model_iris(m));
    check_collisions(iris, &mut out);
    ValidationReport::from_violations(out.0)
}

fn check_ids(m: &Model, out: &mut Collector) {
    let mut counts: BTreeMap<&InstanceId, usize> = BTreeMap::new();
    let all = std::iter::once(&m.graph_id)
        .chain(m.objects.keys())
        .chain(m.relationships.keys())
        .chain(m.points.keys())
        .chain(m.roles.keys())
        .chain(m.properties.keys());
    for id in all {
        *counts.entry(id).or_default() += 1;
    }
    for (id, n) in counts {
        if n > 1 {
            out.push(
                ViolationCode::DuplicateId,
                format!("id `{id}` is used by {n} elements"),
                [id],
            );
        }
    }
}

fn check_elements(mm: &MetaModel, m: &Model, out: &mut Collector) {
    if !mm.graph_types.contains_key(&m.graph_type) {
        out.push(
            ViolationCode::UnknownType,
            format!(
                "graph `{}` has undeclared graph type `{}`",
                m.graph_id, m.graph_type
            ),
            [&m.graph_id],
        );
    }
    let allowed = mm.graph_membership.get(&m.graph_type);
    let check_member = |out: &mut Collector, id: &InstanceId, ty: &TypeName| {
        if !allowed.is_some_and(|a| a.contains(ty)) {
            out.push(
                ViolationCode::GraphMembership,
                format!("graph type `{}` does not admit `{ty}`", m.graph_type),
                [id],
            );
        }
    };
    for (id, ty) in &m.objects {
        if !mm.object_types.contains_key(ty) {
            out.push(
                ViolationCode::UnknownType,
                format!("object `{id}` has undeclared type `{ty}`"),
                [id],
            );
        } else {
            check_member(out, id, ty);
        }
    }
    for (id, ty) in &m.relationships {
        if !mm.relationship_types.contains_key(ty) {
            out.push(
                ViolationCode::UnknownType,
                format!("relationship `{id}` has undeclared type `{ty}`"),
                [id],
            );
        } else {
            check_member(out, id, ty);
        }
    }
    for (id, p) in &m.points {
        if !mm.point_types.contains_key(&p.point_type) {
            out.push(
                ViolationCode::UnknownType,
                format!("point `{id}` has undeclared type `{}`", p.point_type),
                [id],
            );
        }
        match m.objects.get(&p.owner) {
            None => out.push(
                ViolationCode::PointOwner,
                format!(
                    "point `{id}` is owned by `{}`, which is not an object",
                    p.owner
                ),
                [id, &p.owner],
            ),
            Some(owner_ty) => {
                let permitted = mm
                    .object_types
                    .get(owner_ty)
                    .is_some_and(|o| o.point_types.contains(&p.point_type));
                if !permitted {
                    out.push(
                        ViolationCode::PointNotAllowed,
                        format!(
                            "object type `{owner_ty}` has no point type `{}`",
                            p.point_type
                        ),
                        [id, &p.owner],
                    );
                }
            }
        }
    }
    for (id, r) in &m.roles {
        if !mm.role_types.contains_key(&r.role_type) {
            out.push(
                ViolationCode::UnknownType,
                format!("role `{id}` has undeclared type `{}`", r.role_type),
                [id],
            );
        }
        match m.relationships.get(&r.owner) {
            None => out.push(
                ViolationCode::RoleOwner,
                format!(
                    "role `{id}` is owned by `{}`, which is not a relationship",
                    r.owner
                ),
                [id, &r.owner],
            ),
            Some(owner_ty) => {
                let permitted = mm
                    .relationship_types
                    .get(owner_ty)
                    .is_some_and(|rel| rel.has_role(&r.role_type));
                if !permitted {
                    out.push(
                        ViolationCode::RoleNotAllowed,
                        format!(
                            "relationship type `{owner_ty}` has no role type `{}`",
                            r.role_type
                        ),
                        [id, &r.owner],
                    );
                }
            }
        }
    }
    for id in m.icon_overrides.keys() {
        match m.element(id) {
            Some((kind, _)) if kind != MetaKind::Property => {}
            _ => out.push(
                ViolationCode::IconUnknownId,
                format!("icon override for `{id}`, which is not a graph, object, point, relationship or role"),
                [id],
            ),
        }
    }
}

fn check_role_pairs(mm: &MetaModel, m: &Model, out: &mut Collector) {
    for (rid, rty) in &m.relationships {
        let Some(def) = mm.relationship_types.get(rty) else {
            continue;
        };
        let mut roles: Vec<&TypeName> = m.roles_of(rid).map(|(_, r)| &r.role_type).collect();
        roles.sort();
        let mut expected: Vec<&TypeName> = def.role_types.iter().collect();
        expected.sort();
        if roles != expected {
            out.push(
                ViolationCode::RelRoleCount,
                format!(
                    "relationship `{rid}` owns {} role(s); expected one `{}` each",
                    roles.len(),
                    def.role_types
                        .iter()
                        .map(|r| r.as_str())
                        .collect::<Vec<_>>()
                        .join("`, `")
                ),
                [rid],
            );
        }
    }
}

fn check_properties(mm: &MetaModel, m: &Model, out: &mut Collector) {
    for (id, p) in &m.properties {
        if !mm.property_types.contains_key(&p.property_type) {
            out.push(
                ViolationCode::UnknownType,
                format!("property `{id}` has undeclared type `{}`", p.property_type),
                [id],
            );
        }
        if !p.value.is_well_formed() {
            out.push(
                ViolationCode::PropValue,
                format!(
                    "property `{id}` has malformed value `{}`",
                    p.value.lexical()
                ),
                [id],
            );
        }
        let owner = m.element(&p.owner);
        let Some((owner_kind, owner_ty)) = owner.filter(|(k, _)| k.can_own_properties()) else {
            out.push(
                ViolationCode::PropOwner,
                format!(
                    "property `{id}` is owned by `{}`, which cannot own properties",
                    p.owner
                ),
                [id, &p.owner],
            );
            continue;
        };
        match mm.slot(owner_kind, owner_ty, &p.property_type) {
            None => out.push(
                ViolationCode::PropNoSlot,
                format!(
                    "{owner_kind} type `{owner_ty}` has no property slot `{}`",
                    p.property_type
                ),
                [id, &p.owner],
            ),
            Some(slot) if slot.value_datatype != p.value.datatype() => out.push(
                ViolationCode::PropDatatype,
                format!(
                    "property `{id}` holds a {} value, slot expects {}",
                    p.value.datatype().xsd_local_name(),
                    slot.value_datatype.xsd_local_name()
                ),
                [id],
            ),
            Some(_) => {}
        }
    }
}

/// True iff the binding's actual relationship, role, object and point types
/// equal those of the connector it cites.
pub(crate) fn binding_matches(
    mm: &MetaModel,
    m: &Model,
    relationship: &InstanceId,
    b: &ConnectorBinding,
) -> bool {
    let Some(c) = mm.connectors.get(&b.connector) else {
        return false;
    };
    let rel_ty = m.relationships.get(relationship);
    let role_ty = m.roles.get(&b.role).map(|r| &r.role_type);
    let obj_ty = m.objects.get(&b.object);
    let point_ty = match &b.point {
        Some(p) => m.points.get(p).map(|p| Some(&p.point_type)),
        None => Some(None),
    };
    rel_ty == Some(&c.relationship_type)
        && role_ty == Some(&c.role_type)
        && obj_ty == Some(&c.target.object_type)
        && point_ty == Some(c.target.point_type.as_ref())
}

fn check_connections(mm: &MetaModel, m: &Model, out: &mut Collector) {
    let mut per_rel: BTreeMap<&InstanceId, usize> = BTreeMap::new();
    for c in &m.connections {
        let rel = &c.relationship;
        *per_rel.entry(rel).or_default() += 1;
        if !m.relationships.contains_key(rel) {
            out.push(
                ViolationCode::ConnUnknownRelationship,
                format!("connection cites `{rel}`, which is not a relationship"),
                [rel],
            );
            continue;
        }
        let owned = |role: &InstanceId| m.roles.get(role).is_some_and(|r| &r.owner == rel);
        if c.start.role == c.end.role || !owned(&c.start.role) || !owned(&c.end.role) {
            out.push(
                ViolationCode::ConnRoleMismatch,
                format!("connection of `{rel}` must bind two distinct roles of that relationship"),
                [rel, &c.start.role, &c.end.role],
            );
        }
        for (side, b) in [("start", &c.start), ("end", &c.end)] {
            if !m.objects.contains_key(&b.object) {
                out.push(
                    ViolationCode::ConnUnknownEndpoint,
                    format!(
                        "{side} of `{rel}` binds `{}`, which is not an object",
                        b.object
                    ),
                    [rel, &b.object],
                );
            }
            if let Some(p) = &b.point {
                if !m.points.get(p).is_some_and(|p| p.owner == b.object) {
                    out.push(
                        ViolationCode::ConnPointOwner,
                        format!(
                            "{side} of `{rel}` binds point `{p}`, which is not a point of `{}`",
                            b.object
                        ),
                        [rel, p],
                    );
                }
            }
            if !binding_matches(mm, m, rel, b) {
                out.push(
                    ViolationCode::ConnNoRule,
                    format!(
                        "{side} of `{rel}` does not match connector `{}`",
                        b.connector
                    ),
                    [rel, &b.connector],
                );
            }
        }
        let rule = crate::model::ConnectionRule {
            start: c.start.connector.clone(),
            end: c.end.connector.clone(),
        };
        if !mm.rules.contains(&rule) {
            out.push(
                ViolationCode::ConnPairNotRule,
                format!(
                    "connection of `{rel}` pairs connectors ({} -> {}), which no rule declares",
                    rule.start, rule.end
                ),
                [rel],
            );
        }
    }
    for (rel, n) in per_rel {
        if n > 1 {
            out.push(
                ViolationCode::ConnDuplicateRelationship,
                format!("relationship `{rel}` takes part in {n} connections"),
                [rel],
            );
        }
    }
}

fn model_iris(m: &Model) -> Vec<(Iri, String)> {
    let vocab = Vocabulary::default();
    let mut iris = vec![(
        vocab.individual(&m.graph_type, &m.graph_id),
        m.graph_id.to_string(),
    )];
    let typed = m
        .objects
        .iter()
        .chain(m.relationships.iter())
        .chain(m.points.iter().map(|(id, p)| (id, &p.point_type)))
        .chain(m.roles.iter().map(|(id, r)| (id, &r.role_type)))
        .chain(m.properties.iter().map(|(id, p)| (id, &p.property_type)));
    for (id, ty) in typed {
        iris.push((vocab.individual(ty, id), id.to_string()));
    }
    for c in &m.connections {
        for b in [&c.start, &c.end] {
            iris.push((
                vocab.connection_connector(&b.role),
                format!("connector of role {}", b.role),
            ));
        }
    }
    // An id reused by two elements is DUPLICATE_ID already; keep one entry.
    iris.sort();
    iris.dedup();
    iris
}
